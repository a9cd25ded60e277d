"""
SLP producers: the level-wise pairing builder and direct Fibonacci grammars.
"""

from typing import Dict, List, Sequence, Tuple

from grc.core.exceptions import OutOfRangeError, ValidationError
from grc.grammar.slp import Slp


def build_slp(text: Sequence[int], sigma: int = 256) -> Slp:
    """
    Build an SLP by level-wise pairing with hash-consing.

    Each level pairs adjacent symbols left to right, reusing one variable per
    distinct pair; an odd leftover symbol is carried to the next level. The
    last rule created derives the whole text.

    Args:
        text: Terminal codes, each below ``sigma``
        sigma: Terminal alphabet size

    Returns:
        Slp expanding to ``text``
    """
    if len(text) < 2:
        raise ValidationError(
            f"text too short: an SLP needs at least 2 symbols, got {len(text)}",
            details={"length": len(text)},
        )
    for position, symbol in enumerate(text):
        if not 0 <= symbol < sigma:
            raise ValidationError(
                f"symbol {symbol} at position {position} is outside the alphabet of size {sigma}"
            )

    rules: List[Tuple[int, int]] = []
    known: Dict[Tuple[int, int], int] = {}
    level = list(text)
    while len(level) > 1:
        paired = []
        for i in range(0, len(level) - 1, 2):
            pair = (level[i], level[i + 1])
            code = known.get(pair)
            if code is None:
                code = sigma + len(rules)
                known[pair] = code
                rules.append(pair)
            paired.append(code)
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return Slp(sigma=sigma, rules=rules)


def fibonacci_slp(k: int, sigma: int = 256, a: int = ord("a"), b: int = ord("b")) -> Slp:
    """
    SLP of the Fibonacci word F(k) with k-2 rules.

    F(1) = b, F(2) = a and F(k) = F(k-1) F(k-2), so rule 0 derives F(3) = ab,
    rule 1 derives F(4) = F(3) a and rule j derives F(j+3) = F(j+2) F(j+1).
    """
    if k < 3:
        raise OutOfRangeError(f"Fibonacci SLP needs k >= 3, got {k}", details={"k": k})
    rules: List[Tuple[int, int]] = [(a, b)]
    if k >= 4:
        rules.append((sigma, a))
    for j in range(2, k - 2):
        rules.append((sigma + j - 1, sigma + j - 2))
    return Slp(sigma=sigma, rules=rules)
