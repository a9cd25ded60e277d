"""
Deterministic test corpora.

Every family returns bytes and depends only on its parameters and seed.
"""

import random
from typing import Callable, Dict, Optional

from grc.config.settings import get_settings
from grc.core.exceptions import OutOfRangeError, ValidationError
from grc.core.logging_config import get_logger

logger = get_logger(__name__)

FIB_MAX_K = 32
THUE_MORSE_MAX_K = 25
UNARY_MAX_N = 1 << 24
RANDOM_MAX_LENGTH = 1 << 24
COPY_MUTATE_COPIES = 8
COPY_MUTATE_RATE = 0.01


def _check_range(name: str, value: int, low: int, high: int) -> None:
    if not low <= value <= high:
        raise OutOfRangeError(f"{name} must be in [{low}, {high}], got {value}", details={"field": name})


def _letters(sigma: int) -> bytes:
    """Alphabet of a generated text: 'a'.. for small sigma, raw bytes otherwise"""
    _check_range("sigma", sigma, 1, 256)
    if sigma <= 26:
        return bytes(range(ord("a"), ord("a") + sigma))
    return bytes(range(sigma))


def fibonacci_word(k: int) -> bytes:
    """F(1)="b", F(2)="a", F(k)=F(k-1)F(k-2)"""
    _check_range("k", k, 1, FIB_MAX_K)
    previous, current = b"b", b"a"
    if k == 1:
        return previous
    for _ in range(k - 2):
        previous, current = current, current + previous
    return current


def thue_morse(k: int) -> bytes:
    """Prefix of length 2^(k-1); position i is 'b' when popcount(i) is odd"""
    _check_range("k", k, 1, THUE_MORSE_MAX_K)
    return bytes(ord("b") if bin(i).count("1") & 1 else ord("a") for i in range(1 << (k - 1)))


def unary(n: int) -> bytes:
    _check_range("n", n, 1, UNARY_MAX_N)
    return b"a" * n


def random_text(length: int, sigma: int = 4, seed: Optional[int] = None) -> bytes:
    """Uniform text over the first ``sigma`` letters"""
    _check_range("length", length, 1, RANDOM_MAX_LENGTH)
    letters = _letters(sigma)
    rng = random.Random(get_settings().default_seed if seed is None else seed)
    return bytes(rng.choice(letters) for _ in range(length))


def copy_mutate(
    length: int,
    sigma: int = 4,
    seed: Optional[int] = None,
    base: Optional[bytes] = None,
    copies: int = COPY_MUTATE_COPIES,
    rate: float = COPY_MUTATE_RATE,
) -> bytes:
    """
    Highly repetitive text: ``copies`` versions of one base, each with point mutations.

    Args:
        length: Base length when no base is given
        base: Base text, e.g. the contents of a file; overrides ``length``
        rate: Expected fraction of mutated positions per copy
    """
    rng = random.Random(get_settings().default_seed if seed is None else seed)
    letters = _letters(sigma)
    if base is None:
        _check_range("length", length, 1, RANDOM_MAX_LENGTH // copies)
        base = bytes(rng.choice(letters) for _ in range(length))
    elif not base:
        raise ValidationError("copy-mutate base is empty")
    _check_range("copies", copies, 1, 1 << 10)

    out = bytearray()
    for _ in range(copies):
        version = bytearray(base)
        for _ in range(max(1, int(len(base) * rate))):
            version[rng.randrange(len(version))] = rng.choice(letters)
        out += version
    return bytes(out)


FAMILIES: Dict[str, Callable[..., bytes]] = {
    "fib": fibonacci_word,
    "thue-morse": thue_morse,
    "unary": unary,
    "random": random_text,
    "copy-mutate": copy_mutate,
}

_ALIASES = {"file-copy-mutate": "copy-mutate"}


def generate(
    family: str,
    param: int,
    sigma: int = 4,
    seed: Optional[int] = None,
    base: Optional[bytes] = None,
) -> bytes:
    """
    Generate one corpus text.

    ``param`` is k for fib and thue-morse, n for unary, and the length for
    random and copy-mutate.
    """
    family = _ALIASES.get(family, family)
    if family not in FAMILIES:
        raise ValidationError(
            f"unknown corpus family '{family}', expected one of {', '.join(FAMILIES)}",
            details={"family": family},
        )
    if family == "random":
        text = random_text(param, sigma=sigma, seed=seed)
    elif family == "copy-mutate":
        text = copy_mutate(param, sigma=sigma, seed=seed, base=base)
    else:
        text = FAMILIES[family](param)
    logger.debug(f"generated {family}({param}): {len(text)} bytes")
    return text
