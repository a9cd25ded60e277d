"""
Straight-line programs: the input grammars of recompression.

Symbol codes below sigma are terminals; code sigma+i refers to rule i. Rules
are stored in topological order and the start rule is the last one.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from grc.common.validators import SlpValidator
from grc.core.exceptions import ValidationError
from grc.models.validation import ValidationReport


@dataclass
class Slp:
    """A straight-line program with bigram righthand sides"""

    sigma: int
    rules: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.rules)

    @property
    def start(self) -> int:
        """Index of the start rule"""
        return len(self.rules) - 1


def validate_slp(slp: Slp) -> ValidationReport:
    """
    Check topological order, bigram righthand sides and N >= 2.

    Returns:
        ValidationReport listing each violation with its rule index
    """
    return SlpValidator().report(slp.sigma, slp.rules)


def require_valid(slp: Slp) -> int:
    """Raise ValidationError unless the SLP is valid; return its expansion length."""
    report = validate_slp(slp)
    if not report.is_valid:
        raise ValidationError(
            f"invalid SLP: {report.errors[0]}",
            details={"errors": report.errors},
        )
    return report.expanded_length


def iter_slp(slp: Slp, root: Optional[int] = None) -> Iterator[int]:
    """
    Stream the expansion of a rule left to right.

    The explicit stack holds at most one pending right child per level of the
    derivation tree.
    """
    sigma = slp.sigma
    rules = slp.rules
    stack = [sigma + (slp.start if root is None else root)]
    while stack:
        symbol = stack.pop()
        while symbol >= sigma:
            left, right = rules[symbol - sigma]
            stack.append(right)
            symbol = left
        yield symbol


def expand_slp(slp: Slp) -> List[int]:
    """Return val(start) as a list of terminal codes"""
    return list(iter_slp(slp))


def slp_lengths(slp: Slp) -> List[int]:
    """Expansion length of every rule, by one pass in topological order"""
    sigma = slp.sigma
    lengths: List[int] = []
    for left, right in slp.rules:
        lengths.append(
            (1 if left < sigma else lengths[left - sigma])
            + (1 if right < sigma else lengths[right - sigma])
        )
    return lengths


def compute_slp_vocc(slp: Slp) -> List[int]:
    """Derivation-tree occurrence count of every rule; unreachable rules get 0"""
    sigma = slp.sigma
    vocc = [0] * slp.n
    if not vocc:
        return vocc
    vocc[slp.start] = 1
    for index in range(slp.n - 1, -1, -1):
        weight = vocc[index]
        if not weight:
            continue
        for symbol in slp.rules[index]:
            if symbol >= sigma:
                vocc[symbol - sigma] += weight
    return vocc
