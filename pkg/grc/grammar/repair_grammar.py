"""
RePair output grammars
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Tuple


@dataclass
class RePairGrammar:
    """Introduced pairs in selection order plus the residual sequence T_m.

    Pair i defines letter sigma+i.
    """

    sigma: int
    pairs: List[Tuple[int, int]] = field(default_factory=list)
    final: List[int] = field(default_factory=list)

    @property
    def m(self) -> int:
        return len(self.pairs)

    def iter_expand(self) -> Iterator[int]:
        sigma = self.sigma
        pairs = self.pairs
        for symbol in self.final:
            stack = [symbol]
            while stack:
                symbol = stack.pop()
                while symbol >= sigma:
                    left, right = pairs[symbol - sigma]
                    stack.append(right)
                    symbol = left
                yield symbol

    def expand(self) -> List[int]:
        """Substitute pairs into the final sequence"""
        return list(self.iter_expand())

    def expanded_length(self) -> int:
        sigma = self.sigma
        lengths: List[int] = []
        for left, right in self.pairs:
            lengths.append(
                (1 if left < sigma else lengths[left - sigma])
                + (1 if right < sigma else lengths[right - sigma])
            )
        return sum(1 if symbol < sigma else lengths[symbol - sigma] for symbol in self.final)
