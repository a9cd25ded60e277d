"""
Max-frequency queue over bigrams.

Entries are ordered by the shared tie-break key inside a sorted set, so any
delta magnitude costs one removal and one insertion and the maximum is the
first key.
"""

from typing import Dict, Optional, Tuple

from sortedcontainers import SortedSet

from grc.core.exceptions import InternalAssertionError
from grc.grammar.symbols import Bigram, tie_break_key


class FrequencyQueue:
    """Bigram -> weighted frequency with maximum extraction"""

    def __init__(self):
        self._freq: Dict[Bigram, int] = {}
        self._order = SortedSet()
        self.mutations = 0

    def __len__(self) -> int:
        return len(self._freq)

    def __contains__(self, bigram) -> bool:
        return bigram in self._freq

    def get(self, bigram: Bigram) -> int:
        return self._freq.get(bigram, 0)

    def add(self, bigram: Bigram, delta: int) -> None:
        """Apply a frequency delta; entries reaching zero are evicted"""
        if not delta:
            return
        self.mutations += 1
        old = self._freq.get(bigram, 0)
        new = old + delta
        if new < 0:
            raise InternalAssertionError(
                f"negative frequency for {bigram}: {old} {delta:+d}",
                details={"bigram": list(bigram), "old": old, "delta": delta},
            )
        if old:
            self._order.remove(tie_break_key(bigram, old))
        if new:
            self._freq[bigram] = new
            self._order.add(tie_break_key(bigram, new))
        else:
            del self._freq[bigram]

    def peek_max(self) -> Optional[Tuple[Bigram, int]]:
        """Bigram selected by the tie-break, with its frequency"""
        if not self._order:
            return None
        neg_freq, left, right = self._order[0]
        return Bigram(left, right), -neg_freq

    def snapshot(self) -> Dict[Bigram, int]:
        return dict(self._freq)

    def reset_mutations(self) -> int:
        count, self.mutations = self.mutations, 0
        return count
