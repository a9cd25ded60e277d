"""
Symbol codes, bigrams and the shared selection order.

Terminals occupy 0..sigma-1, introduced letters sigma, sigma+1, ... in
selection order. The two sentinels take the two largest 32-bit codes so they
never collide with a user alphabet and sort after every other symbol.
"""

from typing import NamedTuple, Tuple

HASH = 0xFFFFFFFE
DOLLAR = 0xFFFFFFFF
SENTINELS = frozenset((HASH, DOLLAR))


class Bigram(NamedTuple):
    """Ordered pair of adjacent symbols; tuple order is the lexicographic order."""

    left: int
    right: int

    @property
    def repeating(self) -> bool:
        return self.left == self.right


def tie_break_key(bigram: Bigram, freq: int) -> Tuple[int, int, int]:
    """
    Ordering key shared by every engine.

    The bigram with the smallest key is selected: higher frequency first,
    then the lexicographically smallest (left, right).
    """
    return (-freq, bigram.left, bigram.right)


def symbol_label(symbol: int, sigma: int) -> str:
    """Readable label for log lines"""
    if symbol == HASH:
        return "#"
    if symbol == DOLLAR:
        return "$"
    if symbol < sigma:
        if 33 <= symbol < 127:
            return chr(symbol)
        return f"0x{symbol:02x}"
    return f"X{symbol - sigma}"
