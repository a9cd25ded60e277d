"""
Utility functions for common operations
"""

from typing import Optional, Sequence

from grc.core.exceptions import ValidationError


def first_divergence(a: Sequence[int], b: Sequence[int]) -> Optional[int]:
    """Offset of the first differing position, or None when equal"""
    for offset, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return offset
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


def symbols_to_bytes(symbols: Sequence[int]) -> bytes:
    """Pack letters into bytes; only byte-alphabet texts can be written raw"""
    try:
        return bytes(symbols)
    except ValueError:
        raise ValidationError("text has letters outside the byte alphabet and cannot be written raw")


def parse_shrink_factor(value: str) -> Optional[int]:
    """Parse a hybrid ``-t`` value; ``inf`` means never switch"""
    if value.strip().lower() in ("inf", "infinity", "none"):
        return None
    try:
        t = int(value)
    except ValueError:
        raise ValidationError(f"-t must be a positive integer or 'inf', got {value!r}")
    if t < 1:
        raise ValidationError(f"-t must be >= 1, got {t}")
    return t
