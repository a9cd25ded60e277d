"""
Run-length encoded strings.

Every constructor and mutation keeps runs canonical: adjacent runs never share
a letter and every exponent is positive.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence


@dataclass(frozen=True, slots=True)
class RlRun:
    """A block c^d."""

    letter: int
    exp: int

    def __post_init__(self):
        if self.exp < 1:
            raise ValueError(f"run exponent must be positive, got {self.exp}")


class RunBuilder:
    """Accumulates (letter, exponent) pieces into canonical runs."""

    __slots__ = ("_letters", "_exps")

    def __init__(self):
        self._letters: List[int] = []
        self._exps: List[int] = []

    def push(self, letter: int, exp: int = 1) -> None:
        if exp <= 0:
            return
        if self._letters and self._letters[-1] == letter:
            self._exps[-1] += exp
        else:
            self._letters.append(letter)
            self._exps.append(exp)

    def extend(self, runs: Iterable) -> None:
        for run in runs:
            if run is not None:
                self.push(run.letter, run.exp)

    def runs(self) -> List[RlRun]:
        return [RlRun(letter, exp) for letter, exp in zip(self._letters, self._exps)]


def merge_runs(runs: Iterable) -> List[RlRun]:
    """
    Merge a sequence of run-like values into canonical runs.

    Args:
        runs: Objects with ``letter`` and ``exp`` attributes; ``None`` entries are skipped

    Returns:
        Canonical list of RlRun
    """
    builder = RunBuilder()
    builder.extend(runs)
    return builder.runs()


def strip_leading(runs: List[RlRun], letter: int) -> int:
    """Remove a leading run of ``letter`` in place and return its exponent."""
    if runs and runs[0].letter == letter:
        return runs.pop(0).exp
    return 0


def strip_trailing(runs: List[RlRun], letter: int) -> int:
    """Remove a trailing run of ``letter`` in place and return its exponent."""
    if runs and runs[-1].letter == letter:
        return runs.pop().exp
    return 0


@dataclass
class RlString:
    """Canonical run-length encoded string; ``len`` is the rle-size."""

    runs: List[RlRun] = field(default_factory=list)

    def __post_init__(self):
        self.runs = merge_runs(self.runs)

    @classmethod
    def from_symbols(cls, symbols: Iterable[int]) -> "RlString":
        builder = RunBuilder()
        for symbol in symbols:
            builder.push(symbol)
        return cls(builder.runs())

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self) -> Iterator[RlRun]:
        return iter(self.runs)

    def __bool__(self) -> bool:
        return bool(self.runs)

    @property
    def length(self) -> int:
        """Number of symbols the string expands to."""
        return sum(run.exp for run in self.runs)

    @property
    def head(self) -> Optional[RlRun]:
        return self.runs[0] if self.runs else None

    @property
    def tail(self) -> Optional[RlRun]:
        return self.runs[-1] if self.runs else None

    def symbols(self) -> Iterator[int]:
        for run in self.runs:
            for _ in range(run.exp):
                yield run.letter

    def replace_runs(self, runs: Sequence) -> None:
        self.runs = merge_runs(runs)
