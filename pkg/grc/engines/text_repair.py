"""
RePair on plain symbol sequences.

``repair_naive`` recounts the whole text every level and serves as the oracle;
``repair_fast`` keeps the text as a linked run list with occurrence sets and a
frequency queue so each replacement only touches its neighbourhood. Both use
the shared tie-break and produce identical grammars.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import groupby
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from grc.core.exceptions import InternalAssertionError, ValidationError
from grc.core.logging_config import get_logger
from grc.engines.freq_queue import FrequencyQueue
from grc.engines.linked import LinkedRunList, RunNode
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.rlstring import RunBuilder
from grc.grammar.symbols import Bigram, tie_break_key
from grc.models.stats import LevelStats, RunStats

logger = get_logger(__name__)

PHASE_TEXT_NAIVE = "text-naive"
PHASE_TEXT_FAST = "text-fast"


def freq_table_text(w: Sequence[int]) -> Dict[Bigram, int]:
    """
    Exact non-overlapping frequency of every bigram of ``w``.

    A block c^d contributes d//2 to cc; every other bigram counts its
    occurrences, which never overlap.
    """
    table: Counter = Counter()
    previous = None
    for letter, group in groupby(w):
        exp = sum(1 for _ in group)
        if exp >= 2:
            table[Bigram(letter, letter)] += exp // 2
        if previous is not None:
            table[Bigram(previous, letter)] += 1
        previous = letter
    return dict(table)


def select_bigram(table: Mapping[Bigram, int]) -> Optional[Bigram]:
    """Bigram with the smallest tie-break key if its frequency is at least 2"""
    best = None
    best_key = None
    for bigram, freq in table.items():
        key = tie_break_key(bigram, freq)
        if best_key is None or key < best_key:
            best, best_key = bigram, key
    if best is None or -best_key[0] < 2:
        return None
    return Bigram(*best)


def replace_pair_text(w: Sequence[int], bigram: Bigram, new_letter: int) -> List[int]:
    """
    Replace every counted occurrence of ``bigram`` by ``new_letter``.

    A repeating bigram cc turns each block c^d into new^(d//2) followed by one
    c when d is odd.
    """
    out: List[int] = []
    left, right = bigram
    if left == right:
        for letter, group in groupby(w):
            exp = sum(1 for _ in group)
            if letter == left:
                out.extend([new_letter] * (exp // 2))
                if exp % 2:
                    out.append(letter)
            else:
                out.extend([letter] * exp)
        return out
    i = 0
    size = len(w)
    while i < size:
        if i + 1 < size and w[i] == left and w[i + 1] == right:
            out.append(new_letter)
            i += 2
        else:
            out.append(w[i])
            i += 1
    return out


@dataclass
class TextOutcome:
    """Result of running a text engine from some starting level"""

    pairs: List[Tuple[int, int]] = field(default_factory=list)
    final: List[int] = field(default_factory=list)
    records: List[LevelStats] = field(default_factory=list)
    replacements: int = 0


def _text_record(level, bigram, freq, text_len, cumulative_r, phase, mutations=0) -> LevelStats:
    return LevelStats(
        level=level,
        bigram_left=bigram.left if bigram is not None else None,
        bigram_right=bigram.right if bigram is not None else None,
        freq=freq,
        grammar_size=text_len,
        live_vars=0,
        text_len=text_len,
        cumulative_r=cumulative_r,
        phase=phase,
        queue_mutations=mutations,
    )


def run_text_naive(
    text: Sequence[int], first_letter: int, start_level: int = 0, start_r: int = 0
) -> TextOutcome:
    """Naive RePair levels starting at ``start_level`` with letters from ``first_letter``"""
    outcome = TextOutcome(replacements=start_r)
    w = list(text)
    level = start_level
    while True:
        table = freq_table_text(w)
        bigram = select_bigram(table)
        if bigram is None:
            break
        freq = table[bigram]
        outcome.records.append(_text_record(level, bigram, freq, len(w), outcome.replacements, PHASE_TEXT_NAIVE))
        new_letter = first_letter + len(outcome.pairs)
        replaced = replace_pair_text(w, bigram, new_letter)
        if len(replaced) != len(w) - freq:
            raise InternalAssertionError(
                f"length law broken at level {level}: {len(w)} - {freq} != {len(replaced)}"
            )
        w = replaced
        outcome.pairs.append((bigram.left, bigram.right))
        outcome.replacements += freq
        level += 1
    outcome.records.append(_text_record(level, None, 0, len(w), outcome.replacements, PHASE_TEXT_NAIVE))
    outcome.final = w
    return outcome


class LinkedTextRePair:
    """Linked-list RePair with occurrence sets and a frequency queue"""

    def __init__(self, text: Sequence[int]):
        self.queue = FrequencyQueue()
        self.pair_sites: Dict[Bigram, Dict[RunNode, None]] = {}
        self.run_sites: Dict[int, Dict[RunNode, None]] = {}
        builder = RunBuilder()
        for symbol in text:
            builder.push(symbol)
        self.text = LinkedRunList.from_runs(builder.runs(), admit=self._admit)
        self.length = len(text)

    def _admit(self, node: RunNode) -> None:
        if node.next is not None:
            bigram = Bigram(node.letter, node.next.letter)
            self.queue.add(bigram, 1)
            self.pair_sites.setdefault(bigram, {})[node] = None
        if node.exp >= 2:
            self.queue.add(Bigram(node.letter, node.letter), node.exp // 2)
            self.run_sites.setdefault(node.letter, {})[node] = None

    def _retire(self, node: RunNode) -> None:
        if node.next is not None:
            bigram = Bigram(node.letter, node.next.letter)
            self.queue.add(bigram, -1)
            self._drop(self.pair_sites, bigram, node)
        if node.exp >= 2:
            self.queue.add(Bigram(node.letter, node.letter), -(node.exp // 2))
            self._drop(self.run_sites, node.letter, node)

    @staticmethod
    def _drop(index: dict, key, node: RunNode) -> None:
        sites = index[key]
        del sites[node]
        if not sites:
            del index[key]

    def replace(self, bigram: Bigram, new_letter: int) -> int:
        """Replace every occurrence of ``bigram``; returns the number replaced"""
        replaced = 0
        left, right = bigram
        if left == right:
            while True:
                sites = self.run_sites.get(left)
                if not sites:
                    break
                node = next(iter(sites))
                builder = RunBuilder()
                builder.push(new_letter, node.exp // 2)
                builder.push(left, node.exp % 2)
                replaced += node.exp // 2
                self.text.splice(node.prev, node.next, builder.runs(), self._retire, self._admit)
        else:
            while True:
                sites = self.pair_sites.get(bigram)
                if not sites:
                    break
                node = next(iter(sites))
                partner = node.next
                builder = RunBuilder()
                builder.push(left, node.exp - 1)
                builder.push(new_letter, 1)
                builder.push(right, partner.exp - 1)
                replaced += 1
                self.text.splice(node.prev, partner.next, builder.runs(), self._retire, self._admit)
        self.length -= replaced
        return replaced

    def symbols(self) -> List[int]:
        out: List[int] = []
        for node in self.text:
            out.extend([node.letter] * node.exp)
        return out


def run_text_fast(
    text: Sequence[int], first_letter: int, start_level: int = 0, start_r: int = 0
) -> TextOutcome:
    """Linked-list RePair levels starting at ``start_level``"""
    outcome = TextOutcome(replacements=start_r)
    engine = LinkedTextRePair(text)
    level = start_level
    mutations = engine.queue.reset_mutations()
    while True:
        top = engine.queue.peek_max()
        if top is None or top[1] < 2:
            break
        bigram, freq = top
        outcome.records.append(
            _text_record(level, bigram, freq, engine.length, outcome.replacements, PHASE_TEXT_FAST, mutations)
        )
        new_letter = first_letter + len(outcome.pairs)
        replaced = engine.replace(bigram, new_letter)
        if replaced != freq or engine.queue.get(bigram):
            raise InternalAssertionError(
                f"queue out of step at level {level}: expected {freq} replacements, made {replaced}"
            )
        outcome.pairs.append((bigram.left, bigram.right))
        outcome.replacements += freq
        mutations = engine.queue.reset_mutations()
        level += 1
    outcome.records.append(
        _text_record(level, None, 0, engine.length, outcome.replacements, PHASE_TEXT_FAST, mutations)
    )
    outcome.final = engine.symbols()
    return outcome


def _require_text(text: Sequence[int]) -> None:
    if len(text) < 2:
        raise ValidationError(f"text too short: RePair needs at least 2 symbols, got {len(text)}")


def _finish(outcome: TextOutcome, sigma: int) -> Tuple[RePairGrammar, RunStats]:
    grammar = RePairGrammar(sigma=sigma, pairs=outcome.pairs, final=outcome.final)
    stats = RunStats(n=0, records=outcome.records, replacements=outcome.replacements)
    return grammar, stats


def repair_naive(text: Sequence[int], sigma: int = 256) -> Tuple[RePairGrammar, RunStats]:
    """Oracle RePair: recount, select, replace until no bigram repeats"""
    _require_text(text)
    outcome = run_text_naive(text, first_letter=sigma)
    logger.info(f"text-naive: N={len(text)} m={len(outcome.pairs)} final={len(outcome.final)}")
    return _finish(outcome, sigma)


def repair_fast(text: Sequence[int], sigma: int = 256) -> Tuple[RePairGrammar, RunStats]:
    """Linked-list RePair; output identical to repair_naive"""
    _require_text(text)
    outcome = run_text_fast(text, first_letter=sigma)
    logger.info(f"text-fast: N={len(text)} m={len(outcome.pairs)} final={len(outcome.final)}")
    return _finish(outcome, sigma)
