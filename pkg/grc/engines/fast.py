"""
Occurrence-indexed recompression.

Rule strings are linked run lists. The frequency of a bigram in #T_h$ is kept
in a FrequencyQueue as the sum of two parts:

* explicit terms, one per adjacent run pair inside a rule string and one per
  run with both neighbours inside the same string (d//2 for a block c^d),
  each weighted by the owner's vocc and updated on every splice;
* junction records, one per live variable, covering the pairs and blocks that
  touch a child variable or an end of the rule string. These depend on the
  children's boundary blocks and are checked once per level; a record is
  rebuilt only when its junction key changed.

Both parts are exact at selection points, so the queue maximum equals the
scan engine's choice.
"""

from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from grc.config.settings import get_settings
from grc.core.exceptions import InternalAssertionError
from grc.core.logging_config import get_logger
from grc.core.run_context import reset_current_engine, set_current_engine
from grc.engines.freq_queue import FrequencyQueue
from grc.engines.linked import LinkedRunList, RunNode
from grc.engines.recompressor import Recompressor
from grc.engines.scan import compute_frequencies, scan_window
from grc.engines.uncross import (
    RepeatingUncrosser,
    RuleEdit,
    drop_null_children,
    plan_nonrepeating,
)
from grc.grammar.level import (
    BoundaryInfo,
    LevelGrammar,
    LevelRule,
    attach_sentinels,
    compute_boundary_info,
    compute_level_vocc,
    expand_level,
)
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.rlstring import RlString, RunBuilder, merge_runs
from grc.grammar.slp import Slp
from grc.grammar.symbols import Bigram
from grc.models.stats import RunStats

logger = get_logger(__name__)


class RuleTally:
    """Running totals of a linked grammar: child references and live rules"""

    __slots__ = ("refs", "live")

    def __init__(self):
        self.refs = 0
        self.live = 0


class LinkedRule:
    """
    A level-grammar rule whose run string is a linked list.

    Changes to the children or the null flag are posted to the shared
    ``tally`` so |G_h| and n_h never need a pass over all rules.
    """

    __slots__ = ("_left", "_right", "runs", "_null", "tally")

    def __init__(
        self,
        left: Optional[int],
        right: Optional[int],
        runs: LinkedRunList,
        null: bool = False,
        tally: Optional[RuleTally] = None,
    ):
        self.tally = tally if tally is not None else RuleTally()
        self._left = left
        self._right = right
        self.runs = runs
        self._null = null
        if not null:
            self.tally.live += 1
            self.tally.refs += (left is not None) + (right is not None)

    def _child_refs(self) -> int:
        return (self._left is not None) + (self._right is not None)

    @property
    def left(self) -> Optional[int]:
        return self._left

    @left.setter
    def left(self, value: Optional[int]) -> None:
        if not self._null:
            self.tally.refs += (value is not None) - (self._left is not None)
        self._left = value

    @property
    def right(self) -> Optional[int]:
        return self._right

    @right.setter
    def right(self, value: Optional[int]) -> None:
        if not self._null:
            self.tally.refs += (value is not None) - (self._right is not None)
        self._right = value

    @property
    def null(self) -> bool:
        return self._null

    @null.setter
    def null(self, value: bool) -> None:
        if value == self._null:
            return
        sign = -1 if value else 1
        self.tally.live += sign
        self.tally.refs += sign * self._child_refs()
        self._null = value

    @property
    def head(self) -> Optional[RunNode]:
        return self.runs.first

    @property
    def tail(self) -> Optional[RunNode]:
        return self.runs.last

    @property
    def run_count(self) -> int:
        return self.runs.count

    @property
    def is_null(self) -> bool:
        return self._null

    @property
    def size(self) -> int:
        if self._null:
            return 0
        return self.runs.count + self._child_refs()

    def is_empty(self) -> bool:
        return self._left is None and self._right is None and self.runs.count == 0


class OccurrenceIndex:
    """Explicit occurrence sites, junction records and the frequency queue"""

    def __init__(self, vocc: Sequence[int]):
        self.vocc = vocc
        self.queue = FrequencyQueue()
        self.pair_sites: Dict[Bigram, Dict[RunNode, None]] = {}
        self.run_sites: Dict[int, Dict[RunNode, None]] = {}
        self.junctions: List[Optional[Dict[Bigram, int]]] = [None] * len(vocc)
        self.junction_keys: List[Optional[tuple]] = [None] * len(vocc)
        self.linked_runs = 0
        self.tally = RuleTally()

    def admit(self, node: RunNode) -> None:
        self.linked_runs += 1
        weight = self.vocc[node.owner]
        if node.next is not None:
            bigram = Bigram(node.letter, node.next.letter)
            self.queue.add(bigram, weight)
            self.pair_sites.setdefault(bigram, {})[node] = None
        if node.exp >= 2:
            self.run_sites.setdefault(node.letter, {})[node] = None
            if node.prev is not None and node.next is not None:
                self.queue.add(Bigram(node.letter, node.letter), (node.exp // 2) * weight)

    def retire(self, node: RunNode) -> None:
        self.linked_runs -= 1
        weight = self.vocc[node.owner]
        if node.next is not None:
            bigram = Bigram(node.letter, node.next.letter)
            self.queue.add(bigram, -weight)
            self._drop(self.pair_sites, bigram, node)
        if node.exp >= 2:
            self._drop(self.run_sites, node.letter, node)
            if node.prev is not None and node.next is not None:
                self.queue.add(Bigram(node.letter, node.letter), -(node.exp // 2) * weight)

    @staticmethod
    def _drop(index: dict, key, node: RunNode) -> None:
        sites = index[key]
        del sites[node]
        if not sites:
            del index[key]

    def junction_terms(self, var: int, rule: LinkedRule, info: BoundaryInfo) -> Dict[Bigram, int]:
        """Weighted pairs and blocks of X that touch a child or an end of its string"""
        table: Counter = Counter()
        weight = self.vocc[var]
        left, right = rule.left, rule.right
        lp = info.rmb[left] if left is not None else None
        rp = info.lmb[right] if right is not None else None
        first_is_prefix = left is None or info.single[left]
        last_is_suffix = right is None or info.single[right]
        k = rule.run_count
        if k == 0:
            scan_window(merge_runs([lp, rp]), weight, first_is_prefix, last_is_suffix, table)
        elif k == 1:
            scan_window(merge_runs([lp, rule.head, rp]), weight, first_is_prefix, last_is_suffix, table)
        else:
            scan_window(merge_runs([lp, rule.head]), weight, first_is_prefix, False, table)
            scan_window(merge_runs([rule.tail, rp]), weight, False, last_is_suffix, table)
        return {bigram: freq for bigram, freq in table.items() if freq}

    @staticmethod
    def junction_key(rule: LinkedRule, info: BoundaryInfo) -> tuple:
        """Everything junction_terms reads; equal keys give equal records"""
        left, right = rule.left, rule.right
        head, tail = rule.head, rule.tail
        return (
            info.rmb[left] if left is not None else None,
            info.single[left] if left is not None else True,
            info.lmb[right] if right is not None else None,
            info.single[right] if right is not None else True,
            min(rule.run_count, 2),
            (head.letter, head.exp) if head is not None else None,
            (tail.letter, tail.exp) if tail is not None else None,
        )


def build_index(g0: LevelGrammar, vocc: Optional[Sequence[int]] = None) -> Tuple[List[LinkedRule], OccurrenceIndex]:
    """
    Link every rule string of G_0 and load the queue.

    Explicit terms are admitted node by node, then one recollection adds the
    junction records; afterwards the queue equals compute_frequencies(g0).
    """
    if vocc is None:
        vocc = compute_level_vocc(g0)
    index = OccurrenceIndex(vocc)
    rules = [
        LinkedRule(
            rule.left,
            rule.right,
            LinkedRunList.from_runs(rule.mid.runs, owner=var, admit=index.admit),
            rule.null,
            index.tally,
        )
        for var, rule in enumerate(g0.rules)
    ]
    recollect_level(rules, index)
    return rules, index


def recollect_level(
    rules: List[LinkedRule], index: OccurrenceIndex, locality_constant: Optional[int] = None
) -> Tuple[BoundaryInfo, int]:
    """
    Recompute boundary information and refresh the junction records.

    A record is rebuilt only when its junction key changed; only changed
    contributions are posted to the queue and records of null variables are
    retired. The locality check counts the rebuilt records.

    Returns:
        (boundary snapshot, queue mutations caused by the refresh)
    """
    info = compute_boundary_info(rules)
    queue = index.queue
    start = queue.mutations
    touched = 0
    for var, rule in enumerate(rules):
        old = index.junctions[var]
        if rule.null:
            if old is not None:
                touched += 1
                for bigram, freq in old.items():
                    queue.add(bigram, -freq)
            index.junctions[var] = None
            index.junction_keys[var] = None
            continue
        key = index.junction_key(rule, info)
        if key == index.junction_keys[var]:
            continue
        touched += 1
        new = index.junction_terms(var, rule, info)
        if new != old:
            old = old or {}
            for bigram in old.keys() | new.keys():
                queue.add(bigram, new.get(bigram, 0) - old.get(bigram, 0))
        index.junctions[var] = new
        index.junction_keys[var] = key
    refreshed = queue.mutations - start
    if locality_constant is not None and refreshed > locality_constant * touched:
        raise InternalAssertionError(
            f"junction refresh posted {refreshed} updates for {touched} variables",
            details={"mutations": refreshed, "variables": touched, "constant": locality_constant},
        )
    return info, refreshed


class FastRecompressor(Recompressor):
    """Level loop over linked rules with an occurrence index"""

    phase = "fast"

    def __init__(
        self,
        slp: Slp,
        debug_verify: Optional[bool] = None,
        locality_constant: Optional[int] = None,
    ):
        super().__init__(slp, debug_verify)
        if locality_constant is None:
            locality_constant = get_settings().locality_constant
        self.locality_constant = locality_constant
        g0 = attach_sentinels(slp)
        self.vocc = compute_level_vocc(g0)
        self._level = 0
        self._text_len = g0.text_len
        self.rules, self.index = build_index(g0, self.vocc)
        self._info: Optional[BoundaryInfo] = None
        self._junction_mutations = 0

    @property
    def level(self) -> int:
        return self._level

    @property
    def text_len(self) -> int:
        return self._text_len

    def grammar_size(self) -> int:
        return self.index.linked_runs + self.index.tally.refs

    def live_count(self) -> int:
        return self.index.tally.live

    def counters(self) -> Tuple[int, int]:
        junction, self._junction_mutations = self._junction_mutations, 0
        return self.index.queue.reset_mutations(), junction

    def to_level_grammar(self) -> LevelGrammar:
        return LevelGrammar(
            sigma=self.sigma,
            n=self.n,
            rules=[
                LevelRule(rule.left, RlString(rule.runs.runs()), rule.right, rule.null)
                for rule in self.rules
            ],
            level=self._level,
            text_len=self._text_len,
        )

    def expand(self, strip_sentinels: bool = True) -> List[int]:
        return expand_level(self.to_level_grammar(), strip_sentinels=strip_sentinels)

    def select(self) -> Optional[Tuple[Bigram, int]]:
        self._info, refreshed = recollect_level(self.rules, self.index, self.locality_constant)
        self._junction_mutations += refreshed
        if self.debug_verify:
            self._cross_check()
        return self.index.queue.peek_max()

    def _cross_check(self) -> None:
        expected = compute_frequencies(self.to_level_grammar(), self.vocc, self._info)
        actual = self.index.queue.snapshot()
        if actual != expected:
            diff = sorted(set(actual.items()) ^ set(expected.items()))[:4]
            raise InternalAssertionError(
                f"queue diverged from the scan table at level {self._level}: {diff}",
                details={"level": self._level},
            )

    def _apply_edit(self, rule: LinkedRule, edit: RuleEdit) -> None:
        runs = rule.runs
        retire, admit = self.index.retire, self.index.admit
        if edit.whole is not None:
            runs.splice(None, None, edit.whole, retire, admit)
        else:
            if edit.tail is not None:
                tail = runs.last
                runs.splice(tail.prev, None, edit.tail, retire, admit)
            if edit.head is not None:
                head = runs.first
                runs.splice(None, head.next, edit.head, retire, admit)
        if edit.drop_left:
            rule.left = None
        if edit.drop_right:
            rule.right = None
        if rule.is_empty():
            rule.null = True

    def _uncross(self, bigram: Bigram) -> None:
        if bigram.repeating:
            uncrosser = RepeatingUncrosser(len(self.rules), bigram.left)
            for var, rule in enumerate(self.rules):
                if rule.null:
                    continue
                edit = uncrosser.plan(var, rule, lambda child: self.rules[child].null)
                if edit is not None:
                    self._apply_edit(rule, edit)
            return
        for rule in self.rules:
            if rule.null:
                continue
            edit = plan_nonrepeating(rule, bigram.left, bigram.right, self._info)
            if edit is not None:
                self._apply_edit(rule, edit)
        nulled = drop_null_children(self.rules)
        if nulled:
            logger.debug(f"level {self._level}: {len(nulled)} variable(s) became null")

    def _replace(self, bigram: Bigram, new_letter: int) -> Tuple[int, int]:
        index = self.index
        vocc = self.vocc
        weighted = 0
        edits = 0
        left, right = bigram
        while True:
            sites = index.run_sites.get(left) if bigram.repeating else index.pair_sites.get(bigram)
            if not sites:
                break
            node = next(iter(sites))
            owner = self.rules[node.owner]
            builder = RunBuilder()
            if bigram.repeating:
                builder.push(new_letter, node.exp // 2)
                builder.push(left, node.exp % 2)
                weighted += (node.exp // 2) * vocc[node.owner]
                after = node.next
            else:
                partner = node.next
                builder.push(left, node.exp - 1)
                builder.push(new_letter, 1)
                builder.push(right, partner.exp - 1)
                weighted += vocc[node.owner]
                after = partner.next
            owner.runs.splice(node.prev, after, builder.runs(), index.retire, index.admit)
            edits += 1
        return weighted, edits

    def apply(self, bigram: Bigram, new_letter: int) -> Tuple[int, int]:
        self._uncross(bigram)
        weighted, edits = self._replace(bigram, new_letter)
        self._text_len -= weighted
        self._level += 1
        return weighted, edits


def run_fast(
    slp: Slp, debug_verify: Optional[bool] = None, locality_constant: Optional[int] = None
) -> Tuple[RePairGrammar, RunStats]:
    """RePair grammar of val(slp) with localized queue updates"""
    token = set_current_engine(FastRecompressor.phase)
    try:
        engine = FastRecompressor(slp, debug_verify=debug_verify, locality_constant=locality_constant)
        engine.run_to_end()
        return engine.result()
    finally:
        reset_current_engine(token)
