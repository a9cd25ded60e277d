"""
Recompression by full scans.

Every level recomputes boundary information and the frequency table over all
live rules, uncrosses the chosen bigram and rewrites the run strings that now
hold all of its occurrences.
"""

from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from grc.core.exceptions import InternalAssertionError
from grc.core.logging_config import get_logger
from grc.core.run_context import reset_current_engine, set_current_engine
from grc.engines.recompressor import Recompressor
from grc.engines.text_repair import freq_table_text, replace_pair_text, select_bigram
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

__all__ = [
    "ScanRecompressor",
    "compute_frequencies",
    "replace_explicit",
    "run",
    "scan_window",
    "select_bigram",
    "step",
    "uncross_nonrepeating",
    "uncross_repeating",
]


def scan_window(
    runs: Sequence,
    weight: int,
    first_is_prefix: bool,
    last_is_suffix: bool,
    table: Counter,
) -> None:
    """
    Count one local window with the given weight.

    Each adjacent pair of runs is one non-repeating occurrence. A block c^d
    with d >= 2 adds d//2 unless it is a prefix or suffix of the variable's
    expansion, in which case an ancestor witnesses its maximality.
    """
    last = len(runs) - 1
    for i, run in enumerate(runs):
        if i < last:
            table[Bigram(run.letter, runs[i + 1].letter)] += weight
        if run.exp >= 2 and not ((i == 0 and first_is_prefix) or (i == last and last_is_suffix)):
            table[Bigram(run.letter, run.letter)] += (run.exp // 2) * weight


def compute_frequencies(g: LevelGrammar, vocc: Sequence[int], info: BoundaryInfo) -> Dict[Bigram, int]:
    """
    Exact non-overlapping frequencies of #T_h$ without expanding it.

    Each live X scans rmb(left) . mid . lmb(right) weighted by vocc(X).
    """
    table: Counter = Counter()
    for var, rule in enumerate(g.rules):
        if rule.null or not vocc[var]:
            continue
        left, right = rule.left, rule.right
        window = merge_runs(
            [info.rmb[left] if left is not None else None]
            + rule.mid.runs
            + [info.lmb[right] if right is not None else None]
        )
        scan_window(
            window,
            vocc[var],
            first_is_prefix=left is None or info.single[left],
            last_is_suffix=right is None or info.single[right],
            table=table,
        )
    return {bigram: freq for bigram, freq in table.items() if freq}


def apply_edit(rule: LevelRule, edit: RuleEdit) -> None:
    """Apply a RuleEdit to a LevelRule and mark it null when emptied"""
    runs = rule.mid.runs
    if edit.whole is not None:
        rule.mid = RlString(edit.whole)
    elif edit.head is not None or edit.tail is not None:
        head = edit.head if edit.head is not None else [runs[0]]
        tail = edit.tail if edit.tail is not None else [runs[-1]]
        rule.mid = RlString(head + runs[1:-1] + tail)
    if edit.drop_left:
        rule.left = None
    if edit.drop_right:
        rule.right = None
    if rule.is_empty():
        rule.null = True


def uncross_nonrepeating(g: LevelGrammar, c1: int, c2: int, info: Optional[BoundaryInfo] = None) -> List[int]:
    """
    Make every occurrence of c1c2 explicit inside some run string.

    Args:
        info: Boundary snapshot taken before any pop; recomputed when omitted

    Returns:
        Variables that became null
    """
    if c1 == c2:
        raise ValueError("uncross_nonrepeating needs two distinct letters")
    if info is None:
        info = compute_boundary_info(g.rules)
    nulled: List[int] = []
    for var, rule in enumerate(g.rules):
        if rule.null:
            continue
        edit = plan_nonrepeating(rule, c1, c2, info)
        if edit is not None:
            apply_edit(rule, edit)
            if rule.null:
                nulled.append(var)
    return nulled + drop_null_children(g.rules)


def uncross_repeating(g: LevelGrammar, c: int) -> List[int]:
    """
    Make every maximal block of c a single explicit run.

    Returns:
        Variables that became null
    """
    uncrosser = RepeatingUncrosser(len(g.rules), c)
    nulled: List[int] = []
    for var, rule in enumerate(g.rules):
        if rule.null:
            continue
        edit = uncrosser.plan(var, rule, lambda child: g.rules[child].null)
        if edit is not None:
            apply_edit(rule, edit)
            if rule.null:
                nulled.append(var)
    return nulled


def replace_explicit(
    g: LevelGrammar, bigram: Bigram, new_letter: int, vocc: Sequence[int]
) -> Tuple[int, int]:
    """
    Rewrite all explicit occurrences of ``bigram`` in the run strings.

    Returns:
        (Σ vocc-weighted occurrences, number of rule-string edits); the first
        equals the bigram's frequency and is subtracted from the text length.
    """
    left, right = bigram
    weighted = 0
    edits = 0
    for var, rule in enumerate(g.rules):
        if rule.null or not rule.mid:
            continue
        runs = rule.mid.runs
        builder = RunBuilder()
        count = 0
        rewritten = 0
        if left == right:
            for run in runs:
                if run.letter == left and run.exp >= 2:
                    builder.push(new_letter, run.exp // 2)
                    builder.push(left, run.exp % 2)
                    count += run.exp // 2
                    rewritten += 1
                else:
                    builder.push(run.letter, run.exp)
        else:
            carry = 0
            for i, run in enumerate(runs):
                exp = run.exp - carry
                carry = 0
                if run.letter == left and i + 1 < len(runs) and runs[i + 1].letter == right:
                    builder.push(left, exp - 1)
                    builder.push(new_letter, 1)
                    carry = 1
                    count += 1
                    rewritten += 1
                else:
                    builder.push(run.letter, exp)
        if rewritten:
            rule.mid = RlString(builder.runs())
            weighted += count * vocc[var]
            edits += rewritten
    g.text_len -= weighted
    return weighted, edits


class ScanRecompressor(Recompressor):
    """Level loop over a LevelGrammar with full per-level scans"""

    phase = "scan"

    def __init__(self, slp: Slp, debug_verify: Optional[bool] = None):
        super().__init__(slp, debug_verify)
        self.grammar = attach_sentinels(slp)
        self.vocc = compute_level_vocc(self.grammar)
        self._info: Optional[BoundaryInfo] = None

    @property
    def level(self) -> int:
        return self.grammar.level

    @property
    def text_len(self) -> int:
        return self.grammar.text_len

    def grammar_size(self) -> int:
        return self.grammar.grammar_size()

    def live_count(self) -> int:
        return self.grammar.live_count()

    def expand(self, strip_sentinels: bool = True) -> List[int]:
        return expand_level(self.grammar, strip_sentinels=strip_sentinels)

    def select(self) -> Optional[Tuple[Bigram, int]]:
        self._info = compute_boundary_info(self.grammar.rules)
        table = compute_frequencies(self.grammar, self.vocc, self._info)
        if self.debug_verify:
            verify_level(self.grammar, self.vocc, table)
        bigram = select_bigram(table)
        if bigram is None:
            return None
        return bigram, table[bigram]

    def apply(self, bigram: Bigram, new_letter: int) -> Tuple[int, int]:
        before = expand_level(self.grammar) if self.debug_verify else None
        if bigram.repeating:
            nulled = uncross_repeating(self.grammar, bigram.left)
        else:
            nulled = uncross_nonrepeating(self.grammar, bigram.left, bigram.right, self._info)
        if nulled:
            logger.debug(f"level {self.level}: {len(nulled)} variable(s) became null")
        if before is not None and expand_level(self.grammar) != before:
            raise InternalAssertionError(f"uncrossing changed the expansion at level {self.level}")
        result = replace_explicit(self.grammar, bigram, new_letter, self.vocc)
        if before is not None and expand_level(self.grammar) != replace_pair_text(before, bigram, new_letter):
            raise InternalAssertionError(f"replacement diverged from the text rewrite at level {self.level}")
        self.grammar.level += 1
        return result


def verify_level(g: LevelGrammar, vocc: Sequence[int], table: Dict[Bigram, int]) -> None:
    """Debug check of frequencies and vocc against the expanded text"""
    expected = freq_table_text(expand_level(g))
    if table != expected:
        diff = sorted(set(table.items()) ^ set(expected.items()))[:4]
        raise InternalAssertionError(
            f"frequency table diverged from the expansion at level {g.level}: {diff}",
            details={"level": g.level},
        )
    fresh = compute_level_vocc(g)
    for var in g.live_vars():
        if fresh[var] != vocc[var]:
            raise InternalAssertionError(
                f"vocc of variable {var} changed to {fresh[var]} (was {vocc[var]}) at level {g.level}"
            )


def step(engine: ScanRecompressor) -> bool:
    """Transform G_h into G_{h+1}; False once the grammar is terminal"""
    return engine.step()


def run(slp: Slp, debug_verify: Optional[bool] = None) -> Tuple[RePairGrammar, RunStats]:
    """RePair grammar of val(slp), computed without decompressing it"""
    token = set_current_engine(ScanRecompressor.phase)
    try:
        engine = ScanRecompressor(slp, debug_verify=debug_verify)
        engine.run_to_end()
        return engine.result()
    finally:
        reset_current_engine(token)
