"""
Level grammars G_h.

Rule X has the form (optional left variable) . run-length letters . (optional
right variable). Indices 0..n-1 are the SLP variables, n is X_# -> # X_{n-1}
and n+1 is the start X_$ -> X_# $, so G_h derives #T_h$. A rule whose
expansion became empty is null; it keeps its index and is no longer
referenced by any live rule.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Protocol, Sequence, Union

from grc.core.logging_config import get_logger
from grc.grammar.rlstring import RlRun, RlString
from grc.grammar.slp import Slp, compute_slp_vocc, require_valid
from grc.grammar.symbols import DOLLAR, HASH, SENTINELS

logger = get_logger(__name__)


class RuleView(Protocol):
    """Read-only shape shared by LevelRule and the fast engine's linked rules"""

    left: Optional[int]
    right: Optional[int]

    @property
    def head(self): ...

    @property
    def tail(self): ...

    @property
    def run_count(self) -> int: ...

    @property
    def is_null(self) -> bool: ...


@dataclass
class LevelRule:
    """One rule of a level grammar"""

    left: Optional[int] = None
    mid: RlString = field(default_factory=RlString)
    right: Optional[int] = None
    null: bool = False

    @property
    def head(self) -> Optional[RlRun]:
        return self.mid.head

    @property
    def tail(self) -> Optional[RlRun]:
        return self.mid.tail

    @property
    def run_count(self) -> int:
        return len(self.mid)

    @property
    def is_null(self) -> bool:
        return self.null

    @property
    def size(self) -> int:
        """Rule size: runs plus present variables"""
        if self.null:
            return 0
        return len(self.mid) + (self.left is not None) + (self.right is not None)

    def is_empty(self) -> bool:
        return self.left is None and self.right is None and not self.mid


@dataclass
class LevelGrammar:
    """Mutable grammar of one recompression level"""

    sigma: int
    n: int
    rules: List[LevelRule]
    level: int = 0
    text_len: int = 0

    @property
    def hash_var(self) -> int:
        return self.n

    @property
    def start(self) -> int:
        return self.n + 1

    def live_vars(self) -> Iterator[int]:
        for index, rule in enumerate(self.rules):
            if not rule.null:
                yield index

    def live_count(self) -> int:
        """n_h"""
        return sum(1 for rule in self.rules if not rule.null)

    def grammar_size(self) -> int:
        """|G_h|"""
        return sum(rule.size for rule in self.rules)

    def size_bound(self) -> int:
        """|#T_h$| + 2(n+2)"""
        return self.text_len + 2 * (self.n + 2)


def attach_sentinels(slp: Slp) -> LevelGrammar:
    """
    Build G_0 from a valid SLP.

    Variable children become the left/right variables, terminal children
    single-letter runs of the rule string. Rules unreachable from the start
    are tombstoned as null.
    """
    expanded_length = require_valid(slp)
    sigma = slp.sigma
    n = slp.n
    vocc = compute_slp_vocc(slp)

    rules: List[LevelRule] = []
    unreachable = 0
    for index, (left, right) in enumerate(slp.rules):
        if not vocc[index]:
            rules.append(LevelRule(null=True))
            unreachable += 1
            continue
        letters = [symbol for symbol in (left, right) if symbol < sigma]
        rules.append(
            LevelRule(
                left=left - sigma if left >= sigma else None,
                mid=RlString.from_symbols(letters),
                right=right - sigma if right >= sigma else None,
            )
        )
    rules.append(LevelRule(left=None, mid=RlString([RlRun(HASH, 1)]), right=n - 1))
    rules.append(LevelRule(left=n, mid=RlString([RlRun(DOLLAR, 1)]), right=None))

    if unreachable:
        logger.warning(f"Tombstoned {unreachable} rule(s) unreachable from the start rule")

    return LevelGrammar(sigma=sigma, n=n, rules=rules, level=0, text_len=expanded_length + 2)


def iter_level(g: LevelGrammar, strip_sentinels: bool = False, root: Optional[int] = None) -> Iterator[int]:
    """Stream the expansion of a level-grammar rule (the start by default)"""
    rules = g.rules
    stack: List[Union[int, RlRun]] = [g.start if root is None else root]
    while stack:
        item = stack.pop()
        if isinstance(item, RlRun):
            if strip_sentinels and item.letter in SENTINELS:
                continue
            for _ in range(item.exp):
                yield item.letter
            continue
        rule = rules[item]
        if rule.right is not None:
            stack.append(rule.right)
        stack.extend(reversed(rule.mid.runs))
        if rule.left is not None:
            stack.append(rule.left)


def expand_level(g: LevelGrammar, strip_sentinels: bool = False) -> List[int]:
    """T_h, or #T_h$ when sentinels are kept"""
    return list(iter_level(g, strip_sentinels=strip_sentinels))


def compute_level_vocc(g: LevelGrammar) -> List[int]:
    """Occurrence counts of every level-grammar rule; null rules get 0"""
    vocc = [0] * len(g.rules)
    vocc[g.start] = 1
    for index in range(len(g.rules) - 1, -1, -1):
        rule = g.rules[index]
        weight = vocc[index]
        if rule.null or not weight:
            continue
        if rule.left is not None:
            vocc[rule.left] += weight
        if rule.right is not None:
            vocc[rule.right] += weight
    return vocc


def compute_vocc(g: Union[Slp, LevelGrammar]) -> List[int]:
    """
    Number of derivation-tree nodes labelled by each variable.

    Computed top-down in one pass over the rules in reverse topological order.
    """
    if isinstance(g, Slp):
        return compute_slp_vocc(g)
    return compute_level_vocc(g)


@dataclass
class BoundaryInfo:
    """Leftmost block, rightmost block and single-block flag per live variable"""

    lmb: List[Optional[RlRun]]
    rmb: List[Optional[RlRun]]
    single: List[bool]

    def first_letter(self, var: int) -> int:
        return self.lmb[var].letter

    def last_letter(self, var: int) -> int:
        return self.rmb[var].letter

    def is_sb(self, var: int) -> bool:
        return self.single[var]


# Separates blocks that cannot touch.
_GAP = None


def _child_pieces(info: BoundaryInfo, var: int) -> list:
    if info.single[var]:
        return [info.lmb[var]]
    return [info.lmb[var], _GAP, info.rmb[var]]


def compute_boundary_info(rules: Sequence[RuleView]) -> BoundaryInfo:
    """
    Bottom-up lmb/rmb/isSB of every live variable.

    Each rule only needs the first and last blocks of its children and of its
    own run string, so the pass is constant work per rule.
    """
    size = len(rules)
    info = BoundaryInfo(lmb=[None] * size, rmb=[None] * size, single=[False] * size)
    for var, rule in enumerate(rules):
        if rule.is_null:
            continue
        pieces: list = []
        if rule.left is not None:
            pieces.extend(_child_pieces(info, rule.left))
        count = rule.run_count
        if count == 1:
            pieces.append(rule.head)
        elif count == 2:
            pieces.extend((rule.head, rule.tail))
        elif count >= 3:
            pieces.extend((rule.head, _GAP, rule.tail))
        if rule.right is not None:
            pieces.extend(_child_pieces(info, rule.right))

        blocks: list = []
        for piece in pieces:
            if piece is _GAP:
                blocks.append(_GAP)
            elif blocks and blocks[-1] is not _GAP and blocks[-1].letter == piece.letter:
                blocks[-1] = RlRun(piece.letter, blocks[-1].exp + piece.exp)
            else:
                blocks.append(RlRun(piece.letter, piece.exp))
        info.lmb[var] = blocks[0]
        info.rmb[var] = blocks[-1]
        info.single[var] = len(blocks) == 1
    return info
