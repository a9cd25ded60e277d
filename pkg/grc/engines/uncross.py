"""
Uncrossing plans shared by the scan and fast recompressors.

A plan only reads a rule through the RuleView shape and returns a RuleEdit;
each engine applies edits to its own rule representation. After uncrossing a
non-repeating bigram c1c2, every occurrence in #T_h$ is two adjacent letters
of one run string. After uncrossing a letter c, every maximal block of c is a
single explicit run.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional

from grc.grammar.level import BoundaryInfo, RuleView
from grc.grammar.rlstring import RlRun, RunBuilder, merge_runs, strip_leading, strip_trailing


@dataclass
class RuleEdit:
    """Replacement runs for one rule.

    ``head``/``tail`` replace the first/last run of a string with at least two
    runs; ``whole`` replaces the entire run string.
    """

    head: Optional[List[RlRun]] = None
    tail: Optional[List[RlRun]] = None
    whole: Optional[List[RlRun]] = None
    drop_left: bool = False
    drop_right: bool = False

    @property
    def touches_runs(self) -> bool:
        return self.head is not None or self.tail is not None or self.whole is not None


def plan_nonrepeating(rule: RuleView, c1: int, c2: int, info: BoundaryInfo) -> Optional[RuleEdit]:
    """
    Pop-in/pop-out of c1c2 for one live rule, decided on the pre-pop snapshot.

    A leading literal c2 is popped when no left variable precedes it and a
    trailing literal c1 when no right variable follows. A child whose
    expansion ends with c1 gets c1 inserted after it unless it closes the rule;
    a child starting with c2 gets c2 inserted before it unless it opens the rule.
    """
    k = rule.run_count
    left, right = rule.left, rule.right
    pop_front = left is None and k > 0 and rule.head.letter == c2
    pop_back = right is None and k > 0 and rule.tail.letter == c1
    push_front = left is not None and (k > 0 or right is not None) and info.last_letter(left) == c1
    push_back = right is not None and (k > 0 or left is not None) and info.first_letter(right) == c2
    if not (pop_front or pop_back or push_front or push_back):
        return None

    if k >= 2:
        edit = RuleEdit()
        if pop_front or push_front:
            builder = RunBuilder()
            if push_front:
                builder.push(c1)
            builder.push(rule.head.letter, rule.head.exp - pop_front)
            edit.head = builder.runs()
        if pop_back or push_back:
            builder = RunBuilder()
            builder.push(rule.tail.letter, rule.tail.exp - pop_back)
            if push_back:
                builder.push(c2)
            edit.tail = builder.runs()
        return edit

    builder = RunBuilder()
    if push_front:
        builder.push(c1)
    if k == 1:
        builder.push(rule.head.letter, rule.head.exp - pop_front - pop_back)
    if push_back:
        builder.push(c2)
    return RuleEdit(whole=builder.runs())


def drop_null_children(rules) -> List[int]:
    """
    Bottom-up removal of null children; rules left empty become null.

    Returns:
        Variables that became null in this pass
    """
    nulled: List[int] = []
    for var, rule in enumerate(rules):
        if rule.null:
            continue
        if rule.left is not None and rules[rule.left].null:
            rule.left = None
        if rule.right is not None and rules[rule.right].null:
            rule.right = None
        if rule.is_empty():
            rule.null = True
            nulled.append(var)
    return nulled


class RepeatingUncrosser:
    """
    Bottom-up stripping of leading and trailing c-blocks.

    ``lead[X]``/``trail[X]`` record the c-runs removed from the front/back of
    val(X); every occurrence of X is then read as c^lead X c^trail. A rule
    whose expansion was a pure power of c becomes null with lead = the power.
    Plans must be requested and applied in topological order.
    """

    def __init__(self, size: int, letter: int):
        self.letter = letter
        self.lead = [0] * size
        self.trail = [0] * size

    def plan(self, var: int, rule: RuleView, is_null: Callable[[int], bool]) -> Optional[RuleEdit]:
        c = self.letter
        left, right = rule.left, rule.right
        keep_left = left is not None and not is_null(left)
        keep_right = right is not None and not is_null(right)
        pre = 0
        if left is not None:
            pre = self.trail[left] if keep_left else self.lead[left]
        post = self.lead[right] if right is not None else 0

        edit = RuleEdit(
            drop_left=left is not None and not keep_left,
            drop_right=right is not None and not keep_right,
        )
        lead_strip = trail_strip = 0
        if rule.run_count >= 2:
            front = merge_runs([RlRun(c, pre) if pre else None, rule.head])
            if not keep_left:
                lead_strip = strip_leading(front, c)
            back = merge_runs([rule.tail, RlRun(c, post) if post else None])
            if not keep_right:
                trail_strip = strip_trailing(back, c)
            if pre or lead_strip:
                edit.head = front
            if post or trail_strip:
                edit.tail = back
        else:
            runs = merge_runs([RlRun(c, pre) if pre else None, rule.head, RlRun(c, post) if post else None])
            if not keep_left:
                lead_strip = strip_leading(runs, c)
            if not keep_right:
                trail_strip = strip_trailing(runs, c)
            if pre or post or lead_strip or trail_strip:
                edit.whole = runs

        self.lead[var] = self.lead[left] if keep_left else lead_strip
        self.trail[var] = self.trail[right] if keep_right else trail_strip
        if not edit.touches_runs and not edit.drop_left and not edit.drop_right:
            return None
        return edit
