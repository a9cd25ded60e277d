"""
Doubly-linked run lists.

Both the text engine and the fast recompressor keep their strings as linked
run nodes. Every structural change goes through ``splice``, which hands each
node whose terms may change to ``retire`` before relinking and to ``admit``
afterwards, so callers can keep occurrence indexes and queues in step.
"""

from typing import Callable, Iterable, Iterator, List, Optional

from grc.grammar.rlstring import RlRun, merge_runs

NodeHook = Callable[["RunNode"], None]


def _ignore(node: "RunNode") -> None:
    return None


class RunNode:
    """A run c^d linked to its neighbours inside one list"""

    __slots__ = ("letter", "exp", "owner", "prev", "next")

    def __init__(self, letter: int, exp: int, owner: Optional[int] = None):
        self.letter = letter
        self.exp = exp
        self.owner = owner
        self.prev: Optional["RunNode"] = None
        self.next: Optional["RunNode"] = None

    def __repr__(self) -> str:
        return f"RunNode({self.letter}^{self.exp}, owner={self.owner})"


class LinkedRunList:
    """Canonical run list owned by one string (a rule or a text)"""

    __slots__ = ("first", "last", "count", "owner")

    def __init__(self, owner: Optional[int] = None):
        self.first: Optional[RunNode] = None
        self.last: Optional[RunNode] = None
        self.count = 0
        self.owner = owner

    @classmethod
    def from_runs(cls, runs: Iterable, owner: Optional[int] = None, admit: NodeHook = _ignore) -> "LinkedRunList":
        linked = cls(owner)
        linked.splice(None, None, list(runs), admit=admit)
        return linked

    def __iter__(self) -> Iterator[RunNode]:
        node = self.first
        while node is not None:
            yield node
            node = node.next

    def __len__(self) -> int:
        return self.count

    def runs(self) -> List[RlRun]:
        return [RlRun(node.letter, node.exp) for node in self]

    def symbol_count(self) -> int:
        return sum(node.exp for node in self)

    def splice(
        self,
        before: Optional[RunNode],
        after: Optional[RunNode],
        runs: List,
        retire: NodeHook = _ignore,
        admit: NodeHook = _ignore,
    ) -> List[RunNode]:
        """
        Replace the nodes strictly between ``before`` and ``after`` by ``runs``.

        ``None`` stands for the list boundary. The two neighbours are absorbed
        into the replacement so runs stay canonical; their outer neighbours are
        retired and admitted again because their adjacency changes.

        Returns:
            The newly linked nodes in order
        """
        lo_out = before.prev if before is not None else None
        hi_out = after.next if after is not None else None

        removed: List[RunNode] = []
        node = before if before is not None else self.first
        stop = hi_out
        while node is not None and node is not stop:
            removed.append(node)
            node = node.next

        if lo_out is not None:
            retire(lo_out)
        for node in removed:
            retire(node)
        if hi_out is not None:
            retire(hi_out)

        pieces = []
        if before is not None:
            pieces.append(before)
        pieces.extend(runs)
        if after is not None:
            pieces.append(after)
        merged = merge_runs(pieces)

        created = [RunNode(run.letter, run.exp, self.owner) for run in merged]
        for left, right in zip(created, created[1:]):
            left.next = right
            right.prev = left

        head = created[0] if created else hi_out
        tail = created[-1] if created else lo_out
        if lo_out is not None:
            lo_out.next = head
        else:
            self.first = head
        if hi_out is not None:
            hi_out.prev = tail
        else:
            self.last = tail
        if created:
            created[0].prev = lo_out
            created[-1].next = hi_out
        for node in removed:
            node.prev = node.next = None
        self.count += len(created) - len(removed)

        if lo_out is not None:
            admit(lo_out)
        for node in created:
            admit(node)
        if hi_out is not None:
            admit(hi_out)
        return created
