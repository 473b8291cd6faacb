"""Arena-backed deterministic acyclic automaton.

States live in parallel lists indexed by slot.  A :class:`StateId` pairs the
slot with a generation counter that is bumped whenever the slot is freed, so a
handle kept past :meth:`Automaton.delete_state` is detected instead of silently
aliasing whatever state reuses the slot.

Words are byte strings and labels are ints in ``range(256)``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import (
    AcyclicityViolation,
    DanglingReference,
    InvalidHandle,
)

WordLike = Union[bytes, bytearray, memoryview, str, Iterable[int]]


class StateId(NamedTuple):
    slot: int
    gen: int

    def __repr__(self) -> str:
        if self.gen:
            return f"q{self.slot}.{self.gen}"
        return f"q{self.slot}"


def as_word(word: WordLike) -> bytes:
    """Coerce ``word`` to bytes; ``str`` is encoded as UTF-8."""
    if isinstance(word, bytes):
        return word
    if isinstance(word, str):
        return word.encode("utf-8")
    return bytes(word)


class Automaton:
    """Mutable DAFSA with explicit in-degree bookkeeping.

    The start state carries one virtual incoming edge, so ``in_degree(start)``
    is 1 on a fresh automaton and the start state can never look like garbage.

    With ``debug=True`` every :meth:`set_transition` verifies that the new arc
    does not close a cycle.  This is a full graph search per edit and is meant
    for tests.
    """

    def __init__(self, *, debug: bool = False):
        self.debug = debug
        self._final: list[bool] = []
        self._arcs: list[Optional[dict[int, StateId]]] = []
        self._indeg: list[int] = []
        self._gen: list[int] = []
        self._free: list[int] = []
        self.live_count = 0
        self.peak_live = 0
        self.start = self.add_state()
        self._indeg[self.start.slot] = 1

    # -- handles -----------------------------------------------------------

    def _check(self, q: StateId) -> int:
        slot = q.slot
        if (
            slot >= len(self._gen)
            or self._gen[slot] != q.gen
            or self._arcs[slot] is None
        ):
            raise InvalidHandle(q)
        return slot

    def is_live(self, q: StateId) -> bool:
        try:
            self._check(q)
        except InvalidHandle:
            return False
        return True

    def states(self) -> Iterator[StateId]:
        """Live states in slot order."""
        for slot, arcs in enumerate(self._arcs):
            if arcs is not None:
                yield StateId(slot, self._gen[slot])

    def __len__(self) -> int:
        return self.live_count

    # -- queries -----------------------------------------------------------

    def is_final(self, q: StateId) -> bool:
        return self._final[self._check(q)]

    def transitions(self, q: StateId) -> tuple[tuple[int, StateId], ...]:
        """Outgoing ``(label, target)`` pairs in ascending label order."""
        return tuple(self._arcs[self._check(q)].items())

    def has_children(self, q: StateId) -> bool:
        return bool(self._arcs[self._check(q)])

    def last_transition(self, q: StateId) -> tuple[int, StateId]:
        arcs = self._arcs[self._check(q)]
        if not arcs:
            raise ValueError(f"{q!r} has no outgoing transitions")
        label = next(reversed(arcs))
        return label, arcs[label]

    def in_degree(self, q: StateId) -> int:
        """Incoming arc count, including the start state's virtual edge."""
        return self._indeg[self._check(q)]

    def is_confluence(self, q: StateId) -> bool:
        slot = self._check(q)
        real = self._indeg[slot] - (1 if q == self.start else 0)
        return real > 1

    def delta(self, q: StateId, label: int) -> Optional[StateId]:
        return self._arcs[self._check(q)].get(label)

    def delta_star(self, q: StateId, word: WordLike) -> Optional[StateId]:
        self._check(q)
        arcs = self._arcs
        for label in as_word(word):
            q = arcs[q.slot].get(label)
            if q is None:
                return None
        return q

    def accepts(self, word: WordLike) -> bool:
        q = self.delta_star(self.start, word)
        return q is not None and self._final[q.slot]

    __contains__ = accepts

    def num_transitions(self) -> int:
        return sum(len(arcs) for arcs in self._arcs if arcs is not None)

    def num_finals(self) -> int:
        return sum(
            1
            for arcs, final in zip(self._arcs, self._final)
            if arcs is not None and final
        )

    # -- mutation ----------------------------------------------------------

    def add_state(self, final: bool = False) -> StateId:
        if self._free:
            slot = self._free.pop()
            self._final[slot] = final
            self._arcs[slot] = {}
            self._indeg[slot] = 0
        else:
            slot = len(self._arcs)
            self._final.append(final)
            self._arcs.append({})
            self._indeg.append(0)
            self._gen.append(0)
        self.live_count += 1
        if self.live_count > self.peak_live:
            self.peak_live = self.live_count
        return StateId(slot, self._gen[slot])

    def set_final(self, q: StateId, final: bool = True) -> None:
        self._final[self._check(q)] = final

    def set_transition(self, src: StateId, label: int, dst: StateId) -> None:
        """Point ``src``'s arc on ``label`` at ``dst``, adding or redirecting it."""
        self._check(src)
        self._check(dst)
        if not 0 <= label <= 255:
            raise ValueError(f"label out of range: {label}")
        if self.debug and self._reaches(dst, src):
            raise AcyclicityViolation(
                f"arc {src!r} -{label:#04x}-> {dst!r} would close a cycle"
            )
        self._link(src, label, dst)

    def _link(self, src: StateId, label: int, dst: StateId) -> None:
        # Unchecked: callers guarantee liveness.  Tests use this directly to
        # wire cycles that set_transition would refuse.
        arcs = self._arcs[src.slot]
        old = arcs.get(label)
        if old is not None:
            if old == dst:
                return
            self._indeg[old.slot] -= 1
            arcs[label] = dst
        elif arcs and label < next(reversed(arcs)):
            arcs[label] = dst
            self._arcs[src.slot] = dict(sorted(arcs.items()))
        else:
            arcs[label] = dst
        self._indeg[dst.slot] += 1

    def clone_state(self, q: StateId) -> StateId:
        """Fresh state with ``q``'s finality and the same outgoing arcs."""
        slot = self._check(q)
        c = self.add_state(self._final[slot])
        arcs = dict(self._arcs[slot])
        self._arcs[c.slot] = arcs
        for target in arcs.values():
            self._indeg[target.slot] += 1
        return c

    def delete_state(self, q: StateId) -> None:
        slot = self._check(q)
        if q == self.start:
            raise DanglingReference("the start state cannot be deleted")
        if self._indeg[slot]:
            raise DanglingReference(
                f"{q!r} still has {self._indeg[slot]} incoming transition(s)"
            )
        for target in self._arcs[slot].values():
            self._indeg[target.slot] -= 1
        self._arcs[slot] = None
        self._final[slot] = False
        self._gen[slot] += 1
        self._free.append(slot)
        self.live_count -= 1

    # -- whole-graph checks ------------------------------------------------

    def _reaches(self, src: StateId, dst: StateId) -> bool:
        """True if ``dst`` is reachable from ``src`` by zero or more arcs."""
        if src == dst:
            return True
        seen = {src.slot}
        stack = [src]
        arcs = self._arcs
        while stack:
            for t in arcs[stack.pop().slot].values():
                if t == dst:
                    return True
                if t.slot not in seen:
                    seen.add(t.slot)
                    stack.append(t)
        return False

    def check_acyclic(self) -> bool:
        """Full three-colour DFS over every live state."""
        WHITE, GREY, BLACK = 0, 1, 2
        colour = {}
        arcs = self._arcs
        for root in self.states():
            if colour.get(root.slot, WHITE) != WHITE:
                continue
            colour[root.slot] = GREY
            stack = [(root, iter(arcs[root.slot].values()))]
            while stack:
                q, it = stack[-1]
                for t in it:
                    c = colour.get(t.slot, WHITE)
                    if c == GREY:
                        return False
                    if c == WHITE:
                        colour[t.slot] = GREY
                        stack.append((t, iter(arcs[t.slot].values())))
                        break
                else:
                    colour[q.slot] = BLACK
                    stack.pop()
        return True

    def reachable(self) -> set[StateId]:
        seen = {self.start}
        stack = [self.start]
        while stack:
            for t in self._arcs[stack.pop().slot].values():
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def iter_language(self, q: Optional[StateId] = None) -> Iterator[bytes]:
        """Accepted words (right language of ``q``) in lexicographic order.

        Assumes the automaton is acyclic; a cycle makes this loop forever.
        """
        if q is None:
            q = self.start
        self._check(q)
        arcs, final = self._arcs, self._final
        prefix = bytearray()
        if final[q.slot]:
            yield b""
        stack = [iter(arcs[q.slot].items())]
        while stack:
            for label, t in stack[-1]:
                prefix.append(label)
                if final[t.slot]:
                    yield bytes(prefix)
                stack.append(iter(arcs[t.slot].items()))
                break
            else:
                stack.pop()
                if prefix:
                    prefix.pop()

    def enumerate_language(self, q: Optional[StateId] = None) -> list[bytes]:
        return list(self.iter_language(q))

    def __repr__(self) -> str:
        return (
            f"<Automaton states={self.live_count} "
            f"transitions={self.num_transitions()}>"
        )


def common_prefix(a: Automaton, word: WordLike) -> tuple[int, StateId]:
    """Longest prefix of ``word`` readable from the start state.

    Returns its length and the state it leads to.
    """
    q = a.start
    n = 0
    for label in as_word(word):
        nxt = a.delta(q, label)
        if nxt is None:
            break
        q = nxt
        n += 1
    return n, q


def prefix_path(a: Automaton, word: WordLike) -> list[StateId]:
    """States visited while reading the common prefix, start state first."""
    path = [a.start]
    for label in as_word(word):
        nxt = a.delta(path[-1], label)
        if nxt is None:
            break
        path.append(nxt)
    return path
