"""Reference pipeline: build a trie, then minimize it from scratch.

This is the slow two-phase construction the incremental builders are checked
against.  Minimization here assigns class numbers by increasing state height
and never touches :mod:`dafsa.register`.
"""

from __future__ import annotations

from typing import Iterable

from .core import Automaton, StateId, WordLike, as_word
from .errors import AcyclicityViolation


def build_trie(words: Iterable[WordLike]) -> Automaton:
    a = Automaton()
    for word in words:
        q = a.start
        for label in as_word(word):
            nxt = a.delta(q, label)
            if nxt is None:
                nxt = a.add_state()
                a.set_transition(q, label, nxt)
            q = nxt
        a.set_final(q, True)
    return a


def state_heights(a: Automaton) -> dict[StateId, int]:
    """Longest-path distance to a leaf for every state reachable from start.

    Raises :class:`AcyclicityViolation` if a cycle is reachable.
    """
    height: dict[StateId, int] = {}
    on_stack: set[StateId] = set()
    stack = [(a.start, iter(a.transitions(a.start)))]
    on_stack.add(a.start)
    while stack:
        q, it = stack[-1]
        for _, t in it:
            if t in on_stack:
                raise AcyclicityViolation(f"cycle through {t!r}")
            if t not in height:
                on_stack.add(t)
                stack.append((t, iter(a.transitions(t))))
                break
        else:
            stack.pop()
            on_stack.discard(q)
            height[q] = 1 + max((height[t] for _, t in a.transitions(q)), default=-1)
    return height


def minimize_exhaustive(a: Automaton) -> Automaton:
    """Minimal automaton with the same language as ``a`` (a fresh copy)."""
    height = state_heights(a)
    klass: dict[StateId, int] = {}
    keys: dict[tuple, int] = {}
    for q in sorted(height, key=height.__getitem__):
        key = (
            a.is_final(q),
            tuple((label, klass[t]) for label, t in a.transitions(q)),
        )
        klass[q] = keys.setdefault(key, len(keys))

    out = Automaton()
    new = {klass[a.start]: out.start}
    for n in range(len(keys)):
        if n not in new:
            new[n] = out.add_state()
    for (final, arcs), n in keys.items():
        out.set_final(new[n], final)
        for label, m in arcs:
            out.set_transition(new[n], label, new[m])
    return out


def canonical_numbering(a: Automaton) -> list[StateId]:
    """Reachable states in depth-first preorder from start, ascending labels."""
    order = []
    seen = set()
    stack = [a.start]
    while stack:
        q = stack.pop()
        if q in seen:
            continue
        seen.add(q)
        order.append(q)
        stack.extend(t for _, t in reversed(a.transitions(q)) if t not in seen)
    return order


def canonical_form(a: Automaton) -> bytes:
    """Text rendering where byte equality coincides with isomorphism.

    Also the on-disk ``DAFSA 1`` format written by :func:`dafsa.io.serialize`.
    """
    order = canonical_numbering(a)
    number = {q: i for i, q in enumerate(order)}
    lines = ["DAFSA 1", f"states {len(order)} start 0"]
    for i, q in enumerate(order):
        parts = [str(i), "F" if a.is_final(q) else "."]
        parts.extend(f"{label:02x}:{number[t]}" for label, t in a.transitions(q))
        lines.append(" ".join(parts))
    return ("\n".join(lines) + "\n").encode("ascii")


def oracle_minimal(words: Iterable[WordLike]) -> Automaton:
    return minimize_exhaustive(build_trie(words))
