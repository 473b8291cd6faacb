"""Minimal automaton construction from words in arbitrary order.

The automaton is kept minimal after every insertion.  Every live state except
the start state is registered between insertions.

Inserting a word ``w`` with common-prefix path ``P = [start, p1, ..., pk]``:

* States ``p1 .. p(f-1)`` before the first confluence state ``pf`` are about
  to change their right language, so they are withdrawn from the register
  up front.  Nothing above the new suffix is then registered, which is what
  rules out merging a suffix state into one of its own ancestors.
* States ``pf .. pk`` are shared with other words, so they are cloned and the
  clone chain replaces them on the path of ``w``.
* The suffix is appended to the last path state and minimized deepest first.
* Walking back toward the start state, each path state is replaced or
  registered.  As soon as an original (non-clone) state keeps its identity,
  every state above it has an unchanged signature and is simply
  re-registered.
"""

from __future__ import annotations

import time
from typing import Iterable, Optional

from .core import Automaton, StateId, WordLike, as_word, prefix_path
from .errors import AcyclicityViolation
from .register import Register, signature_of
from .stats import BuildStats


def first_state(a: Automaton, path: list[StateId]) -> Optional[int]:
    """Index of the first confluence state along ``path``, or None."""
    for i, q in enumerate(path):
        if a.is_confluence(q):
            return i
    return None


def replace_or_register_unsorted(
    a: Automaton,
    r: Register,
    state: StateId,
    label: int,
    ancestors: Optional[set] = None,
) -> StateId:
    """Merge ``state``'s child on ``label`` into its class or register it.

    Returns whichever state the arc points to afterwards.
    """
    child = a.delta(state, label)
    sig = signature_of(a, child)
    rep = r.lookup(sig)
    if rep is None:
        r.insert(a, child, sig)
        return child
    if ancestors is not None and rep in ancestors:
        raise AcyclicityViolation(
            f"merging {child!r} into ancestor {rep!r} would close a cycle"
        )
    a.set_transition(state, label, rep)
    a.delete_state(child)
    return rep


def add_suffix_minimized(
    a: Automaton,
    r: Register,
    origin: StateId,
    suffix: bytes,
    ancestors: Optional[set] = None,
) -> StateId:
    """Append ``suffix`` below ``origin``, minimizing from its far end.

    ``origin`` must not be registered.  Returns the state ``origin`` now
    reaches on ``suffix[0]`` (``origin`` itself for an empty suffix).
    """
    if not suffix:
        a.set_final(origin, True)
        return origin
    chain = [origin]
    for label in suffix:
        q = a.add_state()
        a.set_transition(chain[-1], label, q)
        chain.append(q)
    a.set_final(chain[-1], True)
    for i in range(len(suffix), 0, -1):
        replace_or_register_unsorted(a, r, chain[i - 1], suffix[i - 1], ancestors)
    return a.delta(origin, suffix[0])


def add_word(
    a: Automaton,
    r: Register,
    word: WordLike,
    stats: Optional[BuildStats] = None,
) -> bool:
    """Insert ``word`` keeping ``a`` minimal.  Returns False if it was present."""
    w = as_word(word)
    path = prefix_path(a, w)
    k = len(path) - 1
    suffix = w[k:]
    if not suffix and a.is_final(path[-1]):
        return False

    f = first_state(a, path)
    split = k + 1 if f is None else f
    for q in path[1:split]:
        r.remove(a, q)
    cur = path[:split]
    for i in range(split, k + 1):
        c = a.clone_state(path[i])
        a.set_transition(cur[-1], w[i - 1], c)
        cur.append(c)

    ancestors = set(cur)
    add_suffix_minimized(a, r, cur[-1], suffix, ancestors)
    visits = len(suffix)

    for i in range(k, 0, -1):
        child = cur[i]
        if a.debug:
            assert not a.is_confluence(child), child
        ancestors.discard(child)
        rep = replace_or_register_unsorted(a, r, cur[i - 1], w[i - 1], ancestors)
        visits += 1
        if rep == child and i < split:
            for q in cur[1:i]:
                r.insert(a, q)
            break

    if stats is not None:
        stats.rr_visits += visits
    return True


def rebuild_register(a: Automaton) -> Register:
    """Register every non-start state of ``a``, merging duplicates on the way.

    States are visited by increasing height so each one's children are
    already representatives.  A minimal input comes out unchanged.
    """
    height: dict[StateId, int] = {}
    stack = [(a.start, False)]
    while stack:
        q, expanded = stack.pop()
        if expanded:
            height[q] = 1 + max(
                (height[t] for _, t in a.transitions(q)), default=-1
            )
        elif q not in height:
            stack.append((q, True))
            stack.extend((t, False) for _, t in a.transitions(q) if t not in height)

    r = Register()
    rep: dict[StateId, StateId] = {}
    merged = []
    for q in sorted(height, key=height.__getitem__):
        for label, t in a.transitions(q):
            if rep[t] != t:
                a.set_transition(q, label, rep[t])
        if q == a.start:
            continue
        sig = signature_of(a, q)
        found = r.lookup(sig)
        if found is None:
            r.insert(a, q, sig)
            rep[q] = q
        else:
            rep[q] = found
            merged.append(q)
    for q in merged:
        a.delete_state(q)
    return r


class UnsortedBuilder:
    """Incremental builder accepting words in any order, duplicates included.

    Pass an existing minimal ``automaton`` to keep extending it; its register
    is rebuilt first.
    """

    def __init__(self, automaton: Optional[Automaton] = None, *, debug: bool = False):
        if automaton is None:
            self.automaton = Automaton(debug=debug)
            self.register = Register()
        else:
            self.automaton = automaton
            self.register = rebuild_register(automaton)
        self.stats = BuildStats()
        self._t0 = time.perf_counter()

    def add(self, word: WordLike) -> bool:
        self.stats.words_read += 1
        added = add_word(self.automaton, self.register, word, self.stats)
        if not added:
            self.stats.duplicates_skipped += 1
        return added

    def finish(self) -> Automaton:
        self.stats.capture(self.automaton)
        self.stats.wall_time = time.perf_counter() - self._t0
        return self.automaton


def build_unsorted(
    words: Iterable[WordLike],
    stats: Optional[BuildStats] = None,
    *,
    debug: bool = False,
) -> Automaton:
    builder = UnsortedBuilder(debug=debug)
    for w in words:
        builder.add(w)
    a = builder.finish()
    if stats is not None:
        stats.__dict__.update(builder.stats.__dict__)
    return a
