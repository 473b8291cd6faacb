"""Minimal automaton construction from lexicographically sorted words.

Only the path spelled by the previous word can still change when the next
word arrives.  Everything hanging off that path to the left is final and lives
in the register; the part of the path that the new word does not share is
minimized bottom-up before the new suffix is appended.
"""

from __future__ import annotations

import time
from typing import Iterable, Optional

from .core import Automaton, StateId, WordLike, as_word, common_prefix
from .errors import OutOfOrderInput
from .register import Register, signature_of
from .stats import BuildStats


def last_child(a: Automaton, state: StateId) -> StateId:
    """Target of the greatest-label arc leaving ``state``."""
    return a.last_transition(state)[1]


def add_suffix(a: Automaton, origin: StateId, suffix: bytes) -> list[StateId]:
    """Append a fresh chain spelling ``suffix`` and mark its end final.

    Returns the created states; an empty suffix only marks ``origin`` final.
    """
    chain = []
    q = origin
    for label in suffix:
        nxt = a.add_state()
        a.set_transition(q, label, nxt)
        chain.append(nxt)
        q = nxt
    a.set_final(q, True)
    return chain


def _minimize_chain(a: Automaton, r: Register, chain: list[StateId]) -> int:
    # chain[0] is the anchor (left alone); chain[1:] are processed deepest first.
    # chain[i] must be the last child of chain[i-1].
    for i in range(len(chain) - 1, 0, -1):
        child, parent = chain[i], chain[i - 1]
        sig = signature_of(a, child)
        rep = r.lookup(sig)
        if rep is None:
            r.insert(a, child, sig)
        else:
            label = a.last_transition(parent)[0]
            a.set_transition(parent, label, rep)
            a.delete_state(child)
    return len(chain) - 1


def replace_or_register_sorted(
    a: Automaton,
    r: Register,
    state: StateId,
    path: Optional[list[StateId]] = None,
) -> int:
    """Minimize the unregistered tail hanging off ``state`` along last children.

    ``path`` may supply the tail as a cached state list (``path[0] == state``);
    otherwise it is discovered by following :func:`last_child`.  Returns the
    number of states processed.
    """
    if path is None:
        path = [state]
        while a.has_children(path[-1]):
            path.append(last_child(a, path[-1]))
    elif a.debug:
        assert path[0] == state
        for parent, child in zip(path, path[1:]):
            assert last_child(a, parent) == child, (parent, child)
        assert not a.has_children(path[-1])
    return _minimize_chain(a, r, path)


class SortedBuilder:
    """Incremental builder for sorted input.

    Feed words with :meth:`add` in non-decreasing order, then call
    :meth:`finish`.  Adjacent duplicates are skipped and counted.
    """

    def __init__(self, *, debug: bool = False):
        self.automaton = Automaton(debug=debug)
        self.register: Optional[Register] = Register()
        self.stats = BuildStats()
        self._path = [self.automaton.start]
        self._previous: Optional[bytes] = None
        self._t0 = time.perf_counter()

    def add(self, word: WordLike) -> None:
        if self.register is None:
            raise RuntimeError("builder already finished")
        word = as_word(word)
        self.stats.words_read += 1
        prev = self._previous
        if prev is not None:
            if word < prev:
                raise OutOfOrderInput(self.stats.words_read, word, prev)
            if word == prev:
                self.stats.duplicates_skipped += 1
                return
        a = self.automaton
        n, last = common_prefix(a, word)
        path = self._path
        if a.debug:
            assert path[n] == last
            assert a.has_children(last) == (len(path) > n + 1)
        if len(path) > n + 1:
            self.stats.rr_visits += replace_or_register_sorted(
                a, self.register, last, path[n:]
            )
        del path[n + 1:]
        path.extend(add_suffix(a, last, word[n:]))
        self._previous = word

    def finish(self) -> Automaton:
        if self.register is not None:
            a = self.automaton
            if len(self._path) > 1:
                self.stats.rr_visits += replace_or_register_sorted(
                    a, self.register, a.start, self._path
                )
            self._path = [a.start]
            self.register = None
            self.stats.capture(a)
            self.stats.wall_time = time.perf_counter() - self._t0
        return self.automaton


def build_sorted(
    words: Iterable[WordLike],
    stats: Optional[BuildStats] = None,
    *,
    debug: bool = False,
) -> Automaton:
    """Minimal automaton for a sorted word sequence.

    Raises :class:`OutOfOrderInput` on the first word that sorts before its
    predecessor.  Pass a :class:`BuildStats` to receive the build counters.
    """
    builder = SortedBuilder(debug=debug)
    for w in words:
        builder.add(w)
    a = builder.finish()
    if stats is not None:
        stats.__dict__.update(builder.stats.__dict__)
    return a
