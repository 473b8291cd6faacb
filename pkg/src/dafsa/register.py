"""Register of equivalence-class representatives.

Two states are interchangeable when they agree on finality and have the same
labelled arcs to the *same* target states.  That shortcut is only sound when
every target is already the unique representative of its own class, which is
why both builders fill the register strictly bottom-up.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .core import Automaton, StateId
from .errors import RegisterError


class Signature(NamedTuple):
    final: bool
    arcs: tuple[tuple[int, StateId], ...]


def signature_of(a: Automaton, q: StateId) -> Signature:
    return Signature(a.is_final(q), a.transitions(q))


class Register:
    """Hash map from :class:`Signature` to the state representing it.

    The reverse map is kept only to tell "never registered" apart from
    "registered, then mutated without being withdrawn first".
    """

    def __init__(self):
        self._index: dict[Signature, StateId] = {}
        self._members: dict[StateId, Signature] = {}

    def __len__(self) -> int:
        return len(self._index)

    def __contains__(self, q: StateId) -> bool:
        return q in self._members

    def __iter__(self):
        return iter(self._members)

    def lookup(self, sig: Signature) -> Optional[StateId]:
        return self._index.get(sig)

    def insert(self, a: Automaton, q: StateId, sig: Optional[Signature] = None) -> None:
        if sig is None:
            sig = signature_of(a, q)
        if q in self._members:
            raise RegisterError(f"{q!r} is already registered")
        other = self._index.get(sig)
        if other is not None:
            raise RegisterError(f"{q!r} is equivalent to registered {other!r}")
        self._index[sig] = q
        self._members[q] = sig

    def remove(self, a: Automaton, q: StateId) -> None:
        stored = self._members.get(q)
        if stored is None:
            raise RegisterError(f"{q!r} is not registered")
        if signature_of(a, q) != stored:
            raise RegisterError(
                f"{q!r} was modified while registered; withdraw it before mutating"
            )
        del self._members[q]
        del self._index[stored]


def register_lookup(r: Register, sig: Signature) -> Optional[StateId]:
    return r.lookup(sig)


def register_insert(r: Register, a: Automaton, q: StateId) -> None:
    r.insert(a, q)


def register_remove(r: Register, a: Automaton, q: StateId) -> None:
    r.remove(a, q)
