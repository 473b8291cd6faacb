import pytest
from hypothesis import given

from dafsa.core import Automaton
from dafsa.errors import RegisterError
from dafsa.oracle import build_trie, state_heights
from dafsa.register import (
    Register,
    Signature,
    register_insert,
    register_lookup,
    register_remove,
    signature_of,
)
from dafsa.sorted_builder import SortedBuilder
from dafsa.unsorted_builder import UnsortedBuilder

from conftest import corpus_st


def test_signature_of_leaf_and_parent():
    a = Automaton()
    leaf = a.add_state(True)
    p = a.add_state()
    a.set_transition(p, ord("d"), leaf)
    assert signature_of(a, leaf) == Signature(True, ())
    assert signature_of(a, p) == Signature(False, ((ord("d"), leaf),))
    assert signature_of(a, a.clone_state(p)) == signature_of(a, p)


def test_lookup_insert_remove():
    a = Automaton()
    r = Register()
    leaf = a.add_state(True)
    assert register_lookup(r, Signature(True, ())) is None
    register_insert(r, a, leaf)
    assert len(r) == 1
    assert register_lookup(r, Signature(True, ())) == leaf

    p = a.add_state()
    a.set_transition(p, 1, leaf)
    register_insert(r, a, p)
    assert len(r) == 2

    register_remove(r, a, leaf)
    assert register_lookup(r, Signature(True, ())) is None
    with pytest.raises(RegisterError):
        register_remove(r, a, leaf)


def test_insert_equivalent_state_refused():
    a = Automaton()
    r = Register()
    register_insert(r, a, a.add_state(True))
    with pytest.raises(RegisterError):
        register_insert(r, a, a.add_state(True))


def test_withdraw_modify_reregister():
    a = Automaton()
    r = Register()
    leaf = a.add_state(True)
    p = a.add_state()
    a.set_transition(p, 1, leaf)
    register_insert(r, a, leaf)
    register_insert(r, a, p)
    register_remove(r, a, p)
    a.set_transition(p, 2, leaf)
    register_insert(r, a, p)
    assert register_lookup(r, signature_of(a, p)) == p


def test_remove_after_mutation_is_caught():
    a = Automaton()
    r = Register()
    p = a.add_state()
    register_insert(r, a, p)
    a.set_final(p)
    with pytest.raises(RegisterError):
        register_remove(r, a, p)


def _sorted_with_live_register(words):
    b = SortedBuilder()
    for w in sorted(set(words)):
        b.add(w)
    return b


def test_sorted_register_has_shared_d_state():
    b = _sorted_with_live_register([b"abd", b"bad"])
    a, r = b.automaton, b.register
    b.finish()
    shared = a.delta_star(a.start, b"ab")
    assert shared == a.delta_star(a.start, b"ba")
    leaf = a.delta_star(a.start, b"abd")
    assert register_lookup(r, Signature(False, ((ord("d"), leaf),))) == shared


@given(corpus_st)
def test_register_invariants_after_unsorted_build(words):
    b = UnsortedBuilder()
    for w in words:
        b.add(w)
    a, r = b.automaton, b.register
    members = list(r)
    assert set(members) == set(a.states()) - {a.start}
    sigs = [signature_of(a, q) for q in members]
    assert len(set(sigs)) == len(sigs)
    for q, sig in zip(members, sigs):
        assert register_lookup(r, sig) == q


@given(corpus_st)
def test_equal_signature_means_equal_right_language(words):
    # Trie states visited bottom-up with arcs already pointing at class
    # representatives: signature equality must coincide with equality of the
    # brute-force right languages.
    a = build_trie(words)
    h = state_heights(a)
    reps = []
    rep_of = {}
    for q in sorted(h, key=h.__getitem__):
        for label, t in a.transitions(q):
            a.set_transition(q, label, rep_of[t])
        sig = signature_of(a, q)
        lang = a.enumerate_language(q)
        match = [p for p in reps if signature_of(a, p) == sig]
        assert [a.enumerate_language(p) for p in match] in ([], [lang])
        same_lang = [p for p in reps if a.enumerate_language(p) == lang]
        assert same_lang == match
        rep_of[q] = match[0] if match else q
        if not match:
            reps.append(q)
