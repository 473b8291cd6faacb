"""Minimal deterministic acyclic finite-state automata built word by word."""

from .core import Automaton, StateId, as_word, common_prefix
from .errors import (
    AcyclicityViolation,
    DafsaError,
    DanglingReference,
    InvalidHandle,
    OutOfOrderInput,
    ParseError,
    RegisterError,
    UnsupportedVersion,
)
from .io import count_words, deserialize, dumps, export_dot, loads, read_words, serialize
from .oracle import build_trie, canonical_form, minimize_exhaustive, oracle_minimal
from .register import Register, Signature, signature_of
from .sorted_builder import SortedBuilder, build_sorted
from .stats import BuildStats
from .unsorted_builder import UnsortedBuilder, add_word, build_unsorted

__all__ = [
    "AcyclicityViolation",
    "Automaton",
    "BuildStats",
    "DafsaError",
    "DanglingReference",
    "InvalidHandle",
    "OutOfOrderInput",
    "ParseError",
    "Register",
    "RegisterError",
    "Signature",
    "SortedBuilder",
    "StateId",
    "UnsortedBuilder",
    "UnsupportedVersion",
    "add_word",
    "as_word",
    "build_sorted",
    "build_trie",
    "build_unsorted",
    "canonical_form",
    "common_prefix",
    "count_words",
    "deserialize",
    "dumps",
    "export_dot",
    "loads",
    "minimize_exhaustive",
    "oracle_minimal",
    "read_words",
    "serialize",
    "signature_of",
]
