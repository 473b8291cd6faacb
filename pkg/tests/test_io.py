import io
import re

import pytest
from hypothesis import given

from dafsa.core import Automaton
from dafsa.errors import ParseError, UnsupportedVersion
from dafsa.io import count_words, deserialize, dumps, export_dot, loads, read_words, serialize
from dafsa.oracle import build_trie, canonical_form, oracle_minimal
from dafsa.sorted_builder import build_sorted
from dafsa.unsorted_builder import build_unsorted

from conftest import corpus_st


NODE = re.compile(r"^  \d+ \[shape=", re.M)


def words_of(data):
    return list(read_words(io.BytesIO(data)))


def test_read_words():
    assert words_of(b"abd\nbad\n") == [b"abd", b"bad"]
    assert words_of(b"\n") == [b""]
    assert words_of(b"\xff\xfe\n") == [b"\xff\xfe"]
    assert words_of(b"a\r\nb\r\n") == [b"a", b"b"]
    assert words_of(b"last") == [b"last"]
    assert words_of(b"") == []


def test_read_error_reports_offset():
    class Broken(io.RawIOBase):
        def __init__(self):
            self.lines = [b"abc\n"]

        def __iter__(self):
            return self

        def __next__(self):
            if self.lines:
                return self.lines.pop()
            raise OSError("disk gone")

    with pytest.raises(OSError, match="offset 4"):
        list(read_words(Broken()))


def test_serialize_empty():
    buf = io.BytesIO()
    serialize(Automaton(), buf)
    assert buf.getvalue() == b"DAFSA 1\nstates 1 start 0\n0 .\n"


def test_no_trailing_whitespace():
    for line in dumps(build_sorted([b"ab", b"b"])).split(b"\n"):
        assert line == line.rstrip()


@given(corpus_st)
def test_round_trip(words):
    a = build_unsorted(words)
    data = dumps(a)
    b = deserialize(io.BytesIO(data))
    assert canonical_form(b) == data
    assert b.enumerate_language() == sorted(set(words))
    assert dumps(build_sorted(sorted(words))) == data


@pytest.mark.parametrize(
    "data, line",
    [
        (b"", 1),
        (b"DAFSA\n", 1),
        (b"DAFSA 1\nstates x start 0\n", 2),
        (b"DAFSA 1\nstates 2 start 0\n0 . 61:1\n", 4),
        (b"DAFSA 1\nstates 1 start 0\n0 . 61:7\n", 3),
        (b"DAFSA 1\nstates 2 start 0\n0 . 61:1 61:1\n1 F\n", 3),
        (b"DAFSA 1\nstates 2 start 0\n0 . 61:1\n1 F 62:1\n", 4),
        (b"DAFSA 1\nstates 2 start 0\n0 . 61:1\n1 X\n", 4),
        (b"DAFSA 1\nstates 2 start 0\n0 . 6g:1\n1 F\n", 3),
        (b"DAFSA 1\nstates 2 start 0\n0 .\n1 F\n", 4),
        (b"DAFSA 1\nstates 2 start 0\n1 F\n0 . 61:1\n", 3),
    ],
)
def test_malformed(data, line):
    with pytest.raises(ParseError) as info:
        loads(data)
    assert info.value.line == line


def test_unsupported_version():
    with pytest.raises(UnsupportedVersion):
        loads(b"DAFSA 2\nstates 1 start 0\n0 .\n")


def test_cycle_rejected():
    with pytest.raises(ParseError, match="cycle"):
        loads(b"DAFSA 1\nstates 2 start 0\n0 . 61:1\n1 F 62:0\n")


def test_export_dot():
    a = oracle_minimal([b"abd", b"bad"])
    buf = io.BytesIO()
    export_dot(a, buf)
    text = buf.getvalue().decode()
    assert text.startswith("digraph")
    assert text.count("[shape=doublecircle]") == 1
    assert len(NODE.findall(text)) == 5
    again = io.BytesIO()
    export_dot(a, again)
    assert again.getvalue() == buf.getvalue()


def test_export_dot_empty_and_escapes():
    buf = io.BytesIO()
    export_dot(Automaton(), buf)
    assert len(NODE.findall(buf.getvalue().decode())) == 1
    buf = io.BytesIO()
    export_dot(build_sorted(sorted([b'"', b"\\", b"\x00"])), buf)
    text = buf.getvalue().decode()
    assert 'label="\\""' in text
    assert 'label="\\\\"' in text
    assert 'label="\\\\x00"' in text


@given(corpus_st)
def test_count_words_matches_enumeration(words):
    a = oracle_minimal(words)
    assert count_words(a) == len(a.enumerate_language())
    assert count_words(build_trie(words)) == len(set(words))
