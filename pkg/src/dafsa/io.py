"""Word lists, the ``DAFSA 1`` text format, and Graphviz export.

File layout::

    DAFSA 1
    states <N> start 0
    <id> <F|.> <label-hex>:<target-id> ...

States are numbered in depth-first preorder from the start state, following
arcs in ascending label order, so two files are byte-equal exactly when the
automata are isomorphic.
"""

from __future__ import annotations

import re
from typing import BinaryIO, Iterator

from .core import Automaton, StateId
from .errors import ParseError, UnsupportedVersion
from .oracle import canonical_form, canonical_numbering

_HEADER = re.compile(rb"DAFSA (\d+)")
_COUNTS = re.compile(rb"states (\d+) start 0")
_ARC = re.compile(rb"([0-9a-f]{2}):(\d+)")


def read_words(source: BinaryIO) -> Iterator[bytes]:
    """Yield one word per line; LF or CRLF is stripped, bytes pass through."""
    offset = 0
    lines = iter(source)
    while True:
        try:
            line = next(lines)
        except StopIteration:
            return
        except OSError as exc:
            raise OSError(f"read failed at byte offset {offset}: {exc}") from exc
        offset += len(line)
        if line.endswith(b"\n"):
            line = line[:-1]
            if line.endswith(b"\r"):
                line = line[:-1]
        yield line


def serialize(a: Automaton, sink: BinaryIO) -> None:
    sink.write(canonical_form(a))


def dumps(a: Automaton) -> bytes:
    return canonical_form(a)


def loads(data: bytes) -> Automaton:
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    if not lines:
        raise ParseError(1, "empty input")

    m = _HEADER.fullmatch(lines[0])
    if m is None:
        raise ParseError(1, "expected 'DAFSA <version>' header")
    if m.group(1) != b"1":
        raise UnsupportedVersion(1, f"unsupported version {m.group(1).decode()}")
    if len(lines) < 2 or (m := _COUNTS.fullmatch(lines[1])) is None:
        raise ParseError(2, "expected 'states <N> start 0'")
    n = int(m.group(1))
    if n < 1:
        raise ParseError(2, "an automaton has at least one state")
    if len(lines) != n + 2:
        raise ParseError(
            min(len(lines), n + 2) + 1,
            f"expected {n} state lines, found {len(lines) - 2}",
        )

    a = Automaton()
    ids = [a.start] + [a.add_state() for _ in range(n - 1)]
    for i, raw in enumerate(lines[2:]):
        lineno = i + 3
        fields = raw.split(b" ")
        if len(fields) < 2 or fields[0] != str(i).encode():
            raise ParseError(lineno, f"expected state {i}")
        if fields[1] not in (b"F", b"."):
            raise ParseError(lineno, "final flag must be 'F' or '.'")
        a.set_final(ids[i], fields[1] == b"F")
        seen = set()
        for token in fields[2:]:
            arc = _ARC.fullmatch(token)
            if arc is None:
                raise ParseError(lineno, f"malformed arc {token!r}")
            label, target = int(arc.group(1), 16), int(arc.group(2))
            if target >= n:
                raise ParseError(lineno, f"arc to nonexistent state {target}")
            if label in seen:
                raise ParseError(lineno, f"duplicate label {label:02x}")
            seen.add(label)
            a._link(ids[i], label, ids[target])

    if not a.check_acyclic():
        raise ParseError(_cycle_line(a, ids), "transition graph has a cycle")
    reachable = a.reachable()
    for i, q in enumerate(ids):
        if q not in reachable:
            raise ParseError(i + 3, f"state {i} is unreachable from the start state")
    return a


def _cycle_line(a: Automaton, ids: list[StateId]) -> int:
    # Line of the lowest-numbered state that reaches itself.
    for i, q in enumerate(ids):
        if any(a._reaches(t, q) for _, t in a.transitions(q)):
            return i + 3
    return 2


def deserialize(source: BinaryIO) -> Automaton:
    return loads(source.read())


def _dot_label(label: int) -> str:
    ch = chr(label)
    if ch in '"\\':
        return "\\" + ch
    if 0x20 < label < 0x7F:
        return ch
    return f"\\\\x{label:02x}"


def export_dot(a: Automaton, sink: BinaryIO) -> None:
    """Write a Graphviz digraph; final states are drawn as double circles."""
    order = canonical_numbering(a)
    number = {q: i for i, q in enumerate(order)}
    out = [
        "digraph dafsa {",
        "  rankdir=LR;",
        "  node [shape=circle];",
    ]
    for i, q in enumerate(order):
        shape = "doublecircle" if a.is_final(q) else "circle"
        out.append(f"  {i} [shape={shape}];")
    for i, q in enumerate(order):
        for label, t in a.transitions(q):
            out.append(f'  {i} -> {number[t]} [label="{_dot_label(label)}"];')
    out.append("}")
    sink.write(("\n".join(out) + "\n").encode("ascii"))


def count_words(a: Automaton) -> int:
    """Size of the accepted language, by counting accepting paths per state."""
    count: dict[StateId, int] = {}
    stack = [(a.start, False)]
    while stack:
        q, expanded = stack.pop()
        if expanded:
            count[q] = int(a.is_final(q)) + sum(count[t] for _, t in a.transitions(q))
        elif q not in count:
            stack.append((q, True))
            stack.extend((t, False) for _, t in a.transitions(q) if t not in count)
    return count[a.start]
