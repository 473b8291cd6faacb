import itertools
import random

import pytest
from hypothesis import strategies as st

from dafsa.core import Automaton
from dafsa.oracle import build_trie

# Small alphabet keeps random corpora dense in shared prefixes and suffixes.
words_st = st.binary(max_size=6).map(lambda b: bytes(0x61 + x % 4 for x in b))
corpus_st = st.lists(words_st, max_size=40)


def random_corpus(rnd, max_words, max_len, alphabet=b"abcd"):
    n = rnd.randint(1, max_words)
    return [
        bytes(rnd.choice(alphabet) for _ in range(rnd.randint(1, max_len)))
        for _ in range(n)
    ]


def right_languages(a: Automaton):
    """Brute-force right language of every reachable state."""
    return {q: frozenset(a.iter_language(q)) for q in a.reachable()}


def is_minimal(a: Automaton) -> bool:
    langs = right_languages(a)
    return len(set(langs.values())) == len(langs) == a.live_count


def indegree_audit(a: Automaton) -> dict:
    counts = {q: 0 for q in a.states()}
    counts[a.start] += 1
    for q in a.states():
        for _, t in a.transitions(q):
            counts[t] += 1
    return counts


def all_subsets_ab3():
    words = sorted(bytes(w) for n in range(4) for w in itertools.product(b"ab", repeat=n))
    for mask in range(1 << len(words)):
        yield [w for i, w in enumerate(words) if mask >> i & 1]


@pytest.fixture
def abd_bad():
    return build_trie([b"abd", b"bad"])


# -- acceptance reporting ----------------------------------------------------

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(number, title): exit criterion reported in the summary"
    )


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    key = getattr(report, "acceptance", None)
    if key is not None:
        prev = _acceptance.get(key, "PASS")
        _acceptance[key] = "PASS" if prev == "PASS" and report.passed else "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().acceptance = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
