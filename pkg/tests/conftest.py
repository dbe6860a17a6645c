import random

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from cofrag.automata import Automaton
from cofrag.congruence import RelationSet

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def reachable_automaton(alphabet, rows):
    """Automaton on the part of ``rows`` reachable from state 0."""
    order, seen = [0], {0}
    for s in order:
        for t in rows[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
    rename = {s: i for i, s in enumerate(order)}
    delta = tuple(tuple(rename[t] for t in rows[s]) for s in order)
    return Automaton(tuple(alphabet), delta)


@st.composite
def automata(draw, max_states=6, alphabet=None):
    if alphabet is None:
        alphabet = draw(st.sampled_from([("a",), ("a", "b")]))
    n = draw(st.integers(1, max_states))
    rows = [tuple(draw(st.integers(0, n - 1)) for _ in alphabet) for _ in range(n)]
    return reachable_automaton(alphabet, rows)


@st.composite
def automaton_pairs(draw, max_states=6, max_product=None):
    alphabet = draw(st.sampled_from([("a",), ("a", "b")]))
    A = draw(automata(max_states, alphabet))
    limit = max_states
    if max_product is not None:
        limit = max(1, min(max_states, max_product // A.state_count))
    B = draw(automata(limit, alphabet))
    return A, B


def words(alphabet, max_len):
    return st.text(alphabet="".join(alphabet), max_size=max_len)


@st.composite
def unary_relations(draw, max_entry=12, max_pairs=3):
    pairs = draw(
        st.lists(st.tuples(st.integers(0, max_entry), st.integers(0, max_entry)), max_size=max_pairs)
    )
    return RelationSet.unary(pairs)


@st.composite
def relations(draw, max_len=8, max_pairs=4):
    alphabet = draw(st.sampled_from([("a",), ("a", "b")]))
    w = words(alphabet, max_len)
    pairs = draw(st.lists(st.tuples(w, w), max_size=max_pairs))
    return RelationSet(frozenset(pairs), alphabet)


@pytest.fixture
def rng():
    return random.Random(20171127)


# -- acceptance report ---------------------------------------------------------

_acceptance = {}


def pytest_runtest_logreport(report):
    marker = _acceptance_marker.get(report.nodeid)
    if marker is None:
        return
    if report.when == "call" or report.failed:
        prev = _acceptance.get(marker)
        _acceptance[marker] = report.passed if prev is None else prev and report.passed


_acceptance_marker = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _acceptance_marker[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), ok in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {title}")
