import sys

import pytest
from hypothesis import strategies as st

from homorder import Structure, all_cores, all_structures
from homorder.algebra import cycle, k1, path, top, transitive_tournament


@pytest.fixture(scope="session")
def digraphs3():
    return list(all_structures((2,), 3))


@pytest.fixture(scope="session")
def cores3():
    return list(all_cores((2,), 3))


@pytest.fixture(scope="session")
def cores4():
    return list(all_cores((2,), 4))


@pytest.fixture
def named():
    return {
        "K1": k1(), "TOP": top(), "P1": path(1), "P2": path(2), "P3": path(3), "P4": path(4),
        "TT2": transitive_tournament(2), "TT3": transitive_tournament(3), "C3": cycle(3),
    }


@st.composite
def structures(draw, sigs=((2,), (3,), (2, 2)), max_n=4, max_tuples=5):
    sig = draw(st.sampled_from(sigs))
    n = draw(st.integers(1, max_n))
    rels = []
    for arity in sig:
        tup = st.tuples(*[st.integers(0, n - 1)] * arity)
        rels.append(draw(st.lists(tup, max_size=max_tuples)))
    return Structure.build(sig, n, rels)


@st.composite
def digraphs(draw, max_n=4, max_arcs=6):
    return draw(structures(sigs=((2,),), max_n=max_n, max_tuples=max_arcs))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.report_lines():
        terminalreporter.write_line(line)
