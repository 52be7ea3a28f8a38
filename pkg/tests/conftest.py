import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gengraph.graphs.graph import Graph

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    p = draw(st.sampled_from([0.2, 0.4, 0.5, 0.6, 0.8]))
    bits = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b < p])


@st.composite
def twin_graphs(draw, max_base=6):
    """Blow-ups of a small graph: every base vertex becomes 1-3 twins
    (all true twins or all false twins), so twin handling gets exercised."""
    base = draw(graphs(min_n=1, max_n=max_base))
    true_twins = draw(st.booleans())
    copies = [v for v in range(base.n) for _ in range(draw(st.integers(1, 3)))]
    order = draw(st.permutations(range(len(copies))))
    copies = [copies[i] for i in order]
    n = len(copies)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = copies[i], copies[j]
            if (a != b and base.adjacent(a, b)) or (a == b and true_twins):
                edges.append((i, j))
    return Graph.from_edges(n, edges)


# -- acceptance summary ---------------------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def acceptance():
    """``acceptance(key, ok, detail)`` records one PASS/FAIL line for the summary."""
    def record(key: str, ok: bool, detail: str):
        _ACCEPTANCE[key] = f"{'PASS' if ok else 'FAIL'} {key}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: (len(k.split()[0]), k)):
        terminalreporter.write_line(_ACCEPTANCE[key])
