import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cyclefactors.graph import MixedGraph, arc
from cyclefactors.reductions import MCF, Reduction, ReductionOutput

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def mixed_graphs(draw, max_n=6, max_edges=8, max_arcs=8, edges=True, arcs=True):
    n = draw(st.integers(0, max_n))
    pair = st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))).filter(
        lambda p: p[0] != p[1])
    es = draw(st.lists(pair, max_size=max_edges)) if edges and n >= 2 else []
    as_ = draw(st.lists(pair, max_size=max_arcs)) if arcs and n >= 2 else []
    return MixedGraph(n, es, as_)


@pytest.fixture
def tmp_file(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def corrupted_mcf_reduction():
    """The mcf-existseven reduction with its closing t -> s arc deleted.

    Sizes and provenance are adjusted to match, so only the Yes/No
    comparison can catch it.
    """
    def reduce(g):
        out = MCF.reduce(g)
        t = out.graph
        last = arc(len(t.arcs) - 1)
        emap = {e: tag for e, tag in out.element_map.items() if e != last}
        broken = MixedGraph(t.n, t.edges, t.arcs[:-1], t.vertex_labels, emap, t.label)
        return ReductionOutput(out.reduction_id, g, broken, out.constraint, out.vertex_map, emap)

    def sizes(g):
        n, e, a = MCF.sizes(g)
        return n, e, a - 1

    return Reduction(MCF.id, MCF.source_kind, MCF.target_kind, reduce, MCF.forward, MCF.backward, sizes)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.acceptance_lines():
        terminalreporter.write_line(line)
