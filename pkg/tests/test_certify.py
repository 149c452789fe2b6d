from hypothesis import given

from conftest import mixed_graphs
from cyclefactors.certify import (
    Violation,
    ViolationKind,
    verify_3dm,
    verify_coloring,
    verify_even_dicycle,
    verify_factor,
    verify_hampath,
    verify_p_respecting,
    verify_vdp,
)
from cyclefactors.graph import (
    CycleFactor,
    MixedGraph,
    OrientedCycle,
    ParityConstraint,
    arc,
    edge,
    make_cycle,
)
from cyclefactors.named import cycle_graph, k4, two_paths_example, two_paths_solution
from cyclefactors.solvers import enumerate_factors

V = ViolationKind


def kinds(violations):
    return {v.kind for v in violations}


def test_empty_factor_of_triangle_is_not_covering():
    out = verify_factor(cycle_graph(3), CycleFactor(()))
    assert [str(v) for v in out] == ["NotCovering: 0 1 2"]


def test_triangle_factor_passes():
    f = next(enumerate_factors(cycle_graph(3)))
    assert verify_factor(cycle_graph(3), f) == []


def test_arc_walked_backwards():
    g = MixedGraph(3, [(0, 2)], [(0, 1), (2, 1)])
    broken = OrientedCycle((arc(0), arc(1), edge(0)), (True, False, False), (0, 1, 2))
    out = verify_factor(g, CycleFactor((broken,)))
    assert kinds(out) == {V.ORIENTATION_INCONSISTENT}
    assert str(out[0]) == "OrientationInconsistent: a1"


def test_parity_violation_on_k4():
    f = next(enumerate_factors(k4()))
    out = verify_factor(k4(), f, ParityConstraint.ALL_ODD)
    assert [v.kind for v in out] == [V.PARITY_VIOLATED]
    assert verify_factor(k4(), f, ParityConstraint.ALL_EVEN) == []


def test_overlapping_cycles():
    g = MixedGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 2)])
    a = make_cycle(g, [(edge(0), True), (edge(1), True), (edge(2), True)])
    b = make_cycle(g, [(edge(3), True), (edge(4), True), (edge(2), True)])
    out = verify_factor(g, CycleFactor((a, b)))
    assert V.NOT_DISJOINT in kinds(out)


def test_gap_and_missing_element():
    g = cycle_graph(4)
    gap = OrientedCycle((edge(0), edge(2)), (True, True), (0, 2))
    assert kinds(verify_factor(g, CycleFactor((gap,)), terminals=())) == {V.BAD_CYCLE}
    ghost = OrientedCycle((edge(0), edge(9)), (True, True), (0, 1))
    assert kinds(verify_factor(g, CycleFactor((ghost,)), terminals=())) == {V.BAD_CYCLE}


def test_terminals_only():
    g = MixedGraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    f = next(enumerate_factors(cycle_graph(3)))
    assert verify_factor(g, f, terminals=[0, 1]) == []
    assert kinds(verify_factor(g, f, terminals=[3])) == {V.TERMINAL_UNCOVERED}


def test_pair_violation():
    tri = cycle_graph(3)
    f = next(enumerate_factors(tri))
    out = verify_p_respecting(tri, [(edge(0), edge(2))], f)
    assert [str(v) for v in out] == ["PairViolated: e0 e2"]


def test_vdp_known_solution():
    inst = two_paths_example()
    assert verify_vdp(inst.h, inst.terminals, two_paths_solution()) == []
    bad = [[0, 1, 4, 6, 7], [5, 6, 7]]
    assert V.NOT_DISJOINT in kinds(verify_vdp(inst.h, inst.terminals, bad))


def test_hampath_missing_vertex():
    d = MixedGraph(3, [], [(0, 1), (1, 2), (0, 2)])
    assert verify_hampath(d, 0, 2, [0, 1, 2]) == []
    out = verify_hampath(d, 0, 2, [0, 2])
    assert kinds(out) == {V.NOT_A_PATH}
    assert str(out[-1]) == "NotAPath: uncovered 1"


def test_coloring():
    g = k4()
    good = {edge(0): 0, edge(5): 0, edge(1): 1, edge(4): 1, edge(2): 2, edge(3): 2}
    pairs = [g.endpoints(edge(i)) for i in range(6)]
    assert {pairs[0], pairs[5]} == {(0, 1), (2, 3)}
    assert verify_coloring(g, good) == []
    bad = dict(good)
    bad[edge(5)] = 1
    assert kinds(verify_coloring(g, bad)) == {V.NOT_A_COLORING}


def test_3dm_double_cover():
    tuples = [(0, 0, 0), (1, 1, 1), (0, 1, 1)]
    assert verify_3dm(2, tuples, [(0, 0, 0), (1, 1, 1)]) == []
    out = verify_3dm(2, tuples, [(0, 0, 0), (0, 1, 1)])
    assert kinds(out) == {V.NOT_A_MATCHING}
    assert "NotAMatching: x0 2" in [str(v) for v in out]


def test_even_dicycle():
    d = MixedGraph(3, [], [(0, 1), (1, 0), (1, 2), (2, 0)])
    two = make_cycle(d, [(arc(0), True), (arc(1), True)])
    three = make_cycle(d, [(arc(0), True), (arc(2), True), (arc(3), True)])
    assert verify_even_dicycle(d, two) == []
    assert kinds(verify_even_dicycle(d, three)) == {V.PARITY_VIOLATED}


def test_violation_rendering():
    assert str(Violation(V.NOT_COVERING, (3, 5))) == "NotCovering: 3 5"


@given(mixed_graphs(max_n=5, max_edges=7, max_arcs=5))
def test_verification_is_idempotent(g):
    for f in list(enumerate_factors(g))[:3]:
        for c in ParityConstraint:
            assert verify_factor(g, f, c) == verify_factor(g, f, c)
        assert verify_factor(g, f) == []
