import pytest

from cyclefactors import harness
from cyclefactors.certify import (
    ViolationKind,
    verify_coloring,
    verify_factor,
    verify_hampath,
    verify_p_respecting,
    verify_vdp,
)
from cyclefactors.errors import (
    DanglingReference,
    EndpointsNotDistinct,
    IndexOutOfRange,
    NotAFactor,
    NotCubic,
    ParityViolated,
    TerminalNotVertex,
)
from cyclefactors.generators import random_digraph, random_prcf, random_smcf, rng_for
from cyclefactors.graph import (
    ARC,
    MixedGraph,
    ParityConstraint,
    arc,
    cycles_from_elements,
    directed,
    edge,
    undirected,
)
from cyclefactors.named import (
    cycle_graph,
    directed_cycle,
    k4,
    k33,
    petersen,
    terminal_cover_example,
    terminal_cover_solution,
    two_paths_example,
    two_paths_solution,
)
from cyclefactors.oracles import hamiltonian_path, three_edge_coloring
from cyclefactors.problems import (
    ColoringInstance,
    EvenCycleInstance,
    HamPathInstance,
    PrcfInstance,
    SmcfInstance,
    ThreeDMInstance,
    VdpInstance,
)
from cyclefactors.reductions import (
    REGISTRY,
    get,
    lift_directed_to_undirected,
    lift_factor,
    map_all_even_factor_to_coloring,
    map_all_odd_factor_to_hampath,
    map_coloring_to_all_even_factor,
    map_exists_odd_factor_to_paths,
    map_paths_to_exists_odd_factor,
    reduce_2vdp_to_exists_odd,
    reduce_3dm_to_prcf,
    reduce_3edgecoloring_to_all_even,
    reduce_evendicycle_to_exists_even,
    reduce_hampath_to_all_odd,
    reduce_mcf_to_exists_even_mcf,
    reduce_prcf_to_smcf,
    reduce_smcf_to_mcf,
    unlift_factor,
)
from cyclefactors.reductions.mixed import map_mcf_factor_to_smcf_factor, map_smcf_factor_to_mcf_factor
from cyclefactors.solvers import enumerate_factors, enumerate_smcf, solve_parity, solve_prcf, solve_smcf

C = ParityConstraint


def sizes(out):
    g = out.graph
    return g.n, len(g.edges), len(g.arcs)


def check_output(out):
    r = get(out.reduction_id)
    assert sizes(out) == r.sizes(out.source)
    assert out.provenance_total()
    assert out.graph.vertex_labels == dict(enumerate(out.vertex_map))
    assert out.graph.label == out.reduction_id


def random_ham_instances(count, max_n, seed):
    for i in range(count):
        rnd = rng_for(seed, "ham-test", i)
        n = rnd.randint(2, max_n)
        h = random_digraph(n, rnd.choice((0.3, 0.5)), (seed, i))
        yield HamPathInstance(h, 0, n - 1)


# -- Hamiltonian path -> all-odd ---------------------------------------------------------


def test_ham_single_arc():
    out = reduce_hampath_to_all_odd(HamPathInstance(directed(2, [(0, 1)]), 0, 1))
    check_output(out)
    assert sizes(out) == (5, 0, 6)
    res = solve_parity(out.graph, C.ALL_ODD)
    assert res.yes and [len(c) for c in res.factor.cycles] == [5]
    assert map_all_odd_factor_to_hampath(out, res.factor) == [0, 1]


def test_ham_no_arcs():
    out = reduce_hampath_to_all_odd(HamPathInstance(MixedGraph(2), 0, 1))
    assert sizes(out) == (2, 0, 1)
    assert not solve_parity(out.graph, C.ALL_ODD).yes


def test_ham_labels():
    out = reduce_hampath_to_all_odd(HamPathInstance(directed(4, [(0, 1), (1, 2), (2, 3), (3, 1)]), 0, 3))
    assert out.vertex_map[4 + 9] == "x1@a3"
    assert out.element_map[arc(20)] == "ts"


def test_ham_two_state_law_and_ts_law():
    """Each gadget holds one of exactly two arc sets; every cycle meeting V(H) uses ts."""
    for inst in random_ham_instances(100, 4, 1):
        out = reduce_hampath_to_all_odd(inst)
        m = len(inst.h.arcs)
        for f in enumerate_factors(out.graph, C.ALL_ODD):
            used = f.element_set()
            for k in range(m):
                state = {j for j in range(5) if arc(5 * k + j) in used}
                assert state in ({0, 1, 2, 4}, {1, 2, 3})
            for cyc in f.cycles:
                if any(v < inst.h.n for v in cyc.vertices):
                    assert arc(5 * m) in cyc.elements


def test_ham_mapped_from_random_corpus():
    mapped = 0
    for inst in random_ham_instances(200, 5, 2):
        out = reduce_hampath_to_all_odd(inst)
        res = solve_parity(out.graph, C.ALL_ODD)
        assert res.yes == (hamiltonian_path(inst.h, inst.s, inst.t) is not None)
        if res.yes:
            path = map_all_odd_factor_to_hampath(out, res.factor)
            assert verify_hampath(inst.h, inst.s, inst.t, path) == []
            mapped += 1
    assert mapped >= 3


def test_ham_errors():
    with pytest.raises(EndpointsNotDistinct):
        reduce_hampath_to_all_odd(HamPathInstance(directed(2, [(0, 1)]), 1, 1))
    out = reduce_hampath_to_all_odd(HamPathInstance(directed(2, [(0, 1)]), 0, 1))
    foreign = next(enumerate_factors(directed_cycle(5)))
    with pytest.raises(NotAFactor):
        map_all_odd_factor_to_hampath(out, foreign)


def test_ham_wrong_parity_factor():
    h = directed(3, [(0, 1), (1, 2), (2, 0)])
    out = reduce_hampath_to_all_odd(HamPathInstance(h, 0, 2))
    bad = [f for f in enumerate_factors(out.graph) if verify_factor(out.graph, f, C.ALL_ODD)]
    assert bad
    with pytest.raises(ParityViolated):
        map_all_odd_factor_to_hampath(out, bad[0])


# -- 3-edge-colouring -> all-even -------------------------------------------------------


@pytest.mark.parametrize("h, yes", [(k4(), True), (k33(), True)])
def test_col3_named(h, yes):
    out = reduce_3edgecoloring_to_all_even(ColoringInstance(h))
    check_output(out)
    res = solve_parity(out.graph, C.ALL_EVEN)
    assert res.yes == yes
    col = map_all_even_factor_to_coloring(out, res.factor)
    assert verify_coloring(h, col) == []


def test_col3_petersen_is_no_on_source():
    assert three_edge_coloring(petersen()) is None
    out = reduce_3edgecoloring_to_all_even(ColoringInstance(petersen()))
    assert sizes(out) == (10 + 30, 0, 90)


def test_col3_gadget_three_states():
    out = reduce_3edgecoloring_to_all_even(ColoringInstance(k4()))
    for f in enumerate_factors(out.graph, C.ALL_EVEN):
        used = f.element_set()
        for k in range(6):
            state = {j for j in range(6) if arc(6 * k + j) in used}
            assert state in ({0, 4, 3}, {1, 4, 2}, {4, 5})


@pytest.mark.parametrize("h", [k4(), k33()])
def test_col3_round_trip_keeps_third_colour_class(h):
    col = three_edge_coloring(h)
    out = reduce_3edgecoloring_to_all_even(ColoringInstance(h))
    f = map_coloring_to_all_even_factor(out, col)
    assert verify_factor(out.graph, f, C.ALL_EVEN) == []
    back = map_all_even_factor_to_coloring(out, f)
    assert {e for e, c in back.items() if c == 2} == {e for e, c in col.items() if c == 2}


def test_col3_errors():
    with pytest.raises(NotCubic):
        reduce_3edgecoloring_to_all_even(ColoringInstance(cycle_graph(4)))
    out = reduce_3edgecoloring_to_all_even(ColoringInstance(k4()))
    bad = next(f for f in enumerate_factors(out.graph) if verify_factor(out.graph, f, C.ALL_EVEN))
    with pytest.raises(ParityViolated):
        map_all_even_factor_to_coloring(out, bad)


# -- two disjoint paths -> exists-odd --------------------------------------------------


def test_vdp_example():
    inst = two_paths_example()
    out = reduce_2vdp_to_exists_odd(inst)
    check_output(out)
    assert sizes(out) == (18, 0, 28)
    f = map_paths_to_exists_odd_factor(out, two_paths_solution())
    assert verify_factor(out.graph, f, C.EXISTS_ODD) == []
    res = solve_parity(out.graph, C.EXISTS_ODD)
    assert res.yes
    assert verify_vdp(inst.h, inst.terminals, map_exists_odd_factor_to_paths(out, res.factor)) == []


def test_vdp_disconnected_is_no():
    h = directed(4, [(2, 3)])
    out = reduce_2vdp_to_exists_odd(VdpInstance(h, 0, 1, 2, 3))
    assert not solve_parity(out.graph, C.EXISTS_ODD).yes


def test_vdp_parity_law():
    """A cycle is odd exactly when it passes through one of y1, y2."""
    checked = 0
    for i in range(100):
        rnd = rng_for(3, "vdp-law", i)
        n = rnd.randint(4, 5)
        h = random_digraph(n, 0.6, ("vdp-law", i))
        out = reduce_2vdp_to_exists_odd(VdpInstance(h, 0, 1, 2, 3))
        ys = {2 * n, 2 * n + 1}
        for f in enumerate_factors(out.graph):
            for cyc in f.cycles:
                assert (len(cyc) % 2 == 1) == (len(ys & set(cyc.vertices)) == 1)
                checked += 1
    assert checked > 100


def test_vdp_errors():
    with pytest.raises(EndpointsNotDistinct):
        reduce_2vdp_to_exists_odd(VdpInstance(directed(4, []), 0, 1, 2, 0))


# -- even directed cycle -> exists-even ------------------------------------------------


def test_evencyc_examples():
    two = reduce_evendicycle_to_exists_even(EvenCycleInstance(directed(2, [(0, 1), (1, 0)])))
    check_output(two)
    assert solve_parity(two.graph, C.EXISTS_EVEN).yes
    three = reduce_evendicycle_to_exists_even(EvenCycleInstance(directed_cycle(3)))
    assert not solve_parity(three.graph, C.EXISTS_EVEN).yes


def test_evencyc_gadget_only():
    out = reduce_evendicycle_to_exists_even(EvenCycleInstance(MixedGraph(1)))
    assert sizes(out) == (6, 0, 8)
    only = list(enumerate_factors(out.graph))
    assert [sorted(len(c) for c in f.cycles) for f in only] == [[3, 3]]
    assert not solve_parity(out.graph, C.EXISTS_EVEN).yes


# -- lift ---------------------------------------------------------------------------------


def test_lift_directed_triangle():
    out = lift_directed_to_undirected(directed_cycle(3))
    check_output(out)
    assert sizes(out) == (9, 9, 0)
    factors = list(enumerate_factors(out.graph))
    assert len(factors) == 1 and [len(c) for c in factors[0].cycles] == [9]


def test_lift_empty_digraph():
    out = lift_directed_to_undirected(MixedGraph(0))
    assert sizes(out) == (0, 0, 0)
    assert [f.cycles for f in enumerate_factors(out.graph)] == [()]
    assert [f.cycles for f in enumerate_factors(MixedGraph(0))] == [()]


def test_lift_bijection_on_random_digraphs():
    for i in range(60):
        d = random_digraph(4, 0.4, ("lift", i))
        out = lift_directed_to_undirected(d)
        src = set(enumerate_factors(d))
        tgt = set(enumerate_factors(out.graph))
        assert {lift_factor(out, f) for f in src} == tgt
        assert {unlift_factor(out, f) for f in tgt} == src
        for f in src:
            assert lift_factor(out, f).signature() == f.signature()


# -- 3DM -> PRCF --------------------------------------------------------------------------


def test_3dm_single_tuple():
    out = reduce_3dm_to_prcf(ThreeDMInstance(1, ((0, 0, 0),)))
    check_output(out)
    assert sizes(out) == (3, 3, 0) and out.target.pairs == ()
    assert solve_prcf(out.graph, out.target.pairs).yes


def test_3dm_duplicate_tuple_collapses():
    out = reduce_3dm_to_prcf(ThreeDMInstance(1, ((0, 0, 0), (0, 0, 0))))
    assert sizes(out) == (3, 3, 0)
    assert solve_prcf(out.graph, out.target.pairs).yes


def test_3dm_no_instance():
    out = reduce_3dm_to_prcf(ThreeDMInstance(2, ((0, 0, 0), (1, 0, 1))))
    assert not solve_prcf(out.graph, out.target.pairs).yes


def test_3dm_four_pairs_per_shared_element():
    out = reduce_3dm_to_prcf(ThreeDMInstance(2, ((0, 0, 0), (0, 1, 1))))
    pairs = out.target.pairs
    assert len(pairs) == 4
    assert set(pairs) == {(edge(a), edge(3 + b)) for a in (0, 2) for b in (0, 2)}
    both = reduce_3dm_to_prcf(ThreeDMInstance(2, ((0, 0, 0), (0, 0, 1))))
    assert len(both.target.pairs) == 4 + 4 - 1


def test_3dm_errors():
    with pytest.raises(IndexOutOfRange):
        ThreeDMInstance(1, ((0, 0, 1),))


# -- PRCF -> SMCF -------------------------------------------------------------------------


def two_triangles():
    return undirected(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def test_prcf_labels_and_path_order():
    out = reduce_prcf_to_smcf(PrcfInstance(two_triangles(), ((edge(2), edge(5)),)))
    check_output(out)
    m = 6
    assert sizes(out) == (6 + m * m + 2, (m + 1) * m + 1, 4)
    labels = set(out.vertex_map)
    assert {"w(e2,e5)", "w(e5,e2)", "z(e2,e5)", "z(e5,e2)"} <= labels
    assert out.graph.endpoints(edge(2 * (m + 1))) == (2, 6 + 2 * m)
    assert out.graph.endpoints(edge(2 * (m + 1) + m)) == (6 + 2 * m + m - 1, 0)


def test_prcf_no_pairs_always_yes():
    out = reduce_prcf_to_smcf(PrcfInstance(MixedGraph(2, [(0, 1)])))
    assert out.target.terminals == (0, 1)
    assert not solve_smcf(out.graph, out.target.terminals).yes
    assert solve_smcf(out.graph, [z for z in out.target.terminals if z >= 2]).yes


def test_prcf_all_or_nothing():
    """Every subdivided path is used entirely or not at all."""
    for i in range(40):
        inst = random_prcf(3, 3, 0.5, ("blocks", i))
        out = reduce_prcf_to_smcf(inst)
        m = len(inst.h.edges)
        for f in enumerate_smcf(out.graph, out.target.terminals):
            used = f.element_set()
            for e in range(m):
                hits = sum(edge(e * (m + 1) + j) in used for j in range(m + 1))
                assert hits in (0, m + 1)


def test_prcf_literal_terminals_are_too_weak():
    tri = cycle_graph(3)
    inst = PrcfInstance(tri, ((edge(0), edge(1)),))
    assert not solve_prcf(tri, inst.pairs).yes
    out = reduce_prcf_to_smcf(inst)
    z_only = [v for v in out.target.terminals if v >= tri.n]
    assert solve_smcf(out.graph, z_only).yes
    assert not solve_smcf(out.graph, out.target.terminals).yes


def test_prcf_round_trip():
    for i in range(40):
        inst = random_prcf(4, 4, 0.4, ("rt", i))
        out = reduce_prcf_to_smcf(inst)
        res = solve_prcf(inst.h, inst.pairs)
        if not res.yes:
            continue
        r = get("prcf-smcf")
        tgt = r.forward(out, res.factor)
        assert verify_factor(out.graph, tgt, terminals=out.target.terminals) == []
        assert verify_p_respecting(inst.h, inst.pairs, r.backward(out, tgt)) == []


def test_prcf_errors():
    with pytest.raises(DanglingReference):
        PrcfInstance(cycle_graph(3), ((edge(0), edge(7)),))


# -- SMCF -> MCF --------------------------------------------------------------------------


def test_smcf_example():
    inst = terminal_cover_example()
    out = reduce_smcf_to_mcf(inst)
    check_output(out)
    assert sizes(out) == (4 + 9, 4 + 15, 1)
    f = map_smcf_factor_to_mcf_factor(out, terminal_cover_solution())
    assert verify_factor(out.graph, f) == []
    assert map_mcf_factor_to_smcf_factor(out, f) == terminal_cover_solution()


def test_smcf_gadget_triangle_alone_is_not_a_factor():
    inst = terminal_cover_example()
    out = reduce_smcf_to_mcf(inst)
    base_d = 4 + 5 * 2
    partial = [arc(0), edge(0), edge(1)]
    partial += [edge(4 + 1), edge(4 + 2), edge(4 + 3), edge(4 + 5 + 1), edge(4 + 5 + 2), edge(4 + 5 + 3)]
    full = partial + [edge(base_d + j) for j in (0, 1, 2, 4)]
    partial += [edge(base_d + j) for j in (0, 4, 3)]
    kinds = {v.kind for v in verify_factor(out.graph, cycles_from_elements(out.graph, partial))}
    assert ViolationKind.NOT_COVERING in kinds
    assert verify_factor(out.graph, cycles_from_elements(out.graph, full)) == []


def test_smcf_all_terminals_adds_nothing():
    h = MixedGraph(3, [(0, 1), (1, 2)], [(2, 0)])
    out = reduce_smcf_to_mcf(SmcfInstance(h, (0, 1, 2)))
    assert out.graph.unlabeled() == h


def test_smcf_locality():
    for i in range(40):
        inst = random_smcf(4, 0.4, 0.3, 0.5, ("local", i))
        out = reduce_smcf_to_mcf(inst)
        h = inst.h
        for f in enumerate_factors(out.graph):
            for cyc in f.cycles:
                inside = {e.kind == ARC or e.index < len(h.edges) for e in cyc.elements}
                if inside == {True}:
                    continue
                assert inside == {False}
                assert len({(e.index - len(h.edges)) // 5 for e in cyc.elements}) == 1


def test_smcf_errors():
    with pytest.raises(TerminalNotVertex):
        SmcfInstance(cycle_graph(3), (9,))


# -- MCF -> exists-even MCF -------------------------------------------------------------


def test_mcf_examples():
    tri = reduce_mcf_to_exists_even_mcf(cycle_graph(3))
    check_output(tri)
    assert solve_parity(tri.graph, C.EXISTS_EVEN).yes
    single = reduce_mcf_to_exists_even_mcf(MixedGraph(1))
    assert not solve_parity(single.graph, C.EXISTS_EVEN).yes


# -- every reduction --------------------------------------------------------------------


def test_registry_ids():
    assert sorted(REGISTRY) == sorted([
        "ham-allodd", "col3-alleven", "vdp-existsodd", "evencyc-existseven", "lift-undirected",
        "3dm-prcf", "prcf-smcf", "smcf-mcf", "mcf-existseven"])
    with pytest.raises(KeyError):
        get("nope")


@pytest.mark.parametrize("rid", sorted(REGISTRY))
def test_sizes_and_provenance_on_corpus(rid):
    r = REGISTRY[rid]
    spec = harness.CorpusSpec(r.source_kind, 4, 30, 7)
    for _, inst in harness.corpus(spec):
        check_output(r.reduce(inst))


@pytest.mark.parametrize("rid", sorted(REGISTRY))
def test_equivalence_small_corpus(rid):
    report = harness.equivcheck(rid, 40, 4, seed=11, log=False)
    assert report.exit_code == 0, report.text()
