"""Reductions into parity-constrained factors of digraphs.

Hamiltonian path to all-odd, 3-edge-colouring of cubic graphs to all-even,
two disjoint paths to exists-odd, and even directed cycle to exists-even.
"""

from __future__ import annotations

from ..errors import EndpointsNotDistinct, NotAFactor, NotCubic, NotDirected, NotUndirected
from ..graph import (
    ARC,
    EDGE,
    CycleFactor,
    ElementId,
    MixedGraph,
    OrientedCycle,
    ParityConstraint,
    arc,
    cycles_from_elements,
    make_cycle,
)
from ..problems import ColoringInstance, EvenCycleInstance, HamPathInstance, VdpInstance
from .base import Reduction, ReductionOutput, labelled, require_factor

ALL_ODD = ParityConstraint.ALL_ODD
ALL_EVEN = ParityConstraint.ALL_EVEN
EXISTS_ODD = ParityConstraint.EXISTS_ODD
EXISTS_EVEN = ParityConstraint.EXISTS_EVEN


def _need_directed(h: MixedGraph):
    if not h.is_directed():
        raise NotDirected("source graph must be directed")


def _arc_index(h: MixedGraph) -> dict[tuple[int, int], int]:
    """Smallest arc index for each ordered vertex pair."""
    out: dict[tuple[int, int], int] = {}
    for k, uv in enumerate(h.arcs):
        out.setdefault(uv, k)
    return out


# -- Hamiltonian path -> all-odd ------------------------------------------------
#
# Per source arc k = (u, v): gadget vertices x1, x2, x3 = n+3k, n+3k+1, n+3k+2
# and target arcs 5k..5k+4 = u->x1, x1->x2, x2->x3, x3->x1, x3->v.
# The last arc, 5|A|, closes t -> s.


def reduce_hampath_to_all_odd(inst: HamPathInstance) -> ReductionOutput:
    h, s, t = inst.h, inst.s, inst.t
    _need_directed(h)
    if s == t:
        raise EndpointsNotDistinct("s and t must differ")
    n = h.n
    arcs, atags = [], []
    vtags = [f"v{v}" for v in range(n)]
    for k, (u, v) in enumerate(h.arcs):
        x1, x2, x3 = n + 3 * k, n + 3 * k + 1, n + 3 * k + 2
        vtags += [f"x1@a{k}", f"x2@a{k}", f"x3@a{k}"]
        arcs += [(u, x1), (x1, x2), (x2, x3), (x3, x1), (x3, v)]
        atags += [f"S{j}@a{k}" for j in range(1, 6)]
    arcs.append((t, s))
    atags.append("ts")
    g, vmap, emap = labelled("ham-allodd", n + 3 * len(h.arcs), (), arcs, vtags, (), atags)
    return ReductionOutput("ham-allodd", inst, g, ALL_ODD, vmap, emap)


def hampath_sizes(inst: HamPathInstance):
    return inst.h.n + 3 * len(inst.h.arcs), 0, 5 * len(inst.h.arcs) + 1


def map_hampath_to_all_odd_factor(out: ReductionOutput, path) -> CycleFactor:
    h = out.source.h
    on_path = {}
    index = _arc_index(h)
    for u, v in zip(path, path[1:]):
        on_path[index[(u, v)]] = True
    chosen = [arc(5 * len(h.arcs))]
    for k in range(len(h.arcs)):
        if k in on_path:
            chosen += [arc(5 * k), arc(5 * k + 1), arc(5 * k + 2), arc(5 * k + 4)]
        else:
            chosen += [arc(5 * k + 1), arc(5 * k + 2), arc(5 * k + 3)]
    return cycles_from_elements(out.graph, chosen)


def map_all_odd_factor_to_hampath(out: ReductionOutput, f: CycleFactor) -> list[int]:
    """Source arcs whose entry arc u -> x1 is used form the path."""
    require_factor(out.graph, f, ALL_ODD)
    h, s = out.source.h, out.source.s
    used = f.element_set()
    succ = {}
    for k, (u, v) in enumerate(h.arcs):
        if arc(5 * k) in used:
            succ[u] = v
    path = [s]
    while path[-1] in succ and len(path) <= h.n:
        path.append(succ[path[-1]])
    return path


# -- 3-edge-colouring -> all-even ----------------------------------------------
#
# Per source edge k = {u, v} (stored order): w' = n+2k, w'' = n+2k+1 and arcs
# 6k..6k+5 = u->w', v->w', w''->u, w''->v, w'->w'', w''->w'.
# Traversing u..v uses 6k, 6k+4, 6k+3; traversing v..u uses 6k+1, 6k+4, 6k+2;
# the internal 2-cycle is 6k+4, 6k+5.


def reduce_3edgecoloring_to_all_even(inst: ColoringInstance) -> ReductionOutput:
    h = inst.h
    if not h.is_undirected():
        raise NotUndirected("colouring instances are undirected")
    bad = [v for v in range(h.n) if h.degree(v) != 3]
    if bad:
        raise NotCubic(f"vertices {bad} do not have degree 3")
    n = h.n
    arcs, atags = [], []
    vtags = [f"v{v}" for v in range(n)]
    for k, (u, v) in enumerate(h.edges):
        w1, w2 = n + 2 * k, n + 2 * k + 1
        vtags += [f"w1@e{k}", f"w2@e{k}"]
        arcs += [(u, w1), (v, w1), (w2, u), (w2, v), (w1, w2), (w2, w1)]
        atags += [f"A{j}@e{k}" for j in range(1, 7)]
    g, vmap, emap = labelled("col3-alleven", n + 2 * len(h.edges), (), arcs, vtags, (), atags)
    return ReductionOutput("col3-alleven", inst, g, ALL_EVEN, vmap, emap)


def coloring_sizes(inst: ColoringInstance):
    return inst.h.n + 2 * len(inst.h.edges), 0, 6 * len(inst.h.edges)


def map_coloring_to_all_even_factor(out: ReductionOutput, coloring) -> CycleFactor:
    """Colour 2 becomes internal 2-cycles; colours 0 and 1 alternate round even cycles."""
    h = out.source.h
    color = {e.index: c for e, c in coloring.items()}
    at = {}
    for k, (u, v) in enumerate(h.edges):
        if color[k] in (0, 1):
            at.setdefault((u, color[k]), k)
            at.setdefault((v, color[k]), k)
    chosen = []
    seen = set()
    for k, (u, v) in enumerate(h.edges):
        if color[k] == 2:
            chosen += [arc(6 * k + 4), arc(6 * k + 5)]
    for start in range(h.n):
        x, c = start, 0
        while (x, c) in at and at[(x, c)] not in seen:
            k = at[(x, c)]
            seen.add(k)
            u, v = h.edges[k]
            if x == u:
                chosen += [arc(6 * k), arc(6 * k + 4), arc(6 * k + 3)]
                x = v
            else:
                chosen += [arc(6 * k + 1), arc(6 * k + 4), arc(6 * k + 2)]
                x = u
            c = 1 - c
    return cycles_from_elements(out.graph, chosen)


def map_all_even_factor_to_coloring(out: ReductionOutput, f: CycleFactor) -> dict[ElementId, int]:
    require_factor(out.graph, f, ALL_EVEN)
    h = out.source.h
    coloring = {}
    for cyc in f.cycles:
        gadgets = [e.index // 6 for e in cyc.elements if e.index % 6 in (0, 1)]
        if not gadgets:
            for e in cyc.elements:
                if e.index % 6 == 5:
                    coloring[ElementId(EDGE, e.index // 6)] = 2
            continue
        for i, k in enumerate(gadgets):
            coloring[ElementId(EDGE, k)] = i % 2
    if len(coloring) != len(h.edges):
        raise NotAFactor("some gadget is in none of its three states")
    return dict(sorted(coloring.items()))


# -- two disjoint paths -> exists-odd --------------------------------------------
#
# x1^v = 2v, x2^v = 2v+1, y1 = 2n, y2 = 2n+1.  Arcs 2v, 2v+1 = x1->x2, x2->x1;
# 2n+2i, 2n+2i+1 = x2^{t_i}->y_i, y_i->x1^{s_i} (i = 0, 1); then one connector
# x2^u -> x1^v per source arc k = (u, v) at index 2n+4+k.


def reduce_2vdp_to_exists_odd(inst: VdpInstance) -> ReductionOutput:
    h = inst.h
    _need_directed(h)
    inst.check_distinct()
    n = h.n
    vtags, arcs, atags = [], [], []
    for v in range(n):
        vtags += [f"x1@v{v}", f"x2@v{v}"]
        arcs += [(2 * v, 2 * v + 1), (2 * v + 1, 2 * v)]
        atags += [f"S1@v{v}", f"S2@v{v}"]
    vtags += ["y1", "y2"]
    for i, (s, t) in enumerate(inst.terminals):
        y = 2 * n + i
        arcs += [(2 * t + 1, y), (y, 2 * s)]
        atags += [f"t{i + 1}y{i + 1}", f"y{i + 1}s{i + 1}"]
    for k, (u, v) in enumerate(h.arcs):
        arcs.append((2 * u + 1, 2 * v))
        atags.append(f"conn@a{k}")
    g, vmap, emap = labelled("vdp-existsodd", 2 * n + 2, (), arcs, vtags, (), atags)
    return ReductionOutput("vdp-existsodd", inst, g, EXISTS_ODD, vmap, emap)


def vdp_sizes(inst: VdpInstance):
    return 2 * inst.h.n + 2, 0, 2 * inst.h.n + len(inst.h.arcs) + 4


def map_paths_to_exists_odd_factor(out: ReductionOutput, paths) -> CycleFactor:
    h = out.source.h
    n = h.n
    index = _arc_index(h)
    chosen = []
    on_path = set()
    for i, path in enumerate(paths):
        chosen += [arc(2 * n + 2 * i), arc(2 * n + 2 * i + 1)]
        for v in path:
            on_path.add(v)
            chosen.append(arc(2 * v))
        for u, v in zip(path, path[1:]):
            chosen.append(arc(2 * n + 4 + index[(u, v)]))
    for v in range(n):
        if v not in on_path:
            chosen += [arc(2 * v), arc(2 * v + 1)]
    return cycles_from_elements(out.graph, chosen)


def map_exists_odd_factor_to_paths(out: ReductionOutput, f: CycleFactor) -> list[list[int]]:
    """Read each path off the cycle through its own y vertex."""
    require_factor(out.graph, f, EXISTS_ODD)
    n = out.source.h.n
    paths = []
    for i in range(2):
        y = 2 * n + i
        cyc = next(c for c in f.cycles if y in c.vertices)
        if 2 * n + 1 - i in cyc.vertices:
            raise NotAFactor("both y vertices lie on one cycle")
        k = cyc.vertices.index(y)
        walk = cyc.vertices[k + 1:] + cyc.vertices[:k]
        paths.append([x // 2 for x in walk if x % 2 == 0])
    return paths


# -- even directed cycle -> exists-even ------------------------------------------
#
# Source vertex v keeps id v; v^j = n + 5v + (j-1).  Arcs: the source arcs
# first, then per v (base |A| + 8v): v->v1, v1->v2, v2->v, v3->v4, v4->v5,
# v5->v3, v2->v3, v5->v1.

_FIVE_CYCLE = (1, 6, 3, 4, 7)
_TRIANGLES = (0, 1, 2, 3, 4, 5)


def reduce_evendicycle_to_exists_even(inst: EvenCycleInstance) -> ReductionOutput:
    h = inst.h
    _need_directed(h)
    n = h.n
    vtags = [f"v{v}" for v in range(n)]
    for v in range(n):
        vtags += [f"v{j}@v{v}" for j in range(1, 6)]
    arcs = list(h.arcs)
    atags = [f"a{k}" for k in range(len(h.arcs))]
    for v in range(n):
        g1, g2, g3, g4, g5 = (n + 5 * v + j for j in range(5))
        arcs += [(v, g1), (g1, g2), (g2, v), (g3, g4), (g4, g5), (g5, g3), (g2, g3), (g5, g1)]
        atags += [f"G{j}@v{v}" for j in range(1, 9)]
    g, vmap, emap = labelled("evencyc-existseven", 6 * n, (), arcs, vtags, (), atags)
    return ReductionOutput("evencyc-existseven", inst, g, EXISTS_EVEN, vmap, emap)


def evencycle_sizes(inst: EvenCycleInstance):
    return 6 * inst.h.n, 0, len(inst.h.arcs) + 8 * inst.h.n


def map_even_dicycle_to_exists_even_factor(out: ReductionOutput, cycle: OrientedCycle) -> CycleFactor:
    h = out.source.h
    base = len(h.arcs)
    chosen = list(cycle.elements)
    on_cycle = set(cycle.vertices)
    for v in range(h.n):
        slots = _FIVE_CYCLE if v in on_cycle else _TRIANGLES
        chosen += [arc(base + 8 * v + j) for j in slots]
    return cycles_from_elements(out.graph, chosen)


def map_exists_even_factor_to_even_dicycle(out: ReductionOutput, f: CycleFactor) -> OrientedCycle:
    require_factor(out.graph, f, EXISTS_EVEN)
    h = out.source.h
    for cyc in f.cycles:
        if len(cyc.elements) % 2 == 0:
            if any(e.kind != ARC or e.index >= len(h.arcs) for e in cyc.elements):
                raise NotAFactor("even cycle leaves the source arcs")
            return make_cycle(h, [(e, True) for e in cyc.elements])
    raise NotAFactor("no even cycle")


HAMPATH = Reduction("ham-allodd", "ham", "all-odd", reduce_hampath_to_all_odd,
                    map_hampath_to_all_odd_factor, map_all_odd_factor_to_hampath, hampath_sizes)
COLORING = Reduction("col3-alleven", "col3", "all-even", reduce_3edgecoloring_to_all_even,
                     map_coloring_to_all_even_factor, map_all_even_factor_to_coloring, coloring_sizes)
VDP = Reduction("vdp-existsodd", "vdp", "exists-odd", reduce_2vdp_to_exists_odd,
                map_paths_to_exists_odd_factor, map_exists_odd_factor_to_paths, vdp_sizes)
EVENCYCLE = Reduction("evencyc-existseven", "evencyc", "exists-even", reduce_evendicycle_to_exists_even,
                      map_even_dicycle_to_exists_even_factor, map_exists_even_factor_to_even_dicycle,
                      evencycle_sizes)
