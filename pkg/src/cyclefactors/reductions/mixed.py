"""The chain 3DM -> pair-restricted 2-factor -> terminal-cover mixed factor
-> mixed cycle-factor -> mixed factor with an even cycle."""

from __future__ import annotations

from itertools import combinations, product

from ..errors import NotAFactor
from ..graph import (
    ARC,
    EDGE,
    CycleFactor,
    MixedGraph,
    ParityConstraint,
    arc,
    cycles_from_elements,
    edge,
)
from ..problems import PrcfInstance, SmcfInstance, ThreeDMInstance
from .base import Reduction, ReductionOutput, labelled, require_factor

ANY = ParityConstraint.ANY

# -- 3DM -> PRCF -------------------------------------------------------------------
#
# x_i = i, y_j = n+j, z_k = 2n+k.  Distinct tuple t gets edges 3t = xy,
# 3t+1 = yz, 3t+2 = zx.  Two tuples sharing a coordinate forbid every
# combination of their two edges at the shared vertex.

_AT = {0: (0, 2), 1: (0, 1), 2: (1, 2)}  # edges of a tuple meeting its x, y, z


def reduce_3dm_to_prcf(inst: ThreeDMInstance) -> ReductionOutput:
    n = inst.n
    tuples = inst.distinct_tuples()
    vtags = [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)] + [f"z{i}" for i in range(n)]
    edges, etags = [], []
    for t, (x, y, z) in enumerate(tuples):
        edges += [(x, n + y), (n + y, 2 * n + z), (2 * n + z, x)]
        etags += [f"xy@t{t}", f"yz@t{t}", f"zx@t{t}"]
    pairs = []
    for t1, t2 in combinations(range(len(tuples)), 2):
        for coord in range(3):
            if tuples[t1][coord] == tuples[t2][coord]:
                for i, j in product(_AT[coord], repeat=2):
                    pairs.append((edge(3 * t1 + i), edge(3 * t2 + j)))
    g, vmap, emap = labelled("3dm-prcf", 3 * n, edges, (), vtags, etags, ())
    return ReductionOutput("3dm-prcf", inst, PrcfInstance(g, tuple(pairs)), ANY, vmap, emap)


def threedm_sizes(inst: ThreeDMInstance):
    return 3 * inst.n, 3 * len(inst.distinct_tuples()), 0


def map_matching_to_prcf_factor(out: ReductionOutput, matching) -> CycleFactor:
    index = {t: i for i, t in enumerate(out.source.distinct_tuples())}
    chosen = []
    for t in matching:
        i = index[tuple(t)]
        chosen += [edge(3 * i), edge(3 * i + 1), edge(3 * i + 2)]
    return cycles_from_elements(out.graph, chosen)


def map_prcf_factor_to_matching(out: ReductionOutput, f: CycleFactor) -> list[tuple[int, int, int]]:
    """Every cycle of a pair-respecting factor is one tuple's triangle."""
    require_factor(out.graph, f, ANY)
    tuples = out.source.distinct_tuples()
    found = []
    for cyc in f.cycles:
        owners = {e.index // 3 for e in cyc.elements}
        if len(owners) != 1 or len(cyc.elements) != 3:
            raise NotAFactor("cycle is not a single tuple triangle")
        found.append(tuples[owners.pop()])
    return sorted(found)


# -- PRCF -> SMCF ------------------------------------------------------------------
#
# m = |E(H)|.  w_{e,f} = n + e*m + f.  Edge e = (v_i, v_j) (stored order)
# becomes the path v_i, w_{e,0}, ..., w_{e,m-1}, v_j with edge ids
# e(m+1) .. e(m+1)+m.  Pair p = (e, f), e < f: z_{e,f} = n+m^2+2p,
# z_{f,e} = n+m^2+2p+1, edge m(m+1)+p joins them, and arcs 4p..4p+3 are
# w_ef->z_ef, z_fe->w_ef, w_fe->z_fe, z_ef->w_fe.  Terminals are every
# source vertex plus every z.


def reduce_prcf_to_smcf(inst: PrcfInstance) -> ReductionOutput:
    h = inst.h
    n, m = h.n, len(h.edges)
    pairs = inst.pairs

    def w(e, f):
        return n + e * m + f

    vtags = [f"v{v}" for v in range(n)]
    vtags += [f"w(e{e},e{f})" for e in range(m) for f in range(m)]
    edges, etags = [], []
    for e, (a, b) in enumerate(h.edges):
        chain = [a] + [w(e, f) for f in range(m)] + [b]
        edges += list(zip(chain, chain[1:]))
        etags += [f"S{j}@e{e}" for j in range(m + 1)]
    arcs, atags = [], []
    zbase = n + m * m
    for p, (pe, pf) in enumerate(pairs):
        e, f = pe.index, pf.index
        zef, zfe = zbase + 2 * p, zbase + 2 * p + 1
        vtags += [f"z(e{e},e{f})", f"z(e{f},e{e})"]
        edges.append((zef, zfe))
        etags.append(f"zz@p{p}")
        arcs += [(w(e, f), zef), (zfe, w(e, f)), (w(f, e), zfe), (zef, w(f, e))]
        atags += [f"wz(e{e},e{f})", f"zw(e{f},e{e})", f"wz(e{f},e{e})", f"zw(e{e},e{f})"]
    g, vmap, emap = labelled("prcf-smcf", zbase + 2 * len(pairs), edges, arcs, vtags, etags, atags)
    terminals = tuple(range(n)) + tuple(range(zbase, zbase + 2 * len(pairs)))
    return ReductionOutput("prcf-smcf", inst, SmcfInstance(g, terminals), ANY, vmap, emap)


def prcf_sizes(inst: PrcfInstance):
    n, m, p = inst.h.n, len(inst.h.edges), len(inst.pairs)
    return n + m * m + 2 * p, (m + 1) * m + p, 4 * p


def map_prcf_factor_to_smcf_factor(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    """Subdivided factor edges, plus one mixed triangle per pair on its unused side."""
    h = out.source.h
    m = len(h.edges)
    used = {e.index for e in f.element_set()}
    chosen = []
    for e in sorted(used):
        chosen += [edge(e * (m + 1) + j) for j in range(m + 1)]
    for p, (pe, pf) in enumerate(out.source.pairs):
        chosen.append(edge(m * (m + 1) + p))
        if pe.index not in used:
            chosen += [arc(4 * p), arc(4 * p + 1)]
        else:
            chosen += [arc(4 * p + 2), arc(4 * p + 3)]
    return cycles_from_elements(out.graph, chosen)


def map_smcf_factor_to_prcf_factor(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    """Source edges whose subdivided paths are used."""
    require_factor(out.graph, f, ANY, out.target.terminals)
    h = out.source.h
    m = len(h.edges)
    used = f.element_set()
    chosen = [edge(e) for e in range(m) if edge(e * (m + 1)) in used]
    return cycles_from_elements(h, chosen)


# -- SMCF -> MCF ---------------------------------------------------------------------
#
# For the j-th non-terminal v: u1, u2, u3 = n+3j, n+3j+1, n+3j+2 and edges
# (after the source edges, base |E(H)| + 5j) v-u1, u1-u2, u2-u3, u3-u1, u3-v.
# Arcs are the source arcs unchanged.

_COVERED = (1, 2, 3)    # triangle u1 u2 u3
_UNCOVERED = (0, 1, 2, 4)  # 4-cycle v u1 u2 u3


def reduce_smcf_to_mcf(inst: SmcfInstance) -> ReductionOutput:
    h = inst.h
    n = h.n
    free = [v for v in range(n) if v not in set(inst.terminals)]
    vtags = [f"v{v}" for v in range(n)]
    edges = list(h.edges)
    etags = [f"e{k}" for k in range(len(h.edges))]
    for j, v in enumerate(free):
        u1, u2, u3 = n + 3 * j, n + 3 * j + 1, n + 3 * j + 2
        vtags += [f"u1@v{v}", f"u2@v{v}", f"u3@v{v}"]
        edges += [(v, u1), (u1, u2), (u2, u3), (u3, u1), (u3, v)]
        etags += [f"S{i}@v{v}" for i in range(1, 6)]
    atags = [f"a{k}" for k in range(len(h.arcs))]
    g, vmap, emap = labelled("smcf-mcf", n + 3 * len(free), edges, h.arcs, vtags, etags, atags)
    return ReductionOutput("smcf-mcf", inst, g, ANY, vmap, emap)


def smcf_sizes(inst: SmcfInstance):
    k = inst.h.n - len(inst.terminals)
    return inst.h.n + 3 * k, len(inst.h.edges) + 5 * k, len(inst.h.arcs)


def map_smcf_factor_to_mcf_factor(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    h = out.source.h
    covered = f.vertex_set()
    terms = set(out.source.terminals)
    free = [v for v in range(h.n) if v not in terms]
    chosen = list(f.element_set())
    for j, v in enumerate(free):
        base = len(h.edges) + 5 * j
        chosen += [edge(base + i) for i in (_COVERED if v in covered else _UNCOVERED)]
    return cycles_from_elements(out.graph, chosen)


def map_mcf_factor_to_smcf_factor(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    """Drop every element outside the source graph."""
    require_factor(out.graph, f, ANY)
    h = out.source.h
    chosen = [e for e in f.element_set() if e.kind == ARC or e.index < len(h.edges)]
    return cycles_from_elements(h, chosen)


# -- MCF -> exists-even MCF ---------------------------------------------------------------
#
# Add s = n, t = n+1 with arcs s->t and t->s after the source arcs.


def reduce_mcf_to_exists_even_mcf(g: MixedGraph) -> ReductionOutput:
    n = g.n
    vtags = [f"v{v}" for v in range(n)] + ["s", "t"]
    etags = [f"e{k}" for k in range(len(g.edges))]
    atags = [f"a{k}" for k in range(len(g.arcs))] + ["st", "ts"]
    arcs = list(g.arcs) + [(n, n + 1), (n + 1, n)]
    target, vmap, emap = labelled("mcf-existseven", n + 2, g.edges, arcs, vtags, etags, atags)
    return ReductionOutput("mcf-existseven", g, target, ParityConstraint.EXISTS_EVEN, vmap, emap)


def mcf_sizes(g: MixedGraph):
    return g.n + 2, len(g.edges), len(g.arcs) + 2


def map_mcf_factor_to_exists_even(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    a = len(out.source.arcs)
    return cycles_from_elements(out.graph, list(f.element_set()) + [arc(a), arc(a + 1)])


def map_exists_even_to_mcf_factor(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    require_factor(out.graph, f, ParityConstraint.EXISTS_EVEN)
    a = len(out.source.arcs)
    chosen = [e for e in f.element_set() if e.kind == EDGE or e.index < a]
    return cycles_from_elements(out.source, chosen)


THREEDM = Reduction("3dm-prcf", "3dm", "prcf", reduce_3dm_to_prcf,
                    map_matching_to_prcf_factor, map_prcf_factor_to_matching, threedm_sizes)
PRCF = Reduction("prcf-smcf", "prcf", "smcf", reduce_prcf_to_smcf,
                 map_prcf_factor_to_smcf_factor, map_smcf_factor_to_prcf_factor, prcf_sizes)
SMCF = Reduction("smcf-mcf", "smcf", "mcf", reduce_smcf_to_mcf,
                 map_smcf_factor_to_mcf_factor, map_mcf_factor_to_smcf_factor, smcf_sizes)
MCF = Reduction("mcf-existseven", "mcf", "exists-even", reduce_mcf_to_exists_even_mcf,
                map_mcf_factor_to_exists_even, map_exists_even_to_mcf_factor, mcf_sizes)
