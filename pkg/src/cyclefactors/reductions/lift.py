"""Signature-preserving lift of a digraph to an undirected graph.

Vertex v becomes a path a_v - b_v - c_v (ids 3v, 3v+1, 3v+2; edges 2v and
2v+1) and arc k = (u, v) becomes the edge c_u - a_v with id 2n+k.  A directed
cycle of length L maps to an undirected cycle of length 3L, so parities
and whole signature sets carry over.
"""

from __future__ import annotations

from ..errors import NotDirected
from ..graph import ARC, EDGE, CycleFactor, MixedGraph, ParityConstraint, arc, cycles_from_elements, edge
from .base import Reduction, ReductionOutput, labelled, require_factor


def lift_directed_to_undirected(d: MixedGraph) -> ReductionOutput:
    if not d.is_directed():
        raise NotDirected("lift needs a digraph")
    n = d.n
    vtags, edges, etags = [], [], []
    for v in range(n):
        vtags += [f"a@v{v}", f"b@v{v}", f"c@v{v}"]
        edges += [(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2)]
        etags += [f"ab@v{v}", f"bc@v{v}"]
    for k, (u, v) in enumerate(d.arcs):
        edges.append((3 * u + 2, 3 * v))
        etags.append(f"a{k}")
    g, vmap, emap = labelled("lift-undirected", 3 * n, edges, (), vtags, etags, ())
    return ReductionOutput("lift-undirected", d, g, ParityConstraint.ANY, vmap, emap)


def lift_sizes(d: MixedGraph):
    return 3 * d.n, 2 * d.n + len(d.arcs), 0


def lift_factor(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    """The bijection from (1,1)-factors of D to 2-factors of the lift."""
    d = out.source
    chosen = [edge(i) for i in range(2 * d.n)]
    chosen += [edge(2 * d.n + e.index) for e in f.element_set() if e.kind == ARC]
    return cycles_from_elements(out.graph, chosen)


def unlift_factor(out: ReductionOutput, f: CycleFactor) -> CycleFactor:
    """Inverse bijection: keep the arcs whose connector edges are used."""
    require_factor(out.graph, f, ParityConstraint.ANY)
    d = out.source
    chosen = [arc(e.index - 2 * d.n) for e in f.element_set()
              if e.kind == EDGE and e.index >= 2 * d.n]
    return cycles_from_elements(d, chosen)


LIFT = Reduction("lift-undirected", "digraph", "any", lift_directed_to_undirected,
                 lift_factor, unlift_factor, lift_sizes)
