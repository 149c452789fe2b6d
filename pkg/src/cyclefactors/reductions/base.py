"""Shared types for the reductions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from ..certify import ViolationKind, verify_factor
from ..errors import NotAFactor, ParityViolated
from ..graph import CycleFactor, ElementId, MixedGraph, ParityConstraint, arc, edge


@dataclass(frozen=True)
class ReductionOutput:
    """A reduced instance together with per-vertex and per-element origins.

    ``vertex_map[v]`` and ``element_map[eid]`` are provenance tags such as
    ``x1@a3`` or ``w(e2,e5)``; the same strings are attached to the target
    graph as labels, so a serialized target is self-describing.
    """

    reduction_id: str
    source: Any
    target: Any
    constraint: ParityConstraint
    vertex_map: tuple[str, ...]
    element_map: Mapping[ElementId, str] = field(hash=False)

    @property
    def graph(self) -> MixedGraph:
        """Target graph (unwrapping pair or terminal instances)."""
        return self.target if isinstance(self.target, MixedGraph) else self.target.h

    def provenance_total(self) -> bool:
        g = self.graph
        return (len(self.vertex_map) == g.n
                and set(self.element_map) == set(g.element_ids())
                and all(self.vertex_map) and all(self.element_map.values()))


def labelled(reduction_id: str, n: int, edges, arcs, vtags, etags, atags) -> tuple[MixedGraph, tuple, dict]:
    """Build the target graph with provenance labels attached."""
    emap = {edge(i): t for i, t in enumerate(etags)}
    emap.update({arc(i): t for i, t in enumerate(atags)})
    vmap = tuple(vtags)
    g = MixedGraph(n, edges, arcs, dict(enumerate(vmap)), emap, reduction_id)
    return g, vmap, emap


def require_factor(g: MixedGraph, f: CycleFactor, constraint: ParityConstraint,
                   terminals=None):
    """Raise unless ``f`` is a valid factor of ``g`` under ``constraint``."""
    problems = verify_factor(g, f, constraint, terminals)
    if not problems:
        return
    if all(p.kind == ViolationKind.PARITY_VIOLATED for p in problems):
        raise ParityViolated("; ".join(map(str, problems)))
    raise NotAFactor("; ".join(map(str, problems)))


@dataclass(frozen=True)
class Reduction:
    """Registry entry: constructor, solution mappers and size formula.

    ``source_kind`` and ``target_kind`` name problem kinds understood by
    :mod:`cyclefactors.catalog`.  ``sizes(source)`` returns the expected
    ``(vertices, edges, arcs)`` of the target graph.
    """

    id: str
    source_kind: str
    target_kind: str
    reduce: Callable[[Any], ReductionOutput]
    forward: Callable[[ReductionOutput, Any], Any]
    backward: Callable[[ReductionOutput, Any], Any]
    sizes: Callable[[Any], tuple[int, int, int]]
