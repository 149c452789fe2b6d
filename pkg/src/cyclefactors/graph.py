"""Mixed multigraph model, oriented cycles, cycle-factors and parity signatures.

Vertices are dense integers ``0..n-1``.  Edges and arcs are numbered separately
in declaration order and addressed by :class:`ElementId` (``e3``, ``a0``).
Parallel edges, parallel arcs and anti-parallel arc pairs are allowed; loops
are not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    DanglingReference,
    InstanceSyntaxError,
    NotAFactor,
    SelfLoop,
    VertexOutOfRange,
)


class ElementKind(enum.IntEnum):
    EDGE = 0
    ARC = 1


EDGE = ElementKind.EDGE
ARC = ElementKind.ARC


class ElementId(NamedTuple):
    """Identity of an edge or arc.  Orders edges before arcs, then by index."""

    kind: ElementKind
    index: int

    def __str__(self):
        return ("e" if self.kind == EDGE else "a") + str(self.index)

    def __repr__(self):
        return f"ElementId({self})"

    @property
    def is_arc(self):
        return self.kind == ARC

    @classmethod
    def parse(cls, token: str) -> "ElementId":
        if len(token) >= 2 and token[0] in "ea" and token[1:].isdigit():
            return cls(EDGE if token[0] == "e" else ARC, int(token[1:]))
        raise InstanceSyntaxError(f"bad element id {token!r}")


def edge(index: int) -> ElementId:
    return ElementId(EDGE, index)


def arc(index: int) -> ElementId:
    return ElementId(ARC, index)


class MixedGraph:
    """Immutable mixed multigraph.

    ``edges`` holds unordered endpoint pairs (the stored order fixes what a
    ``+`` traversal means), ``arcs`` holds ``(tail, head)`` pairs.  Labels are
    opaque provenance strings and take part in equality so that serialization
    round-trips are exact.
    """

    __slots__ = (
        "n", "edges", "arcs", "vertex_labels", "element_labels", "label",
        "_incident", "_hash",
    )

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        arcs: Iterable[Sequence[int]] = (),
        vertex_labels: Mapping[int, str] | None = None,
        element_labels: Mapping[ElementId, str] | None = None,
        label: str | None = None,
    ):
        if n < 0:
            raise VertexOutOfRange(f"negative vertex count {n}")
        self.n = int(n)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.arcs = tuple((int(u), int(v)) for u, v in arcs)
        for kind, pairs in ((EDGE, self.edges), (ARC, self.arcs)):
            for i, (u, v) in enumerate(pairs):
                eid = ElementId(kind, i)
                if not (0 <= u < n and 0 <= v < n):
                    raise VertexOutOfRange(f"{eid} = ({u}, {v}) with n = {n}")
                if u == v:
                    raise SelfLoop(f"{eid} is a loop at vertex {u}")
        vlab = dict(vertex_labels or {})
        for v in vlab:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"label on vertex {v} with n = {n}")
        elab = dict(element_labels or {})
        for eid in elab:
            self._check_element(eid)
        self.vertex_labels = dict(sorted(vlab.items()))
        self.element_labels = dict(sorted(elab.items()))
        self.label = label
        incident: list[list[ElementId]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            incident[u].append(edge(i))
            incident[v].append(edge(i))
        for i, (u, v) in enumerate(self.arcs):
            incident[u].append(arc(i))
            incident[v].append(arc(i))
        self._incident = tuple(tuple(lst) for lst in incident)
        self._hash = None

    # -- structure -------------------------------------------------------

    def is_directed(self) -> bool:
        return not self.edges

    def is_undirected(self) -> bool:
        return not self.arcs

    @property
    def num_elements(self) -> int:
        return len(self.edges) + len(self.arcs)

    def element_ids(self) -> list[ElementId]:
        return [edge(i) for i in range(len(self.edges))] + [
            arc(i) for i in range(len(self.arcs))
        ]

    def _check_element(self, eid: ElementId):
        size = len(self.edges) if eid.kind == EDGE else len(self.arcs)
        if not 0 <= eid.index < size:
            raise DanglingReference(f"{eid} does not exist")

    def has_element(self, eid: ElementId) -> bool:
        size = len(self.edges) if eid.kind == EDGE else len(self.arcs)
        return 0 <= eid.index < size

    def endpoints(self, eid: ElementId) -> tuple[int, int]:
        self._check_element(eid)
        return (self.edges if eid.kind == EDGE else self.arcs)[eid.index]

    def incident(self, v: int) -> tuple[ElementId, ...]:
        """Incident elements of ``v`` sorted by ElementId."""
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def global_index(self, eid: ElementId) -> int:
        return eid.index if eid.kind == EDGE else len(self.edges) + eid.index

    def from_global(self, k: int) -> ElementId:
        m = len(self.edges)
        return edge(k) if k < m else arc(k - m)

    def step(self, eid: ElementId, forward: bool) -> tuple[int, int]:
        """(from, to) of traversing ``eid``; arcs only run forward."""
        u, v = self.endpoints(eid)
        return (u, v) if forward else (v, u)

    # -- value semantics -------------------------------------------------

    def _key(self):
        return (
            self.n, self.edges, self.arcs,
            tuple(self.vertex_labels.items()),
            tuple(self.element_labels.items()),
            self.label,
        )

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        kind = "directed" if self.is_directed() else (
            "undirected" if self.is_undirected() else "mixed")
        return (f"MixedGraph({kind}, n={self.n}, edges={len(self.edges)}, "
                f"arcs={len(self.arcs)})")

    def unlabeled(self) -> "MixedGraph":
        return MixedGraph(self.n, self.edges, self.arcs)


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]] = (),
    arcs: Iterable[Sequence[int]] = (),
    **labels,
) -> MixedGraph:
    """Validate endpoints and build a :class:`MixedGraph`.

    Raises :class:`SelfLoop` or :class:`VertexOutOfRange` on bad input.
    """
    return MixedGraph(n, edges, arcs, **labels)


def undirected(n: int, edges: Iterable[Sequence[int]]) -> MixedGraph:
    return MixedGraph(n, edges, ())


def directed(n: int, arcs: Iterable[Sequence[int]]) -> MixedGraph:
    return MixedGraph(n, (), arcs)


# -- parity ------------------------------------------------------------------


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1


class ParitySignature(NamedTuple):
    """``even`` and ``odd`` cycle counts of a factor."""

    even: int
    odd: int


class ParityConstraint(enum.Enum):
    ANY = "any"
    ALL_ODD = "all-odd"
    ALL_EVEN = "all-even"
    EXISTS_ODD = "exists-odd"
    EXISTS_EVEN = "exists-even"

    def satisfied_by(self, sig: ParitySignature) -> bool:
        even, odd = sig
        if self is ParityConstraint.ALL_ODD:
            return even == 0
        if self is ParityConstraint.ALL_EVEN:
            return odd == 0
        if self is ParityConstraint.EXISTS_ODD:
            return odd >= 1
        if self is ParityConstraint.EXISTS_EVEN:
            return even >= 1
        return True


# -- cycles and factors --------------------------------------------------------


@dataclass(frozen=True)
class OrientedCycle:
    """A cyclic walk ``vertices[i] --elements[i]--> vertices[i+1]``.

    ``forward[i]`` is True when element ``i`` runs from its first stored
    endpoint to its second.  Use :func:`make_cycle` to build a validated one;
    the raw constructor is kept permissive so verifiers can be fed broken
    cycles.
    """

    elements: tuple[ElementId, ...]
    forward: tuple[bool, ...]
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    @property
    def parity(self) -> Parity:
        return cycle_parity(self)

    def element_set(self) -> frozenset[ElementId]:
        return frozenset(self.elements)

    def rotated(self, k: int) -> "OrientedCycle":
        k %= max(len(self.elements), 1)
        return OrientedCycle(
            self.elements[k:] + self.elements[:k],
            self.forward[k:] + self.forward[:k],
            self.vertices[k:] + self.vertices[:k],
        )

    def reversed(self) -> "OrientedCycle":
        """Same cycle walked backwards; only meaningful when every element is an edge."""
        if not self.elements:
            return self
        verts = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        return OrientedCycle(
            tuple(reversed(self.elements)),
            tuple(not f for f in reversed(self.forward)),
            verts,
        )

    def steps(self) -> list[tuple[ElementId, bool]]:
        return list(zip(self.elements, self.forward))


def cycle_parity(c: OrientedCycle) -> Parity:
    return Parity.ODD if len(c.elements) % 2 else Parity.EVEN


@dataclass(frozen=True, eq=False)
class CycleFactor:
    """Collection of cycles.  Equality is by the set of elements used."""

    cycles: tuple[OrientedCycle, ...] = ()

    def element_set(self) -> frozenset[ElementId]:
        return frozenset(e for c in self.cycles for e in c.elements)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for c in self.cycles for v in c.vertices)

    def signature(self) -> ParitySignature:
        return signature(self)

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __eq__(self, other):
        if not isinstance(other, CycleFactor):
            return NotImplemented
        return self.element_set() == other.element_set()

    def __hash__(self):
        return hash(self.element_set())


def signature(f: CycleFactor) -> ParitySignature:
    odd = sum(1 for c in f.cycles if len(c.elements) % 2)
    return ParitySignature(len(f.cycles) - odd, odd)


def make_cycle(g: MixedGraph, steps: Sequence[tuple[ElementId, bool]]) -> OrientedCycle:
    """Validate a cyclic sequence of (element, forward) steps and derive its vertices.

    Raises :class:`NotAFactor` if the steps do not form a simple,
    orientation-consistent cycle of ``g``.
    """
    if len(steps) < 2:
        raise NotAFactor("a cycle needs at least two elements")
    verts = []
    seen_e = set()
    for i, (eid, fwd) in enumerate(steps):
        if not g.has_element(eid):
            raise NotAFactor(f"{eid} does not exist")
        if eid in seen_e:
            raise NotAFactor(f"{eid} repeated")
        seen_e.add(eid)
        if eid.kind == ARC and not fwd:
            raise NotAFactor(f"{eid} traversed against its direction")
        a, b = g.step(eid, fwd)
        nxt_e, nxt_f = steps[(i + 1) % len(steps)]
        if not g.has_element(nxt_e) or g.step(nxt_e, nxt_f)[0] != b:
            raise NotAFactor(f"{eid} does not connect to {nxt_e}")
        verts.append(a)
    if len(set(verts)) != len(verts):
        raise NotAFactor("cycle repeats a vertex")
    return OrientedCycle(
        tuple(e for e, _ in steps), tuple(bool(f) for _, f in steps), tuple(verts)
    )


def cycle_from_walk(g: MixedGraph, vertices: Sequence[int], elements: Sequence[ElementId]) -> OrientedCycle:
    """Build a cycle from its vertex sequence and the element used after each vertex."""
    steps = []
    for i, eid in enumerate(elements):
        u, _ = g.endpoints(eid)
        steps.append((eid, u == vertices[i]))
    return make_cycle(g, steps)


def cycles_from_elements(g: MixedGraph, elements: Iterable[ElementId]) -> CycleFactor:
    """Decompose an element set in which every touched vertex has degree two.

    Each component is oriented so that all of its arcs run forward; raises
    :class:`NotAFactor` when that is impossible.  Cycles are listed by their
    minimum vertex and start there.
    """
    elems = sorted(set(elements))
    at: dict[int, list[ElementId]] = {}
    for eid in elems:
        u, v = g.endpoints(eid)
        at.setdefault(u, []).append(eid)
        at.setdefault(v, []).append(eid)
    for v, lst in at.items():
        if len(lst) != 2:
            raise NotAFactor(f"vertex {v} meets {len(lst)} chosen elements")
    done: set[ElementId] = set()
    cycles = []
    for start in sorted(at):
        first = at[start][0]
        if first in done:
            continue
        # walk one way round, then fix orientation
        walk = []
        v, eid = start, first
        while True:
            u, w = g.endpoints(eid)
            fwd = u == v
            walk.append((eid, fwd))
            done.add(eid)
            v = w if fwd else u
            if v == start:
                break
            a, b = at[v]
            eid = b if a == eid else a
        if any(e.kind == ARC and not f for e, f in walk):
            rev = [(e, not f) for e, f in reversed(walk)]
            if any(e.kind == ARC and not f for e, f in rev):
                raise NotAFactor("no consistent orientation for a component")
            walk = rev
        elif not any(e.kind == ARC for e, _ in walk) and len(walk) > 1:
            # canonical direction for undirected cycles: smaller first element
            if walk[0][0] > walk[-1][0]:
                walk = [(e, not f) for e, f in reversed(walk)]
        cyc = make_cycle(g, walk)
        k = cyc.vertices.index(min(cyc.vertices))
        cycles.append(cyc.rotated(k))
    cycles.sort(key=lambda c: c.vertices[0])
    return CycleFactor(tuple(cycles))
