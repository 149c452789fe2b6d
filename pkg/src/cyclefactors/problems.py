"""Source-problem instances that wrap a graph with extra data."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DanglingReference, EndpointsNotDistinct, IndexOutOfRange, MissingEndpoint, TerminalNotVertex
from .graph import EDGE, ElementId, MixedGraph


def _check_vertex(h: MixedGraph, v: int, what: str, exc=MissingEndpoint):
    if not 0 <= v < h.n:
        raise exc(f"{what} = {v} is not a vertex (n = {h.n})")


@dataclass(frozen=True)
class HamPathInstance:
    """Directed Hamiltonian (s, t)-path."""

    h: MixedGraph
    s: int
    t: int

    def __post_init__(self):
        _check_vertex(self.h, self.s, "s")
        _check_vertex(self.h, self.t, "t")


@dataclass(frozen=True)
class ColoringInstance:
    """3-edge-colouring of a cubic graph."""

    h: MixedGraph


@dataclass(frozen=True)
class VdpInstance:
    """Two vertex-disjoint directed paths s1 -> t1 and s2 -> t2."""

    h: MixedGraph
    s1: int
    t1: int
    s2: int
    t2: int

    def __post_init__(self):
        for name in ("s1", "t1", "s2", "t2"):
            _check_vertex(self.h, getattr(self, name), name)

    @property
    def terminals(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.s1, self.t1), (self.s2, self.t2))

    def check_distinct(self):
        if len({self.s1, self.t1, self.s2, self.t2}) != 4:
            raise EndpointsNotDistinct("s1, t1, s2, t2 must be four distinct vertices")


@dataclass(frozen=True)
class EvenCycleInstance:
    """Does the digraph contain a directed cycle of even length?"""

    h: MixedGraph


@dataclass(frozen=True)
class ThreeDMInstance:
    """Ground sets X, Y, Z of size ``n`` (each ``0..n-1``) and tuples over them."""

    n: int
    tuples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for t in self.tuples:
            if len(t) != 3 or not all(0 <= x < self.n for x in t):
                raise IndexOutOfRange(f"tuple {tuple(t)} out of range for n = {self.n}")
        object.__setattr__(self, "tuples", tuple(tuple(int(x) for x in t) for t in self.tuples))

    def distinct_tuples(self) -> tuple[tuple[int, int, int], ...]:
        """Tuples with repeats dropped, first occurrence kept."""
        return tuple(dict.fromkeys(self.tuples))


@dataclass(frozen=True)
class PrcfInstance:
    """Undirected graph plus forbidden edge pairs.

    Pairs are stored as sorted ``(e, f)`` with ``e < f``; repeats are dropped.
    """

    h: MixedGraph
    pairs: tuple[tuple[ElementId, ElementId], ...] = ()

    def __post_init__(self):
        clean = []
        for p, q in self.pairs:
            for e in (p, q):
                if e.kind != EDGE or not self.h.has_element(e):
                    raise DanglingReference(f"pair names missing edge {e}")
            if p == q:
                raise DanglingReference(f"pair repeats edge {p}")
            clean.append((p, q) if p < q else (q, p))
        object.__setattr__(self, "pairs", tuple(dict.fromkeys(clean)))


@dataclass(frozen=True)
class SmcfInstance:
    """Mixed graph plus terminal set; terminals kept sorted and unique."""

    h: MixedGraph
    terminals: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for z in self.terminals:
            _check_vertex(self.h, z, "terminal", TerminalNotVertex)
        object.__setattr__(self, "terminals", tuple(sorted(set(self.terminals))))


ProblemInstance = (
    MixedGraph | HamPathInstance | ColoringInstance | VdpInstance | EvenCycleInstance
    | ThreeDMInstance | PrcfInstance | SmcfInstance
)
