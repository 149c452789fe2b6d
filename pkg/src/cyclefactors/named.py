"""Small named graphs and the worked example instances used in tests."""

from __future__ import annotations

from itertools import combinations

from .graph import CycleFactor, MixedGraph, arc, cycles_from_elements, directed, edge, undirected
from .problems import SmcfInstance, VdpInstance


def complete_graph(n: int) -> MixedGraph:
    return undirected(n, combinations(range(n), 2))


def k4() -> MixedGraph:
    return complete_graph(4)


def k5() -> MixedGraph:
    return complete_graph(5)


def k33() -> MixedGraph:
    return undirected(6, [(u, v) for u in range(3) for v in range(3, 6)])


def petersen() -> MixedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return undirected(10, outer + spokes + inner)


def prism() -> MixedGraph:
    return undirected(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def cycle_graph(n: int) -> MixedGraph:
    return undirected(n, [(i, (i + 1) % n) for i in range(n)])


def directed_cycle(n: int) -> MixedGraph:
    return directed(n, [(i, (i + 1) % n) for i in range(n)])


# Two-path instance: s1=0 a=1 b=2 t1=3 c=4 s2=5 d=6 t2=7
TWO_PATHS_NAMES = ("s1", "a", "b", "t1", "c", "s2", "d", "t2")


def two_paths_example() -> VdpInstance:
    arcs = [(0, 1), (1, 2), (2, 3), (1, 4), (4, 2), (4, 6), (5, 6), (6, 7)]
    h = MixedGraph(8, (), arcs, vertex_labels=dict(enumerate(TWO_PATHS_NAMES)))
    return VdpInstance(h, 0, 3, 5, 7)


def two_paths_solution() -> list[list[int]]:
    """Paths s1 a b t1 and s2 d t2."""
    return [[0, 1, 2, 3], [5, 6, 7]]


# Terminal-cover instance on a=0 b=1 c=2 d=3 with Z = {a}
TERMINAL_COVER_NAMES = ("a", "b", "c", "d")


def terminal_cover_example() -> SmcfInstance:
    h = MixedGraph(4, [(0, 1), (1, 2), (1, 3), (2, 3)], [(0, 2)],
                   vertex_labels=dict(enumerate(TERMINAL_COVER_NAMES)))
    return SmcfInstance(h, (0,))


def terminal_cover_solution() -> CycleFactor:
    """The mixed triangle a -> c - b - a, which covers the terminal a."""
    inst = terminal_cover_example()
    return cycles_from_elements(inst.h, [arc(0), edge(1), edge(0)])
