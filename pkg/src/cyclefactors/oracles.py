"""Exhaustive solvers for the source problems of the reductions.

Each returns a witness or ``None``.  They are deliberately simple
backtracking searches sized for the harness corpora.
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import EDGE, ElementId, MixedGraph
from .problems import ThreeDMInstance


def _succ(h: MixedGraph) -> list[list[int]]:
    out: list[set[int]] = [set() for _ in range(h.n)]
    for u, v in h.arcs:
        out[u].add(v)
    return [sorted(s) for s in out]


def hamiltonian_path(h: MixedGraph, s: int, t: int) -> list[int] | None:
    """A directed Hamiltonian path from ``s`` to ``t`` as a vertex list."""
    if s == t:
        return [s] if h.n == 1 else None
    succ = _succ(h)
    path = [s]
    used = [False] * h.n
    used[s] = True

    def extend(x):
        if len(path) == h.n:
            return x == t
        for y in succ[x]:
            if used[y] or (y == t and len(path) + 1 < h.n):
                continue
            used[y] = True
            path.append(y)
            if extend(y):
                return True
            path.pop()
            used[y] = False
        return False

    return list(path) if extend(s) else None


def _paths_from(succ, s, t, blocked):
    """Every simple s -> t path avoiding ``blocked``, shortest-first order not guaranteed."""
    path = [s]
    seen = set(blocked) | {s}

    def walk(x):
        if x == t:
            yield list(path)
            return
        for y in succ[x]:
            if y in seen:
                continue
            seen.add(y)
            path.append(y)
            yield from walk(y)
            path.pop()
            seen.discard(y)

    yield from walk(s)


def two_disjoint_paths(h: MixedGraph, s1: int, t1: int, s2: int, t2: int) -> list[list[int]] | None:
    """Vertex-disjoint directed paths s1 -> t1 and s2 -> t2."""
    succ = _succ(h)
    for p1 in _paths_from(succ, s1, t1, {s2, t2}):
        for p2 in _paths_from(succ, s2, t2, set(p1)):
            return [p1, p2]
    return None


def three_edge_coloring(h: MixedGraph) -> dict[ElementId, int] | None:
    """Proper edge colouring with colours 0, 1, 2, found by backtracking."""
    m = len(h.edges)
    color = [-1] * m
    at: list[list[int]] = [[] for _ in range(h.n)]
    for i, (u, v) in enumerate(h.edges):
        at[u].append(i)
        at[v].append(i)

    def free(i, c):
        u, v = h.edges[i]
        return all(color[j] != c for j in at[u]) and all(color[j] != c for j in at[v])

    def assign(i):
        if i == m:
            return True
        # the first edge's colour is fixed by symmetry
        for c in ((0,) if i == 0 else (0, 1, 2)):
            if free(i, c):
                color[i] = c
                if assign(i + 1):
                    return True
                color[i] = -1
        return False

    if not assign(0):
        return None
    return {ElementId(EDGE, i): c for i, c in enumerate(color)}


def perfect_3dm(inst: ThreeDMInstance) -> list[tuple[int, int, int]] | None:
    """Tuples covering every element of X, Y and Z exactly once."""
    n = inst.n
    tuples = inst.distinct_tuples()
    by_x: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for t in tuples:
        by_x[t[0]].append(t)
    used_y = [False] * n
    used_z = [False] * n
    chosen: list[tuple[int, int, int]] = []

    def pick(x):
        if x == n:
            return True
        for t in by_x[x]:
            _, y, z = t
            if used_y[y] or used_z[z]:
                continue
            used_y[y] = used_z[z] = True
            chosen.append(t)
            if pick(x + 1):
                return True
            chosen.pop()
            used_y[y] = used_z[z] = False
        return False

    return list(chosen) if pick(0) else None


def check_size(n: int, limit: int, what: str):
    if n > limit:
        raise TooLarge(f"{what} with {n} vertices exceeds brute-force bound {limit}")
