"""Maximum-cardinality matching: Hopcroft-Karp for bipartite graphs and
Edmonds' blossom algorithm for general graphs.

Both engines work on undirected :class:`~cyclefactors.graph.MixedGraph`
values.  Parallel edges collapse to one candidate per endpoint pair; the
smallest edge id of the bundle is reported as matched.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .errors import NotBipartition, NotUndirected
from .graph import ElementId, MixedGraph, edge


@dataclass(frozen=True)
class Matching:
    n: int
    pairs: frozenset[ElementId]
    mate: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.mate[v] != -1)

    @property
    def is_perfect(self) -> bool:
        return all(m != -1 for m in self.mate)


def _bundles(g: MixedGraph) -> dict[tuple[int, int], int]:
    """Smallest edge index per unordered endpoint pair."""
    best: dict[tuple[int, int], int] = {}
    for i, (u, v) in enumerate(g.edges):
        key = (u, v) if u < v else (v, u)
        if key not in best:
            best[key] = i
    return best


def _from_mate(g: MixedGraph, mate: list[int]) -> Matching:
    bundles = _bundles(g)
    pairs = frozenset(
        edge(bundles[(v, mate[v])]) for v in range(g.n) if mate[v] > v
    )
    return Matching(g.n, pairs, tuple(mate))


def max_bipartite_matching(g: MixedGraph, left: Iterable[int]) -> Matching:
    """Hopcroft-Karp on ``g`` with the given left side.

    Raises :class:`NotBipartition` if an edge has both ends on one side.
    """
    if not g.is_undirected():
        raise NotUndirected("bipartite matching needs an undirected graph")
    is_left = [False] * g.n
    for v in left:
        is_left[v] = True
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for (u, v) in sorted(_bundles(g)):
        if is_left[u] == is_left[v]:
            raise NotBipartition(f"edge {u}-{v} joins two vertices of one side")
        if is_left[u]:
            adj[u].append(v)
        else:
            adj[v].append(u)
    lefts = [v for v in range(g.n) if is_left[v]]
    mate = [-1] * g.n
    inf = g.n + 1

    while True:
        # BFS layering from free left vertices
        dist = {}
        queue = deque()
        for u in lefts:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                nxt = mate[w]
                if nxt == -1:
                    found = True
                elif nxt not in dist:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        if not found:
            break

        def augment(u):
            # iterative DFS along the layered graph
            stack = [(u, iter(adj[u]))]
            path = []
            while stack:
                x, it = stack[-1]
                advanced = False
                for w in it:
                    nxt = mate[w]
                    if nxt == -1:
                        path.append((x, w))
                        for a, b in path:
                            mate[a] = b
                            mate[b] = a
                        return True
                    if dist.get(nxt, inf) == dist[x] + 1:
                        path.append((x, w))
                        stack.append((nxt, iter(adj[nxt])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    dist[x] = inf
                    if path:
                        path.pop()
            return False

        progressed = False
        for u in lefts:
            if mate[u] == -1 and augment(u):
                progressed = True
        if not progressed:
            break
    return _from_mate(g, mate)


def max_general_matching(g: MixedGraph) -> Matching:
    """Maximum-cardinality matching of an undirected multigraph (blossom, O(n^3))."""
    if not g.is_undirected():
        raise NotUndirected("general matching needs an undirected graph")
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for (u, v) in sorted(_bundles(g)):
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    mate = kernels.blossom_matching(g.n, adj)
    return _from_mate(g, list(mate))
