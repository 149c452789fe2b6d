"""Cycle-factor solvers.

Polynomial routes (vertex split plus bipartite matching for digraphs, the
Tutte gadget plus blossom matching for undirected graphs, DFS/BFS parity
tests) and an exact backtracking engine that decides every parity variant,
the pair-restricted problem and the terminal-cover (Steiner) problem.
"""

from __future__ import annotations

import os
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import DanglingReference, NotDirected, NotUndirected, TerminalNotVertex, TooLarge
from .graph import (
    ARC,
    EDGE,
    CycleFactor,
    ElementId,
    MixedGraph,
    OrientedCycle,
    ParityConstraint,
    ParitySignature,
    cycles_from_elements,
    make_cycle,
    undirected,
)
from .matching import max_bipartite_matching, max_general_matching

DEFAULT_NODE_LIMIT = int(os.environ.get("CYCLEFACTORS_NODE_LIMIT", 10**8))
EVEN_DICYCLE_MAX_VERTICES = 20

_CONSTRAINT_CODE = {
    ParityConstraint.ANY: kernels.ANY,
    ParityConstraint.ALL_ODD: kernels.ALL_ODD,
    ParityConstraint.ALL_EVEN: kernels.ALL_EVEN,
    ParityConstraint.EXISTS_ODD: kernels.EXISTS_ODD,
    ParityConstraint.EXISTS_EVEN: kernels.EXISTS_EVEN,
}


@dataclass(frozen=True)
class SolveStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    """Yes (with a witness factor) or No."""

    factor: CycleFactor | None
    stats: SolveStats = field(default_factory=SolveStats, compare=False)

    @property
    def yes(self) -> bool:
        return self.factor is not None

    def __bool__(self):
        return self.yes


# -- exact engine --------------------------------------------------------------


def _cycle_from_kernel(g: MixedGraph, vertices, elements) -> OrientedCycle:
    m = len(g.edges)
    eids = []
    fwd = []
    for v, k in zip(vertices, elements):
        if k < m:
            eids.append(ElementId(EDGE, k))
            fwd.append(g.edges[k][0] == v)
        else:
            eids.append(ElementId(ARC, k - m))
            fwd.append(True)
    return OrientedCycle(tuple(eids), tuple(fwd), tuple(vertices))


def _factor_from_kernel(g: MixedGraph, cycles) -> CycleFactor:
    return CycleFactor(tuple(_cycle_from_kernel(g, vs, es) for vs, es in cycles))


def _search(g: MixedGraph, required, constraint: ParityConstraint, mode: int,
            node_limit: int | None, conflicts=()):
    limit = DEFAULT_NODE_LIMIT if node_limit is None else node_limit
    tails = [u for u, _ in g.edges] + [u for u, _ in g.arcs]
    heads = [v for _, v in g.edges] + [v for _, v in g.arcs]
    is_arc = [False] * len(g.edges) + [True] * len(g.arcs)
    t0 = time.perf_counter()
    nodes, exceeded, result = kernels.factor_search(
        g.n, tails, heads, is_arc, required, _CONSTRAINT_CODE[constraint],
        mode, limit, list(conflicts),
    )
    elapsed = time.perf_counter() - t0
    if exceeded:
        raise TooLarge(f"search exceeded {limit} nodes", nodes=nodes)
    return result, SolveStats(nodes, elapsed)


def solve_parity(g: MixedGraph, constraint: ParityConstraint = ParityConstraint.ANY,
                 node_limit: int | None = None) -> SolveResult:
    """Exact decision for a cycle-factor of ``g`` satisfying ``constraint``.

    Raises :class:`TooLarge` when the node budget runs out.
    """
    result, stats = _search(g, [True] * g.n, constraint, kernels.FIRST, node_limit)
    if not result:
        return SolveResult(None, stats)
    return SolveResult(_factor_from_kernel(g, result[0]), stats)


def enumerate_factors(g: MixedGraph, constraint: ParityConstraint = ParityConstraint.ANY,
                      node_limit: int | None = None) -> Iterator[CycleFactor]:
    """Every cycle-factor of ``g`` exactly once (under element-set equality)."""
    result, _ = _search(g, [True] * g.n, constraint, kernels.ALL, node_limit)
    for cycles in result:
        yield _factor_from_kernel(g, cycles)


def signature_set(g: MixedGraph, node_limit: int | None = None) -> frozenset[ParitySignature]:
    result, _ = _search(g, [True] * g.n, ParityConstraint.ANY, kernels.SIGNATURES, node_limit)
    return frozenset(ParitySignature(a, b) for a, b in result)


def naive_signature_set(g: MixedGraph, max_elements: int = 16) -> frozenset[ParitySignature]:
    """Signatures by testing every element subset; independent of the search engine."""
    return frozenset(f.signature() for f in naive_factors(g, max_elements))


def naive_factors(g: MixedGraph, max_elements: int = 16) -> list[CycleFactor]:
    """All cycle-factors by brute force over element subsets (no pruning)."""
    elems = g.element_ids()
    if len(elems) > max_elements:
        raise TooLarge(f"{len(elems)} elements exceed naive bound {max_elements}")
    ends = [g.endpoints(e) for e in elems]
    found = []
    for mask in range(1 << len(elems)):
        deg = [0] * g.n
        chosen = []
        for i in range(len(elems)):
            if mask >> i & 1:
                u, v = ends[i]
                deg[u] += 1
                deg[v] += 1
                chosen.append(elems[i])
        if any(d != 2 for d in deg):
            continue
        try:
            found.append(cycles_from_elements(g, chosen))
        except Exception:
            continue
    return found


def solve_smcf(g: MixedGraph, terminals: Iterable[int],
               node_limit: int | None = None) -> SolveResult:
    """Vertex-disjoint mixed cycles covering every terminal (others optional)."""
    req = [False] * g.n
    for z in terminals:
        if not 0 <= z < g.n:
            raise TerminalNotVertex(f"terminal {z} with n = {g.n}")
        req[z] = True
    result, stats = _search(g, req, ParityConstraint.ANY, kernels.FIRST, node_limit)
    if not result:
        return SolveResult(None, stats)
    return SolveResult(_factor_from_kernel(g, result[0]), stats)


def enumerate_smcf(g: MixedGraph, terminals: Iterable[int],
                   node_limit: int | None = None) -> Iterator[CycleFactor]:
    """Terminal-covering factors in which every cycle meets a terminal."""
    req = [False] * g.n
    for z in terminals:
        req[z] = True
    result, _ = _search(g, req, ParityConstraint.ANY, kernels.ALL, node_limit)
    for cycles in result:
        yield _factor_from_kernel(g, cycles)


def _pair_conflicts(h: MixedGraph, pairs):
    out = []
    for p, q in pairs:
        for e in (p, q):
            if e.kind != EDGE or not h.has_element(e):
                raise DanglingReference(f"pair names missing edge {e}")
        if p == q:
            raise DanglingReference(f"pair {{{p}, {q}}} repeats one edge")
        out.append((h.global_index(p), h.global_index(q)))
    return out


def solve_prcf(h: MixedGraph, pairs: Sequence[tuple[ElementId, ElementId]],
               node_limit: int | None = None) -> SolveResult:
    """2-factor of ``h`` using at most one edge of every pair."""
    if not h.is_undirected():
        raise NotUndirected("pair-restricted factors need an undirected graph")
    conflicts = _pair_conflicts(h, pairs)
    result, stats = _search(h, [True] * h.n, ParityConstraint.ANY, kernels.FIRST,
                            node_limit, conflicts)
    if not result:
        return SolveResult(None, stats)
    return SolveResult(_factor_from_kernel(h, result[0]), stats)


def enumerate_prcf(h: MixedGraph, pairs, node_limit: int | None = None) -> Iterator[CycleFactor]:
    conflicts = _pair_conflicts(h, pairs)
    result, _ = _search(h, [True] * h.n, ParityConstraint.ANY, kernels.ALL,
                        node_limit, conflicts)
    for cycles in result:
        yield _factor_from_kernel(h, cycles)


# -- polynomial routes ---------------------------------------------------------


def directed_cycle_factor(d: MixedGraph) -> SolveResult:
    """(1,1)-factor through a perfect matching of the in/out split graph."""
    if not d.is_directed():
        raise NotDirected("directed_cycle_factor needs a digraph")
    t0 = time.perf_counter()
    n = d.n
    # out-copy of v is v, in-copy is n + v; split edge i mirrors arc i
    split = undirected(2 * n, [(u, n + v) for u, v in d.arcs])
    mt = max_bipartite_matching(split, range(n))
    stats = SolveStats(0, time.perf_counter() - t0)
    if not mt.is_perfect:
        return SolveResult(None, stats)
    chosen = [ElementId(ARC, e.index) for e in mt.pairs]
    return SolveResult(cycles_from_elements(d, chosen), stats)


def tutte_gadget(g: MixedGraph) -> tuple[MixedGraph, list[int]]:
    """Auxiliary graph whose perfect matchings correspond to 2-factors of ``g``.

    Each end of each edge gets a node; a vertex of degree ``d`` also gets
    ``d - 2`` filler nodes joined to all of its end nodes.  Edge ``i`` of
    ``g`` becomes the gadget edge ``link[i]`` between its two end nodes, and
    belongs to the 2-factor exactly when that link is matched.
    """
    ends: list[list[int]] = [[] for _ in range(g.n)]
    count = 0
    end_of = []
    for u, v in g.edges:
        end_of.append((count, count + 1))
        ends[u].append(count)
        ends[v].append(count + 1)
        count += 2
    edges = [pair for pair in end_of]
    link = list(range(len(g.edges)))
    for v in range(g.n):
        for _ in range(len(ends[v]) - 2):
            filler = count
            count += 1
            edges.extend((filler, x) for x in ends[v])
    return undirected(count, edges), link


def undirected_two_factor(g: MixedGraph) -> SolveResult:
    """2-factor via the Tutte gadget and blossom matching."""
    if not g.is_undirected():
        raise NotUndirected("undirected_two_factor needs an undirected graph")
    t0 = time.perf_counter()
    if any(g.degree(v) < 2 for v in range(g.n)):
        return SolveResult(None, SolveStats(0, time.perf_counter() - t0))
    aux, link = tutte_gadget(g)
    mt = max_general_matching(aux)
    stats = SolveStats(0, time.perf_counter() - t0)
    if not mt.is_perfect:
        return SolveResult(None, stats)
    chosen = []
    for i, (a, b) in enumerate(aux.edges[: len(g.edges)]):
        if mt.mate[a] == b:
            chosen.append(ElementId(EDGE, link[i]))
    return SolveResult(cycles_from_elements(g, chosen), stats)


def cycle_factor_poly(g: MixedGraph) -> SolveResult:
    """Polynomial route for a digraph or an undirected graph."""
    if g.arcs and g.is_directed():
        return directed_cycle_factor(g)
    return undirected_two_factor(g)


# -- cycle detection -------------------------------------------------------------


def _walk_to_odd_cycle(g: MixedGraph, walk: list[tuple[int, ElementId, bool]]) -> OrientedCycle:
    """Split an odd closed walk (list of (from, element, forward)) into simple
    cycles and return an odd one."""
    stack: list[tuple[int, ElementId, bool]] = []
    pos: dict[int, int] = {}
    pieces = []
    for step in walk:
        v = step[0]
        if v in pos:
            i = pos[v]
            pieces.append(stack[i:])
            for s in stack[i:]:
                del pos[s[0]]
            del stack[i:]
        pos[v] = len(stack)
        stack.append(step)
    if stack:
        pieces.append(stack)
    for piece in pieces:
        if len(piece) % 2 == 1:
            return make_cycle(g, [(e, f) for _, e, f in piece])
    raise AssertionError("odd closed walk without an odd cycle")


def _strong_components(d: MixedGraph) -> list[int]:
    """Component index per vertex (iterative Tarjan)."""
    n = d.n
    out = [[] for _ in range(n)]
    for u, v in d.arcs:
        out[u].append(v)
    index = [-1] * n
    low = [0] * n
    on = [False] * n
    comp = [-1] * n
    stack = []
    counter = 0
    ncomp = 0
    for s in range(n):
        if index[s] != -1:
            continue
        work = [(s, 0)]
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on[s] = True
        while work:
            v, i = work[-1]
            if i < len(out[v]):
                work[-1] = (v, i + 1)
                w = out[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on[w] = True
                    work.append((w, 0))
                elif on[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[v])
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on[w] = False
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
    return comp


def find_odd_cycle(g: MixedGraph, mode: str | None = None) -> OrientedCycle | None:
    """An odd simple cycle, or None.

    Undirected: BFS 2-colouring; a monochromatic edge closes an odd cycle
    through the BFS tree.  Directed: inside each strong component, BFS depth
    parity must be consistent on every arc; a violating arc yields an odd
    closed walk, which contains an odd cycle.
    """
    if mode is None:
        mode = "directed" if g.is_directed() and g.arcs else "undirected"
    if mode == "undirected":
        if not g.is_undirected():
            raise NotUndirected("undirected mode on a graph with arcs")
        return _odd_cycle_undirected(g)
    if mode == "directed":
        if not g.is_directed():
            raise NotDirected("directed mode on a graph with edges")
        return _odd_cycle_directed(g)
    raise ValueError(f"unknown mode {mode!r}")


def _odd_cycle_undirected(g: MixedGraph) -> OrientedCycle | None:
    color = [-1] * g.n
    parent: list[tuple[int, ElementId] | None] = [None] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in g.incident(u):
                a, b = g.endpoints(eid)
                w = b if a == u else a
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = (u, eid)
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return _close_tree_cycle(g, u, w, eid, parent, depth)
    return None


def _close_tree_cycle(g, u, w, eid, parent, depth) -> OrientedCycle:
    # climb both ends to their lowest common ancestor
    left, right = [], []
    x, y = u, w
    while depth[x] > depth[y]:
        left.append(parent[x])
        x = parent[x][0]
    while depth[y] > depth[x]:
        right.append(parent[y])
        y = parent[y][0]
    while x != y:
        left.append(parent[x])
        x = parent[x][0]
        right.append(parent[y])
        y = parent[y][0]
    # lca -> ... -> u, then u -eid-> w, then w -> ... back to lca
    vertices = [p for p, _ in reversed(left)] + [u]
    if right:
        vertices += [w] + [p for p, _ in right[:-1]]
    elements = [e for _, e in reversed(left)] + [eid] + [e for _, e in right]
    steps = [(e, g.endpoints(e)[0] == v) for v, e in zip(vertices, elements)]
    return make_cycle(g, steps)


def _odd_cycle_directed(d: MixedGraph) -> OrientedCycle | None:
    comp = _strong_components(d)
    out: list[list[tuple[int, ElementId]]] = [[] for _ in range(d.n)]
    inn: list[list[tuple[int, ElementId]]] = [[] for _ in range(d.n)]
    for i, (u, v) in enumerate(d.arcs):
        if comp[u] == comp[v]:
            out[u].append((v, ElementId(ARC, i)))
            inn[v].append((u, ElementId(ARC, i)))
    seen = [False] * d.n
    for root in range(d.n):
        if seen[root]:
            continue
        dist = {root: 0}
        par: dict[int, tuple[int, ElementId]] = {}
        queue = deque([root])
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for w, eid in out[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    par[w] = (u, eid)
                    queue.append(w)
        for u in order:
            seen[u] = True
        for u in order:
            for w, eid in out[u]:
                if (dist[u] + 1 - dist[w]) % 2:
                    return _odd_from_bad_arc(d, root, u, w, eid, par, inn)
    return None


def _odd_from_bad_arc(d, root, u, w, eid, par, inn) -> OrientedCycle:
    def tree_path(x):
        steps = []
        while x != root:
            p, e = par[x]
            steps.append((p, e, True))
            x = p
        return list(reversed(steps))

    # shortest path w -> root inside the component, by reverse BFS from root
    back: dict[int, tuple[int, ElementId]] = {}
    queue = deque([root])
    reached = {root}
    while queue:
        x = queue.popleft()
        for p, e in inn[x]:
            if p not in reached:
                reached.add(p)
                back[p] = (x, e)
                queue.append(p)
    ret = []
    x = w
    while x != root:
        nxt, e = back[x]
        ret.append((x, e, True))
        x = nxt
    walk_a = tree_path(u) + [(u, eid, True)] + ret
    walk_b = tree_path(w) + ret
    walk = walk_a if len(walk_a) % 2 else walk_b
    return _walk_to_odd_cycle(d, walk)


def _blocks(g: MixedGraph) -> list[tuple[set[int], int]]:
    """Biconnected components as (vertex set, edge count); edge-based Tarjan."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    estack: list[ElementId] = []
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = timer
        timer += 1
        work = [(s, None, 0)]
        while work:
            v, via, i = work[-1]
            inc = g.incident(v)
            if i < len(inc):
                work[-1] = (v, via, i + 1)
                eid = inc[i]
                if eid == via:
                    continue
                a, b = g.endpoints(eid)
                w = b if a == v else a
                if disc[w] == -1:
                    estack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    work.append((w, eid, 0))
                elif disc[w] < disc[v]:
                    estack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        verts: set[int] = set()
                        count = 0
                        while True:
                            e = estack.pop()
                            verts.update(g.endpoints(e))
                            count += 1
                            if e == via:
                                break
                        blocks.append((verts, count))
    return blocks


def has_even_cycle_undirected(g: MixedGraph) -> bool:
    """False iff every block is a single edge or an odd cycle."""
    if not g.is_undirected():
        raise NotUndirected("has_even_cycle_undirected needs an undirected graph")
    for verts, count in _blocks(g):
        if count == 1:
            continue
        if count == len(verts) and count % 2 == 1:
            continue
        return True
    return False


def find_even_dicycle_bruteforce(d: MixedGraph, max_vertices: int = EVEN_DICYCLE_MAX_VERTICES,
                                 node_limit: int | None = None) -> OrientedCycle | None:
    """Exhaustive search for an even directed cycle.

    Cycles are enumerated once each, rooted at their minimum vertex.
    """
    if not d.is_directed():
        raise NotDirected("even dicycle search needs a digraph")
    if d.n > max_vertices:
        raise TooLarge(f"{d.n} vertices exceed bound {max_vertices}")
    limit = DEFAULT_NODE_LIMIT if node_limit is None else node_limit
    out: list[list[tuple[int, ElementId]]] = [[] for _ in range(d.n)]
    for i, (u, v) in enumerate(d.arcs):
        out[u].append((v, ElementId(ARC, i)))
    nodes = 0
    for root in range(d.n):
        on = [False] * d.n
        on[root] = True
        path: list[ElementId] = []
        stack = [(root, 0)]
        while stack:
            x, i = stack[-1]
            nodes += 1
            if nodes > limit:
                raise TooLarge(f"even dicycle search exceeded {limit} nodes", nodes=nodes)
            if i >= len(out[x]):
                stack.pop()
                on[x] = False
                if path:
                    path.pop()
                continue
            stack[-1] = (x, i + 1)
            y, eid = out[x][i]
            if y == root:
                if len(path) % 2 == 1:
                    return make_cycle(d, [(e, True) for e in path + [eid]])
            elif y > root and not on[y]:
                on[y] = True
                path.append(eid)
                stack.append((y, 0))
        on[root] = False
    return None
