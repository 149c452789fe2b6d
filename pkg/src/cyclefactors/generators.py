"""Seeded random instance generators.

Every generator takes an explicit ``seed`` and draws only from its own
:class:`random.Random`, so equal arguments give equal instances.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .errors import InfeasibleParameters
from .graph import EDGE, ElementId, MixedGraph, directed
from .problems import PrcfInstance, SmcfInstance, ThreeDMInstance

MAX_PAIRING_TRIES = 10_000


def rng_for(seed, *salt) -> random.Random:
    """Independent stream for ``(seed, salt...)``; string seeding is hash-stable."""
    return random.Random(":".join(str(x) for x in (seed,) + salt))


def _check_prob(p, name):
    if not 0.0 <= p <= 1.0:
        raise InfeasibleParameters(f"{name} = {p} is not a probability")


def random_digraph(n: int, arc_prob: float, seed) -> MixedGraph:
    """Loop-free digraph, each ordered pair an arc independently."""
    _check_prob(arc_prob, "arc_prob")
    rnd = rng_for(seed)
    return directed(n, [(u, v) for u, v in permutations(range(n), 2) if rnd.random() < arc_prob])


def random_graph(n: int, edge_prob: float, seed) -> MixedGraph:
    """Simple undirected G(n, p)."""
    _check_prob(edge_prob, "edge_prob")
    rnd = rng_for(seed)
    return MixedGraph(n, [(u, v) for u, v in combinations(range(n), 2) if rnd.random() < edge_prob])


def random_mixed(n: int, e_prob: float, a_prob: float, seed) -> MixedGraph:
    _check_prob(e_prob, "e_prob")
    _check_prob(a_prob, "a_prob")
    rnd = rng_for(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rnd.random() < e_prob]
    arcs = [(u, v) for u, v in permutations(range(n), 2) if rnd.random() < a_prob]
    return MixedGraph(n, edges, arcs)


def _pairing(n: int, degree: int, rnd: random.Random) -> list[tuple[int, int]]:
    """Configuration model: shuffle stubs, pair neighbours, reject loops."""
    stubs = [v for v in range(n) for _ in range(degree)]
    for _ in range(MAX_PAIRING_TRIES):
        rnd.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if all(u != v for u, v in pairs):
            return [(min(u, v), max(u, v)) for u, v in pairs]
    raise InfeasibleParameters(f"no loop-free pairing found for n={n}, degree={degree}")


def random_cubic(n: int, seed) -> MixedGraph:
    """Loop-free cubic multigraph (parallel edges possible)."""
    if n < 4 or n % 2:
        raise InfeasibleParameters(f"cubic graphs need even n >= 4, got {n}")
    return MixedGraph(n, _pairing(n, 3, rng_for(seed)))


def random_regular(n: int, degree: int, seed) -> MixedGraph:
    """Loop-free ``degree``-regular multigraph for even ``degree``."""
    if degree < 2 or degree % 2:
        raise InfeasibleParameters(f"degree must be even and >= 2, got {degree}")
    if n < 2:
        raise InfeasibleParameters(f"need at least two vertices, got {n}")
    return MixedGraph(n, _pairing(n, degree, rng_for(seed)))


def random_3dm(n: int, tuple_count: int, seed) -> ThreeDMInstance:
    """``tuple_count`` distinct random tuples over ``[n]^3``."""
    if n < 1 or tuple_count < 0 or tuple_count > n ** 3:
        raise InfeasibleParameters(f"cannot draw {tuple_count} distinct tuples for n = {n}")
    rnd = rng_for(seed)
    tuples = rnd.sample(list(product(range(n), repeat=3)), tuple_count)
    return ThreeDMInstance(n, tuple(tuples))


def random_multigraph(n: int, m: int, seed) -> MixedGraph:
    """``m`` edges with uniformly random distinct endpoints; repeats kept."""
    if m and n < 2:
        raise InfeasibleParameters("edges need two vertices")
    rnd = rng_for(seed)
    return MixedGraph(n, [tuple(sorted(rnd.sample(range(n), 2))) for _ in range(m)])


def random_prcf(n: int, m: int, pair_prob: float, seed) -> PrcfInstance:
    _check_prob(pair_prob, "pair_prob")
    h = random_multigraph(n, m, (seed, "graph"))
    rnd = rng_for(seed, "pairs")
    pairs = [(ElementId(EDGE, i), ElementId(EDGE, j))
             for i, j in combinations(range(m), 2) if rnd.random() < pair_prob]
    return PrcfInstance(h, tuple(pairs))


def random_smcf(n: int, e_prob: float, a_prob: float, z_prob: float, seed) -> SmcfInstance:
    _check_prob(z_prob, "z_prob")
    h = random_mixed(n, e_prob, a_prob, (seed, "graph"))
    rnd = rng_for(seed, "terminals")
    return SmcfInstance(h, tuple(v for v in range(n) if rnd.random() < z_prob))


def all_digraphs(n: int):
    """Every loop-free digraph on ``n`` labelled vertices, by arc-subset bitmask."""
    pairs = list(permutations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield directed(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graphs(n: int):
    """Every simple undirected graph on ``n`` labelled vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield MixedGraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
