"""Compare the compiled and pure-Python kernels on a few fixed workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run through every available backend; results are
checked equal before timings are reported.
"""

import argparse
import timeit

from cyclefactors import kernels
from cyclefactors.generators import random_digraph, random_graph
from cyclefactors.named import complete_graph


def _arrays(g):
    tails = [u for u, _ in g.edges] + [u for u, _ in g.arcs]
    heads = [v for _, v in g.edges] + [v for _, v in g.arcs]
    return g.n, tails, heads, [False] * len(g.edges) + [True] * len(g.arcs)


def _search(g, constraint, mode):
    n, tails, heads, is_arc = _arrays(g)
    return lambda mod: mod.factor_search(n, tails, heads, is_arc, [True] * n, constraint, mode, 10**9)


def _blossom(g):
    adj = [sorted({w for e in g.incident(v) for w in g.endpoints(e) if w != v}) for v in range(g.n)]
    return lambda mod: list(mod.blossom_matching(g.n, adj))


WORKLOADS = [
    ("enumerate 2-factors of K8", _search(complete_graph(8), kernels.ANY, kernels.ALL)),
    ("all-even on K9 (exhaustive No)", _search(complete_graph(9), kernels.ALL_EVEN, kernels.FIRST)),
    ("signature set, dense digraph n=9", _search(random_digraph(9, 0.7, 1), kernels.ANY, kernels.SIGNATURES)),
    ("blossom, G(2000, 0.004)", _blossom(random_graph(2000, 0.004, 2))),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the pure-Python backend is available")
    names = list(backends)
    print(f"{'workload':36s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for title, job in WORKLOADS:
        results = {n: job(backends[n]) for n in names}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {title!r}")
        best = {n: min(timeit.repeat(lambda m=backends[n]: job(m), number=1, repeat=args.repeat))
                for n in names}
        row = f"{title:36s}" + "".join(f"{best[n] * 1000:10.1f}ms" for n in names)
        if len(names) > 1:
            row += f"{best['python'] / best['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
