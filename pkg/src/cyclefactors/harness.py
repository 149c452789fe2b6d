"""Reduction equivalence harness.

For each generated source instance: reduce, check the size formula and
provenance, solve both sides exhaustively, compare Yes/No, and push every
witness through the mappers in both directions, verifying each result with
the definitional checkers.  The report depends only on the corpus spec,
never on timing or worker scheduling.
"""

from __future__ import annotations

import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import catalog, generators, reductions, solvers
from .errors import CycleFactorError, InfeasibleParameters, TooLarge
from .generators import rng_for
from .problems import ColoringInstance, EvenCycleInstance, HamPathInstance, VdpInstance
from .reductions import Reduction

HARNESS_NODE_LIMIT = int(os.environ.get("CYCLEFACTORS_HARNESS_NODE_LIMIT", 10**7))

EXIT_OK, EXIT_MISMATCH = 0, 3


@dataclass(frozen=True)
class CorpusSpec:
    """Which instances to draw.  ``count=None`` means the exhaustive corpus."""

    generator: str
    max_size: int
    count: int | None
    seed: int = 0


# -- generators per source kind ---------------------------------------------------


def _gen_ham(rnd, s, seed):
    n = rnd.randint(2, max(2, s))
    h = generators.random_digraph(n, rnd.choice((0.3, 0.5, 0.7)), seed)
    a, b = rnd.sample(range(n), 2)
    return HamPathInstance(h, a, b)


def _gen_col3(rnd, s, seed):
    sizes = [n for n in range(4, max(4, s) + 1, 2)]
    return ColoringInstance(generators.random_cubic(rnd.choice(sizes), seed))


def _gen_vdp(rnd, s, seed):
    n = rnd.randint(4, max(4, s))
    h = generators.random_digraph(n, rnd.choice((0.25, 0.4, 0.55)), seed)
    return VdpInstance(h, *rnd.sample(range(n), 4))


def _gen_evencyc(rnd, s, seed):
    n = rnd.randint(1, max(1, s))
    return EvenCycleInstance(generators.random_digraph(n, rnd.choice((0.2, 0.35, 0.5)), seed))


def _gen_digraph(rnd, s, seed):
    n = rnd.randint(1, max(1, s))
    return generators.random_digraph(n, rnd.choice((0.3, 0.5, 0.7)), seed)


def _gen_3dm(rnd, s, seed):
    n = rnd.randint(1, max(1, s))
    return generators.random_3dm(n, rnd.randint(1, min(n ** 3, 3 * n)), seed)


def _gen_prcf(rnd, s, seed):
    m = rnd.randint(1, max(1, s))
    n = rnd.randint(2, 4)
    return generators.random_prcf(n, m, rnd.choice((0.2, 0.4)), seed)


def _gen_smcf(rnd, s, seed):
    n = rnd.randint(1, max(1, s))
    return generators.random_smcf(n, rnd.choice((0.3, 0.5)), rnd.choice((0.1, 0.25)),
                                  rnd.choice((0.3, 0.6)), seed)


def _gen_mcf(rnd, s, seed):
    n = rnd.randint(1, max(1, s))
    return generators.random_mixed(n, rnd.choice((0.3, 0.5)), rnd.choice((0.1, 0.25)), seed)


GENERATORS: dict[str, Callable] = {
    "ham": _gen_ham, "col3": _gen_col3, "vdp": _gen_vdp, "evencyc": _gen_evencyc,
    "digraph": _gen_digraph, "3dm": _gen_3dm, "prcf": _gen_prcf, "smcf": _gen_smcf,
    "mcf": _gen_mcf,
}


def _exhaustive_digraphs(max_size):
    for n in range(max_size + 1):
        yield from generators.all_digraphs(n)


EXHAUSTIVE: dict[str, Callable[[int], Iterator]] = {
    "digraph": _exhaustive_digraphs,
    "evencyc": lambda s: (EvenCycleInstance(d) for d in _exhaustive_digraphs(s)),
}


def generate(spec: CorpusSpec, index: int):
    """Instance ``index`` of a random corpus; depends only on (spec, index)."""
    rnd = rng_for(spec.seed, spec.generator, spec.max_size, index)
    return GENERATORS[spec.generator](rnd, spec.max_size, (spec.seed, spec.generator, index))


def corpus(spec: CorpusSpec) -> Iterator[tuple[int, object]]:
    if spec.count is None:
        if spec.generator not in EXHAUSTIVE:
            raise InfeasibleParameters(f"no exhaustive corpus for {spec.generator!r} sources")
        yield from enumerate(EXHAUSTIVE[spec.generator](spec.max_size))
    else:
        for i in range(spec.count):
            yield i, generate(spec, i)


# -- per-instance check -----------------------------------------------------------


@dataclass
class InstanceResult:
    index: int
    source_yes: bool | None = None
    target_yes: bool | None = None
    status: str = "ok"  # ok | MISMATCH | SKIP
    roundtrip: str = "n/a"  # ok | FAIL | n/a
    size: tuple[int, int, int] = (0, 0, 0)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == "MISMATCH" or self.roundtrip == "FAIL"

    def line(self) -> str:
        yn = {True: "yes", False: "no", None: "-"}
        text = (f"{self.index:5d} src={yn[self.source_yes]:3s} tgt={yn[self.target_yes]:3s} "
                f"{self.status:8s} roundtrip={self.roundtrip:4s} size={self.size[0]},{self.size[1]},{self.size[2]}")
        if self.notes:
            text += " # " + "; ".join(self.notes)
        return text


def _verified(kind, inst, sol, what, notes) -> bool:
    problems = kind.verify(inst, sol)
    if problems:
        notes.append(f"{what}: " + ", ".join(map(str, problems[:3])))
        return False
    return True


def check_instance(reduction: Reduction, index: int, instance,
                   node_limit: int = HARNESS_NODE_LIMIT) -> InstanceResult:
    res = InstanceResult(index)
    t0 = time.perf_counter()
    try:
        _check(reduction, instance, node_limit, res)
    except TooLarge as exc:
        res.status = "SKIP"
        res.notes.append(f"too large: {exc}")
    res.elapsed = time.perf_counter() - t0
    return res


def _check(reduction, instance, node_limit, res):
    out = reduction.reduce(instance)
    g = out.graph
    res.size = (g.n, len(g.edges), len(g.arcs))
    if res.size != tuple(reduction.sizes(instance)):
        res.status = "MISMATCH"
        res.notes.append(f"size formula {tuple(reduction.sizes(instance))}")
    if not out.provenance_total():
        res.status = "MISMATCH"
        res.notes.append("provenance incomplete")
    src_kind = catalog.get(reduction.source_kind)
    tgt_kind = catalog.get(reduction.target_kind)
    s_sol = src_kind.solve(instance, node_limit)
    t_sol = tgt_kind.solve(out.target, node_limit)
    res.source_yes = s_sol is not None
    res.target_yes = t_sol is not None
    if res.source_yes != res.target_yes:
        res.status = "MISMATCH"
    if reduction.source_kind == "digraph" and reduction.target_kind == "any":
        if solvers.signature_set(instance, node_limit) != solvers.signature_set(g, node_limit):
            res.status = "MISMATCH"
            res.notes.append("signature sets differ")
    if s_sol is None and t_sol is None:
        return
    ok = True
    try:
        if s_sol is not None:
            ok &= _verified(src_kind, instance, s_sol, "source witness", res.notes)
            fwd = reduction.forward(out, s_sol)
            ok &= _verified(tgt_kind, out.target, fwd, "forward", res.notes)
            back = reduction.backward(out, fwd)
            ok &= _verified(src_kind, instance, back, "forward-back", res.notes)
        if t_sol is not None:
            ok &= _verified(tgt_kind, out.target, t_sol, "target witness", res.notes)
            back = reduction.backward(out, t_sol)
            ok &= _verified(src_kind, instance, back, "backward", res.notes)
    except (CycleFactorError, KeyError, StopIteration) as exc:
        ok = False
        res.notes.append(f"mapper error {type(exc).__name__}: {exc}")
    res.roundtrip = "ok" if ok else "FAIL"


# -- driver -------------------------------------------------------------------------


@dataclass
class EquivReport:
    reduction_id: str
    spec: CorpusSpec
    results: list[InstanceResult]

    @property
    def mismatches(self) -> int:
        return sum(r.status == "MISMATCH" for r in self.results)

    @property
    def roundtrip_failures(self) -> int:
        return sum(r.roundtrip == "FAIL" for r in self.results)

    @property
    def skipped(self) -> int:
        return sum(r.status == "SKIP" for r in self.results)

    @property
    def exit_code(self) -> int:
        return EXIT_MISMATCH if any(r.failed for r in self.results) else EXIT_OK

    def text(self) -> str:
        count = "exhaustive" if self.spec.count is None else str(self.spec.count)
        lines = [f"equivcheck {self.reduction_id} count={count} max-size={self.spec.max_size} "
                 f"seed={self.spec.seed}"]
        lines += [r.line() for r in self.results]
        yes = sum(r.source_yes is True for r in self.results)
        no = sum(r.source_yes is False for r in self.results)
        lines.append(f"instances={len(self.results)} yes={yes} no={no} skipped={self.skipped} "
                     f"mismatches={self.mismatches} roundtrip-failures={self.roundtrip_failures}")
        return "\n".join(lines) + "\n"


def _worker(args):
    reduction_id, spec, index, node_limit = args
    return check_instance(reductions.get(reduction_id), index, generate(spec, index), node_limit)


def equivcheck(reduction: Reduction | str, count: int | None, max_size: int, seed: int = 0,
               jobs: int = 1, node_limit: int = HARNESS_NODE_LIMIT,
               log=None) -> EquivReport:
    """Run the harness.  ``count=None`` selects the exhaustive corpus.

    Per-instance timings and skip warnings go to ``log`` (stderr by default)
    so that the report itself stays reproducible.
    """
    red = reductions.get(reduction) if isinstance(reduction, str) else reduction
    log = sys.stderr if log is None else log
    spec = CorpusSpec(red.source_kind, max_size, count, seed)
    registered = reductions.REGISTRY.get(red.id) is red
    if jobs > 1 and count is not None and registered:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, [(red.id, spec, i, node_limit) for i in range(count)],
                                    chunksize=max(1, count // (4 * jobs))))
    else:
        results = [check_instance(red, i, inst, node_limit) for i, inst in corpus(spec)]
    for r in results:
        if log is not False:
            print(f"[{red.id} #{r.index}] {r.elapsed * 1000:.1f} ms", file=log)
            if r.status == "SKIP":
                print(f"warning: instance {r.index} skipped ({'; '.join(r.notes)})", file=log)
    return EquivReport(red.id, spec, results)
