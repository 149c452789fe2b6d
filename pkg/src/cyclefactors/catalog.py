"""Problem kinds: how to solve, verify, print and read each kind of solution.

The harness and the CLI work on kinds by name so that every reduction can
be driven uniformly.  Graph kinds named after a parity constraint (``any``,
``all-odd`` ...) take a bare :class:`MixedGraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import certify, io, oracles, solvers
from .errors import InstanceSyntaxError
from .graph import MixedGraph, ParityConstraint
from .problems import (
    ColoringInstance,
    EvenCycleInstance,
    HamPathInstance,
    PrcfInstance,
    SmcfInstance,
    ThreeDMInstance,
    VdpInstance,
)


@dataclass(frozen=True)
class ProblemKind:
    name: str
    instance_type: type
    solve: Callable[[Any, int | None], Any]
    verify: Callable[[Any, Any], list]
    dump: Callable[[Any], str]
    load: Callable[[str, Any], Any]


def _factor_kind(name: str, constraint: ParityConstraint) -> ProblemKind:
    def solve(g, node_limit=None):
        return solvers.solve_parity(g, constraint, node_limit).factor

    return ProblemKind(
        name, MixedGraph, solve,
        lambda g, f: certify.verify_factor(g, f, constraint),
        io.serialize_factor,
        lambda text, g: io.parse_factor(text, g),
    )


def _single_cycle(text, inst):
    f = io.parse_factor(text, inst.h)
    if len(f.cycles) != 1:
        raise InstanceSyntaxError(f"expected one cycle, got {len(f.cycles)}")
    return f.cycles[0]


KINDS: dict[str, ProblemKind] = {}


def _register(kind: ProblemKind):
    KINDS[kind.name] = kind


for _c in ParityConstraint:
    _register(_factor_kind(_c.value, _c))
_register(_factor_kind("digraph", ParityConstraint.ANY))
_register(_factor_kind("mcf", ParityConstraint.ANY))

_register(ProblemKind(
    "ham", HamPathInstance,
    lambda x, lim=None: oracles.hamiltonian_path(x.h, x.s, x.t),
    lambda x, p: certify.verify_hampath(x.h, x.s, x.t, p),
    lambda p: io.serialize_paths([p]),
    lambda text, x: (io.parse_paths(text) or [[]])[0],
))
_register(ProblemKind(
    "col3", ColoringInstance,
    lambda x, lim=None: oracles.three_edge_coloring(x.h),
    lambda x, c: certify.verify_coloring(x.h, c),
    io.serialize_coloring,
    lambda text, x: io.parse_coloring(text),
))
_register(ProblemKind(
    "vdp", VdpInstance,
    lambda x, lim=None: oracles.two_disjoint_paths(x.h, x.s1, x.t1, x.s2, x.t2),
    lambda x, ps: certify.verify_vdp(x.h, x.terminals, ps),
    io.serialize_paths,
    lambda text, x: io.parse_paths(text),
))
_register(ProblemKind(
    "evencyc", EvenCycleInstance,
    lambda x, lim=None: solvers.find_even_dicycle_bruteforce(x.h, node_limit=lim),
    lambda x, c: certify.verify_even_dicycle(x.h, c),
    lambda c: io.serialize_cycle(c) + "\n",
    _single_cycle,
))
_register(ProblemKind(
    "3dm", ThreeDMInstance,
    lambda x, lim=None: oracles.perfect_3dm(x),
    lambda x, m: certify.verify_3dm(x.n, x.tuples, m),
    io.serialize_tuples,
    lambda text, x: io.parse_tuples(text),
))
_register(ProblemKind(
    "prcf", PrcfInstance,
    lambda x, lim=None: solvers.solve_prcf(x.h, x.pairs, lim).factor,
    lambda x, f: certify.verify_p_respecting(x.h, x.pairs, f),
    io.serialize_factor,
    lambda text, x: io.parse_factor(text, x.h),
))
_register(ProblemKind(
    "smcf", SmcfInstance,
    lambda x, lim=None: solvers.solve_smcf(x.h, x.terminals, lim).factor,
    lambda x, f: certify.verify_factor(x.h, f, ParityConstraint.ANY, x.terminals),
    io.serialize_factor,
    lambda text, x: io.parse_factor(text, x.h),
))


def get(name: str) -> ProblemKind:
    return KINDS[name]


def kind_of(instance) -> str:
    """Name of the natural kind for a parsed instance."""
    for kind in ("ham", "col3", "vdp", "evencyc", "3dm", "prcf", "smcf"):
        if isinstance(instance, KINDS[kind].instance_type):
            return kind
    return "any"
