"""Parity-constrained cycle-factors on undirected, directed and mixed multigraphs."""

from .certify import Violation, ViolationKind, verify_factor
from .errors import CycleFactorError
from .graph import (
    ARC,
    EDGE,
    CycleFactor,
    ElementId,
    MixedGraph,
    OrientedCycle,
    ParityConstraint,
    ParitySignature,
    build_graph,
    cycle_parity,
    signature,
)
from .io import parse_instance, serialize_instance
from .kernels import BACKEND
from .solvers import (
    SolveResult,
    directed_cycle_factor,
    enumerate_factors,
    find_odd_cycle,
    signature_set,
    solve_parity,
    solve_prcf,
    solve_smcf,
    undirected_two_factor,
)

__version__ = "0.1.0"
