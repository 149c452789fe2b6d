"""Definitional verifiers for every solution object.

Nothing here calls a solver or a reduction; each check walks the raw
definition so that a broken solver or mapper cannot certify itself.  All
checks accumulate violations instead of failing fast.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import ARC, EDGE, CycleFactor, ElementId, MixedGraph, ParityConstraint, ParitySignature


class ViolationKind(enum.Enum):
    NOT_COVERING = "NotCovering"
    NOT_DISJOINT = "NotDisjoint"
    BAD_CYCLE = "BadCycle"
    ORIENTATION_INCONSISTENT = "OrientationInconsistent"
    PARITY_VIOLATED = "ParityViolated"
    PAIR_VIOLATED = "PairViolated"
    TERMINAL_UNCOVERED = "TerminalUncovered"
    NOT_A_PATH = "NotAPath"
    NOT_A_COLORING = "NotAColoring"
    NOT_A_MATCHING = "NotAMatching"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: tuple = ()

    def __str__(self):
        return f"{self.kind.value}: " + " ".join(str(x) for x in self.detail)


V = ViolationKind


def _cycle_violations(g: MixedGraph, cyc) -> tuple[list[Violation], list[int]]:
    """Check one cycle; returns its violations and the vertices it visits."""
    out: list[Violation] = []
    steps = list(zip(cyc.elements, cyc.forward))
    if len(cyc.forward) != len(cyc.elements):
        return [Violation(V.BAD_CYCLE, ("flag count mismatch",))], []
    if len(steps) < 2:
        return [Violation(V.BAD_CYCLE, ("length", len(steps)))], []
    ends = []
    for eid, fwd in steps:
        pool = g.edges if eid.kind == EDGE else g.arcs
        if not 0 <= eid.index < len(pool):
            return [Violation(V.BAD_CYCLE, ("missing", eid))], []
        u, v = pool[eid.index]
        if eid.kind == ARC and not fwd:
            out.append(Violation(V.ORIENTATION_INCONSISTENT, (eid,)))
        ends.append((u, v) if fwd else (v, u))
    for i, (a, b) in enumerate(ends):
        nxt = ends[(i + 1) % len(ends)][0]
        if b != nxt:
            out.append(Violation(V.BAD_CYCLE, ("gap", steps[i][0], steps[(i + 1) % len(steps)][0])))
    visited = [a for a, _ in ends]
    if len(set(visited)) != len(visited):
        out.append(Violation(V.BAD_CYCLE, ("repeated vertex",)))
    if len(set(cyc.elements)) != len(cyc.elements):
        out.append(Violation(V.BAD_CYCLE, ("repeated element",)))
    if tuple(cyc.vertices) != tuple(visited):
        out.append(Violation(V.BAD_CYCLE, ("vertex list disagrees",)))
    return out, visited


def verify_factor(
    g: MixedGraph,
    f: CycleFactor,
    constraint: ParityConstraint = ParityConstraint.ANY,
    terminals: Iterable[int] | None = None,
) -> list[Violation]:
    """Violations of ``f`` as a cycle-factor of ``g``.

    With ``terminals=None`` every vertex must be covered; otherwise only the
    terminals must be (each then meets exactly two chosen elements, since
    cycles are vertex-disjoint).
    """
    out: list[Violation] = []
    seen_v: dict[int, int] = {}
    seen_e: set[ElementId] = set()
    even = odd = 0
    for ci, cyc in enumerate(f.cycles):
        vs, visited = _cycle_violations(g, cyc)
        out.extend(vs)
        for e in cyc.elements:
            if e in seen_e:
                out.append(Violation(V.NOT_DISJOINT, (e,)))
            seen_e.add(e)
        for v in set(visited):
            if v in seen_v:
                out.append(Violation(V.NOT_DISJOINT, (v,)))
            seen_v[v] = ci
        if len(cyc.elements) % 2:
            odd += 1
        else:
            even += 1
    if terminals is None:
        missing = [v for v in range(g.n) if v not in seen_v]
        if missing:
            out.append(Violation(V.NOT_COVERING, tuple(missing)))
    else:
        missing = [z for z in sorted(set(terminals)) if z not in seen_v]
        if missing:
            out.append(Violation(V.TERMINAL_UNCOVERED, tuple(missing)))
    if not constraint.satisfied_by(ParitySignature(even, odd)):
        out.append(Violation(V.PARITY_VIOLATED, (constraint.value, even, odd)))
    return out


def verify_p_respecting(h: MixedGraph, pairs: Sequence[tuple[ElementId, ElementId]],
                        f: CycleFactor) -> list[Violation]:
    out = verify_factor(h, f)
    used = f.element_set()
    for p, q in pairs:
        if p in used and q in used:
            out.append(Violation(V.PAIR_VIOLATED, (p, q)))
    return out


def _path_violations(h: MixedGraph, s: int, t: int, path: Sequence[int]) -> list[Violation]:
    out = []
    if not path:
        return [Violation(V.NOT_A_PATH, ("empty",))]
    if path[0] != s or path[-1] != t:
        out.append(Violation(V.NOT_A_PATH, ("endpoints", path[0], path[-1])))
    if len(set(path)) != len(path):
        out.append(Violation(V.NOT_A_PATH, ("repeated vertex",)))
    arcs = set(h.arcs)
    for a, b in zip(path, path[1:]):
        if (a, b) not in arcs:
            out.append(Violation(V.NOT_A_PATH, ("no arc", a, b)))
    for v in path:
        if not 0 <= v < h.n:
            out.append(Violation(V.NOT_A_PATH, ("no vertex", v)))
    return out


def verify_hampath(h: MixedGraph, s: int, t: int, path: Sequence[int]) -> list[Violation]:
    """Directed Hamiltonian (s,t)-path given as a vertex sequence."""
    out = _path_violations(h, s, t, path)
    missing = sorted(set(range(h.n)) - set(path))
    if missing:
        out.append(Violation(V.NOT_A_PATH, ("uncovered",) + tuple(missing)))
    return out


def verify_vdp(h: MixedGraph, terminals: Sequence[tuple[int, int]],
               paths: Sequence[Sequence[int]]) -> list[Violation]:
    """Vertex-disjoint directed (s_i, t_i)-paths."""
    if len(paths) != len(terminals):
        return [Violation(V.NOT_A_PATH, ("count", len(paths)))]
    out = []
    for (s, t), path in zip(terminals, paths):
        out.extend(_path_violations(h, s, t, path))
    seen: set[int] = set()
    for path in paths:
        for v in path:
            if v in seen:
                out.append(Violation(V.NOT_DISJOINT, (v,)))
        seen.update(path)
    return out


def verify_coloring(h: MixedGraph, coloring: Mapping[ElementId, int], colors: int = 3) -> list[Violation]:
    """Proper edge colouring of ``h`` with colours ``0..colors-1``."""
    out = []
    for i in range(len(h.edges)):
        e = ElementId(EDGE, i)
        c = coloring.get(e)
        if c is None or not 0 <= c < colors:
            out.append(Violation(V.NOT_A_COLORING, (e, c)))
    for v in range(h.n):
        seen: dict[int, ElementId] = {}
        for e in h.incident(v):
            c = coloring.get(e)
            if c is None:
                continue
            if c in seen:
                out.append(Violation(V.NOT_A_COLORING, (v, seen[c], e)))
            seen[c] = e
    return out


def verify_3dm(n: int, tuples: Sequence[tuple[int, int, int]],
               matching: Sequence[tuple[int, int, int]]) -> list[Violation]:
    """Every element of X, Y, Z lies in exactly one chosen tuple of ``tuples``."""
    out = []
    allowed = set(map(tuple, tuples))
    counts = [[0] * n for _ in range(3)]
    for t in matching:
        if tuple(t) not in allowed:
            out.append(Violation(V.NOT_A_MATCHING, ("not a tuple",) + tuple(t)))
            continue
        for side, x in enumerate(t):
            counts[side][x] += 1
    for side, name in enumerate("xyz"):
        for x in range(n):
            if counts[side][x] != 1:
                out.append(Violation(V.NOT_A_MATCHING, (f"{name}{x}", counts[side][x])))
    return out


def verify_even_dicycle(h: MixedGraph, cycle) -> list[Violation]:
    """A single even directed cycle of ``h``."""
    return verify_factor(h, CycleFactor((cycle,)), ParityConstraint.EXISTS_EVEN, terminals=())
