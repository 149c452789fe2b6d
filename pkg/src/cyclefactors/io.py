"""Line-oriented text formats for instances and solutions.

Instance files::

    [ham s t | vdp s1 t1 s2 t2 | col3 | evencyc | prcf | smcf]
    g {mixed|directed|undirected} n
    e u v          # edge e<k>, k in declaration order
    a u v          # arc a<k>
    z v            # terminal
    p e3 e7        # forbidden pair
    label v 4 x1@a0
    label e a2 ts
    label g ham-allodd

3DM files are ``3dm n`` followed by ``t x y z`` lines.  Blank lines and lines
starting with ``#`` are ignored.  :func:`serialize_instance` emits the
canonical form, which :func:`parse_instance` reads back to an equal value.

Solutions are ``cycle`` blocks (``cycle e0+ e1- a3+``), ``path`` lines,
``color <eid> <c>`` lines or ``t x y z`` lines depending on the problem.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import DanglingReference, InstanceSyntaxError, SelfLoop
from .graph import EDGE, CycleFactor, ElementId, MixedGraph, OrientedCycle
from .problems import (
    ColoringInstance,
    EvenCycleInstance,
    HamPathInstance,
    PrcfInstance,
    SmcfInstance,
    ThreeDMInstance,
    VdpInstance,
)

_HEADERS = {"ham": 2, "vdp": 4, "col3": 0, "evencyc": 0, "prcf": 0, "smcf": 0}
_KINDS = ("mixed", "directed", "undirected")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(tokens, count, lineno, what):
    if len(tokens) != count:
        raise InstanceSyntaxError(f"{what} expects {count} integers, got {len(tokens)}", lineno)
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise InstanceSyntaxError(f"{what}: non-integer argument in {tokens}", lineno) from None
    if any(v < 0 for v in vals):
        raise InstanceSyntaxError(f"{what}: negative integer", lineno)
    return vals


def _eid(token, lineno):
    try:
        return ElementId.parse(token)
    except InstanceSyntaxError:
        raise InstanceSyntaxError(f"bad element id {token!r}", lineno) from None


def parse_instance(text: str):
    """Parse instance text into a graph or a source-problem instance."""
    lines = list(_lines(text))
    if not lines:
        raise InstanceSyntaxError("empty instance", 1)
    header = None
    pos = 0
    first_no, first = lines[0]
    word = first.split()[0]
    if word == "3dm":
        return _parse_3dm(lines)
    if word in _HEADERS:
        toks = first.split()
        header = (word, _ints(toks[1:], _HEADERS[word], first_no, word))
        pos = 1
    if pos >= len(lines):
        raise InstanceSyntaxError("missing graph header", first_no)
    g_no, g_line = lines[pos]
    toks = g_line.split()
    if toks[0] != "g" or len(toks) != 3 or toks[1] not in _KINDS:
        raise InstanceSyntaxError("expected 'g {mixed|directed|undirected} <n>'", g_no)
    kind = toks[1]
    (n,) = _ints(toks[2:], 1, g_no, "g")
    edges, arcs, terms, pairs = [], [], [], []
    vlabels: dict[int, str] = {}
    elabels: dict[ElementId, tuple[str, int]] = {}
    glabel = None
    for lineno, line in lines[pos + 1:]:
        toks = line.split()
        op = toks[0]
        if op in ("e", "a"):
            u, v = _ints(toks[1:], 2, lineno, op)
            if u >= n or v >= n:
                raise InstanceSyntaxError(f"vertex out of range (n = {n})", lineno)
            if u == v:
                raise SelfLoop(f"line {lineno}: loop at vertex {u}")
            if op == "e" and kind == "directed":
                raise InstanceSyntaxError("edge in a directed graph", lineno)
            if op == "a" and kind == "undirected":
                raise InstanceSyntaxError("arc in an undirected graph", lineno)
            (edges if op == "e" else arcs).append((u, v))
        elif op == "z":
            (v,) = _ints(toks[1:], 1, lineno, "z")
            if v >= n:
                raise DanglingReference(f"line {lineno}: terminal {v} is not a vertex")
            terms.append(v)
        elif op == "p":
            if len(toks) != 3:
                raise InstanceSyntaxError("p expects two element ids", lineno)
            pairs.append((_eid(toks[1], lineno), _eid(toks[2], lineno), lineno))
        elif op == "label":
            parts = line.split(None, 3)
            if len(parts) < 3 or parts[1] not in ("v", "e", "g"):
                raise InstanceSyntaxError("expected 'label {v|e|g} ...'", lineno)
            if parts[1] == "g":
                glabel = line.split(None, 2)[2]
            elif len(parts) != 4:
                raise InstanceSyntaxError("label needs a target and a string", lineno)
            elif parts[1] == "v":
                (v,) = _ints([parts[2]], 1, lineno, "label v")
                if v >= n:
                    raise DanglingReference(f"line {lineno}: label on missing vertex {v}")
                vlabels[v] = parts[3]
            else:
                elabels[_eid(parts[2], lineno)] = (parts[3], lineno)
        else:
            raise InstanceSyntaxError(f"unknown directive {op!r}", lineno)
    for eid, (_, lineno) in elabels.items():
        size = len(edges) if eid.kind == EDGE else len(arcs)
        if eid.index >= size:
            raise DanglingReference(f"line {lineno}: label on missing element {eid}")
    for p, q, lineno in pairs:
        for e in (p, q):
            if e.kind != EDGE or e.index >= len(edges):
                raise DanglingReference(f"line {lineno}: pair names missing edge {e}")
    g = MixedGraph(n, edges, arcs, vlabels, {k: s for k, (s, _) in elabels.items()}, glabel)
    pair_list = [(p, q) for p, q, _ in pairs]
    if header is None:
        if pairs:
            return PrcfInstance(g, tuple(pair_list))
        if terms:
            return SmcfInstance(g, tuple(terms))
        return g
    name, args = header
    if name == "prcf":
        return PrcfInstance(g, tuple(pair_list))
    if name == "smcf":
        return SmcfInstance(g, tuple(terms))
    if pairs or terms:
        raise InstanceSyntaxError(f"'{name}' instances take no z/p lines", first_no)
    if name == "ham":
        return HamPathInstance(g, *args)
    if name == "vdp":
        return VdpInstance(g, *args)
    if name == "col3":
        return ColoringInstance(g)
    return EvenCycleInstance(g)


def _parse_3dm(lines):
    lineno, first = lines[0]
    toks = first.split()
    (n,) = _ints(toks[1:], 1, lineno, "3dm")
    tuples = []
    for lineno, line in lines[1:]:
        toks = line.split()
        if toks[0] != "t":
            raise InstanceSyntaxError(f"unknown directive {toks[0]!r}", lineno)
        x, y, z = _ints(toks[1:], 3, lineno, "t")
        if max(x, y, z) >= n:
            raise DanglingReference(f"line {lineno}: tuple entry out of range (n = {n})")
        tuples.append((x, y, z))
    return ThreeDMInstance(n, tuple(tuples))


def _graph_lines(g: MixedGraph, kind: str | None = None) -> list[str]:
    if kind is None:
        if g.edges and not g.arcs:
            kind = "undirected"
        elif g.arcs and not g.edges:
            kind = "directed"
        else:
            kind = "mixed"
    out = [f"g {kind} {g.n}"]
    out += [f"e {u} {v}" for u, v in g.edges]
    out += [f"a {u} {v}" for u, v in g.arcs]
    return out


def _label_lines(g: MixedGraph) -> list[str]:
    out = [f"label v {v} {s}" for v, s in g.vertex_labels.items()]
    out += [f"label e {eid} {s}" for eid, s in g.element_labels.items()]
    if g.label is not None:
        out.append(f"label g {g.label}")
    return out


def serialize_instance(x) -> str:
    """Canonical text of a graph or source-problem instance."""
    if isinstance(x, ThreeDMInstance):
        return "".join(line + "\n" for line in
                       [f"3dm {x.n}"] + [f"t {a} {b} {c}" for a, b, c in x.tuples])
    if isinstance(x, MixedGraph):
        lines = _graph_lines(x) + _label_lines(x)
    else:
        g = x.h
        if isinstance(x, HamPathInstance):
            head = f"ham {x.s} {x.t}"
        elif isinstance(x, VdpInstance):
            head = f"vdp {x.s1} {x.t1} {x.s2} {x.t2}"
        elif isinstance(x, ColoringInstance):
            head = "col3"
        elif isinstance(x, EvenCycleInstance):
            head = "evencyc"
        elif isinstance(x, PrcfInstance):
            head = "prcf"
        elif isinstance(x, SmcfInstance):
            head = "smcf"
        else:
            raise TypeError(f"cannot serialize {type(x).__name__}")
        lines = [head] + _graph_lines(g)
        if isinstance(x, SmcfInstance):
            lines += [f"z {v}" for v in x.terminals]
        if isinstance(x, PrcfInstance):
            lines += [f"p {p} {q}" for p, q in x.pairs]
        lines += _label_lines(g)
    return "".join(line + "\n" for line in lines)


# -- solutions ---------------------------------------------------------------


def serialize_cycle(c: OrientedCycle) -> str:
    return "cycle " + " ".join(f"{e}{'+' if f else '-'}" for e, f in zip(c.elements, c.forward))


def serialize_factor(f: CycleFactor) -> str:
    return "".join(serialize_cycle(c) + "\n" for c in f.cycles)


def parse_factor(text: str, g: MixedGraph) -> CycleFactor:
    """Read ``cycle`` blocks against ``g``.

    Vertices are derived from element endpoints without further checks, so a
    malformed cycle reaches the verifier intact.  Missing elements raise
    :class:`DanglingReference`.
    """
    blocks: list[list[tuple[ElementId, bool]]] = []
    for lineno, line in _lines(text):
        toks = line.split()
        if toks[0] == "cycle":
            blocks.append([])
            toks = toks[1:]
        elif not blocks:
            raise InstanceSyntaxError("expected 'cycle'", lineno)
        for tok in toks:
            if len(tok) < 3 or tok[-1] not in "+-":
                raise InstanceSyntaxError(f"bad step {tok!r}", lineno)
            eid = _eid(tok[:-1], lineno)
            if not g.has_element(eid):
                raise DanglingReference(f"line {lineno}: {eid} does not exist")
            blocks[-1].append((eid, tok[-1] == "+"))
    cycles = []
    for steps in blocks:
        verts = tuple(g.step(e, f)[0] for e, f in steps)
        cycles.append(OrientedCycle(tuple(e for e, _ in steps), tuple(f for _, f in steps), verts))
    return CycleFactor(tuple(cycles))


def serialize_paths(paths: Sequence[Sequence[int]]) -> str:
    return "".join("path " + " ".join(map(str, p)) + "\n" for p in paths)


def parse_paths(text: str) -> list[list[int]]:
    out = []
    for lineno, line in _lines(text):
        toks = line.split()
        if toks[0] != "path":
            raise InstanceSyntaxError("expected 'path'", lineno)
        out.append(_ints(toks[1:], len(toks) - 1, lineno, "path"))
    return out


def serialize_coloring(coloring: Mapping[ElementId, int]) -> str:
    return "".join(f"color {e} {c}\n" for e, c in sorted(coloring.items()))


def parse_coloring(text: str) -> dict[ElementId, int]:
    out = {}
    for lineno, line in _lines(text):
        toks = line.split()
        if toks[0] != "color" or len(toks) != 3:
            raise InstanceSyntaxError("expected 'color <eid> <c>'", lineno)
        out[_eid(toks[1], lineno)] = _ints(toks[2:], 1, lineno, "color")[0]
    return out


def serialize_tuples(tuples: Iterable[tuple[int, int, int]]) -> str:
    return "".join(f"t {x} {y} {z}\n" for x, y, z in tuples)


def parse_tuples(text: str) -> list[tuple[int, int, int]]:
    out = []
    for lineno, line in _lines(text):
        toks = line.split()
        if toks[0] != "t":
            raise InstanceSyntaxError("expected 't x y z'", lineno)
        out.append(tuple(_ints(toks[1:], 3, lineno, "t")))
    return out
