"""Brute-force ground truth for small graphs.

Simple cycles are enumerated by depth-first search from their smallest
vertex; classification cuts the surface open or solves a small linear system
over Z/2.  Everything here is exponential and meant for n up to about 14.
"""

from __future__ import annotations

import enum
from typing import Iterator

from .errors import NoSuchCycle, NotSimple, TooLarge
from .surface import INF, CycleWalk, EmbeddedGraph, is_simple
from .surgery import cut_along, paste_all_disks

MAX_ORACLE_VERTICES = 64


class CycleClass(enum.Enum):
    NON_SEPARATING = "nonsep"
    NON_CONTRACTIBLE = "noncon"
    NON_NULL_HOMOLOGOUS = "nonhom"

    @classmethod
    def parse(cls, s) -> "CycleClass":
        if isinstance(s, cls):
            return s
        key = str(s).lower().replace("-", "").replace("_", "")
        for c in cls:
            if key in (c.value, c.name.lower().replace("_", "")):
                return c
        raise ValueError(f"unknown cycle class {s!r}")


def enumerate_simple_cycles(g: EmbeddedGraph, max_weight=INF) -> Iterator[CycleWalk]:
    """Every simple directed cycle of weight <= max_weight, once each.

    A cycle is reported starting at its smallest vertex.  Loops and pairs of
    parallel darts count as distinct cycles.
    """
    if g.n > MAX_ORACLE_VERTICES:
        raise TooLarge(f"oracle is limited to {MAX_ORACLE_VERTICES} vertices")
    for s in range(g.n):
        yield from _cycles_from(g, s, max_weight)


def _cycles_from(g, s, max_weight):
    path: list[int] = []
    on_path = {s}
    used_edges: set[int] = set()
    # explicit stack of dart iterators keeps recursion out of deep graphs
    stack = [iter(g.out_darts(s))]
    total = 0
    while stack:
        d = next(stack[-1], None)
        if d is None:
            stack.pop()
            if path:
                last = path.pop()
                total -= g.weight[last]
                used_edges.discard(g.edge_of(last))
                on_path.discard(g.head[last])
            continue
        w = g.weight[d]
        if total + w > max_weight or g.edge_of(d) in used_edges:
            continue
        h = g.head[d]
        if h == s:
            yield CycleWalk(tuple(path) + (d,), True, total + w)
            continue
        if h < s or h in on_path:
            continue
        path.append(d)
        total += w
        used_edges.add(g.edge_of(d))
        on_path.add(h)
        stack.append(iter(g.out_darts(h)))


def enumerate_simple_cycles_bruteforce(g: EmbeddedGraph, max_weight=INF) -> list[tuple]:
    """Second, independent enumerator: grow vertex sequences breadth-first.

    Returns sorted dart tuples; used to cross-check :func:`enumerate_simple_cycles`.
    """
    found = set()
    frontier = [((d,), g.weight[d]) for d in range(g.num_darts) if g.weight[d] <= max_weight]
    while frontier:
        nxt = []
        for darts, w in frontier:
            start = g.origin[darts[0]]
            end = g.head[darts[-1]]
            if end == start:
                if min(g.origin[d] for d in darts) == start:
                    found.add(darts)
                continue
            seen_v = {g.origin[d] for d in darts}
            seen_e = {g.edge_of(d) for d in darts}
            for e in g.out_darts(end):
                h = g.head[e]
                if g.edge_of(e) in seen_e or (h in seen_v and h != start):
                    continue
                w2 = w + g.weight[e]
                if w2 <= max_weight:
                    nxt.append((darts + (e,), w2))
        frontier = nxt
    return sorted(found)


def _require_simple(g, c):
    if not c.closed or not is_simple(g, c):
        raise NotSimple("oracle classifies simple closed cycles only")


def _closed_up(g: EmbeddedGraph) -> EmbeddedGraph:
    # Cycles may run along or touch the boundary; classifying them on the
    # surface with its holes filled is the same as classifying a push-off
    # into the interior, which is what the definitions intend.
    return paste_all_disks(g) if g.boundary else g


def is_separating(g: EmbeddedGraph, c: CycleWalk) -> bool:
    _require_simple(g, c)
    return not cut_along(_closed_up(g), c).graph.connected


_EDGE_INDEX_CACHE: dict = {}


def _edge_index(g: EmbeddedGraph) -> dict:
    key = id(g)
    hit = _EDGE_INDEX_CACHE.get(key)
    if hit is None or hit[0] is not g:
        hit = (g, {e: i for i, e in enumerate(g.edges())})
        _EDGE_INDEX_CACHE.clear()
        _EDGE_INDEX_CACHE[key] = hit
    return hit[1]


def edge_vector(g: EmbeddedGraph, darts) -> int:
    """Z/2 edge incidence vector of a walk as an int bitmask."""
    idx = _edge_index(g)
    v = 0
    for d in darts:
        v ^= 1 << idx[g.edge_of(d)]
    return v


class FaceSpan:
    """Row-reduced Z/2 span of the interior face boundaries."""

    def __init__(self, g: EmbeddedGraph):
        self.basis: dict[int, int] = {}     # pivot bit -> row
        for f in g.interior_faces():
            self.add(edge_vector(g, g.faces[f]))

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self.basis.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> None:
        v = self.reduce(v)
        if v:
            self.basis[v.bit_length() - 1] = v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0


_SPAN_CACHE: dict = {}


def face_span(g: EmbeddedGraph) -> FaceSpan:
    hit = _SPAN_CACHE.get(id(g))
    if hit is None or hit[0] is not g:
        hit = (g, FaceSpan(g))
        _SPAN_CACHE.clear()
        _SPAN_CACHE[id(g)] = hit
    return hit[1]


def is_null_homologous(g: EmbeddedGraph, c: CycleWalk) -> bool:
    """True iff the edge set of ``c`` is a Z/2 sum of interior face boundaries."""
    _require_simple(g, c)
    return face_span(g).contains(edge_vector(g, c.darts))


def is_null_homologous_walk(g: EmbeddedGraph, darts) -> bool:
    """Same test for any closed walk (edges used twice cancel)."""
    return face_span(g).contains(edge_vector(g, darts))


def is_contractible(g: EmbeddedGraph, c: CycleWalk) -> bool:
    """Disk criterion: one side of the cut is a disk containing none of the holes."""
    _require_simple(g, c)
    cut = cut_along(_closed_up(g), c)
    old = {cut.graph.face_of[i] for i in range(cut.graph.num_darts)
           if g.face_of[cut.dart_map[i]] in g.boundary} - cut.graph.boundary
    for comp in cut.components():
        s = comp.graph.stats
        if s.g != 0 or s.b != 1:
            continue
        faces = {cut.graph.face_of[comp.dart_map[i]] for i in range(comp.graph.num_darts)}
        if not faces & old:
            return True
    return False


def classifier(cls: CycleClass):
    """Predicate ``(g, c) -> bool`` that is True when ``c`` is in class ``cls``."""
    cls = CycleClass.parse(cls)
    if cls is CycleClass.NON_SEPARATING:
        return lambda g, c: not is_separating(g, c)
    if cls is CycleClass.NON_CONTRACTIBLE:
        return lambda g, c: not is_contractible(g, c)
    return lambda g, c: not is_null_homologous(g, c)


def _finite_weights(g):
    return sorted({w for w in g.weight if w != INF})


def brute_force_shortest(g: EmbeddedGraph, cls) -> CycleWalk:
    """Minimum-weight simple cycle of class ``cls``.

    The weight cap doubles from the smallest dart weight until a cycle is
    found; a final pass with the cap set to the winner's weight picks the
    smallest (length, darts) among all winners.
    """
    test = classifier(cls)
    ws = _finite_weights(g)
    if not ws:
        raise NoSuchCycle("every dart has infinite weight")
    total = sum(w for w in g.weight if w != INF)
    cap = max(ws[0], 1)
    while True:
        best = None
        for c in enumerate_simple_cycles(g, cap):
            if best is not None and (c.length, c.darts) >= (best.length, best.darts):
                continue
            if test(g, c):
                best = c
        if best is not None:
            return best
        if cap >= total:
            raise NoSuchCycle(f"no simple cycle of class {CycleClass.parse(cls).value}")
        cap = min(cap * 2, total)


def shortest_walk_of_class_below(g: EmbeddedGraph, bound, predicate) -> CycleWalk | None:
    """Shortest closed walk (not necessarily simple) of weight < bound with ``predicate``.

    Explores walks up to the bound; each dart used at most twice.  Used to
    confirm no non-simple walk beats the simple optimum.
    """
    best = None
    for s in range(g.n):
        stack = [(s, (), 0)]
        while stack:
            v, darts, w = stack.pop()
            if darts and v == s and predicate(darts):
                if best is None or (w, darts) < (best.length, best.darts):
                    best = CycleWalk(darts, True, w)
            for d in g.out_darts(v):
                w2 = w + g.weight[d]
                if w2 >= bound or darts.count(d) >= 2:
                    continue
                if min(s, g.head[d]) < s:
                    continue
                stack.append((g.head[d], darts + (d,), w2))
    return best
