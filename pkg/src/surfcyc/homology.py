"""Dual graphs, tree-cotree decompositions, homology bases and crossing functionals."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GenusZero, HasBoundary, NotBoundary, TooFewBoundaries, Unreachable
from .paths import Tree, lex_tree
from .surface import INF, CycleWalk, EmbeddedGraph, PathSides
from .surgery import paste_all_disks


def dual_graph(g: EmbeddedGraph) -> EmbeddedGraph:
    """Dual graph: dart ``d`` of the dual crosses primal dart ``d``.

    Dual vertex ``f`` is primal face ``f``.  The dual face orbit of dart ``d``
    collects the darts whose primal head is ``g.head[d]``.
    """
    if g.boundary:
        raise HasBoundary("dual graph is only defined without boundary")
    nxt = [g.twin[g.prev[d]] for d in range(g.num_darts)]
    return EmbeddedGraph(g.face_of, g.twin, nxt, g.weight, (), len(g.faces))


class _DSU:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.p[max(a, b)] = min(a, b)
        return True


@dataclass
class TreeCotree:
    T: frozenset
    C: frozenset
    L: tuple           # leftover edges (min dart of each), sorted
    tree: Tree
    root: int


def loop_length(t: Tree, d: int) -> float:
    g = t.graph
    return t.dist[g.origin[d]] + g.weight[d] + t.dist[g.head[d]]


def cotree_for(g: EmbeddedGraph, t: Tree, skip_edges=frozenset(), faces=None) -> tuple[frozenset, tuple]:
    """Greedy cotree: maximum spanning tree of the dual on the non-tree edges.

    Dual edges are weighted by the length of the loop they would close in
    the tree.  ``faces`` restricts the dual to some faces (the interior ones
    when cutting towards boundary); edges in ``skip_edges`` are left out.
    Returns (cotree edges, leftover edges).
    """
    T = t.tree_edges()
    allowed = set(range(len(g.faces))) if faces is None else set(faces)
    cand = []
    for e in g.edges():
        if e in T or e in skip_edges:
            continue
        fa, fb = g.face_of[e], g.face_of[g.twin[e]]
        if fa in allowed and fb in allowed:
            cand.append((-loop_length(t, e), e))
    cand.sort()
    dsu = _DSU(len(g.faces))
    C = set()
    for _, e in cand:
        if dsu.union(g.face_of[e], g.face_of[g.twin[e]]):
            C.add(e)
    L = tuple(sorted(e for e in g.edges() if e not in T and e not in C and e not in skip_edges))
    return frozenset(C), L


def greedy_tree_cotree(g: EmbeddedGraph, root: int = 0) -> TreeCotree:
    if g.boundary:
        raise HasBoundary("paste disks into the boundary first")
    t = lex_tree(g, [root])
    if any(d == INF for d in t.dist):
        raise Unreachable("some vertex cannot be reached from the root")
    C, L = cotree_for(g, t)
    return TreeCotree(frozenset(t.tree_edges()), C, L, t, root)


def fundamental_cycle(t: Tree, d: int) -> list[int]:
    """Tree path from the common ancestor to u, then u->v, then back up to the ancestor."""
    g = t.graph
    pu = t.path_to(g.origin[d])
    pv = t.path_to(g.head[d])
    i = 0
    while i < len(pu) and i < len(pv) and pu[i] == pv[i]:
        i += 1
    down = pu[i:]
    up = [g.twin[x] for x in reversed(pv[i:])]
    return down + [d] + up


@dataclass
class HomologyBasis:
    cycles: list
    root: int
    tc: TreeCotree = field(repr=False)


def partial_homology_basis(g: EmbeddedGraph, root: int = 0) -> HomologyBasis:
    """The 2g loops closed by the leftover edges of a greedy tree-cotree.

    Boundary faces are pasted shut first; the cycles are walks of ``g`` too.
    """
    h = paste_all_disks(g)
    if h.stats.g == 0:
        raise GenusZero("a genus-zero surface has no homology basis cycles")
    tc = greedy_tree_cotree(h, root)
    cycles = [CycleWalk.of(g, fundamental_cycle(tc.tree, e)) for e in tc.L]
    return HomologyBasis(cycles, root, tc)


@dataclass
class BoundaryArcs:
    arcs: list
    source: int
    tree: Tree = field(repr=False)


def boundary_arcs(g: EmbeddedGraph, s: int | None = None) -> BoundaryArcs:
    """Shortest paths from B0 to every other boundary, trimmed to touch each end once."""
    bfs = g.boundary_faces()
    if len(bfs) < 2:
        raise TooFewBoundaries("need at least two boundary cycles")
    b0 = {g.origin[d] for d in g.faces[bfs[0]]}
    if s is None:
        s = min(b0)
    if s not in b0:
        raise NotBoundary(f"vertex {s} is not on B0")
    t = lex_tree(g, [s])
    arcs = []
    for f in bfs[1:]:
        best = None
        for v in sorted({g.origin[d] for d in g.faces[f]}):
            if t.dist[v] == INF:
                continue
            p = t.path_to(v)
            key = (t.dist[v], len(p), tuple(p))
            if best is None or key < best[0]:
                best = (key, p)
        if best is None:
            raise Unreachable("a boundary cycle cannot be reached from B0")
        p = best[1]
        start = 0
        for i, d in enumerate(p):
            if g.head[d] in b0:
                start = i + 1
        arcs.append(CycleWalk.of(g, p[start:], closed=False))
    return BoundaryArcs(arcs, s, t)


@dataclass
class CrossingCount:
    value: int
    per_dart: list


@dataclass
class CrossingParity:
    value: int
    per_dart: list


def _sides(g, lam) -> PathSides:
    return lam if isinstance(lam, PathSides) else PathSides(g, lam)


def crossing_count(g: EmbeddedGraph, lam, p: CycleWalk) -> CrossingCount:
    """Left-to-right minus right-to-left crossings of ``p`` with ``lam``.

    ``lam`` may be a walk or a precomputed :class:`PathSides`.
    """
    s = _sides(g, lam)
    per = [s.count(d) for d in p.darts]
    return CrossingCount(sum(per), per)


def crossing_parity(g: EmbeddedGraph, lam, p: CycleWalk) -> CrossingParity:
    s = _sides(g, lam)
    per = [s.parity(d) for d in p.darts]
    v = 0
    for x in per:
        v ^= x
    return CrossingParity(v, per)
