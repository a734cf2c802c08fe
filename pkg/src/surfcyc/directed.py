"""Shortest non-trivial cycles in directed surface graphs.

Every search takes an optional ``bound``: candidates longer than it are
pruned and ``None`` is returned when nothing fits.  The public functions
raise :class:`NoSuchCycle` instead.  Candidates are compared by (length,
dart sequence) so results are reproducible.
"""

from __future__ import annotations

import heapq

from .covers import cyclic_double_cover, project_walk, restricted_cyclic_cover
from .errors import GenusZero, NoSuchCycle
from .homology import boundary_arcs, partial_homology_basis
from .paths import adjacency, dijkstra, trace_labels
from .surface import INF, CycleWalk, EmbeddedGraph, PathSides
from .surgery import collar, paste_all_disks, strip_collar


def _key(c: CycleWalk | None):
    return (INF, ()) if c is None else (c.length, c.darts)


def _better(a, b):
    return a if _key(a) <= _key(b) else b


def _bound_of(best, bound):
    return min(bound, best.length) if best is not None else bound


def odd_crossing_distances(g: EmbeddedGraph, lam: CycleWalk, bound=INF):
    """Yield (s, distance, cover darts) for the (s,0) -> (s,1) paths of the double cover."""
    cover = cyclic_double_cover(g, lam)
    adj = adjacency(cover.graph)
    for s in sorted(set(lam.vertices(g))):
        a, b = cover.vertex(s, 0), cover.vertex(s, 1)
        dist, parent = dijkstra(adj, a, b, bound)
        if b in dist and dist[b] <= bound:
            yield s, dist[b], trace_labels(parent, b), cover
        else:
            yield s, INF, None, cover


def _odd_search(adj, par, s, bound):
    """Dijkstra in the implicit double cover from (s,0) to (s,1).

    State ``2*v + z`` is cover vertex (v, z); a dart flips z when it crosses
    the cycle.  Returns (length, base darts) or None.
    """
    start, target = 2 * s, 2 * s + 1
    dist = {start: 0}
    parent = {start: None}
    done = set()
    heap = [(0, start)]
    while heap:
        dx, x = heapq.heappop(heap)
        if x in done:
            continue
        if x == target:
            break
        done.add(x)
        z = x & 1
        for w, h, d in adj[x >> 1]:
            nd = dx + w
            if nd > bound:
                continue
            y = 2 * h + (z ^ par[d])
            if nd < dist.get(y, INF):
                dist[y] = nd
                parent[y] = (x, d)
                heapq.heappush(heap, (nd, y))
    # a popped target is final; an exhausted heap leaves only final distances
    if dist.get(target, INF) > bound:
        return None
    return dist[target], trace_labels(parent, target)


def odd_crossing_cycle(g: EmbeddedGraph, lam: CycleWalk, bound=INF, adj=None) -> CycleWalk | None:
    adj = adj or adjacency(g)
    sides = PathSides(g, lam)
    par = [sides.parity(d) for d in range(g.num_darts)]
    best = None
    for s in sorted(set(lam.vertices(g))):
        r = _odd_search(adj, par, s, _bound_of(best, bound))
        if r is None:
            continue
        best = _better(CycleWalk(tuple(r[1]), True, r[0]), best)
    return best


def shortest_odd_crossing_cycle(g: EmbeddedGraph, lam: CycleWalk) -> CycleWalk:
    """Shortest closed walk crossing the simple cycle or arc ``lam`` an odd number of times.

    This is exact when ``lam`` is made of shortest paths (a basis cycle or a
    boundary arc); the answer is the lightest (s,0) -> (s,1) path of the
    double cover over ``lam``, minimised over the vertices s of ``lam``.
    """
    c = odd_crossing_cycle(g, lam)
    if c is None:
        raise NoSuchCycle("no finite cycle crosses the given cycle oddly")
    return c


def non_separating(g: EmbeddedGraph, bound=INF) -> CycleWalk | None:
    h = paste_all_disks(g)
    if h.stats.g == 0:
        raise GenusZero("every cycle separates a genus-zero surface")
    best = None
    adj = adjacency(h)
    for lam in partial_homology_basis(h).cycles:
        best = _better(odd_crossing_cycle(h, lam, _bound_of(best, bound), adj), best)
    return best


def shortest_non_separating_cycle(g: EmbeddedGraph) -> CycleWalk:
    c = non_separating(g)
    if c is None:
        raise NoSuchCycle("no finite non-separating cycle")
    return c


def non_null_homologous(g: EmbeddedGraph, bound=INF) -> CycleWalk | None:
    s = g.stats
    if s.g == 0 and s.b < 2:
        raise NoSuchCycle("every cycle is null-homologous on a sphere or disk")
    best = None
    if s.g > 0:
        best = non_separating(g, bound)
    if s.b >= 2:
        adj = adjacency(g)
        for arc in boundary_arcs(g).arcs:
            best = _better(odd_crossing_cycle(g, arc, _bound_of(best, bound), adj), best)
    return best


def shortest_non_null_homologous_cycle(g: EmbeddedGraph) -> CycleWalk:
    c = non_null_homologous(g)
    if c is None:
        raise NoSuchCycle("no finite non-null-homologous cycle")
    return c


def _one_boundary(g: EmbeddedGraph, bound, best):
    """Case b = 1: search the restricted cover over every basis cycle."""
    h = collar(g)
    for lam in partial_homology_basis(h).cycles:
        cover = restricted_cyclic_cover(h, lam)
        c = non_null_homologous(cover.graph, _bound_of(best, bound))
        if c is None:
            continue
        w = project_walk(cover, c)
        best = _better(CycleWalk.of(g, strip_collar(g, w.darts)), best)
    return best


def non_contractible(g: EmbeddedGraph, bound=INF, _depth=0) -> CycleWalk | None:
    s = g.stats
    if s.g == 0 and s.b <= 1:
        raise NoSuchCycle("every cycle is contractible on a sphere or disk")
    best = non_null_homologous(g, bound)
    if s.g == 0:
        return best
    if s.b == 1:
        return _one_boundary(g, bound, best)
    if s.b > 1:
        keep = g.boundary_faces()[0]
        return _one_boundary(paste_all_disks(g, keep=[keep]), bound, best)
    # b = 0: one restricted cover has two boundaries and lands in the cases above
    assert _depth == 0, "restricted cover should not need a second lift"
    lam = partial_homology_basis(g).cycles[0]
    cover = restricted_cyclic_cover(g, lam)
    c = non_contractible(cover.graph, _bound_of(best, bound), _depth + 1)
    if c is not None:
        best = _better(project_walk(cover, c), best)
    return best


def shortest_non_contractible_cycle(g: EmbeddedGraph) -> CycleWalk:
    c = non_contractible(g)
    if c is None:
        raise NoSuchCycle("no finite non-contractible cycle")
    return c
