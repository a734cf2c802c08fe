"""Single-source shortest paths over dart graphs.

Two flavours.  :func:`lex_tree` breaks ties on (length, hop count, dart
sequence) so trees are reproducible and shortest paths unique; it is used to
build the trees behind homology bases and generator systems.  :func:`dijkstra`
is the plain heap version with an optional distance bound, used for the many
searches inside covers and glued disks.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .surface import INF, EmbeddedGraph

Adjacency = Sequence[Sequence[tuple]]   # adj[v] = [(weight, head, label), ...]


def adjacency(g: EmbeddedGraph) -> list[list[tuple]]:
    adj: list[list[tuple]] = [[] for _ in range(g.n)]
    for d in range(g.num_darts):
        if g.weight[d] != INF:
            adj[g.origin[d]].append((g.weight[d], g.head[d], d))
    return adj


class Tree:
    """Shortest-path forest: ``dist[v]`` and the dart ``parent[v]`` entering v."""

    __slots__ = ("graph", "roots", "dist", "hops", "parent", "root_of")

    def __init__(self, graph, roots, dist, hops, parent, root_of):
        self.graph = graph
        self.roots = roots
        self.dist = dist
        self.hops = hops
        self.parent = parent
        self.root_of = root_of

    def reached(self, v: int) -> bool:
        return self.dist[v] != INF

    def path_to(self, v: int) -> list[int]:
        """Darts from the root of ``v``'s tree down to ``v``."""
        g = self.graph
        out = []
        while self.parent[v] is not None:
            d = self.parent[v]
            out.append(d)
            v = g.origin[d]
        out.reverse()
        return out

    def tree_edges(self) -> set[int]:
        g = self.graph
        return {g.edge_of(d) for d in self.parent if d is not None}


def lex_tree(g: EmbeddedGraph, sources: Iterable[int]) -> Tree:
    """Forest of lexicographically smallest shortest paths from ``sources``.

    The key of a path is (length, hops, (source, d1, d2, ...)); it is
    monotone under extension, so Dijkstra settles every vertex with its
    minimum key.
    """
    n = g.n
    best: list = [None] * n
    parent: list = [None] * n
    root_of = [-1] * n
    done = [False] * n
    heap = []
    roots = sorted(set(sources))
    for s in roots:
        key = (0, 0, (s,))
        best[s] = key
        root_of[s] = s
        heap.append((key, s, None))
    heapq.heapify(heap)
    while heap:
        key, v, d = heapq.heappop(heap)
        if done[v] or key != best[v]:
            continue
        done[v] = True
        parent[v] = d
        dist, hops, path = key
        for e in g.out_darts(v):
            w = g.weight[e]
            if w == INF:
                continue
            u = g.head[e]
            if done[u]:
                continue
            k2 = (dist + w, hops + 1, path + (e,))
            if best[u] is None or k2 < best[u]:
                best[u] = k2
                root_of[u] = root_of[v]
                heapq.heappush(heap, (k2, u, e))
    dist = [INF if k is None else k[0] for k in best]
    hops = [-1 if k is None else k[1] for k in best]
    return Tree(g, roots, dist, hops, parent, root_of)


def dijkstra(adj: Adjacency, source, target=None, bound=INF):
    """Distances from ``source`` in an adjacency list.

    Stops early when ``target`` is settled or every remaining key exceeds
    ``bound``.  Returns ``(dist, parent)`` where ``parent[v] = (u, label)``.
    Vertices are whatever ``adj`` indexes by (ints or hashables in a dict).
    """
    dist = {source: 0}
    parent = {source: None}
    done = set()
    heap = [(0, 0, source)]
    tick = 1
    while heap:
        dv, _, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        if v == target:
            break
        for w, u, lab in adj[v]:
            nd = dv + w
            if nd > bound:
                continue
            if u not in dist or nd < dist[u]:
                dist[u] = nd
                parent[u] = (v, lab)
                heapq.heappush(heap, (nd, tick, u))
                tick += 1
    return dist, parent


def trace_labels(parent, v) -> list:
    out = []
    while parent[v] is not None:
        u, lab = parent[v]
        out.append(lab)
        v = u
    out.reverse()
    return out


def shortest_path(adj: Adjacency, s, t, bound=INF):
    """(length, labels) of a shortest s->t path, or (INF, None)."""
    dist, parent = dijkstra(adj, s, t, bound)
    if t not in dist or dist[t] > bound:
        return INF, None
    return dist[t], trace_labels(parent, t)
