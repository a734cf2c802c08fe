"""Small named surfaces used by tests, demos and the corpus."""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .builder import Builder
from .surface import EmbeddedGraph, build_graph


def one_vertex_schema(genus: int, weight: Sequence | None = None) -> EmbeddedGraph:
    """One vertex, 2g loops, rotation a1 b1 a1' b1' a2 b2 a2' b2' ...

    Loop ``a_i`` is dart ``4i``, ``b_i`` is dart ``4i + 2``; odd darts are twins.
    """
    rot = []
    for i in range(genus):
        a, b = 4 * i, 4 * i + 2
        rot += [a, b, a + 1, b + 1]
    nd = 4 * genus
    twin = [d ^ 1 for d in range(nd)]
    return build_graph([rot], twin, weight or [1] * nd)


def torus1(weight=None) -> EmbeddedGraph:
    return one_vertex_schema(1, weight)


def octagon(weight=None) -> EmbeddedGraph:
    return one_vertex_schema(2, weight)


def planar_from_coords(coords, edges, weight=None, boundary=()) -> EmbeddedGraph:
    """Rotation system of a straight-line plane drawing.

    Edge ``i`` gives darts ``2i`` (u->v) and ``2i+1`` (v->u).  The outer face
    counts as an ordinary face unless one of its darts is in ``boundary``.
    """
    out: list[list[tuple[float, int]]] = [[] for _ in coords]
    for i, (u, v) in enumerate(edges):
        for d, a, b in ((2 * i, u, v), (2 * i + 1, v, u)):
            dx = coords[b][0] - coords[a][0]
            dy = coords[b][1] - coords[a][1]
            out[a].append((math.atan2(dy, dx), d))
    rot = [[d for _, d in sorted(r)] for r in out]
    twin = [d ^ 1 for d in range(2 * len(edges))]
    return build_graph(rot, twin, weight or [1] * (2 * len(edges)), boundary)


def cube(weight=None) -> EmbeddedGraph:
    coords = [(0, 0), (3, 0), (3, 3), (0, 3), (1, 1), (2, 1), (2, 2), (1, 2)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    return planar_from_coords(coords, edges, weight)


def _grid_weight(wfun, nd):
    if wfun is None:
        return [1] * nd
    return [wfun(d) for d in range(nd)]


def torus_grid(k: int, l: int, wfun: Callable[[int], float] | None = None,
               boundary=()) -> EmbeddedGraph:
    """k columns by l rows on the torus.

    Vertex (x, y) is ``y*k + x``.  Horizontal edge h(x, y) = (x,y)->(x+1,y) has
    index ``y*k + x``; vertical v(x, y) = (x,y)->(x,y+1) has index
    ``k*l + y*k + x``.  Dart ``2e`` runs forward, ``2e+1`` backward.
    """
    def h(x, y):
        return 2 * ((y % l) * k + x % k)

    def v(x, y):
        return 2 * (k * l + (y % l) * k + x % k)

    rot = []
    for y in range(l):
        for x in range(k):
            rot.append([h(x, y), v(x, y), h(x - 1, y) + 1, v(x, y - 1) + 1])
    nd = 4 * k * l
    twin = [d ^ 1 for d in range(nd)]
    return build_graph(rot, twin, _grid_weight(wfun, nd), boundary)


def torus_grid_h(k: int, l: int, x: int, y: int) -> int:
    return 2 * (y * k + x)


def torus_grid_v(k: int, l: int, x: int, y: int) -> int:
    return 2 * (k * l + y * k + x)


def cylinder_grid(k: int, l: int, wfun=None) -> EmbeddedGraph:
    """k columns around, l rows of faces, rims y=0 and y=l are boundary.

    h(x, y) has index ``y*k + x`` for y in 0..l; v(x, y) has index
    ``k*(l+1) + y*k + x`` for y in 0..l-1.
    """
    def h(x, y):
        return 2 * (y * k + x % k)

    def v(x, y):
        return 2 * (k * (l + 1) + y * k + x % k)

    rot = []
    for y in range(l + 1):
        for x in range(k):
            r = [h(x, y)]
            if y < l:
                r.append(v(x, y))
            r.append(h(x - 1, y) + 1)
            if y > 0:
                r.append(v(x, y - 1) + 1)
            rot.append(r)
    nd = 2 * (k * (l + 1) + k * l)
    twin = [d ^ 1 for d in range(nd)]
    return build_graph(rot, twin, _grid_weight(wfun, nd), [h(0, 0), h(0, l) + 1])


def opened_torus_grid(k: int = 3, l: int = 3, wfun=None) -> EmbeddedGraph:
    """Torus grid with the face right of h(0, 1) marked as a hole."""
    return torus_grid(k, l, wfun, boundary=[torus_grid_h(k, l, 0, 1)])


def pants(weight=None) -> EmbeddedGraph:
    """Pair of pants: outer square with two square holes (g=0, b=3)."""
    coords = [(0, 0), (6, 0), (6, 3), (0, 3),
              (1, 1), (2, 1), (2, 2), (1, 2),
              (4, 1), (5, 1), (5, 2), (4, 2)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0),
             (4, 5), (5, 6), (6, 7), (7, 4),
             (8, 9), (9, 10), (10, 11), (11, 8),
             (0, 4), (3, 7), (5, 8), (6, 11), (9, 1), (10, 2)]
    # outer face right of 0->1; hole interiors right of 4->7 and 8->11
    return planar_from_coords(coords, edges, weight, boundary=[0, 15, 23])


def dumbbell(k=3, square=1, body=3, neck=10) -> EmbeddedGraph:
    """Two k x k torus blocks joined by a four-edge tube (g=2, b=0).

    Each block has one face opened; the tube edges weigh ``neck``.  The
    opened faces' edges weigh ``square`` and all other edges ``body``, so with
    the defaults the shortest non-contractible cycle is one rim of the tube,
    which separates the surface.
    """
    blocks = []
    for _ in range(2):
        t = opened_torus_grid(k, k)
        hole = next(iter(t.boundary))
        rim = {t.edge_of(d) for d in t.faces[hole]}
        w = [square if t.edge_of(d) in rim else body for d in range(t.num_darts)]
        blocks.append(t.with_weights(w))
    a, c = blocks
    b = Builder.from_graph(a)
    off_v, off_d = a.n, a.num_darts
    for v in range(c.n):
        b.rot.append([d + off_d for d in c.out_darts(v)])
    b.origin += [o + off_v for o in c.origin]
    b.twin += [t + off_d for t in c.twin]
    b.weight += list(c.weight)
    b.boundary = set()
    ra = a.faces[next(iter(a.boundary))]
    rc = c.faces[next(iter(c.boundary))]
    # walk the two rims in opposite directions so the tube is orientable
    r = len(ra)
    for i in range(r):
        da = ra[i]
        dc = rc[(-i) % r] + off_d
        b.add_edge(b.origin[da], b.origin[dc], neck, before_u=da, before_v=dc)
    return b.build()
