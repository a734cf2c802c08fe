"""Incremental construction of rotation systems.

The builder keeps one counterclockwise dart list per vertex and supports the
few local edits the fixtures and the corpus generator need.  Nothing here is
validated until :meth:`Builder.build`.
"""

from __future__ import annotations

from .surface import EmbeddedGraph


class Builder:
    def __init__(self):
        self.rot: list[list[int]] = []
        self.origin: list[int] = []
        self.twin: list[int] = []
        self.weight: list = []
        self.boundary: set[int] = set()

    @classmethod
    def from_graph(cls, g: EmbeddedGraph) -> "Builder":
        b = cls()
        b.rot = [list(g.out_darts(v)) for v in range(g.n)]
        b.origin = list(g.origin)
        b.twin = list(g.twin)
        b.weight = list(g.weight)
        b.boundary = set(g.boundary_darts())
        return b

    @property
    def n(self) -> int:
        return len(self.rot)

    def add_vertex(self) -> int:
        self.rot.append([])
        return len(self.rot) - 1

    def _new_dart(self, v: int, w, before: int | None) -> int:
        d = len(self.origin)
        self.origin.append(v)
        self.twin.append(-1)
        self.weight.append(w)
        r = self.rot[v]
        if before is None:
            r.append(d)
        else:
            r.insert(r.index(before), d)
        return d

    def add_edge(self, u: int, v: int, w=1, w_back=None,
                 before_u: int | None = None, before_v: int | None = None) -> int:
        """Add an edge u->v; returns the dart u->v.

        ``before_u`` names the dart at ``u`` the new dart is inserted in front
        of (counterclockwise), i.e. the new dart lands in the corner that ends
        at ``before_u``.  ``w_back`` defaults to ``w``.
        """
        d = self._new_dart(u, w, before_u)
        t = self._new_dart(v, w if w_back is None else w_back, before_v)
        self.twin[d] = t
        self.twin[t] = d
        return d

    def subdivide(self, d: int, w=None, w_back=None) -> int:
        """Split the edge of dart ``d`` (u->v) into u->x->v; returns x.

        The halves u->x, v->x keep the old darts and weights unless ``w``
        (for x->v) and ``w_back`` (for x->u) say otherwise.
        """
        t = self.twin[d]
        x = self.add_vertex()
        e = len(self.origin)           # x -> v, twin of t
        f = e + 1                      # x -> u, twin of d
        self.origin += [x, x]
        self.weight += [self.weight[d] if w is None else w,
                        self.weight[t] if w_back is None else w_back]
        self.twin += [t, d]
        self.twin[t] = e
        self.twin[d] = f
        self.rot[x] = [e, f]
        return x

    def split_face(self, d1: int, d2: int, w=1, w_back=None) -> int:
        """Add a chord inside the face to the right of ``d1`` and ``d2``.

        Both darts must lie on the same face; the chord runs from the origin
        of ``d1`` to the origin of ``d2``.
        """
        return self.add_edge(self.origin[d1], self.origin[d2], w, w_back,
                             before_u=d1, before_v=d2)

    def add_hole(self, d: int, weights=(1, 1, 1, 1), back=None) -> int:
        """Hang a triangle off the corner before ``d`` and mark its inside as a hole.

        Returns the boundary representative dart.  ``weights`` are for the
        pendant edge and the three triangle edges; ``back`` the reverse ones.
        """
        back = weights if back is None else back
        u = self.origin[d]
        x, y, z = self.add_vertex(), self.add_vertex(), self.add_vertex()
        self.add_edge(u, x, weights[0], back[0], before_u=d)
        xy = self.add_edge(x, y, weights[1], back[1])
        yz = self.add_edge(y, z, weights[2], back[2])
        zx = self.add_edge(z, x, weights[3], back[3])
        xu = self.rot[x][0]
        xz = self.twin[zx]
        # counterclockwise at x: xy, xz, xu;  at y: yz, yx;  at z: zy, zx
        self.rot[x] = [xy, xz, xu]
        self.rot[y] = [yz, self.twin[xy]]
        self.rot[z] = [self.twin[yz], zx]
        self.boundary.add(xz)
        return xz

    def build(self, **kw) -> EmbeddedGraph:
        nd = len(self.origin)
        nxt = [0] * nd
        for r in self.rot:
            for i, d in enumerate(r):
                nxt[d] = r[(i + 1) % len(r)]
        return EmbeddedGraph(self.origin, self.twin, nxt, self.weight,
                             sorted(self.boundary), self.n, **kw)
