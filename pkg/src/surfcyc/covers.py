"""Cyclic double covers and the five-copy restricted cyclic cover.

Both are voltage constructions over a simple cycle or arc ``lam``.  A cover
dart is a pair (base dart, level of its origin); its head level is shifted by
the crossing parity (double cover) or the signed crossing count (restricted
cover) of the base dart.  Rotations are inherited from the base, restricted
to the darts that exist at that level.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import BasepointMismatch, NotCycle, NotEmbeddedWalk, OutOfRange, Separating
from .surface import CycleWalk, EmbeddedGraph, PathSides

COPIES = 5


class CoverKind(enum.Enum):
    DOUBLE = "double"
    RESTRICTED = "restricted"


class CoverVertex(NamedTuple):
    base: int
    level: int


@dataclass
class CoverGraph:
    graph: EmbeddedGraph
    kind: CoverKind
    base: EmbeddedGraph
    lam: CycleWalk
    pi: list                       # cover vertex -> CoverVertex
    dart_pi: list                  # cover dart -> base dart
    dart_level: list               # cover dart -> level of its origin
    vertex_id: dict = field(repr=False)
    dart_id: dict = field(repr=False)
    lam_minus: int | None = None   # face ids, restricted cover only
    lam_plus: int | None = None
    lifted_boundaries: list = field(default_factory=list)

    def vertex(self, base: int, level: int) -> int:
        return self.vertex_id[(base, level)]

    def pi_map(self) -> dict:
        return {v: (cv.base, cv.level) for v, cv in enumerate(self.pi)}


def _assemble(base, lam, kind, verts, darts, head_level, boundary_of):
    """Common back end.  ``verts`` lists (v, level); ``darts`` lists (d, level)."""
    vid = {cv: i for i, cv in enumerate(verts)}
    did = {cd: i for i, cd in enumerate(darts)}
    origin = [vid[(base.origin[d], z)] for d, z in darts]
    twin = []
    nxt = []
    artificial = []
    for i, (d, z) in enumerate(darts):
        hz = head_level(d, z)
        t = did.get((base.twin[d], hz))
        if t is None:
            raise AssertionError(f"missing twin for dart {(d, z)}")
        twin.append(t)
        x = base.next[d]
        while (x, z) not in did:
            x = base.next[x]
        if x != base.next[d]:
            artificial.append(i)
        nxt.append(did[(x, z)])
    weight = [base.weight[d] for d, _ in darts]
    bnd = [nxt[i] for i in artificial]
    bfaces = base.boundary
    bnd += [i for i, (d, _) in enumerate(darts) if base.face_of[d] in bfaces]
    g = EmbeddedGraph(origin, twin, nxt, weight, bnd, len(verts), allow_disconnected=True)
    if not g.connected:
        raise Separating("cover is disconnected, so the cycle separates")
    cover = CoverGraph(g, kind, base, lam, [CoverVertex(*v) for v in verts],
                       [d for d, _ in darts], [z for _, z in darts], vid, did)
    lifted = sorted({g.face_of[i] for i, (d, _) in enumerate(darts) if base.face_of[d] in bfaces})
    cover.lifted_boundaries = lifted
    for i in artificial:
        f = g.face_of[nxt[i]]
        if darts[i][1] == 1:
            cover.lam_minus = f
        else:
            cover.lam_plus = f
    return cover


def cyclic_double_cover(g: EmbeddedGraph, lam: CycleWalk, sides: PathSides | None = None) -> CoverGraph:
    """Two copies of ``g``; darts crossing ``lam`` switch copies."""
    sides = sides or PathSides(g, lam)
    verts = [(v, z) for z in (0, 1) for v in range(g.n)]
    darts = [(d, z) for z in (0, 1) for d in range(g.num_darts)]
    par = [sides.parity(d) for d in range(g.num_darts)]
    return _assemble(g, lam, CoverKind.DOUBLE, verts, darts,
                     lambda d, z: z ^ par[d], None)


def restricted_cyclic_cover(g: EmbeddedGraph, lam: CycleWalk,
                            sides: PathSides | None = None) -> CoverGraph:
    """Five copies of ``g`` cut along ``lam``, chained across it.

    Vertices are (v, i) with i in 1..5, plus level 6 on ``lam``.  Copy i of
    the region right of ``lam`` meets ``lam`` at level i; copy i of the
    region to its left meets it at level i+1.  The level-1 lift of ``lam``
    is the boundary lam-minus, the level-6 lift is lam-plus.
    """
    if not lam.closed:
        raise NotCycle("the restricted cover needs a closed cycle")
    sides = sides or PathSides(g, lam)
    on = sides.vertices
    if on & g.boundary_vertices().keys():
        raise NotEmbeddedWalk("cycle touches a boundary cycle; collar the boundary first")
    top = COPIES + 1
    verts = [(v, i) for i in range(1, top + 1) for v in range(g.n) if i <= COPIES or v in on]
    present = set(verts)
    cnt = [sides.count(d) for d in range(g.num_darts)]
    darts = []
    for i in range(1, top + 1):
        for d in range(g.num_darts):
            u = g.origin[d]
            if (u, i) not in present:
                continue
            if d in sides.along:
                darts.append((d, i))
                continue
            copy = i - (d in sides.left) if u in on else i
            if 1 <= copy <= COPIES:
                darts.append((d, i))
    return _assemble(g, lam, CoverKind.RESTRICTED, verts, darts,
                     lambda d, z: z + cnt[d], None)


def lift_walk(cover: CoverGraph, w: CycleWalk, start) -> CycleWalk:
    """Unique lift of base walk ``w`` starting at cover vertex ``start``.

    ``start`` is a CoverVertex, a (base, level) pair or a cover vertex id.
    """
    base = cover.base
    if isinstance(start, int):
        start = cover.pi[start]
    start = CoverVertex(*start)
    if start.base != w.start(base):
        raise BasepointMismatch(f"walk starts at {w.start(base)}, not {start.base}")
    if (start.base, start.level) not in cover.vertex_id:
        raise OutOfRange(f"no cover vertex {tuple(start)}")
    z = start.level
    out = []
    g = cover.graph
    for d in w.darts:
        x = cover.dart_id.get((d, z))
        if x is None:
            raise OutOfRange(f"lift leaves the cover at dart {d}, level {z}")
        out.append(x)
        z = cover.pi[g.head[x]].level
    closed = w.closed and g.head[out[-1]] == g.origin[out[0]]
    return CycleWalk.of(g, out, closed)


def project_walk(cover: CoverGraph, w: CycleWalk, closed: bool | None = None) -> CycleWalk:
    """Image of a cover walk.  Pass ``closed=True`` to close a path whose ends
    are two lifts of the same base vertex."""
    if closed is None:
        closed = w.closed
    return CycleWalk.of(cover.base, [cover.dart_pi[d] for d in w.darts], closed)
