"""Cutting a surface along a subgraph, pasting disks, splitting components."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import Disconnected, NotBoundary, NotEmbeddedWalk, NotSimple
from .surface import INF, CycleWalk, EmbeddedGraph, is_simple


@dataclass
class Cut:
    """Result of cutting ``base`` along a set of edges.

    ``graph`` may be disconnected.  ``dart_map`` sends each new dart to the
    dart of ``base`` it copies; ``vertex_map`` does the same for vertices.
    ``left_copy[d]``/``right_copy[d]`` give the two copies of every cut dart
    ``d``: the left copy borders the region on the left of ``d``.
    """

    base: EmbeddedGraph
    graph: EmbeddedGraph
    dart_map: list[int]
    vertex_map: list[int]
    left_copy: dict[int, int] = field(default_factory=dict)
    right_copy: dict[int, int] = field(default_factory=dict)
    cut_edges: frozenset[int] = frozenset()
    wedge_first: list[int] = field(default_factory=list)

    def components(self) -> list["Component"]:
        return split_components(self.graph)


@dataclass
class Component:
    graph: EmbeddedGraph
    vertex_map: list[int]   # local vertex -> vertex of the split graph
    dart_map: list[int]     # local dart -> dart of the split graph


def cut_along_edges(g: EmbeddedGraph, edges: Iterable[int]) -> Cut:
    """Cut ``g`` along the edges listed (any dart of each edge may be given).

    Every vertex touched by the cut is split into one copy per wedge between
    consecutive cut darts; boundary corners also delimit wedges.  Both copies
    of each cut edge border new boundary.
    """
    K = {g.edge_of(e) for e in edges}
    in_cut = [g.edge_of(d) in K for d in range(g.num_darts)]

    new_id: dict[tuple[int, str], int] = {}
    dart_map: list[int] = []
    for d in range(g.num_darts):
        tags = ("L", "R") if in_cut[d] else ("",)
        for t in tags:
            new_id[(d, t)] = len(dart_map)
            dart_map.append(d)
    nd = len(dart_map)

    twin = [0] * nd
    for (d, t), i in new_id.items():
        other = {"": "", "L": "R", "R": "L"}[t]
        twin[i] = new_id[(g.twin[d], other)]

    origin = [0] * nd
    nxt = [0] * nd
    vertex_map: list[int] = []
    gap_darts: list[int] = []
    wedge_first: list[int] = []
    for v in range(g.n):
        rot = g.out_darts(v)
        cuts = [i for i, d in enumerate(rot) if in_cut[d]]
        if not cuts:
            wedges = [[new_id[(d, "")] for d in rot]]
            split = False
        else:
            split = True
            tokens: list = []
            for i, d in enumerate(rot):
                if in_cut[d]:
                    tokens.append(("end", new_id[(d, "R")]))
                    tokens.append(("start", new_id[(d, "L")]))
                else:
                    tokens.append(("dart", new_id[(d, "")]))
                if g.corner_face(d) in g.boundary:
                    tokens.append(("end", None))
                    tokens.append(("start", None))
            # rotate so the sequence begins with a wedge start
            j = next(i for i, t in enumerate(tokens) if t[0] == "start")
            tokens = tokens[j:] + tokens[:j]
            wedges = []
            cur: list[int] = []
            for kind, x in tokens:
                if kind == "start":
                    cur = [] if x is None else [x]
                elif kind == "end":
                    if x is not None:
                        cur.append(x)
                    wedges.append(cur)
                else:
                    cur.append(x)
        for w in wedges:
            if not w:
                continue
            nv = len(vertex_map)
            vertex_map.append(v)
            wedge_first.append(w[0])
            for i, x in enumerate(w):
                origin[x] = nv
                nxt[x] = w[(i + 1) % len(w)]
            if split:
                gap_darts.append(w[0])

    boundary = set(gap_darts)
    for d in range(g.num_darts):
        if g.face_of[d] in g.boundary:
            for t in (("L", "R") if in_cut[d] else ("",)):
                boundary.add(new_id[(d, t)])
    weight = [g.weight[dart_map[i]] for i in range(nd)]
    new = EmbeddedGraph(origin, twin, nxt, weight, boundary, len(vertex_map),
                        allow_disconnected=True)
    left = {d: new_id[(d, "L")] for d in range(g.num_darts) if in_cut[d]}
    right = {d: new_id[(d, "R")] for d in range(g.num_darts) if in_cut[d]}
    return Cut(g, new, dart_map, vertex_map, left, right, frozenset(K), wedge_first)


def cut_along(g: EmbeddedGraph, c: CycleWalk) -> Cut:
    """Cut along a simple cycle, or a simple arc whose endpoints lie on boundary faces."""
    if not is_simple(g, c):
        raise NotSimple("can only cut along a simple cycle or arc")
    if not c.closed:
        bv = g.boundary_vertices()
        if c.start(g) not in bv or c.end(g) not in bv:
            raise NotEmbeddedWalk("arc endpoints must lie on boundary faces")
    return cut_along_edges(g, c.darts)


def split_components(g: EmbeddedGraph) -> list[Component]:
    """Split a possibly disconnected graph into connected embedded graphs."""
    comp = [-1] * g.n
    order: list[list[int]] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(order)
        verts = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for d in g.out_darts(v):
                w = g.head[d]
                if comp[w] < 0:
                    comp[w] = comp[s]
                    verts.append(w)
                    stack.append(w)
        order.append(sorted(verts))
    res = []
    for ci, verts in enumerate(order):
        vloc = {v: i for i, v in enumerate(verts)}
        darts = [d for d in range(g.num_darts) if comp[g.origin[d]] == ci]
        dloc = {d: i for i, d in enumerate(darts)}
        bnd = [dloc[d] for d in darts if g.face_of[d] in g.boundary]
        sub = EmbeddedGraph(
            [vloc[g.origin[d]] for d in darts],
            [dloc[g.twin[d]] for d in darts],
            [dloc[g.next[d]] for d in darts],
            [g.weight[d] for d in darts],
            bnd, len(verts),
        )
        res.append(Component(sub, verts, darts))
    return res


def paste_disk(g: EmbeddedGraph, face: int) -> EmbeddedGraph:
    """Re-mark boundary face ``face`` as an interior face (b drops by one)."""
    if face not in g.boundary:
        raise NotBoundary(f"face {face} is not a boundary face")
    keep = [g.faces[f][0] for f in g.boundary if f != face]
    return EmbeddedGraph(g.origin, g.twin, g.next, g.weight, keep, g.n)


def paste_all_disks(g: EmbeddedGraph, keep: Iterable[int] = ()) -> EmbeddedGraph:
    """Paste disks into every boundary face except those in ``keep``."""
    keep = set(keep)
    return EmbeddedGraph(g.origin, g.twin, g.next, g.weight,
                         [g.faces[f][0] for f in g.boundary if f in keep], g.n)


def reglue(cut: Cut) -> EmbeddedGraph:
    """Identify the two copies of every cut vertex and edge again.

    The rotation at each original vertex is rebuilt by walking the wedge
    copies; the result is compared against ``cut.base`` by the caller.
    """
    g = cut.graph
    base = cut.base
    copies: dict[int, list[int]] = {}
    for nv, v in enumerate(cut.vertex_map):
        copies.setdefault(v, []).append(nv)
    nxt = [None] * base.num_darts
    for v, cs in copies.items():
        seq: list[int] = []
        for nv in cs:
            x = cut.wedge_first[nv]
            while True:
                seq.append(cut.dart_map[x])
                x = g.next[x]
                if x == cut.wedge_first[nv]:
                    break
        # a cut dart closes one wedge and opens the next; keep its first occurrence
        uniq = list(dict.fromkeys(seq))
        if len(uniq) != len(base.out_darts(v)):
            raise Disconnected(f"wedges at vertex {v} do not reassemble")
        # wedges were produced in counterclockwise order starting at a cut
        for i, d in enumerate(uniq):
            nxt[d] = uniq[(i + 1) % len(uniq)]
    bnd = [base.faces[f][0] for f in base.boundary]
    return EmbeddedGraph(base.origin, base.twin, nxt, base.weight, bnd, base.n)


def collar(g: EmbeddedGraph, ring_weight=INF, spoke_weight=0) -> EmbeddedGraph:
    """Push every boundary cycle inward by one ring of new vertices.

    Old darts and vertices keep their ids; each boundary vertex gets a spoke
    to a new ring vertex and the rings become the new boundary.  With the
    default weights no finite-length cycle can use a ring edge, and spokes
    only allow zero-length back-and-forth excursions, so shortest cycles are
    unchanged while the old boundary vertices become interior.
    """
    from .builder import Builder

    b = Builder.from_graph(g)
    b.boundary = set()
    for f in g.boundary_faces():
        ds = g.faces[f]
        k = len(ds)
        ws = [b.add_vertex() for _ in range(k)]
        spokes = [b.add_edge(g.origin[d], ws[j], spoke_weight, before_u=d)
                  for j, d in enumerate(ds)]
        ring = [b.add_edge(ws[j], ws[(j + 1) % k], ring_weight) for j in range(k)]
        for j in range(k):
            b.rot[ws[j]] = [ring[j], b.twin[spokes[j]], b.twin[ring[j - 1]]]
        b.boundary.add(ring[0])
    return b.build()


def strip_collar(g: EmbeddedGraph, darts) -> list[int]:
    """Drop darts a collar added (ids >= g.num_darts) from a walk of the collared graph."""
    out = [d for d in darts if d < g.num_darts]
    return out
