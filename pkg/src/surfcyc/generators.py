"""Greedy systems of loops and arcs, spread apart so they only meet at ends.

A greedy loop is a tree path down to one end of a leftover edge, the edge,
and the tree path back up.  Different loops share tree segments, so they
are not disjoint as drawn in the graph.  :func:`spread` pulls them apart:
every vertex that some loop passes through is replaced by one copy per
passing strand, the copies are joined by zero-weight rungs, and each shared
tree edge becomes one parallel rail per strand.  Distances do not change,
and in the spread graph the loops are simple and meet only at their ends,
so cutting along all of them leaves a polygon.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import GenusZero, HasBoundary, MalformedPermutation, NoBoundary, Unreachable
from .homology import cotree_for
from .paths import Tree, lex_tree
from .surface import INF, CycleWalk, EmbeddedGraph, build_graph
from .surgery import Cut, cut_along_edges


class GeneratorKind(enum.Enum):
    LOOPS = "loops"
    ARCS = "arcs"


@dataclass
class Spread:
    """A graph whose vertices on the generators have been split into strands.

    ``dart_orig[d]`` is the base dart that dart ``d`` copies, or None for a
    rung; ``vertex_orig`` does the same for vertices.
    """

    graph: EmbeddedGraph
    base: EmbeddedGraph
    dart_orig: list
    vertex_orig: list

    def project(self, darts) -> list[int]:
        return [self.dart_orig[d] for d in darts if self.dart_orig[d] is not None]

    def lift_dart(self, d: int) -> list[int]:
        return [x for x, o in enumerate(self.dart_orig) if o == d]


@dataclass
class SchemaSide:
    gen: int
    side: str           # "L" or "R": which side of the generator the disk lies on
    verts: list         # disk vertex at each position 0..len along the generator

    @property
    def label(self) -> tuple:
        return (self.gen, self.side)


@dataclass
class SystemOfGenerators:
    """Loops (closed surface) or arcs (surface with boundary) cutting it into a disk.

    ``generators`` are walks of the spread graph ``spread.graph``; ``disk``
    is the cut along all of them and ``sides`` lists its generator sides in
    counterclockwise order around the disk boundary.
    """

    kind: GeneratorKind
    base: EmbeddedGraph
    spread: Spread
    generators: list
    disk: Cut
    sides: list
    root: int | None = None
    tree: Tree | None = field(default=None, repr=False)
    leftover: tuple = ()

    @property
    def graph(self) -> EmbeddedGraph:
        return self.spread.graph

    def __len__(self) -> int:
        return len(self.generators)

    def projected(self) -> list[CycleWalk]:
        """The generators as (possibly non-simple) walks of the base graph."""
        closed = self.kind is GeneratorKind.LOOPS
        return [CycleWalk.of(self.base, self.spread.project(w.darts), closed)
                for w in self.generators]

    def side_index(self) -> dict:
        return {s.label: i for i, s in enumerate(self.sides)}


# -- spreading ------------------------------------------------------------


def _rays(g: EmbeddedGraph, t: Tree, leftover) -> list[list[int]]:
    """Two rays per leftover edge: tree path to an end, then the end dart."""
    out = []
    for e in leftover:
        for end in (e, g.twin[e]):
            out.append(t.path_to(g.origin[end]) + [end])
    return out


def _ray_keys(g: EmbeddedGraph, rays) -> list[tuple]:
    # counterclockwise offset of each step from the dart back to the parent;
    # sorting by these tuples orders the rays around the tree without crossings
    idx = {}
    for v in range(g.n):
        for i, d in enumerate(g.out_darts(v)):
            idx[d] = i
    keys = []
    for ray in rays:
        k = []
        for j, d in enumerate(ray):
            if j == 0:
                k.append(idx[d])
            else:
                deg = len(g.out_darts(g.origin[d]))
                k.append((idx[d] - idx[g.twin[ray[j - 1]]]) % deg)
        keys.append(tuple(k))
    return keys


def spread(g: EmbeddedGraph, t: Tree, leftover) -> tuple[Spread, list[CycleWalk]]:
    """Split shared tree segments so the generators of ``leftover`` become disjoint.

    Returns the spread graph and one generator walk per leftover edge.
    """
    rays = _rays(g, t, leftover)
    keys = _ray_keys(g, rays)
    leaving: dict[int, list[int]] = {}     # path dart -> rays using it away from the root
    arriving: dict[int, list[int]] = {}    # reverse path dart -> rays coming down it
    strands: dict[int, list[tuple]] = {}   # vertex -> (ray, dart in, dart out) strands through it
    for r, ray in enumerate(rays):
        for j, d in enumerate(ray[:-1]):
            leaving.setdefault(d, []).append(r)
            arriving.setdefault(g.twin[d], []).append(r)
        for j in range(1, len(ray)):
            x = g.origin[ray[j]]
            strands.setdefault(x, []).append((r, g.twin[ray[j - 1]], ray[j]))

    def label(d, r):
        # rails of shared path edges are told apart by ray; other darts are single
        return r if (d in leaving or d in arriving) else None

    # slots: counterclockwise positions around each vertex, one per rail
    slots: list[list[tuple]] = []
    for v in range(g.n):
        row = []
        for d in g.out_darts(v):
            if d in leaving:
                rs = sorted(leaving[d], key=lambda r: keys[r])
            elif d in arriving:
                rs = sorted(arriving[d], key=lambda r: keys[r], reverse=True)
            else:
                rs = [None]
            row += [(d, r) for r in rs]
        slots.append(row)

    dart_id: dict[tuple, int] = {}
    dart_orig: list = []
    for v in range(g.n):
        for s in slots[v]:
            dart_id[s] = len(dart_orig)
            dart_orig.append(s[0])
    rung_pairs: list[tuple] = []           # (vertex key a, vertex key b)
    rotations: list[list] = []
    vertex_orig: list[int] = []
    vkey_id: dict = {}

    def new_vertex(key, v):
        vkey_id[key] = len(rotations)
        rotations.append([])
        vertex_orig.append(v)

    for v in range(g.n):
        row = slots[v]
        if v not in strands:
            new_vertex((v, None), v)
            rotations[-1] = [dart_id[s] for s in row]
            continue
        owner = {}
        for r, din, dout in strands[v]:
            new_vertex((v, r), v)
            owner[(din, r)] = r
            owner[(dout, label(dout, r))] = r
        pos_of_strand = [i for i, s in enumerate(row) if s in owner]
        items: dict[int, list] = {r: [] for r, _, _ in strands[v]}
        cur = owner[row[pos_of_strand[-1]]]
        for i, s in enumerate(row):
            if s in owner:
                cur = owner[s]
            items[cur].append((i, dart_id[s]))
        seen = set()
        for a, b in zip(pos_of_strand, pos_of_strand[1:] + pos_of_strand[:1]):
            ra, rb = owner[row[a]], owner[row[b]]
            pair = (min(ra, rb), max(ra, rb))
            if ra == rb or pair in seen:
                continue
            seen.add(pair)
            k = len(dart_orig) + 2 * len(rung_pairs)
            rung_pairs.append(((v, ra), (v, rb)))
            items[ra].append((b - 0.5, k))
            items[rb].append((b - 0.5, k + 1))
        for r, _, _ in strands[v]:
            rotations[vkey_id[(v, r)]] = [d for _, d in sorted(items[r])]

    nd0 = len(dart_orig)
    twin = [0] * (nd0 + 2 * len(rung_pairs))
    for (d, r), i in dart_id.items():
        twin[i] = dart_id[(g.twin[d], r)]
    weight = [g.weight[d] for d in dart_orig] + [0] * (2 * len(rung_pairs))
    for j in range(len(rung_pairs)):
        twin[nd0 + 2 * j] = nd0 + 2 * j + 1
        twin[nd0 + 2 * j + 1] = nd0 + 2 * j
    dart_orig += [None] * (2 * len(rung_pairs))
    bnd = [dart_id[(d, None)] for d in range(g.num_darts) if g.face_of[d] in g.boundary]
    h = build_graph(rotations, twin, weight, bnd)
    sp = Spread(h, g, dart_orig, vertex_orig)

    gens = []
    for i in range(len(leftover)):
        ra, rb = rays[2 * i], rays[2 * i + 1]
        darts = [dart_id[(d, 2 * i)] for d in ra[:-1]]
        darts.append(dart_id[(ra[-1], None)])
        darts += [dart_id[(g.twin[d], 2 * i + 1)] for d in reversed(rb[:-1])]
        gens.append(CycleWalk.of(h, darts, closed=h.head[darts[-1]] == h.origin[darts[0]]))
    return sp, gens


# -- the polygon ----------------------------------------------------------


def schema_sides(h: EmbeddedGraph, gens, cut: Cut) -> list[SchemaSide]:
    """Generator sides of the cut disk in counterclockwise boundary order."""
    where = {}
    for i, w in enumerate(gens):
        for p, d in enumerate(w.darts):
            where[d] = (i, p, "L")
            where[h.twin[d]] = (i, p, "R")
    D = cut.graph
    if len(D.boundary) != 1:
        raise MalformedPermutation("cut along the generators is not a disk")
    face = D.faces[next(iter(D.boundary))]
    # start the walk right after a change of run so no side is split in two
    labels = []
    for x in face:
        y = cut.dart_map[x]
        labels.append(where.get(y))
    n = len(face)
    start = 0
    for j in range(n):
        a, b = labels[j - 1], labels[j]
        if a is None or b is None or a[0] != b[0] or a[2] != b[2]:
            start = j
            break
    sides: list[SchemaSide] = []
    last = None
    for j in range(n):
        x = face[(start + j) % n]
        lab = labels[(start + j) % n]
        if lab is None:
            last = None
            continue
        i, p, s = lab
        if last != (i, s):
            sides.append(SchemaSide(i, s, {}))
            last = (i, s)
        verts = sides[-1].verts
        if s == "L":
            verts[p], verts[p + 1] = D.origin[x], D.head[x]
        else:
            verts[p + 1], verts[p] = D.origin[x], D.head[x]
    for sd in sides:
        k = len(gens[sd.gen].darts)
        if sorted(sd.verts) != list(range(k + 1)):
            raise MalformedPermutation(f"generator {sd.gen} is not a whole side of the disk")
        sd.verts = [sd.verts[p] for p in range(k + 1)]
    if sorted(s.label for s in sides) != sorted((i, x) for i in range(len(gens)) for x in "LR"):
        raise MalformedPermutation("each generator must appear exactly twice on the disk")
    return sides


def _finish(kind, g, t, leftover, root) -> SystemOfGenerators:
    sp, gens = spread(g, t, leftover)
    h = sp.graph
    cut = cut_along_edges(h, [d for w in gens for d in w.darts])
    D = cut.graph
    if not D.connected or D.stats.g != 0 or D.stats.b != 1:
        raise MalformedPermutation("generators do not cut the surface into a disk")
    sides = schema_sides(h, gens, cut)
    return SystemOfGenerators(kind, g, sp, gens, cut, sides, root, t, tuple(leftover))


def greedy_system_of_loops(g: EmbeddedGraph, basepoint: int = 0) -> SystemOfGenerators:
    """2g loops through ``basepoint`` from the shortest-path tree and the greedy cotree."""
    if g.boundary:
        raise HasBoundary("loops need a closed surface; paste disks first")
    if g.stats.g == 0:
        raise GenusZero("a sphere has no system of loops")
    t = lex_tree(g, [basepoint])
    if any(d == INF for d in t.dist):
        raise Unreachable("some vertex cannot be reached from the basepoint")
    _, L = cotree_for(g, t)
    return _finish(GeneratorKind.LOOPS, g, t, L, basepoint)


def greedy_system_of_arcs(g: EmbeddedGraph) -> SystemOfGenerators:
    """2g + b - 1 arcs between boundary vertices from a forest rooted on the boundary."""
    if not g.boundary:
        raise NoBoundary("arcs need at least one boundary cycle")
    t = lex_tree(g, g.boundary_vertices())
    if any(d == INF for d in t.dist):
        raise Unreachable("some vertex cannot be reached from the boundary")
    on_hole = {g.edge_of(d) for d in range(g.num_darts) if g.face_of[d] in g.boundary}
    _, L = cotree_for(g, t, skip_edges=on_hole, faces=g.interior_faces())
    return _finish(GeneratorKind.ARCS, g, t, L, None)
