"""Rotation-system representation of cellularly embedded graphs.

Darts are dense integers ``0..2m-1``.  Each dart ``d`` carries an ``origin``
vertex, a ``twin`` (the reversed dart) and ``next``, its counterclockwise
successor around the origin.  Faces are the orbits of ``d -> next[twin[d]]``;
with this convention the face traced by a dart lies to its *right*, so the
region to the left of a dart ``d`` at its origin is the counterclockwise wedge
that starts at ``d``.

Boundary faces are explicit marks.  They are holes, not cells: ``f`` counts
interior faces only, so ``chi = n - m + f`` and ``g = (2 - chi - b) / 2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    MalformedPermutation,
    NegativeWeight,
    NotEmbeddedWalk,
    NotSimple,
)

INF = math.inf


@dataclass(frozen=True)
class SurfaceStats:
    n: int
    m: int
    f: int
    b: int
    chi: int
    g: int

    def __str__(self) -> str:
        return f"n={self.n} m={self.m} f={self.f} chi={self.chi} g={self.g} b={self.b}"


@dataclass(frozen=True)
class Dart:
    id: int
    origin: int
    twin: int
    next: int
    weight: float


class EmbeddedGraph:
    """An immutable rotation system with weights and boundary marks.

    ``boundary`` lists darts; every face containing one of them is a boundary
    face.  Pass ``allow_disconnected=True`` only for intermediate results of
    surgery (see :func:`surfcyc.surgery.split_components`).
    """

    __slots__ = (
        "origin", "twin", "next", "weight", "n", "boundary",
        "head", "prev", "face_of", "faces", "_out", "connected",
    )

    def __init__(
        self,
        origin: Sequence[int],
        twin: Sequence[int],
        next: Sequence[int],
        weight: Sequence[float],
        boundary: Iterable[int] = (),
        n: int | None = None,
        *,
        check: bool = True,
        allow_disconnected: bool = False,
    ):
        self.origin = tuple(int(v) for v in origin)
        self.twin = tuple(int(d) for d in twin)
        self.next = tuple(int(d) for d in next)
        self.weight = tuple(_as_weight(w) for w in weight)
        nd = len(self.origin)
        if not (len(self.twin) == len(self.next) == len(self.weight) == nd):
            raise MalformedPermutation("dart arrays differ in length")
        if n is None:
            n = max(self.origin) + 1 if nd else 0
        self.n = int(n)
        if check:
            self._check_permutations()
        self.head = tuple(self.origin[t] for t in self.twin)
        prev = [0] * nd
        for d, e in enumerate(self.next):
            prev[e] = d
        self.prev = tuple(prev)

        face_of = [-1] * nd
        faces = []
        for d in range(nd):
            if face_of[d] >= 0:
                continue
            orbit = []
            e = d
            while face_of[e] < 0:
                face_of[e] = len(faces)
                orbit.append(e)
                e = self.next[self.twin[e]]
            if e != d:
                raise MalformedPermutation("face permutation is not a permutation")
            faces.append(tuple(orbit))
        self.face_of = tuple(face_of)
        self.faces = tuple(faces)
        self.boundary = frozenset(self.face_of[d] for d in boundary)

        out = [[] for _ in range(self.n)]
        seen = [False] * nd
        for d in range(nd):
            if seen[d]:
                continue
            v = self.origin[d]
            if out[v]:
                raise MalformedPermutation(f"darts at vertex {v} form more than one rotation cycle")
            e = d
            while not seen[e]:
                seen[e] = True
                out[v].append(e)
                e = self.next[e]
        self._out = tuple(tuple(r) for r in out)
        self.connected = self._is_connected()
        if check:
            if not allow_disconnected and not self.connected:
                raise Disconnected("graph is not connected")
            self._check_boundary()

    # -- validation -------------------------------------------------------

    def _check_permutations(self) -> None:
        nd = len(self.origin)
        if nd == 0 or nd % 2:
            raise MalformedPermutation("need a positive even number of darts")
        for d in range(nd):
            t = self.twin[d]
            if not 0 <= t < nd or t == d or self.twin[t] != d:
                raise MalformedPermutation(f"twin is not a fixed-point-free involution at dart {d}")
            if not 0 <= self.origin[d] < self.n:
                raise MalformedPermutation(f"dart {d} has origin outside 0..{self.n - 1}")
            if self.weight[d] < 0:
                raise NegativeWeight(f"dart {d} has negative weight {self.weight[d]}")
        if sorted(self.next) != list(range(nd)):
            raise MalformedPermutation("next is not a permutation of the darts")
        for d in range(nd):
            if self.origin[self.next[d]] != self.origin[d]:
                raise MalformedPermutation(f"next[{d}] leaves the origin vertex")
        used = set(self.origin)
        if len(used) != self.n:
            raise MalformedPermutation("every vertex needs at least one dart")

    def _check_boundary(self) -> None:
        seen: set[int] = set()
        for fid in self.boundary:
            verts = [self.origin[d] for d in self.faces[fid]]
            if len(set(verts)) != len(verts):
                raise NotSimple(f"boundary face {fid} is not a simple cycle")
            edges = {min(d, self.twin[d]) for d in self.faces[fid]}
            if len(edges) != len(verts):
                raise NotSimple(f"boundary face {fid} reuses an edge")
            if seen & set(verts):
                raise NotSimple("boundary cycles must be vertex-disjoint")
            seen.update(verts)
        if len(self.boundary) == len(self.faces):
            raise MalformedPermutation("at least one face must be interior")

    def _is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for d in self._out[v]:
                w = self.head[d]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # -- accessors --------------------------------------------------------

    @property
    def num_darts(self) -> int:
        return len(self.origin)

    @property
    def m(self) -> int:
        return len(self.origin) // 2

    def out_darts(self, v: int) -> tuple[int, ...]:
        """Darts leaving ``v`` in counterclockwise order."""
        return self._out[v]

    def dart(self, d: int) -> Dart:
        return Dart(d, self.origin[d], self.twin[d], self.next[d], self.weight[d])

    def edge_of(self, d: int) -> int:
        return min(d, self.twin[d])

    def edges(self) -> list[int]:
        return [d for d in range(self.num_darts) if d < self.twin[d]]

    def face_next(self, d: int) -> int:
        return self.next[self.twin[d]]

    def is_boundary_face(self, fid: int) -> bool:
        return fid in self.boundary

    def interior_faces(self) -> list[int]:
        return [f for f in range(len(self.faces)) if f not in self.boundary]

    def boundary_faces(self) -> list[int]:
        """Boundary face ids ordered by their smallest dart (B0, B1, ...)."""
        return sorted(self.boundary, key=lambda f: self.faces[f][0])

    def boundary_vertices(self) -> dict[int, int]:
        """Map vertex -> boundary face id for every vertex on a boundary."""
        res = {}
        for f in self.boundary:
            for d in self.faces[f]:
                res[self.origin[d]] = f
        return res

    def corner_face(self, x: int) -> int:
        """Face id of the corner between ``x`` and ``next[x]``."""
        return self.face_of[self.next[x]]

    def is_symmetric(self) -> bool:
        return all(self.weight[d] == self.weight[self.twin[d]] for d in range(self.num_darts))

    @property
    def stats(self) -> SurfaceStats:
        if not self.connected:
            raise Disconnected("stats are defined per connected component")
        b = len(self.boundary)
        f = len(self.faces) - b
        chi = self.n - self.m + f
        g2 = 2 - chi - b
        if g2 < 0 or g2 % 2:
            raise MalformedPermutation(f"inconsistent Euler characteristic chi={chi}, b={b}")
        return SurfaceStats(self.n, self.m, f, b, chi, g2 // 2)

    @property
    def genus(self) -> int:
        return self.stats.g

    # -- derived graphs ---------------------------------------------------

    def with_boundary(self, boundary_darts: Iterable[int]) -> "EmbeddedGraph":
        return EmbeddedGraph(self.origin, self.twin, self.next, self.weight, boundary_darts, self.n)

    def with_weights(self, weight: Sequence[float]) -> "EmbeddedGraph":
        return EmbeddedGraph(self.origin, self.twin, self.next, weight,
                             [self.faces[f][0] for f in self.boundary], self.n)

    def boundary_darts(self) -> list[int]:
        return [self.faces[f][0] for f in self.boundary_faces()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (self.n == other.n and self.origin == other.origin and self.twin == other.twin
                and self.next == other.next and self.weight == other.weight
                and self.boundary == other.boundary)

    def __hash__(self) -> int:
        return hash((self.n, self.origin, self.twin, self.next, self.weight, self.boundary))

    def __repr__(self) -> str:
        try:
            s = str(self.stats)
        except Exception:
            s = f"n={self.n} m={self.m} (disconnected)"
        return f"EmbeddedGraph({s})"


def _as_weight(w) -> float:
    if isinstance(w, str):
        if w.lower() in ("inf", "+inf", "infinity"):
            return INF
        w = int(w)
    if w == INF:
        return INF
    if isinstance(w, float):
        if not w.is_integer():
            return w
        return int(w)
    return w


def build_graph(rotations: Sequence[Sequence[int]], twin: Sequence[int],
                weight: Sequence[float], boundary: Iterable[int] = ()) -> EmbeddedGraph:
    """Build a graph from per-vertex counterclockwise dart lists."""
    nd = len(twin)
    origin = [-1] * nd
    nxt = [-1] * nd
    for v, rot in enumerate(rotations):
        for i, d in enumerate(rot):
            if not 0 <= d < nd or origin[d] != -1:
                raise MalformedPermutation(f"dart {d} listed twice or out of range")
            origin[d] = v
            nxt[d] = rot[(i + 1) % len(rot)]
    if -1 in origin:
        raise MalformedPermutation("some dart is missing from the rotation lists")
    return EmbeddedGraph(origin, twin, nxt, weight, boundary, len(rotations))


def trace_faces(g: EmbeddedGraph) -> list[tuple[int, ...]]:
    return list(g.faces)


# -- walks ----------------------------------------------------------------


@dataclass(frozen=True)
class CycleWalk:
    """A walk given as a sequence of darts; ``closed`` walks return to their start."""

    darts: tuple[int, ...]
    closed: bool = True
    length: float = 0

    @classmethod
    def of(cls, g: EmbeddedGraph, darts: Iterable[int], closed: bool = True) -> "CycleWalk":
        darts = tuple(int(d) for d in darts)
        if not darts:
            raise NotEmbeddedWalk("empty walk")
        for a, b in zip(darts, darts[1:]):
            if g.head[a] != g.origin[b]:
                raise NotEmbeddedWalk(f"darts {a} and {b} are not contiguous")
        if closed and g.head[darts[-1]] != g.origin[darts[0]]:
            raise NotEmbeddedWalk("walk does not close up")
        return cls(darts, closed, sum(g.weight[d] for d in darts))

    def __len__(self) -> int:
        return len(self.darts)

    def vertices(self, g: EmbeddedGraph) -> list[int]:
        vs = [g.origin[d] for d in self.darts]
        if not self.closed:
            vs.append(g.head[self.darts[-1]])
        return vs

    def start(self, g: EmbeddedGraph) -> int:
        return g.origin[self.darts[0]]

    def end(self, g: EmbeddedGraph) -> int:
        return g.head[self.darts[-1]]

    def reversed(self, g: EmbeddedGraph) -> "CycleWalk":
        return CycleWalk.of(g, [g.twin[d] for d in reversed(self.darts)], self.closed)

    def rotated_to(self, g: EmbeddedGraph, vertex: int) -> "CycleWalk":
        for i, d in enumerate(self.darts):
            if g.origin[d] == vertex:
                return CycleWalk(self.darts[i:] + self.darts[:i], True, self.length)
        raise ValueError(f"vertex {vertex} is not on the walk")


def is_simple(g: EmbeddedGraph, w: CycleWalk) -> bool:
    vs = w.vertices(g)
    edges = [g.edge_of(d) for d in w.darts]
    return len(set(vs)) == len(vs) and len(set(edges)) == len(edges)


def require_simple(g: EmbeddedGraph, w: CycleWalk) -> None:
    if not is_simple(g, w):
        raise NotSimple("walk is not simple")


# -- left/right sides of a simple cycle or arc ----------------------------


class Side(enum.Enum):
    ENTERS_LEFT = "enters-left"
    ENTERS_RIGHT = "enters-right"
    LEAVES_LEFT = "leaves-left"
    LEAVES_RIGHT = "leaves-right"
    ALONG = "along"
    UNRELATED = "unrelated"


class PathSides:
    """Which darts leave a simple cycle or arc ``p`` into its left side.

    At an interior vertex ``v_i`` the left side is the open counterclockwise
    wedge from the outgoing dart of ``p`` to the reversed incoming dart.  An
    arc's endpoints use the boundary corner there as the missing neighbour,
    so the boundary dart towards ``t_0`` counts as left at ``v_0``.
    """

    def __init__(self, g: EmbeddedGraph, p: CycleWalk):
        require_simple(g, p)
        self.graph = g
        self.path = p
        darts = p.darts
        k = len(darts)
        self.vertices = frozenset(p.vertices(g))
        self.along = frozenset(darts) | frozenset(g.twin[d] for d in darts)
        left: set[int] = set()
        if p.closed:
            for i in range(k):
                left.update(_wedge(g, darts[i], g.twin[darts[i - 1]]))
        else:
            for i in range(1, k):
                left.update(_wedge(g, darts[i], g.twin[darts[i - 1]]))
            x = _boundary_corner(g, g.origin[darts[0]])
            # from next(o) through x inclusive
            y = darts[0]
            while y != x:
                y = g.next[y]
                left.add(y)
            a = g.twin[darts[-1]]
            x = _boundary_corner(g, g.head[darts[-1]])
            z = g.next[x]
            while z != a:
                left.add(z)
                z = g.next[z]
        self.left = frozenset(left)

    def is_left(self, x: int) -> bool:
        return x in self.left

    def count(self, d: int) -> int:
        """Signed crossing contribution: +1 enters from the left, -1 leaves from the left."""
        g = self.graph
        return (g.twin[d] in self.left) - (d in self.left)

    def parity(self, d: int) -> int:
        return (self.graph.twin[d] in self.left) ^ (d in self.left)

    def side(self, d: int, end: str | None = None) -> Side:
        g = self.graph
        if d in self.along:
            return Side.ALONG
        at_head = g.head[d] in self.vertices
        at_origin = g.origin[d] in self.vertices
        if end is None:
            end = "head" if at_head else "origin"
        if end == "head":
            if not at_head:
                return Side.UNRELATED
            return Side.ENTERS_LEFT if g.twin[d] in self.left else Side.ENTERS_RIGHT
        if not at_origin:
            return Side.UNRELATED
        return Side.LEAVES_LEFT if d in self.left else Side.LEAVES_RIGHT


def _wedge(g: EmbeddedGraph, o: int, a: int) -> list[int]:
    res = []
    x = g.next[o]
    while x != a:
        if x == o:
            raise NotSimple("incoming and outgoing darts are not at the same vertex")
        res.append(x)
        x = g.next[x]
    return res


def _boundary_corner(g: EmbeddedGraph, v: int) -> int:
    for x in g.out_darts(v):
        if g.corner_face(x) in g.boundary:
            return x
    raise NotEmbeddedWalk(f"arc endpoint {v} is not on a boundary face")


def edge_side(g: EmbeddedGraph, p: CycleWalk, d: int, end: str | None = None) -> Side:
    """Classify dart ``d`` relative to the simple cycle or arc ``p``.

    A dart with both ends on ``p`` both leaves and enters it; ``end`` picks
    which end to report (default: the head when it lies on ``p``).
    """
    return PathSides(g, p).side(d, end)
