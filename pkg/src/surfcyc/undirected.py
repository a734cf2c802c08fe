"""Shortest non-trivial cycles in undirected graphs by crossing sequences.

The surface is cut into a polygon by a greedy system of loops (closed
surfaces) or arcs (surfaces with boundary).  Some shortest cycle of each
class crosses every generator at most twice and never crosses one and
immediately crosses it back, so its pieces inside the polygon form a small
non-crossing chord diagram.  We enumerate those diagrams, keep the ones that
close up into a single curve of the wanted class, and realize each as a
shortest path through copies of the polygon glued in crossing order.
"""

from __future__ import annotations

import heapq
import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import AsymmetricWeights, GenusZero, NoSuchCycle, TooLarge
from .generators import (GeneratorKind, SystemOfGenerators, greedy_system_of_arcs,
                         greedy_system_of_loops)
from .surface import INF, CycleWalk, EmbeddedGraph, is_simple
from .surgery import paste_all_disks

DEFAULT_MAX_GENERATORS = 12
PLUS, MINUS = 1, -1     # crossing a generator from its left to its right is PLUS


def max_generators() -> int:
    v = os.environ.get("SURFCYC_MAX_GENERATORS")
    return int(v) if v else DEFAULT_MAX_GENERATORS


# -- schema, triangulations, sequences -------------------------------------


@dataclass(frozen=True)
class DualizedSchema:
    """One vertex per polygon side, in counterclockwise order.

    ``labels[i]`` is (generator, "L" or "R"); any two distinct sides may be
    joined by a chord, so the candidate edges are all pairs.
    """

    labels: tuple

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def num_generators(self) -> int:
        return len({g for g, _ in self.labels})

    def mate(self, i: int) -> int:
        g, s = self.labels[i]
        return self.labels.index((g, "R" if s == "L" else "L"))

    def edges(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(self.size), 2))

    @classmethod
    def of(cls, gens: SystemOfGenerators) -> "DualizedSchema":
        return cls(tuple(s.label for s in gens.sides))


@dataclass(frozen=True)
class WeightedTriangulation:
    """Chord multiplicities on the dualized schema.

    Only the nonzero weights are stored; every non-crossing weighted chord
    set extends to a triangulation by chords of weight zero, and we treat
    all those extensions as the same object.
    """

    schema: DualizedSchema
    weights: tuple       # sorted ((i, j), w) with i < j and w in {1, 2}

    def weight(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        return dict(self.weights).get((a, b), 0)

    def degree(self) -> list[int]:
        deg = [0] * self.schema.size
        for (i, j), w in self.weights:
            deg[i] += w
            deg[j] += w
        return deg


@dataclass(frozen=True)
class CrossingSequence:
    """Cyclic sequence of (generator, PLUS or MINUS) crossings."""

    entries: tuple

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " ".join(f"{_name(g)}{'+' if s > 0 else '-'}" for g, s in self.entries)

    def counts(self, k: int) -> list[int]:
        out = [0] * k
        for g, s in self.entries:
            out[g] += s
        return out

    def canonical(self) -> "CrossingSequence":
        """Smallest rotation of the sequence or of its reversal."""
        e = self.entries
        rev = tuple((g, -s) for g, s in reversed(e))
        cands = [x[i:] + x[:i] for x in (e, rev) for i in range(len(x))]
        return CrossingSequence(min(cands)) if cands else self


def _name(g: int) -> str:
    return chr(ord("a") + g) if g < 26 else f"g{g}"


def parse_sequence(text: str) -> CrossingSequence:
    """Inverse of ``str``: ``"a+ b-"`` -> ((0, 1), (1, -1))."""
    out = []
    for tok in text.split():
        name, sign = tok[:-1], tok[-1]
        g = int(name[1:]) if name.startswith("g") and len(name) > 1 else ord(name) - ord("a")
        out.append((g, PLUS if sign == "+" else MINUS))
    return CrossingSequence(tuple(out))


# -- enumeration ----------------------------------------------------------


def _matchings(points: tuple) -> list[tuple]:
    """Non-crossing perfect matchings of ``points`` (side labels in circular
    order) that never pair two points of the same side."""

    @lru_cache(maxsize=None)
    def rec(lo: int, hi: int) -> tuple:
        if lo >= hi:
            return ((),)
        out = []
        for j in range(lo + 1, hi, 2):
            if points[j] == points[lo]:
                continue
            for inner in rec(lo + 1, j):
                for rest in rec(j + 1, hi):
                    out.append(((lo, j),) + inner + rest)
        return tuple(out)

    return list(rec(0, len(points)))


def enumerate_weighted_triangulations(schema: DualizedSchema,
                                      cap: int | None = None) -> Iterator[WeightedTriangulation]:
    """Every weighted chord set with weights 1..2 that could carry one curve.

    A side may carry at most two crossings and both sides of a generator
    carry the same number, so we pick the crossing count (0, 1 or 2) of each
    generator, lay that many points on both of its sides and emit every
    non-crossing matching that avoids same-side chords.  Fewer crossings come
    first.  Each weighted chord set is produced once.
    """
    cap = max_generators() if cap is None else cap
    k = schema.num_generators
    if k > cap:
        raise TooLarge(f"{k} generators exceed the cap of {cap}")
    vectors = sorted(itertools.product((0, 1, 2), repeat=k), key=lambda c: (sum(c), c))
    for c in vectors:
        if not any(c):
            continue
        points = tuple(i for i, (g, _) in enumerate(schema.labels) for _ in range(c[g]))
        for m in _matchings(points):
            w: dict = {}
            for a, b in m:
                key = (points[a], points[b])
                w[key] = w.get(key, 0) + 1
            yield WeightedTriangulation(schema, tuple(sorted(w.items())))


def _point_order(t: WeightedTriangulation) -> list[list[int]]:
    """Partner side of each point, in counterclockwise order along every side.

    Chords leaving one side towards sides further round the polygon start
    earlier on it; this is the only order without crossings.
    """
    P = t.schema.size
    partners: list[list[int]] = [[] for _ in range(P)]
    for (i, j), w in t.weights:
        partners[i] += [j] * w
        partners[j] += [i] * w
    for i in range(P):
        partners[i].sort(key=lambda j: (j - i) % P, reverse=True)
    return partners


def triangulation_to_crossing_sequence(t: WeightedTriangulation) -> CrossingSequence | None:
    """The crossing sequence of the single curve ``t`` describes, or None.

    Points are paired inside the polygon by the chords (parallel chords
    nest) and across each generator by position.  None means the chords do
    not close up into exactly one curve, or a side count is unbalanced.
    """
    sch = t.schema
    P = sch.size
    partners = _point_order(t)
    mate = [sch.mate(i) for i in range(P)]
    if any(len(partners[i]) != len(partners[mate[i]]) for i in range(P)):
        return None
    # chord partner of point (i, a): the block of i's points going to j is
    # matched in reverse with the block of j's points going to i
    chord = {}
    for i in range(P):
        for a, j in enumerate(partners[i]):
            first_i = partners[i].index(j)
            off = a - first_i
            cnt = partners[i].count(j)
            first_j = partners[j].index(i)
            chord[(i, a)] = (j, first_j + cnt - 1 - off)
    total = sum(len(p) for p in partners)
    if total == 0:
        return None
    start = (0, 0) if partners[0] else next((i, 0) for i in range(P) if partners[i])
    seq = []
    cur = start
    seen = 0
    while True:
        j, b = chord[cur]
        g, s = sch.labels[j]
        seq.append((g, PLUS if s == "L" else MINUS))
        seen += 2
        # the point at index b along side j sits opposite index c-1-b on its mate
        cur = (mate[j], len(partners[j]) - 1 - b)
        if cur == start:
            break
        if seen > total:
            return None
    if seen != total:
        return None
    return CrossingSequence(tuple(seq))


def validate_crossing_sequence(x: CrossingSequence) -> bool:
    """At most two crossings per generator and no curls."""
    e = x.entries
    if not e:
        return False
    counts: dict = {}
    for g, _ in e:
        counts[g] = counts.get(g, 0) + 1
        if counts[g] > 2:
            return False
    for (g1, s1), (g2, s2) in zip(e, e[1:] + e[:1]):
        if len(e) > 1 and g1 == g2 and s1 == -s2:
            return False
    return True


def crossing_sequence_homology_class(x: CrossingSequence, k: int) -> tuple:
    """Z/2 class: parity of the number of crossings with each generator."""
    v = [0] * k
    for g, _ in x.entries:
        v[g] ^= 1
    return tuple(v)


def enumerate_sequences(gens_or_schema, cap=None) -> Iterator[CrossingSequence]:
    """Distinct valid canonical sequences, shortest first."""
    sch = gens_or_schema if isinstance(gens_or_schema, DualizedSchema) else DualizedSchema.of(gens_or_schema)
    yield from _sequence_list(sch, max_generators() if cap is None else cap)


def _trace_matching(points, chord, glue, labels):
    """Follow chord then glue from point 0; None unless every point is visited."""
    seq = []
    cur = 0
    for _ in range(len(points) // 2):
        j = chord[cur]
        g, s = labels[points[j]]
        seq.append((g, PLUS if s == "L" else MINUS))
        cur = glue[j]
        if cur == 0:
            break
    if cur != 0 or 2 * len(seq) != len(points):
        return None
    return CrossingSequence(tuple(seq))


@lru_cache(maxsize=32)
def _sequence_list(sch: DualizedSchema, cap: int) -> tuple:
    """Same stream as tracing every enumerated triangulation, done on the
    point matchings directly."""
    k = sch.num_generators
    if k > cap:
        raise TooLarge(f"{k} generators exceed the cap of {cap}")
    seen = set()
    out = []
    mate = [sch.mate(i) for i in range(sch.size)]
    for c in sorted(itertools.product((0, 1, 2), repeat=k), key=lambda c: (sum(c), c)):
        if not any(c):
            continue
        points = tuple(i for i, (g, _) in enumerate(sch.labels) for _ in range(c[g]))
        first = {}
        for a, i in enumerate(points):
            first.setdefault(i, a)
        # point a (index a - first[i] along side i) faces index c-1-that on the mate
        glue = [first[mate[i]] + c[sch.labels[i][0]] - 1 - (a - first[i])
                for a, i in enumerate(points)]
        chord = [0] * len(points)
        for m in _matchings(points):
            for a, b in m:
                chord[a], chord[b] = b, a
            x = _trace_matching(points, chord, glue, sch.labels)
            if x is None or not validate_crossing_sequence(x):
                continue
            x = x.canonical()
            if x not in seen:
                seen.add(x)
                out.append(x)
    out.sort(key=lambda x: (len(x), x.entries))
    return tuple(out)


# -- group words ------------------------------------------------------------


def _free_reduce(w: list) -> list:
    out: list = []
    for x in w:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    return out


def _inverse(w) -> list:
    return [(g, -s) for g, s in reversed(w)]


class SurfaceGroup:
    """Fundamental group read off from crossing words.

    A closed walk crossing generators in order x1 x2 ... gives the word
    x1 x2 ... .  With arcs the group is free on them.  With loops there is
    one relator, the crossings of a small circle around the basepoint.
    """

    def __init__(self, k: int, relator: list | None):
        self.k = k
        self.relator = relator
        self._conj: list = []
        if relator:
            r = list(relator)
            rs = [r, _inverse(r)]
            self._conj = [tuple(x[i:] + x[:i]) for x in rs for i in range(len(x))]

    @classmethod
    def of(cls, gens: SystemOfGenerators) -> "SurfaceGroup":
        k = len(gens.generators)
        if gens.kind is GeneratorKind.ARCS:
            return cls(k, None)
        h = gens.graph
        first = {w.darts[0]: i for i, w in enumerate(gens.generators)}
        last = {h.twin[w.darts[-1]]: i for i, w in enumerate(gens.generators)}
        rel = []
        for d in h.out_darts(gens.generators[0].start(h)):
            if d in first:
                rel.append((first[d], MINUS))
            if d in last:
                rel.append((last[d], PLUS))
        return cls(k, rel)

    def small_cancellation(self) -> bool:
        """True when every piece is shorter than a sixth of the relator (C'(1/6))."""
        if not self.relator:
            return True
        n = len(self.relator)
        longest = 0
        cs = list(dict.fromkeys(self._conj))
        for a, b in itertools.combinations(cs, 2):
            m = 0
            while m < n and a[m] == b[m]:
                m += 1
            longest = max(longest, m)
        return 6 * longest < n

    def is_trivial(self, word) -> bool:
        w = _free_reduce(list(word))
        if not w or self.relator is None:
            return not w
        if len(self.relator) == 4:
            # torus: the group is abelian
            return not any(CrossingSequence(tuple(w)).counts(self.k))
        if not self.small_cancellation():
            raise TooLarge("relator is not small-cancellation; cannot decide triviality")
        n = len(self.relator)
        changed = True
        while w and changed:
            changed = False
            for start in range(len(w)):
                for r in self._conj:
                    m = 0
                    while m < n and start + m < len(w) and w[start + m] == r[m]:
                        m += 1
                    if 2 * m > n:
                        w = _free_reduce(w[:start] + _inverse(list(r[m:])) + w[start + m:])
                        changed = True
                        break
                if changed:
                    break
        return not w


# -- realization ----------------------------------------------------------


@dataclass
class Realization:
    walk: CycleWalk              # walk of the base graph
    sequence: CrossingSequence
    simple: bool
    spread_darts: tuple = ()     # the same walk in the spread graph


class _Disk:
    """Adjacency of the cut disk plus where each side sits."""

    def __init__(self, gens: SystemOfGenerators):
        D = gens.disk.graph
        self.D = D
        self.adj = [[] for _ in range(D.n)]
        for d in range(D.num_darts):
            if D.weight[d] != INF:
                self.adj[D.origin[d]].append((D.weight[d], D.head[d], d))
        self.side = {s.label: s.verts for s in gens.sides}
        self.pos: list[dict] = [dict() for _ in range(D.n)]
        for s in gens.sides:
            for p, v in enumerate(s.verts):
                self.pos[v][s.label] = p


def _exit_entry(c):
    g, s = c
    return ((g, "L"), (g, "R")) if s == PLUS else ((g, "R"), (g, "L"))


def _chain_search(disk: _Disk, x: CrossingSequence, bound):
    """Shortest path through copies 0..k of the disk, copy j glued to copy
    j+1 along the sides of crossing j+1, from a vertex on the entry side of
    the last crossing in copy 0 to the same point in copy k."""
    k = len(x)
    ee = [_exit_entry(c) for c in x.entries]
    exits = [None] + [ee[j][0] for j in range(k)]     # crossing j leaves copy j-1 ...
    entries = [None] + [ee[j][1] for j in range(k)]   # ... and enters copy j
    last_entry = ee[-1][1]
    best = None
    for p, v0 in enumerate(disk.side[last_entry]):
        b = bound if best is None else min(bound, best[0])
        start, target = (0, v0), (k, v0)
        dist = {start: 0}
        parent = {start: None}
        heap = [(0, 0, start)]
        done = set()
        tick = 1
        while heap:
            dv, _, s = heapq.heappop(heap)
            if s in done:
                continue
            done.add(s)
            if s == target:
                break
            j, v = s
            moves = [(w, (j, h), d) for w, h, d in disk.adj[v]]
            here = disk.pos[v]
            if j < k and exits[j + 1] in here:
                moves.append((0, (j + 1, disk.side[entries[j + 1]][here[exits[j + 1]]]), None))
            if j > 0 and entries[j] in here:
                moves.append((0, (j - 1, disk.side[exits[j]][here[entries[j]]]), None))
            for w, t, d in moves:
                nd = dv + w
                if nd > b:
                    continue
                if t not in dist or nd < dist[t]:
                    dist[t] = nd
                    parent[t] = (s, d)
                    heapq.heappush(heap, (nd, tick, t))
                    tick += 1
        if target not in dist or dist[target] > b:
            continue
        darts = []
        s = target
        while parent[s] is not None:
            s, d = parent[s]
            if d is not None:
                darts.append(d)
        darts.reverse()
        cand = (dist[target], tuple(darts))
        if best is None or cand < best:
            best = cand
    return best


def shortest_cycle_for_crossing_sequence(g: EmbeddedGraph, gens: SystemOfGenerators,
                                         x: CrossingSequence, bound=INF,
                                         _disk: _Disk | None = None) -> Realization | None:
    """Shortest closed walk of ``g`` realizing crossing sequence ``x``, or None."""
    disk = _disk or _Disk(gens)
    r = _chain_search(disk, x, bound)
    if r is None:
        return None
    length, ddarts = r
    cut = gens.disk
    hdarts = tuple(cut.dart_map[d] for d in ddarts)
    base = gens.spread.project(hdarts)
    if not base:
        return None
    w = CycleWalk(tuple(base), True, length)
    return Realization(w, x, is_simple(g, w), hdarts)


# -- top level --------------------------------------------------------------


def _check_symmetric(g: EmbeddedGraph):
    if not g.is_symmetric():
        raise AsymmetricWeights("undirected mode needs weight(d) == weight(twin(d))")


def _key(r: Realization):
    return (r.walk.length, not r.simple, r.walk.darts)


def best_realization(g: EmbeddedGraph, gens: SystemOfGenerators, accept, cap=None) -> Realization | None:
    """Minimum realization over the valid sequences ``accept`` admits."""
    disk = _Disk(gens)
    best = None
    for x in enumerate_sequences(gens, cap):
        if not accept(x):
            continue
        bound = INF if best is None else best.walk.length
        r = shortest_cycle_for_crossing_sequence(g, gens, x, bound, disk)
        if r is not None and (best is None or _key(r) < _key(best)):
            best = r
    return best


def _loops(g, basepoint=0):
    return greedy_system_of_loops(g, basepoint)


def _class_filter(gens: SystemOfGenerators, want: str):
    k = len(gens.generators)
    if want == "nonhom":
        return lambda x: any(crossing_sequence_homology_class(x, k))
    group = SurfaceGroup.of(gens)
    return lambda x: not group.is_trivial(x.entries)


def _run(g, gens, want, what):
    r = best_realization(g, gens, _class_filter(gens, want))
    if r is None:
        raise NoSuchCycle(f"no finite {what} cycle")
    return r


def non_separating_realization(g: EmbeddedGraph, basepoint: int = 0) -> Realization:
    _check_symmetric(g)
    h = paste_all_disks(g)
    if h.stats.g == 0:
        raise GenusZero("every cycle separates a genus-zero surface")
    return _run(h, _loops(h, basepoint), "nonhom", "non-separating")


def non_contractible_realization(g: EmbeddedGraph, basepoint: int = 0) -> Realization:
    _check_symmetric(g)
    s = g.stats
    if s.g == 0 and s.b <= 1:
        raise NoSuchCycle("every cycle is contractible on a sphere or disk")
    gens = greedy_system_of_arcs(g) if s.b else _loops(g, basepoint)
    return _run(g, gens, "noncon", "non-contractible")


def non_null_homologous_realization(g: EmbeddedGraph, basepoint: int = 0) -> Realization:
    _check_symmetric(g)
    s = g.stats
    if s.g == 0 and s.b <= 1:
        raise NoSuchCycle("every cycle is null-homologous on a sphere or disk")
    gens = greedy_system_of_arcs(g) if s.b else _loops(g, basepoint)
    return _run(g, gens, "nonhom", "non-null-homologous")


def undirected_shortest_non_separating(g: EmbeddedGraph) -> CycleWalk:
    return non_separating_realization(g).walk


def undirected_shortest_non_contractible(g: EmbeddedGraph) -> CycleWalk:
    return non_contractible_realization(g).walk


def undirected_shortest_non_null_homologous(g: EmbeddedGraph) -> CycleWalk:
    return non_null_homologous_realization(g).walk
