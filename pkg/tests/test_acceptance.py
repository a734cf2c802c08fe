"""Acceptance criteria, checked over the shipped corpus.

Each test records one PASS/FAIL line.  The lines are echoed as the tests
run and printed together in the terminal summary (see conftest.py).  The
corpus is small enough that every simple cycle of every instance can be
enumerated, so the invariant checks below are exhaustive rather than sampled.
"""

import math
import random
import time

import pytest
from conftest import ACCEPTANCE

from surfcyc import INF, CycleWalk, cut_along, paste_all_disks
from surfcyc import fixtures as F
from surfcyc.covers import cyclic_double_cover, lift_walk, project_walk, restricted_cyclic_cover
from surfcyc.directed import (shortest_non_contractible_cycle, shortest_non_null_homologous_cycle,
                              shortest_non_separating_cycle, shortest_odd_crossing_cycle)
from surfcyc.errors import NoSuchCycle, OutOfRange
from surfcyc.homology import (boundary_arcs, crossing_count, crossing_parity, greedy_tree_cotree,
                              partial_homology_basis)
from surfcyc.oracle import CycleClass, brute_force_shortest, enumerate_simple_cycles, is_contractible, is_separating
from surfcyc.paths import adjacency, dijkstra
from surfcyc.surface import PathSides
from surfcyc.surgery import collar
from surfcyc.undirected import (undirected_shortest_non_contractible,
                                undirected_shortest_non_null_homologous,
                                undirected_shortest_non_separating)

DIRECTED = {
    CycleClass.NON_SEPARATING: shortest_non_separating_cycle,
    CycleClass.NON_CONTRACTIBLE: shortest_non_contractible_cycle,
    CycleClass.NON_NULL_HOMOLOGOUS: shortest_non_null_homologous_cycle,
}
UNDIRECTED = {
    CycleClass.NON_SEPARATING: undirected_shortest_non_separating,
    CycleClass.NON_CONTRACTIBLE: undirected_shortest_non_contractible,
    CycleClass.NON_NULL_HOMOLOGOUS: undirected_shortest_non_null_homologous,
}


def record(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def length_of(fn, *args):
    try:
        return str(fn(*args).length)
    except NoSuchCycle:
        return "NoSuchCycle"


@pytest.fixture(scope="session")
def oracle(corpus):
    """Fresh brute-force answers, keyed by (instance name, class)."""
    return {(inst.name, cls): length_of(brute_force_shortest, inst.graph, cls)
            for inst in corpus for cls in CycleClass}


@pytest.fixture(scope="session")
def cycles(corpus):
    """Every simple cycle of every corpus instance."""
    return {inst.name: list(enumerate_simple_cycles(inst.graph)) for inst in corpus}


def basis_of(g):
    return partial_homology_basis(g).cycles if paste_all_disks(g).stats.g else []


# -- oracle equivalence --------------------------------------------------------


def test_directed_oracle_equivalence(corpus, oracle):
    t0 = time.perf_counter()
    stats = [i.graph.stats for i in corpus]
    shape_ok = (len(corpus) >= 100
                and all(i.graph.n <= 14 for i in corpus)
                and max(s.g for s in stats) == 2 and max(s.b for s in stats) == 3
                and any(not i.graph.is_symmetric() for i in corpus)
                and all(1 <= w <= 20 for i in corpus if i.tags["kind"] == "random"
                        for w in i.graph.weight))
    bad = []
    for inst in corpus:
        for cls, fn in DIRECTED.items():
            want = oracle[(inst.name, cls)]
            got = length_of(fn, inst.graph)
            if got != want or inst.expected(cls) != want:
                bad.append(f"{inst.name}/{cls.value}: got {got}, oracle {want}, tag {inst.expected(cls)}")
    took = time.perf_counter() - t0
    n = 3 * len(corpus)
    record("directed oracle equivalence", shape_ok and not bad,
           f"{n - len(bad)}/{n} exact over {len(corpus)} instances in {took:.1f}s"
           + ("" if shape_ok else " (corpus shape out of bounds)") + "".join("; " + b for b in bad[:5]))


def test_undirected_oracle_equivalence(corpus, oracle):
    t0 = time.perf_counter()
    sym = [i for i in corpus if i.graph.is_symmetric()]
    bad = []
    for inst in sym:
        for cls, fn in UNDIRECTED.items():
            want = oracle[(inst.name, cls)]
            got = length_of(fn, inst.graph)
            if got != want:
                bad.append(f"{inst.name}/{cls.value}: got {got}, oracle {want}")
    n = 3 * len(sym)
    record("undirected oracle equivalence", bool(sym) and not bad,
           f"{n - len(bad)}/{n} exact over {len(sym)} symmetric instances in "
           f"{time.perf_counter() - t0:.1f}s" + "".join("; " + b for b in bad[:5]))


# -- structure -----------------------------------------------------------------


def test_structural_counts(corpus):
    bad = []
    checked = {"L": 0, "double": 0, "restricted": 0}
    for inst in corpus:
        g = inst.graph
        s = g.stats
        if s.b == 0:
            L = greedy_tree_cotree(g).L
            checked["L"] += 1
            if len(L) != 2 * s.g:
                bad.append(f"{inst.name}: |L|={len(L)}")
        lams = basis_of(g) + (boundary_arcs(g).arcs if s.b >= 2 else [])
        for lam in lams:
            h = cyclic_double_cover(g, lam).graph
            checked["double"] += 1
            if (h.n, h.m) != (2 * g.n, 2 * g.m) or h.stats.g > 2 * s.g:
                bad.append(f"{inst.name}: double cover {h.stats}")
        if s.g == 0:
            continue
        # lam must avoid the holes; collaring keeps the surface and its cycles
        hc = collar(g) if s.b else g
        for lam in partial_homology_basis(hc).cycles:
            r = restricted_cyclic_cover(hc, lam).graph.stats
            checked["restricted"] += 1
            if (r.g, r.b) != (5 * s.g - 5, 5 * s.b + 2):
                bad.append(f"{inst.name}: restricted cover g={r.g} b={r.b}")
    record("structural counts", not bad,
           f"|L|=2g on {checked['L']} closed instances, {checked['double']} double covers, "
           f"{checked['restricted']} restricted covers" + "".join("; " + b for b in bad[:5]))


# -- invariant suite -----------------------------------------------------------


def _inv_separating_zero(corpus, cycles):
    n = 0
    for inst in corpus:
        g = inst.graph
        lams = [PathSides(g, lam) for lam in basis_of(g)]
        if not lams:
            continue
        for c in cycles[inst.name]:
            if not is_separating(g, c):
                continue
            for s in lams:
                n += 1
                if crossing_count(g, s, c).value != 0:
                    return False, f"{inst.name}: separating cycle {c.darts} has nonzero count"
    return n > 0, f"{n} (separating cycle, basis cycle) pairs"


def _walk_with_prefix(g, sides, rng, k):
    """Random closed walk (random steps, then a shortest path home) and the
    largest absolute running crossing count along it."""
    adj = adjacency(g)
    for _ in range(50):
        v0 = rng.randrange(g.n)
        v, out = v0, []
        for _ in range(k):
            ds = [d for d in g.out_darts(v) if g.weight[d] != INF]
            d = rng.choice(ds)
            out.append(d)
            v = g.head[d]
        dist, parent = dijkstra(adj, v)
        if v0 not in dist:
            continue
        tail, x = [], v0
        while parent[x] is not None:
            u, d = parent[x]
            tail.append(d)
            x = u
        walk = out + tail[::-1]
        if not walk:
            continue
        run = peak = 0
        for d in walk:
            run += sides.count(d)
            peak = max(peak, abs(run))
        return CycleWalk.of(g, walk), peak
    return None, 0


def _inv_lift_closed(corpus):
    rng = random.Random(20)
    n = closed = 0
    for inst in corpus:
        g = inst.graph
        if g.stats.g == 0:
            continue
        hc = collar(g) if g.stats.b else g
        for lam in partial_homology_basis(hc).cycles:
            cov = restricted_cyclic_cover(hc, lam)
            sides = PathSides(hc, lam)
            for _ in range(25):
                w, peak = _walk_with_prefix(hc, sides, rng, rng.randint(1, 3 * hc.n))
                if w is None:
                    continue
                c = crossing_count(hc, sides, w).value
                try:
                    up = lift_walk(cov, w, (w.start(hc), 3))
                except OutOfRange:
                    if peak <= 1:
                        return False, f"{inst.name}: lift left the cover with peak {peak}"
                    continue
                n += 1
                closed += up.closed
                if up.closed != (c == 0):
                    return False, f"{inst.name}: lift closed={up.closed} but count {c}"
    return n > 0 and 0 < closed < n, f"{n} walks lifted, {closed} closed, all with count 0"


def _inv_odd_crossing(corpus, cycles):
    n = 0
    for inst in corpus:
        g = inst.graph
        lams = basis_of(g) + (boundary_arcs(g).arcs if g.stats.b >= 2 else [])
        for lam in lams:
            fast = length_of(shortest_odd_crossing_cycle, g, lam)
            cov = cyclic_double_cover(g, lam)
            adj = adjacency(cov.graph)
            best = INF
            for s in set(lam.vertices(g)):
                dist, _ = dijkstra(adj, cov.vertex(s, 0))
                best = min(best, dist.get(cov.vertex(s, 1), INF))
            sides = PathSides(g, lam)
            direct = min((c.length for c in cycles[inst.name]
                          if crossing_parity(g, sides, c).value), default=INF)
            want = "NoSuchCycle" if best == INF else str(best)
            n += 1
            if not (fast == want and direct == best):
                return False, f"{inst.name}: search {fast}, cover {best}, enumeration {direct}"
    return n > 0, f"{n} lambdas: search = cover distance = enumeration"


def _inv_lifted_paths(corpus):
    n = 0
    for inst in corpus:
        g = inst.graph
        lams = basis_of(g) + (boundary_arcs(g).arcs if g.stats.b >= 2 else [])
        if not lams:
            continue
        base_adj = adjacency(g)
        cov = cyclic_double_cover(g, lams[0])
        cov_adj = adjacency(cov.graph)
        for s in range(g.n):
            dist, parent = dijkstra(base_adj, s)
            cdist, _ = dijkstra(cov_adj, cov.vertex(s, 0))
            for t in dist:
                path, x = [], t
                while parent[x] is not None:
                    u, d = parent[x]
                    path.append(d)
                    x = u
                if not path:
                    continue
                up = lift_walk(cov, CycleWalk.of(g, path[::-1], closed=False), (s, 0))
                end = cov.graph.head[up.darts[-1]]
                n += 1
                if not cdist[end] == dist[t] == up.length:
                    return False, f"{inst.name}: lifted path {up.length} vs cover distance {cdist[end]}"
    return n > 0, f"{n} lifted shortest paths are shortest in the cover"


def _inv_contractible(corpus, cycles):
    n = both = 0
    for inst in corpus:
        g = inst.graph
        if g.stats.g == 0:
            continue
        # collaring keeps the old dart ids, so the cycles of g are cycles of hc
        hc = collar(g) if g.stats.b else g
        base = {}
        for lam in partial_homology_basis(hc).cycles:
            cov = restricted_cyclic_cover(hc, lam)
            sides = PathSides(hc, lam)
            for c in cycles[inst.name]:
                if crossing_count(hc, sides, c).value != 0:
                    continue
                up = lift_walk(cov, c, (c.start(hc), 3))
                if c.darts not in base:
                    base[c.darts] = is_contractible(hc, c)
                a, b = base[c.darts], is_contractible(cov.graph, up)
                again = project_walk(cov, up)
                n += 1
                both += a
                if a != b or again.darts != c.darts:
                    return False, f"{inst.name}: base {a}, cover {b} for {c.darts}"
    return n > 0 and 0 < both < n, f"{n} simple cycles, {both} contractible on both levels"


def test_inv_suite(corpus, cycles):
    parts = [
        ("i", _inv_separating_zero(corpus, cycles)),
        ("ii", _inv_lift_closed(corpus)),
        ("iii", _inv_odd_crossing(corpus, cycles)),
        ("iv", _inv_lifted_paths(corpus)),
        ("v", _inv_contractible(corpus, cycles)),
    ]
    ok = all(p[1][0] for p in parts)
    record("invariant suite", ok, "; ".join(f"({k}) {'ok' if r[0] else 'FAIL'} {r[1]}" for k, r in parts))


# -- homology basis and boundary arcs ------------------------------------------


def test_basis_coverage(corpus, cycles):
    n = 0
    bad = []
    for inst in corpus:
        g = inst.graph
        if g.stats.b or g.stats.g == 0:
            continue
        lams = [PathSides(g, lam) for lam in partial_homology_basis(g).cycles]
        for c in cycles[inst.name]:
            if is_separating(g, c):
                continue
            n += 1
            if not any(crossing_parity(g, s, c).value for s in lams):
                bad.append(f"{inst.name}: {c.darts}")
    record("homology-basis coverage", n > 0 and not bad,
           f"{n - len(bad)}/{n} non-separating cycles cross a basis cycle oddly"
           + "".join("; " + b for b in bad[:5]))


def _face_component(cut, d):
    """Component index of the region to the right of base dart ``d`` after the cut."""
    i = cut.right_copy.get(d)
    if i is None:
        i = cut.dart_map.index(d)
    comps = cut.components()
    for k, comp in enumerate(comps):
        if i in comp.dart_map:
            return k
    raise AssertionError("dart in no component")


def test_boundary_separation(corpus, cycles):
    n = 0
    bad = []
    for inst in corpus:
        g = inst.graph
        if g.stats.b < 2:
            continue
        arcs = [PathSides(g, a) for a in boundary_arcs(g).arcs]
        rims = [g.faces[f][0] for f in g.boundary_faces()]
        h = paste_all_disks(g)
        for c in cycles[inst.name]:
            cut = cut_along(h, c)
            if cut.graph.connected:
                continue
            side = [_face_component(cut, d) for d in rims]
            for i in range(1, len(rims)):
                if side[i] == side[0]:
                    continue
                n += 1
                if crossing_parity(g, arcs[i - 1], c).value != 1:
                    bad.append(f"{inst.name}: {c.darts} vs arc {i}")
    record("boundary separation", n > 0 and not bad,
           f"{n - len(bad)}/{n} (cycle, arc) pairs cross oddly" + "".join("; " + b for b in bad[:5]))


# -- scaling (informational) ---------------------------------------------------


def test_scaling_report():
    rows = []
    for k in (5, 10, 20, 40):
        rng = random.Random(k)
        g = F.torus_grid(k, k, lambda d: rng.randint(1, 20))
        t0 = time.perf_counter()
        c = shortest_non_contractible_cycle(g)
        rows.append((g.n, time.perf_counter() - t0, c.length))
    # least-squares slope of log t against log n over the three larger sizes
    pts = [(math.log(n), math.log(t)) for n, t, _ in rows[1:] if t > 0]
    if len(pts) >= 2:
        mx = sum(x for x, _ in pts) / len(pts)
        my = sum(y for _, y in pts) / len(pts)
        slope = (sum((x - mx) * (y - my) for x, y in pts)
                 / sum((x - mx) ** 2 for x, _ in pts))
    else:
        slope = float("nan")
    detail = ", ".join(f"n={n}: {t:.2f}s (len {ln})" for n, t, ln in rows)
    line = f"INFO  scaling (non-gating): {detail}; fitted exponent {slope:.2f} for n >= 100"
    ACCEPTANCE.append(line)
    print(line)
