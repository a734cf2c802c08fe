import random

import pytest
from hypothesis import given, settings, strategies as st

from surfcyc import INF, CycleWalk
from surfcyc import fixtures as F
from surfcyc.covers import (CoverKind, cyclic_double_cover, lift_walk, project_walk,
                            restricted_cyclic_cover)
from surfcyc.errors import BasepointMismatch, NotCycle, NotEmbeddedWalk, OutOfRange, Separating
from surfcyc.homology import boundary_arcs, crossing_count, crossing_parity, partial_homology_basis
from surfcyc.oracle import enumerate_simple_cycles, is_contractible
from surfcyc.paths import adjacency, dijkstra
from surfcyc.surgery import collar


def gb(g):
    s = g.stats
    return s.g, s.b


def test_double_cover_of_t1(t1):
    a, b = partial_homology_basis(t1).cycles
    cov = cyclic_double_cover(t1, a)
    assert cov.kind is CoverKind.DOUBLE
    assert (cov.graph.n, cov.graph.m) == (2, 4)
    assert cov.graph.stats.g <= 2
    lifted = lift_walk(cov, b, (0, 0))
    assert cov.pi[cov.graph.head[lifted.darts[-1]]] == (0, 1)
    assert not lifted.closed


def test_double_cover_of_cylinder_over_arc(cyl3):
    arc = boundary_arcs(cyl3).arcs[0]
    cov = cyclic_double_cover(cyl3, arc)
    assert cov.graph.n == 2 * cyl3.n and cov.graph.m == 2 * cyl3.m
    waist = CycleWalk.of(cyl3, [2 * (3 + x) for x in range(3)])
    v = waist.start(cyl3)
    up = lift_walk(cov, waist, (v, 0))
    assert cov.pi[cov.graph.head[up.darts[-1]]] == (v, 1)


def test_double_cover_counts_on_4x4_grid():
    g = F.torus_grid(4, 4)
    for lam in partial_homology_basis(g).cycles:
        h = cyclic_double_cover(g, lam).graph
        assert (h.n, h.m, h.stats.f) == (2 * g.n, 2 * g.m, 2 * g.stats.f)
        assert h.stats.g <= 2 * g.stats.g


def test_separating_lambda_is_rejected():
    g = F.cube()
    face = CycleWalk.of(g, g.faces[0])
    with pytest.raises(Separating):
        cyclic_double_cover(g, face)
    with pytest.raises(Separating):
        restricted_cyclic_cover(g, face)


@pytest.mark.parametrize("make, want", [
    (F.torus1, (0, 2)),
    (F.octagon, (5, 2)),
    (lambda: F.torus_grid(3, 3), (0, 2)),
    (lambda: collar(F.opened_torus_grid()), (0, 7)),
])
def test_restricted_cover_genus_and_boundaries(make, want):
    g = make()
    for lam in partial_homology_basis(g).cycles:
        cov = restricted_cyclic_cover(g, lam)
        assert gb(cov.graph) == want
        assert cov.graph.stats.chi == 5 * g.stats.chi
        assert cov.graph.n <= 6 * g.n and cov.graph.m <= 6 * g.m
        assert cov.lam_minus in cov.graph.boundary and cov.lam_plus in cov.graph.boundary
        assert {z.level for z in cov.pi} == {1, 2, 3, 4, 5, 6}
        six = {z.base for z in cov.pi if z.level == 6}
        assert six == set(lam.vertices(g))


def test_restricted_cover_rejects_arcs_and_boundary_contact(cyl3):
    arc = boundary_arcs(cyl3).arcs[0]
    with pytest.raises(NotCycle):
        restricted_cyclic_cover(cyl3, arc)
    g = F.opened_torus_grid()
    touching = [c for c in partial_homology_basis(g).cycles
                if set(c.vertices(g)) & g.boundary_vertices().keys()]
    assert touching
    with pytest.raises(NotEmbeddedWalk):
        restricted_cyclic_cover(g, touching[0])


def test_lambda_lifts_to_closed_loops(grid3):
    # darts along lam have count zero, so every lift of lam stays on its level
    lam = partial_homology_basis(grid3).cycles[0]
    cov = restricted_cyclic_cover(grid3, lam)
    s = lam.start(grid3)
    for level in range(1, 7):
        up = lift_walk(cov, lam, (s, level))
        assert up.closed
        assert {cov.pi[cov.graph.origin[d]].level for d in up.darts} == {level}


def test_lam_plus_projects_to_lambda(grid3):
    lam = partial_homology_basis(grid3).cycles[0]
    cov = restricted_cyclic_cover(grid3, lam)
    for f in (cov.lam_plus, cov.lam_minus):
        rim = CycleWalk.of(cov.graph, cov.graph.faces[f])
        image = project_walk(cov, rim)
        assert {grid3.edge_of(d) for d in image.darts} == {grid3.edge_of(d) for d in lam.darts}


def test_lift_errors(t1):
    a, b = partial_homology_basis(t1).cycles
    cov = restricted_cyclic_cover(t1, a)
    with pytest.raises(OutOfRange):
        lift_walk(cov, CycleWalk.of(t1, [2] * 6), (0, 1))
    with pytest.raises(OutOfRange):
        lift_walk(cov, b, (0, 7))
    g = F.torus_grid(3, 3)
    cov = cyclic_double_cover(g, partial_homology_basis(g).cycles[0])
    with pytest.raises(BasepointMismatch):
        lift_walk(cov, CycleWalk.of(g, [0, 2, 4]), (5, 0))


def test_cover_faces_project_to_faces(grid3):
    for lam in partial_homology_basis(grid3).cycles:
        for cov in (cyclic_double_cover(grid3, lam), restricted_cyclic_cover(grid3, lam)):
            h = cov.graph
            for f, darts in enumerate(h.faces):
                if f in h.boundary:
                    continue
                base = [cov.dart_pi[d] for d in darts]
                assert grid3.face_of[base[0]] not in grid3.boundary
                assert sorted(base) == sorted(grid3.faces[grid3.face_of[base[0]]])


def _random_closed_walk(g, rng, k):
    while True:
        v0 = rng.randrange(g.n)
        v, out = v0, []
        for _ in range(k):
            d = rng.choice(g.out_darts(v))
            out.append(d)
            v = g.head[d]
        # close with a shortest path back
        dist, parent = dijkstra(adjacency(g), v)
        if v0 in dist:
            tail, x = [], v0
            while parent[x] is not None:
                u, d = parent[x]
                tail.append(d)
                x = u
            walk = out + tail[::-1]
            if walk:
                return CycleWalk.of(g, walk)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2 ** 30), st.integers(1, 14))
def test_lift_closed_iff_count_zero(seed, k):
    g = F.torus_grid(3, 4)
    rng = random.Random(seed)
    lam = partial_homology_basis(g).cycles[seed % 2]
    cov = restricted_cyclic_cover(g, lam)
    w = _random_closed_walk(g, rng, k)
    c = crossing_count(g, lam, w).value
    try:
        up = lift_walk(cov, w, (w.start(g), 3))
    except OutOfRange:
        assert abs(c) >= 1
        return
    assert up.closed == (c == 0)
    again = project_walk(cov, up, closed=True)
    assert again.darts == w.darts and again.length == w.length


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 30), st.integers(1, 14))
def test_double_cover_lift_ends_at_parity(seed, k):
    g = F.torus_grid(4, 3)
    rng = random.Random(seed)
    lam = partial_homology_basis(g).cycles[seed % 2]
    cov = cyclic_double_cover(g, lam)
    w = _random_closed_walk(g, rng, k)
    s = w.start(g)
    up = lift_walk(cov, w, (s, 0))
    assert cov.pi[cov.graph.head[up.darts[-1]]] == (s, crossing_parity(g, lam, w).value)


def test_shortest_paths_lift_to_shortest_paths():
    rng = random.Random(3)
    g = F.torus_grid(3, 3, lambda d: rng.randint(1, 9))
    lam = partial_homology_basis(g).cycles[0]
    cov = cyclic_double_cover(g, lam)
    base_adj, cov_adj = adjacency(g), adjacency(cov.graph)
    for s in range(g.n):
        dist, parent = dijkstra(base_adj, s)
        cdist, _ = dijkstra(cov_adj, cov.vertex(s, 0))
        for t in range(g.n):
            # the lift of the base shortest path ends at some level; its length is the cover distance
            path, x = [], t
            while parent[x] is not None:
                u, d = parent[x]
                path.append(d)
                x = u
            if not path:
                continue
            up = lift_walk(cov, CycleWalk.of(g, path[::-1], closed=False), (s, 0))
            end = cov.graph.head[up.darts[-1]]
            assert cdist[end] == dist[t] == up.length


def test_shortest_odd_path_projects_to_odd_cycle(grid3):
    lam = partial_homology_basis(grid3).cycles[0]
    cov = cyclic_double_cover(grid3, lam)
    s = lam.start(grid3)
    dist, parent = dijkstra(adjacency(cov.graph), cov.vertex(s, 0))
    path, x = [], cov.vertex(s, 1)
    while parent[x] is not None:
        u, d = parent[x]
        path.append(d)
        x = u
    image = project_walk(cov, CycleWalk.of(cov.graph, path[::-1], closed=False), closed=True)
    assert image.length == dist[cov.vertex(s, 1)] == 3
    assert crossing_parity(grid3, lam, image).value == 1


def test_contractibility_transfers_to_cover(t1):
    a, _ = partial_homology_basis(t1).cycles
    cov = restricted_cyclic_cover(t1, a)
    checked = 0
    for c in enumerate_simple_cycles(cov.graph, max_weight=4):
        image = project_walk(cov, c)
        if len(set(image.vertices(t1))) != len(image.darts) and len(image.darts) > 1:
            continue
        if len({t1.edge_of(d) for d in image.darts}) != len(image.darts):
            continue
        assert is_contractible(cov.graph, c) == is_contractible(t1, image)
        checked += 1
    assert checked > 0
