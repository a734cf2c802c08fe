import pytest

from surfcyc import INF, CycleWalk
from surfcyc import fixtures as F
from surfcyc.covers import cyclic_double_cover
from surfcyc.directed import (odd_crossing_distances, shortest_non_contractible_cycle,
                              shortest_non_null_homologous_cycle, shortest_non_separating_cycle,
                              shortest_odd_crossing_cycle)
from surfcyc.errors import GenusZero, NoSuchCycle
from surfcyc.homology import boundary_arcs, crossing_parity, partial_homology_basis
from surfcyc.oracle import (CycleClass, enumerate_simple_cycles, is_contractible, is_null_homologous,
                            is_separating)
from surfcyc.paths import adjacency, dijkstra

SOLVERS = {
    CycleClass.NON_SEPARATING: shortest_non_separating_cycle,
    CycleClass.NON_CONTRACTIBLE: shortest_non_contractible_cycle,
    CycleClass.NON_NULL_HOMOLOGOUS: shortest_non_null_homologous_cycle,
}


def test_odd_crossing_on_t1(t1):
    a = partial_homology_basis(t1).cycles[0]
    c = shortest_odd_crossing_cycle(t1, a)
    assert c.length == 1 and c.darts in ((2,), (3,))
    assert crossing_parity(t1, a, c).value == 1


def test_odd_crossing_on_grid(grid3):
    for lam in partial_homology_basis(grid3).cycles:
        c = shortest_odd_crossing_cycle(grid3, lam)
        assert c.length == 3
        assert crossing_parity(grid3, lam, c).value == 1


def test_odd_crossing_over_cylinder_arc(cyl3):
    arc = boundary_arcs(cyl3).arcs[0]
    c = shortest_odd_crossing_cycle(cyl3, arc)
    assert c.length == 3 and not is_null_homologous(cyl3, c)


def test_odd_crossing_equals_double_cover_distance(grid3):
    """Minimum over s on lam of the (s,0) -> (s,1) distance in the explicit cover."""
    import random
    rng = random.Random(11)
    g = F.torus_grid(3, 3, lambda d: rng.randint(1, 20))
    for lam in partial_homology_basis(g).cycles:
        cov = cyclic_double_cover(g, lam)
        adj = adjacency(cov.graph)
        best = INF
        for s in set(lam.vertices(g)):
            dist, _ = dijkstra(adj, cov.vertex(s, 0))
            best = min(best, dist.get(cov.vertex(s, 1), INF))
        assert shortest_odd_crossing_cycle(g, lam).length == best
        # and against direct enumeration of odd-crossing simple cycles
        direct = min(c.length for c in enumerate_simple_cycles(g, best)
                     if crossing_parity(g, lam, c).value == 1)
        assert direct == best


def test_explicit_cover_search_agrees(grid3):
    lam = partial_homology_basis(grid3).cycles[0]
    rows = list(odd_crossing_distances(grid3, lam))
    assert [s for s, *_ in rows] == sorted(set(lam.vertices(grid3)))
    assert min(d for _, d, _, _ in rows) == 3
    for s, d, darts, cov in rows:
        assert sum(cov.graph.weight[x] for x in darts) == d


def test_heavy_column_is_avoided():
    # vertical edges in column 0 weigh 10
    k = l = 3
    heavy = {F.torus_grid_v(k, l, 0, y) for y in range(l)}
    g = F.torus_grid(k, l, lambda d: 10 if d - d % 2 in heavy else 1)
    c = shortest_non_separating_cycle(g)
    assert c.length == 3
    assert not is_separating(g, c)


def test_planar_inputs():
    with pytest.raises(GenusZero):
        shortest_non_separating_cycle(F.cube())
    for solver in SOLVERS.values():
        with pytest.raises(NoSuchCycle):
            solver(F.cube())
    disk = F.planar_from_coords([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (2, 0)], boundary=[1])
    with pytest.raises(NoSuchCycle):
        shortest_non_contractible_cycle(disk)


def test_cylinder_examples(cyl3):
    assert shortest_non_null_homologous_cycle(cyl3).length == 3
    assert shortest_non_contractible_cycle(cyl3).length == 3
    with pytest.raises(GenusZero):
        shortest_non_separating_cycle(cyl3)


def test_closed_torus_nonhom_equals_nonsep(grid3, t1):
    for g in (grid3, t1, F.octagon()):
        assert shortest_non_null_homologous_cycle(g).length == shortest_non_separating_cycle(g).length


def test_pants_nonhom_separates_two_boundaries():
    g = F.pants()
    c = shortest_non_null_homologous_cycle(g)
    assert c.length == 4
    assert is_separating(g, c) and not is_null_homologous(g, c)


def test_grid_noncon(grid3):
    assert shortest_non_contractible_cycle(grid3).length == 3


def test_dumbbell_neck_wins():
    g = F.dumbbell()
    c = shortest_non_contractible_cycle(g)
    assert c.length == 4
    assert is_separating(g, c) and not is_contractible(g, c)
    # every non-separating cycle is longer
    assert shortest_non_separating_cycle(g).length > 4


def test_asymmetric_weights_follow_direction():
    # rightward darts cost 1, leftward 5: the horizontal cycle must go rightward
    g = F.torus_grid(3, 3, lambda d: 1 if d % 2 == 0 else 5)
    c = shortest_non_contractible_cycle(g)
    assert c.length == 3
    assert all(d % 2 == 0 for d in c.darts)


def test_infinite_reverse_weights():
    g = F.torus_grid(3, 3, lambda d: 2 if d % 2 == 0 else INF)
    assert shortest_non_separating_cycle(g).length == 6


@pytest.mark.parametrize("cls", list(CycleClass))
def test_outputs_are_in_class(corpus, cls):
    """Returned walks are closed walks of the input whose class the oracle confirms."""
    from surfcyc.oracle import classifier
    from surfcyc.surface import is_simple
    test = classifier(cls)
    for inst in corpus:
        g = inst.graph
        try:
            c = SOLVERS[cls](g)
        except NoSuchCycle:
            assert inst.tags[f"expect_{cls.value}"] == "NoSuchCycle"
            continue
        again = CycleWalk.of(g, c.darts)
        assert again.length == c.length
        if is_simple(g, c):
            assert test(g, c), inst.name
