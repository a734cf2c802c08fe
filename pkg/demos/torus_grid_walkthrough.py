"""Walk through the three cycle classes on a weighted torus grid.

A 4 x 3 torus grid has cheap horizontal edges in one row and expensive
edges everywhere else.  The cheapest non-trivial loop runs along that row.
We compute it with the directed algorithms, check it against brute force,
and print the crossing count with each homology basis cycle.

    python3 demos/torus_grid_walkthrough.py
"""

from surfcyc import (CycleClass, brute_force_shortest, crossing_count, partial_homology_basis,
                     shortest_non_contractible_cycle, shortest_non_null_homologous_cycle,
                     shortest_non_separating_cycle)
from surfcyc.fixtures import torus_grid, torus_grid_h

K, L = 4, 3
cheap = {torus_grid_h(K, L, x, 1) for x in range(K)}


def weight(d):
    return 1 if d in cheap or d ^ 1 in cheap else 5


g = torus_grid(K, L, weight)
print("surface:", g.stats)

solvers = {
    CycleClass.NON_SEPARATING: shortest_non_separating_cycle,
    CycleClass.NON_CONTRACTIBLE: shortest_non_contractible_cycle,
    CycleClass.NON_NULL_HOMOLOGOUS: shortest_non_null_homologous_cycle,
}
for cls, solve in solvers.items():
    c = solve(g)
    ref = brute_force_shortest(g, cls)
    print(f"{cls.value:8s} length={c.length} brute={ref.length} vertices={c.vertices(g)}")

c = shortest_non_separating_cycle(g)
for i, lam in enumerate(partial_homology_basis(g).cycles):
    print(f"crossings with basis cycle {i}: {crossing_count(g, lam, c).value}")
