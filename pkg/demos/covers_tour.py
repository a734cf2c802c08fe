"""Build both covers over a basis cycle and watch walks lift.

The double cover has two copies of the surface glued crosswise along a
basis cycle lam.  A closed walk lifts to a closed walk exactly when it
crosses lam an even number of times.  The restricted cover stacks a few
copies of the surface cut along lam; it is used to look for cycles that
cross lam zero times without being contractible.

    python3 demos/covers_tour.py
"""

from surfcyc import (crossing_count, cyclic_double_cover, lift_walk, partial_homology_basis,
                     project_walk, restricted_cyclic_cover)
from surfcyc.fixtures import torus_grid
from surfcyc.surface import CycleWalk

g = torus_grid(3, 3)
lam = partial_homology_basis(g).cycles[0]
print("base:", g.stats)
print("lam darts:", lam.darts)

double = cyclic_double_cover(g, lam)
print("double cover:", double.graph.stats)
restricted = restricted_cyclic_cover(g, lam)
print("restricted cover:", restricted.graph.stats)

# a walk that crosses lam once, and the same walk taken twice
probe = partial_homology_basis(g).cycles[1]
twice = CycleWalk.of(g, probe.darts * 2)
for name, w in (("once", probe), ("twice", twice)):
    n = crossing_count(g, lam, w).value
    up = lift_walk(double, w, double.vertex(g.origin[w.darts[0]], 0))
    back = project_walk(double, up)
    print(f"{name}: crossings={n} lift closed={up.closed} projects back={back.darts == w.darts}")
