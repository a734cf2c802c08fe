"""Why the three cycle classes differ: a genus-two dumbbell.

Two torus blocks are joined by a tube.  A rim of the tube is the shortest
cycle that cannot be contracted, yet it splits the surface in two, so it
is null-homologous.  The shortest non-separating cycle must go around a
handle instead and costs more.

    python3 demos/dumbbell_neck.py
"""

from surfcyc import (CycleClass, brute_force_shortest, shortest_non_contractible_cycle,
                     shortest_non_separating_cycle)
from surfcyc.fixtures import dumbbell
from surfcyc.surgery import cut_along, split_components

g = dumbbell(k=2, square=1, body=4, neck=10)
print("surface:", g.stats)

neck = shortest_non_contractible_cycle(g)
handle = shortest_non_separating_cycle(g)
print("shortest non-contractible:", neck.length, "darts", neck.darts)
print("shortest non-separating: ", handle.length, "darts", handle.darts)

for name, c in (("neck", neck), ("handle", handle)):
    parts = split_components(cut_along(g, c).graph)
    print(f"cutting along the {name} leaves {len(parts)} piece(s)")

print("brute force agrees:",
      brute_force_shortest(g, CycleClass.NON_CONTRACTIBLE).length == neck.length,
      brute_force_shortest(g, CycleClass.NON_SEPARATING).length == handle.length)
