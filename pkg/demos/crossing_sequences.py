"""Undirected search by crossing sequences on a genus-two surface.

With symmetric weights the shortest non-trivial cycle crosses each greedy
generator in a short, well-behaved pattern.  We list the candidate
patterns for a small dumbbell, realize a few of them as walks and let the
class filters pick the winners.  The tube rim crosses the generators in a
commutator pattern, which is how it is recognised as non-contractible
even though it is null-homologous.

    python3 demos/crossing_sequences.py
"""

from itertools import islice

from surfcyc import (greedy_system_of_loops, non_contractible_realization,
                     non_null_homologous_realization, non_separating_realization)
from surfcyc.fixtures import dumbbell
from surfcyc.undirected import enumerate_sequences, shortest_cycle_for_crossing_sequence

g = dumbbell(k=2, square=1, body=4, neck=10)
gens = greedy_system_of_loops(g)
print("surface:", g.stats, "generators:", len(gens.generators))

seqs = list(enumerate_sequences(gens))
print("candidate sequences:", len(seqs))
for x in islice(seqs, 4):
    r = shortest_cycle_for_crossing_sequence(g, gens, x)
    print(f"  {str(x):12s} ->", "unrealizable" if r is None else f"length {r.walk.length}")

for name, solve in (("nonsep", non_separating_realization),
                    ("nonhom", non_null_homologous_realization),
                    ("noncon", non_contractible_realization)):
    r = solve(g)
    print(f"{name}: length={r.walk.length} sequence={r.sequence} simple={r.simple}")
