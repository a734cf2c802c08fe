"""Shortest non-trivial cycles in graphs embedded on orientable surfaces."""

from .errors import *  # noqa: F401,F403
from .surface import (INF, CycleWalk, EmbeddedGraph, PathSides, Side, SurfaceStats,
                      build_graph, edge_side, trace_faces)
from .surgery import cut_along, cut_along_edges, paste_all_disks, paste_disk, reglue, split_components

__version__ = "0.1.0"

from .covers import cyclic_double_cover, lift_walk, project_walk, restricted_cyclic_cover
from .directed import (shortest_non_contractible_cycle, shortest_non_null_homologous_cycle,
                       shortest_non_separating_cycle, shortest_odd_crossing_cycle)
from .generators import greedy_system_of_arcs, greedy_system_of_loops
from .homology import crossing_count, crossing_parity, partial_homology_basis
from .oracle import CycleClass, brute_force_shortest
from .undirected import (non_contractible_realization, non_null_homologous_realization,
                         non_separating_realization)
