"""Exact computations on Helly graphs.

Recognition via the ball-hypergraph triple criterion with a brute-force
oracle, round cliques and the first subdivision, grid vertices of the
injective hull with exact rational arithmetic, automorphism
classification with elliptic witnesses and fixed-set distances, and
translation lengths of lattice and periodic-graph automorphisms.
"""

from .errors import HellyLibError, NotHellyError, SearchBudgetError
from .graph import (
    Ball,
    DistanceMatrix,
    Graph,
    HellyResult,
    all_pairs_distances,
    ball,
    distinct_balls,
    graph_from_json,
    graph_to_json,
    is_clique,
    is_helly,
    is_helly_bruteforce,
)
from .families import (
    complete_graph,
    cycle_graph,
    enumerate_connected_graphs,
    enumerate_trees,
    king_grid,
    path_graph,
    star_graph,
)
from .hull import (
    MetricFunction,
    OrthoschemePoint,
    SubdivisionGraph,
    grid_graph,
    grid_step,
    hull_grid_vertices,
    is_admissible,
    is_extremal,
    metric_function,
    orthoscheme_point,
    point_distance,
    point_eval,
    sup_distance,
)
from .cliques import (
    CliquePoset,
    clique_to_extremal,
    combinatorial_dimension,
    extremal_to_clique,
    first_subdivision,
    is_round,
    maximal_cliques,
    round_cliques,
)
from .automorphisms import (
    Automorphism,
    FixedSetDistance,
    act_on_function,
    check_automorphism,
    elliptic_witness,
    fixed_grid_vertices,
    fixed_set_distance,
    identity_automorphism,
    induced_on_round_cliques,
    solve_pm1_system,
    vertex_orbits,
)
from .periodic import (
    AffineAutomorphism,
    AxisVertex,
    LatticeGraph,
    MinMeanCycle,
    PeriodicGraph,
    WeightedDigraph,
    affine_length_estimate,
    affine_translation_length,
    axis_vertex,
    cover_window,
    deck_translation_length,
    helly_window_evidence,
    min_mean_cycle,
    periodic_from_json,
    periodic_to_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
