"""Saturated graphs for small forbidden patterns: constructions, checkers and exact search."""

__version__ = "0.1.0"

from .canon import canonical_form
from .constructions import ConstructionRecipe, build_extremal, build_h, cycle_partition, enumerate_feasible_families
from .enumeration import SearchConfig, SearchReport, enumerate_pattern_free, min_sat_edges, verify_theorem
from .graph import Graph, add_edge, common_neighbors, degree_stats, from_graph6, make_graph, to_graph6
from .patterns import K23, Pattern, SaturationVerdict, contains_pattern, creates_pattern_incremental, is_saturated
from .structure import AlphaPartition, alpha_partition, check_c2, check_c3, check_p1, lambda_stat

__all__ = [
    "AlphaPartition", "ConstructionRecipe", "Graph", "K23", "Pattern", "SaturationVerdict", "SearchConfig",
    "SearchReport", "add_edge", "alpha_partition", "build_extremal", "build_h", "canonical_form", "check_c2",
    "check_c3", "check_p1", "common_neighbors", "contains_pattern", "creates_pattern_incremental",
    "cycle_partition", "degree_stats", "enumerate_feasible_families", "enumerate_pattern_free",
    "from_graph6", "is_saturated", "lambda_stat", "make_graph", "min_sat_edges", "to_graph6", "verify_theorem",
]
