"""Balanced graph separators from clique covers and restriction measures,
with exact and approximate solvers for three geometric packing/covering
problems on unit-height rectangles and unit-diameter discs."""

from .graphs import (Graph, OrderedCliqueCover, RestrictionMeasure,
                     check_measure_axioms, cover_length, induced_subgraph,
                     measure, verify_clique_cover)
from .chordal import (CliqueTree, NotChordalError, balanced_clique_separator,
                      clique_tree, maximal_cliques_chordal, mcs_order)
from .geometry import (SCALE, Disc, GridFrame, PointSite, Rect,
                       candidate_discs, candidate_pierce_points,
                       greedy_cover_and_is_rects, greedy_disc_cover,
                       helly_point, rect_intersection_graph,
                       strip_cover_rects, unit_distance_graph,
                       vertical_strip_cover_points)
from .separator import (CoverUnit, NoSeparatorFound, SeparatorResult,
                        check_separator, separate)
from .solvers import (CoverSolution, MisSolution, PierceSolution, SolveConfig,
                      disccover_exact, disccover_ptas, mis_exact, mis_ptas,
                      pierce_exact, pierce_ptas, verify_disc_cover,
                      verify_independent_rects, verify_piercing)
from .instances import Instance, generate, load, parse, save, serialize

__version__ = "0.1.0"

__all__ = [
    "Graph", "OrderedCliqueCover", "RestrictionMeasure",
    "check_measure_axioms", "cover_length", "induced_subgraph", "measure",
    "verify_clique_cover",
    "CliqueTree", "NotChordalError", "balanced_clique_separator",
    "clique_tree", "maximal_cliques_chordal", "mcs_order",
    "SCALE", "Disc", "GridFrame", "PointSite", "Rect", "candidate_discs",
    "candidate_pierce_points", "greedy_cover_and_is_rects",
    "greedy_disc_cover", "helly_point", "rect_intersection_graph",
    "strip_cover_rects", "unit_distance_graph", "vertical_strip_cover_points",
    "CoverUnit", "NoSeparatorFound", "SeparatorResult", "check_separator",
    "separate",
    "CoverSolution", "MisSolution", "PierceSolution", "SolveConfig",
    "disccover_exact", "disccover_ptas", "mis_exact", "mis_ptas",
    "pierce_exact", "pierce_ptas", "verify_disc_cover",
    "verify_independent_rects", "verify_piercing",
    "Instance", "generate", "load", "parse", "save", "serialize",
]
