"""Free-space management and routing-conscious placement for
partially reconfigurable chips."""

from .bench import (ALGORITHMS, DISTRIBUTIONS, SimulationReport, generate,
                    reports_to_csv, run_benchmark, simulate)
from .baselines import kamer_first_fit, maximal_empty_rects, nao_heuristic
from .contour import (Contour, contour_vertices, feasible_mask,
                      find_contour_segments, is_feasible, vertex_points)
from .instance_io import (InstanceDoc, ModuleSpec, ParseError, parse_instance,
                          write_instance)
from .model import (ChipConfig, DemandPoint, EmptyShrunkChip, ExpandedScene,
                    InvalidInput, PlacementRequest, PlacementResult, Rect,
                    expand_scene, rects_cross, validate_demands,
                    validate_layout)
from .placer import (evaluate_costs, manhattan_cost, median_axes, place,
                     weighted_median)
from .segment_tree import CoverageSegmentTree, UnknownEndpoint

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS", "DISTRIBUTIONS", "SimulationReport", "generate",
    "reports_to_csv", "run_benchmark", "simulate",
    "kamer_first_fit", "maximal_empty_rects", "nao_heuristic",
    "Contour", "contour_vertices", "feasible_mask", "find_contour_segments",
    "is_feasible", "vertex_points",
    "InstanceDoc", "ModuleSpec", "ParseError", "parse_instance",
    "write_instance",
    "ChipConfig", "DemandPoint", "EmptyShrunkChip", "ExpandedScene",
    "InvalidInput", "PlacementRequest", "PlacementResult", "Rect",
    "expand_scene", "rects_cross", "validate_demands", "validate_layout",
    "evaluate_costs", "manhattan_cost", "median_axes", "place",
    "weighted_median",
    "CoverageSegmentTree", "UnknownEndpoint",
    "__version__",
]
