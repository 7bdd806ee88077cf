"""Point guards from mobile guards: hyperguards on blocks of the guard graph."""

from .assemble import PointGuardSolution, assemble, connectors, point_bound, solve_point_guards, uncovered_edges
from .hyperguard import (HyperguardResult, baseline_hyperguard, construct_hyperguard,
                         hyperguard_violations, path_cover)
from .refine import EdgeClass, MPrime, build_X, guard_region, refine_rects, split_refine, x_census
from .region import Region, build_region, region_from_all_cycles
from .structure import GuardGraph, block_cut_tree, blocks, build_M, components, star_case

__all__ = [
    "EdgeClass", "GuardGraph", "HyperguardResult", "MPrime", "PointGuardSolution", "Region",
    "assemble", "baseline_hyperguard", "block_cut_tree", "blocks", "build_M", "build_X",
    "build_region", "components", "connectors", "construct_hyperguard", "guard_region",
    "hyperguard_violations", "path_cover", "point_bound", "refine_rects", "region_from_all_cycles",
    "solve_point_guards", "split_refine", "star_case", "uncovered_edges", "x_census",
]
