"""Exact computation of linear-extension rational functions and integer
point transforms of root cones, by several independently verified routes."""

from .algebra import (
    Polynomial,
    RatFrac,
    canonical_text,
    evaluate_frac,
    frac_combine,
    frac_equal,
    frac_sum,
    ipt_frac,
    parse_fraction,
    substitute,
    tree_psi_frac,
)
from .evaluators import (
    check_notch_identity,
    cone_member,
    lattice_point_check,
    psi_admissible,
    psi_general,
    psi_oracle,
    psi_planar,
    psi_reduction,
    psi_skew_paths,
    sigma_admissible,
    sigma_planar,
    sigma_reduction,
)
from .graphs import LabeledGraph, goodify, labeled_graph, transitive_closure
from .notches import Notch, close_notch, find_notches
from .planar import Region, bounded_regions
from .posets import Poset, build_poset, linear_extensions
from .skew import SkewDiagram, build_skew, lattice_paths, skew_to_poset
from .subdivision import (
    FormalSum,
    GraphTerm,
    psi_from_sum,
    reduce_full,
    reduce_step,
    sigma_from_sum,
    verify_planar_identity,
)
from .triangulation import (
    Bipartition,
    EdgeOrder,
    compatible,
    decompose_lr,
    ext_count,
    ext_zero_triangulation,
    noncrossing_alternating_trees,
    path_to_tree,
    spanning_trees,
    tree_to_path,
)

__all__ = [name for name in dir() if not name.startswith("_")]
