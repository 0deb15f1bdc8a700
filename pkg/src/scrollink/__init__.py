"""Exact computations on rational normal scrolls: divisor classes,
intersection numbers, maximal-genus bounds and linkage genus formulas."""

from .errors import ConsistencyError, DomainError
from .scroll import (
    AmbientClass,
    ClassGroup,
    ResolvedClass,
    ScrollType,
    canonical_class,
    class_group,
    classes_equal,
    hyperplane_section_descriptor,
    is_reflexive,
    make_scroll,
    normalize_class,
)
from .chow import CiCurveData, ci_invariants, intersect
from .transforms import (
    proper_transform_through_vertex,
    total_transform,
    vertex_multiplicity_ci,
    vertex_multiplicity_in_ruling_plane,
)
from .hilbert import (
    HilbertProfile,
    MaxGenusParams,
    castelnuovo_genus,
    decompose,
    delta_h,
    genus_closed_form,
    genus_from_profile,
    h0_residual,
    h1_points,
    profile,
)
from .linkage import (
    CurveInvariants,
    ResidualQuadricData,
    clebsch,
    link_genus,
    noether_union,
    residual_quadric_invariants,
)
from .classification import classify, line_vertex_lower_bound, sweep, verify_closure

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DomainError",
    "AmbientClass",
    "ClassGroup",
    "ResolvedClass",
    "ScrollType",
    "canonical_class",
    "class_group",
    "classes_equal",
    "hyperplane_section_descriptor",
    "is_reflexive",
    "make_scroll",
    "normalize_class",
    "CiCurveData",
    "ci_invariants",
    "intersect",
    "proper_transform_through_vertex",
    "total_transform",
    "vertex_multiplicity_ci",
    "vertex_multiplicity_in_ruling_plane",
    "HilbertProfile",
    "MaxGenusParams",
    "castelnuovo_genus",
    "decompose",
    "delta_h",
    "genus_closed_form",
    "genus_from_profile",
    "h0_residual",
    "h1_points",
    "profile",
    "CurveInvariants",
    "ResidualQuadricData",
    "clebsch",
    "link_genus",
    "noether_union",
    "residual_quadric_invariants",
    "classify",
    "line_vertex_lower_bound",
    "sweep",
    "verify_closure",
]
