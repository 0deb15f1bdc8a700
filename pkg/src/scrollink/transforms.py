"""Transforms of Weil divisors to the resolution of a scroll with a codimension-2 vertex.

Only class arithmetic is done here.  Vertex multiplicities come out as the
difference between the product of integral total transforms and the product
of proper transforms, both evaluated with :func:`scrollink.chow.intersect`.
"""

from __future__ import annotations

from .chow import intersect
from .errors import DomainError
from .scroll import H_TILDE, R_TILDE, ClassGroup, ResolvedClass, ScrollType, class_group


def _require_cyclic(scroll: ScrollType):
    if class_group(scroll) is not ClassGroup.CYCLIC_H_IS_FR:
        raise DomainError("vertex_codim_2", f"{scroll} does not have a codimension-2 vertex")


def _require_line_vertex_threefold(scroll: ScrollType):
    if scroll.r != 3 or scroll.vertex_dim != 1:
        raise DomainError("line_vertex_threefold", f"{scroll} is not a 3-fold with vertex a line")


def total_transform(scroll: ScrollType, d: int) -> ResolvedClass:
    """Integral total transform of an effective divisor ``D ~ d*R``.

    With ``d - 1 = k*f + h`` and ``0 <= h < f`` this is
    ``(k+1)*H~ - (f-h-1)*R~``.
    """
    _require_cyclic(scroll)
    if d < 1:
        raise DomainError("effective_divisor", f"d = {d} must be positive")
    k, h = divmod(d - 1, scroll.f)
    return ResolvedClass(k + 1, -(scroll.f - h - 1))


def proper_transform_through_vertex(scroll: ScrollType, cut_degree: int, vertex_mult: int) -> ResolvedClass:
    """Proper transform of a hypersurface cut of degree ``cut_degree`` that
    contains the singular line with multiplicity ``vertex_mult``."""
    _require_line_vertex_threefold(scroll)
    if vertex_mult < 0:
        raise DomainError("multiplicity_nonnegative", f"multiplicity {vertex_mult} < 0")
    if vertex_mult > cut_degree:
        raise DomainError("multiplicity_le_degree", f"multiplicity {vertex_mult} exceeds degree {cut_degree}")
    return ResolvedClass(cut_degree - vertex_mult, scroll.f * vertex_mult)


def vertex_multiplicity_ci(scroll: ScrollType, deg1: int, a: int, deg2: int, b: int) -> int:
    """Multiplicity of the singular line in the intersection of two cuts."""
    s_total, f_total = deg1 * H_TILDE, deg2 * H_TILDE
    s_proper = proper_transform_through_vertex(scroll, deg1, a)
    f_proper = proper_transform_through_vertex(scroll, deg2, b)
    return intersect(scroll, [s_total, f_total, H_TILDE]) - intersect(scroll, [s_proper, f_proper, H_TILDE])


def vertex_multiplicity_in_ruling_plane(scroll: ScrollType, deg1: int, a: int) -> int:
    """Same as :func:`vertex_multiplicity_ci` with a ruling plane as second divisor."""
    s_total = deg1 * H_TILDE
    s_proper = proper_transform_through_vertex(scroll, deg1, a)
    plane_total = total_transform(scroll, 1)
    return intersect(scroll, [s_total, plane_total, H_TILDE]) - intersect(scroll, [s_proper, R_TILDE, H_TILDE])
