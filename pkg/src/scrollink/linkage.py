"""Genus bookkeeping for curves linked by a complete intersection on a scroll 3-fold.

If ``Y_1`` and ``Y_2`` are linked by ``Y = X . F_a . F_b`` then

    p_a(Y_2) = p_a(Y_1) - p_a(Y) + (a+b-3) deg(Y_2) + (n-4) deg(R . Y_2) + 1.

This holds on a smooth scroll and on a scroll whose vertex is a point.  It
assumes ``Y_1`` is locally Cohen-Macaulay, which cannot be checked from
numbers and is taken on trust.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chow import CiCurveData, ci_invariants
from .errors import ConsistencyError, DomainError
from .scroll import AmbientClass, ScrollType


class LinkageVariant(enum.Enum):
    SMOOTH = "smooth"
    POINT_VERTEX = "point-vertex"


@dataclass(frozen=True)
class CurveInvariants:
    degree: int
    genus: int
    ruling_degree: int

    @property
    def is_empty(self) -> bool:
        """Degree-0 "curve"; its genus follows the convention p_a(empty) = 1."""
        return self.degree == 0


@dataclass(frozen=True)
class LinkResult:
    curve: CurveInvariants
    variant: LinkageVariant
    ci: CiCurveData

    @property
    def genus(self) -> int:
        return self.curve.genus

    @property
    def empty_curve(self) -> bool:
        return self.curve.is_empty


def linkage_variant(scroll: ScrollType) -> LinkageVariant:
    if scroll.r != 3:
        raise DomainError("scroll_is_threefold", f"{scroll} has dimension {scroll.r}")
    if scroll.smooth:
        return LinkageVariant.SMOOTH
    if scroll.vertex_dim == 0:
        return LinkageVariant.POINT_VERTEX
    raise DomainError("vertex_not_line", f"{scroll} has a line as vertex; the genus formula is not available")


def link_genus(
    scroll: ScrollType,
    a: int,
    b: int,
    known: CurveInvariants,
    unknown_degree: int,
    unknown_ruling: int,
) -> LinkResult:
    """Invariants of the curve linked to ``known`` by a c.i. of type ``(a, b)``."""
    variant = linkage_variant(scroll)
    ci = ci_invariants(scroll, a, b)
    if unknown_degree < 0 or unknown_ruling < 0 or known.degree < 0 or known.ruling_degree < 0:
        raise DomainError("nonnegative_degrees", "curve degrees must be nonnegative")
    if known.degree + unknown_degree != ci.degree:
        raise DomainError(
            "degree_conservation",
            f"{known.degree} + {unknown_degree} != a*b*f = {ci.degree}",
        )
    if known.ruling_degree + unknown_ruling != ci.ruling_degree:
        raise DomainError(
            "ruling_conservation",
            f"{known.ruling_degree} + {unknown_ruling} != a*b = {ci.ruling_degree}",
        )
    genus = (
        known.genus
        - ci.genus
        + (a + b - 3) * unknown_degree
        + (scroll.n_emb - 4) * unknown_ruling
        + 1
    )
    return LinkResult(CurveInvariants(unknown_degree, genus, unknown_ruling), variant, ci)


def noether_union(p1: int, p2: int, t: int) -> int:
    """Arithmetic genus of a union of two curves meeting in a scheme of length ``t``."""
    if t < 0:
        raise DomainError("intersection_length_nonnegative", f"t = {t} < 0")
    return p1 + p2 + t - 1


def clebsch(degree: int) -> int:
    if degree < 1:
        raise DomainError("plane_curve_degree_positive", f"degree {degree} < 1")
    return (degree - 1) * (degree - 2) // 2


@dataclass(frozen=True)
class ResidualQuadricData:
    """Invariants around the scheme residual to a scroll in a c.i. of quadrics.

    ``A_H`` is the curve section of the quadric intersection, ``B_H`` the part
    residual to the rational normal curve ``C_{n-2}``.
    """

    n: int
    yb_class: AmbientClass
    yb_degree: int
    pa_AH: int
    pa_BH: int


def residual_quadric_invariants(n: int) -> ResidualQuadricData:
    if n < 5:
        raise DomainError("n_ge_5", f"n = {n} < 5")
    data = ResidualQuadricData(
        n=n,
        yb_class=AmbientClass(n - 4, -(n - 4)),
        yb_degree=(n - 4) * (n - 3),
        pa_AH=1 + 2 ** (n - 4) * (n - 5),
        pa_BH=2 ** (n - 4) * (n - 5) - (n - 2) * (n - 5),
    )
    # C_{n-2} is rational
    if noether_union(data.pa_BH, 0, data.yb_degree) != data.pa_AH:
        raise ConsistencyError(f"Noether closure fails for n = {n}")
    return data
