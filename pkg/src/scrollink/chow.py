"""Intersection numbers on the resolved scroll and complete-intersection curves.

On ``P(E)`` of dimension ``r`` a top product of classes ``H~`` and ``R~`` only
depends on how many ``R~`` factors it contains: none gives ``f``, one gives
``1``, two or more give ``0`` (``R~`` is a fibre, two fibres are disjoint).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DomainError
from .scroll import H_TILDE, R_TILDE, ScrollType


def monomial_value(scroll: ScrollType, r_power: int) -> int:
    """Value of ``H~^(r-j) * R~^j``."""
    if r_power == 0:
        return scroll.f
    if r_power == 1:
        return 1
    return 0


def intersect(scroll: ScrollType, classes) -> int:
    classes = list(classes)
    if len(classes) != scroll.r:
        raise DomainError(
            "intersection_arity",
            f"{scroll} has dimension {scroll.r}, got {len(classes)} classes",
        )
    # coefficients of R~^0 and R~^1 in the running product; R~^2 vanishes
    c0, c1 = 1, 0
    for cls in classes:
        c0, c1 = c0 * cls.h, c1 * cls.h + c0 * cls.rr
    return c0 * monomial_value(scroll, 0) + c1 * monomial_value(scroll, 1)


@dataclass(frozen=True)
class CiCurveData:
    a: int
    b: int
    degree: int
    ruling_degree: int
    genus: int


def ci_invariants(scroll: ScrollType, a: int, b: int) -> CiCurveData:
    """Degree, ruling degree and arithmetic genus of ``X . F_a . F_b``.

    The genus comes from adjunction, ``omega_Y = O_Y(a+b-3, n-4)``.
    """
    if scroll.r != 3:
        raise DomainError("scroll_is_threefold", f"{scroll} has dimension {scroll.r}")
    if a < 1 or b < 1:
        raise DomainError("positive_ci_type", f"c.i. type ({a}, {b}) must be positive")
    fa, fb = a * H_TILDE, b * H_TILDE
    degree = intersect(scroll, [fa, fb, H_TILDE])
    ruling = intersect(scroll, [fa, fb, R_TILDE])
    twice = (a + b - 3) * degree + (scroll.n_emb - 4) * ruling
    if twice % 2:
        raise ConsistencyError(f"odd canonical degree {twice} for type ({a}, {b}) on {scroll}")
    return CiCurveData(a, b, degree, ruling, twice // 2 + 1)


def ci_genus(scroll: ScrollType, a: int, b: int) -> int:
    return ci_invariants(scroll, a, b).genus
