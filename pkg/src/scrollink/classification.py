"""Linked-curve classification in the plane-residual range, closure checks, sweeps.

A curve ``C`` of maximal genus ``G(d, n, s)`` lies on a surface ``S`` of
degree ``s`` on a rational normal 3-fold.  Cutting with ``F_{w+1}`` and
``F_{m+1}`` links ``C`` to a residual curve.  When
``s - 2 - w <= eps <= s - 2`` that residual part is a plane curve of degree
``s - eps - 1``; only ``v = n - 3`` (``C' = C''``) and ``v = n - 4``
(``C'' = C'`` plus a plane curve of degree ``m + 1``) are worked out.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import ConsistencyError, DomainError
from .hilbert import (
    MaxGenusParams,
    decompose,
    genus_from_profile,
    h0_residual,
)
from .linkage import CurveInvariants, clebsch, link_genus, noether_union
from .scroll import AmbientClass, ScrollType, make_scroll

THREADS_ENV = "SCROLLINK_THREADS"


class ResidualKind(enum.Enum):
    EMPTY = "Empty"
    PLANE_CURVE = "PlaneCurve"
    PLANE_CURVE_PLUS_PLANE_CURVE = "PlaneCurvePlusPlaneCurve"
    OUT_OF_RANGE = "OutOfImplementedRange"


@dataclass(frozen=True)
class ClassificationReport:
    params: MaxGenusParams
    in_planar_range: bool
    residual_degree: int
    residual_description: ResidualKind
    residual_genus: int | None
    linked_degree: int | None
    surface_class: AmbientClass
    construction_D_degree: int | None
    D_degree_in_window: bool | None
    bound_G: int
    closure_ok: bool | None
    noether_t: int | None = None
    lower_bound_note_for_line_vertex: int | None = None


@dataclass(frozen=True)
class ClosureReport:
    ok: bool
    d: int
    n: int
    s: int
    scroll: ScrollType | None = None
    a: int | None = None
    b: int | None = None
    G: int | None = None
    ci_genus: int | None = None
    linked_degree: int | None = None
    linked_genus: int | None = None
    target_genus: int | None = None
    diagnostic: str | None = None


@dataclass(frozen=True)
class LowerBound:
    """An inequality ``h0 >= value``; the exact value is not determined."""

    value: int
    label: str = "LOWER BOUND"

    def __str__(self):
        return f">= {self.value} ({self.label})"


def surface_class(params: MaxGenusParams) -> AmbientClass:
    """Class of the Castelnuovo surface on the 3-fold."""
    if params.v == 0:
        return AmbientClass(params.w, 1)
    return AmbientClass(params.w + 1, -(params.n - 3 - params.v))


def verification_scroll(n: int) -> ScrollType:
    """A 3-fold of degree ``n - 2`` whose vertex is a point."""
    return make_scroll([0, 1, n - 3])


def _plane_quadratic(params: MaxGenusParams, shift: int) -> int:
    # 1/2 ((n-2)w + n-shift-eps) ((n-2)w + n-shift-1-eps)
    p = params
    x = (p.n - 2) * p.w + p.n - shift - p.eps
    return x * (x - 1) // 2


def _residual(params: MaxGenusParams):
    """(kind, residual genus, linked curve degree, D degree, noether t)."""
    p = params
    deg = p.s - p.eps - 1
    if p.v == p.n - 3:
        D_deg = p.eps + 1 - (p.n - 3) * (p.w + 1)
        if deg == 0:
            return ResidualKind.EMPTY, 1, 0, D_deg, None
        if not p.planar_residual_range:
            return ResidualKind.OUT_OF_RANGE, None, None, D_deg, None
        genus = clebsch(deg)
        if genus != _plane_quadratic(p, 4):
            raise ConsistencyError(f"Clebsch genus {genus} disagrees with the displayed quadratic for {p}")
        return ResidualKind.PLANE_CURVE, genus, deg, D_deg, None
    if p.v == p.n - 4 and p.n >= 5:
        D_deg = p.eps + 2 - (p.n - 3) * (p.w + 1)
        if not p.planar_residual_range:
            return ResidualKind.OUT_OF_RANGE, None, None, D_deg, None
        displayed = _plane_quadratic(p, 5) + p.m * (p.m - 1) // 2 - 1
        t = displayed - clebsch(deg) - clebsch(p.m + 1) + 1
        if t < 0 or noether_union(clebsch(deg), clebsch(p.m + 1), t) != displayed:
            raise ConsistencyError(f"no Noether intersection length reproduces {displayed} for {p}")
        return ResidualKind.PLANE_CURVE_PLUS_PLANE_CURVE, displayed, deg + p.m + 1, D_deg, t
    return ResidualKind.OUT_OF_RANGE, None, None, None, None


def _close(params: MaxGenusParams, G: int, linked_degree: int, target: int) -> ClosureReport:
    p = params
    scroll = verification_scroll(p.n)
    a, b = p.w + 1, p.m + 1
    base = dict(d=p.d, n=p.n, s=p.s, scroll=scroll, a=a, b=b, G=G,
                linked_degree=linked_degree, target_genus=target)
    try:
        res = link_genus(
            scroll, a, b,
            CurveInvariants(p.d, G, a * b),
            unknown_degree=linked_degree,
            unknown_ruling=0,
        )
    except DomainError as exc:
        return ClosureReport(ok=False, diagnostic=str(exc), **base)
    return ClosureReport(ok=res.genus == target, ci_genus=res.ci.genus, linked_genus=res.genus, **base)


def classify(d: int, n: int, s: int) -> ClassificationReport:
    p = decompose(d, n, s)
    G = genus_from_profile(p)
    kind, genus, linked_deg, D_deg, t = _residual(p)
    closure_ok = None
    if kind is not ResidualKind.OUT_OF_RANGE:
        closure_ok = _close(p, G, linked_deg, genus).ok
    window = None
    if kind in (ResidualKind.PLANE_CURVE, ResidualKind.PLANE_CURVE_PLUS_PLANE_CURVE):
        window = 0 <= D_deg <= p.w
    return ClassificationReport(
        params=p,
        in_planar_range=p.planar_residual_range,
        residual_degree=p.s - p.eps - 1,
        residual_description=kind,
        residual_genus=genus,
        linked_degree=linked_deg,
        surface_class=surface_class(p),
        construction_D_degree=D_deg,
        D_degree_in_window=window,
        bound_G=G,
        closure_ok=closure_ok,
        noether_t=t,
        lower_bound_note_for_line_vertex=h0_residual(p, 0),
    )


def verify_closure(d: int, n: int, s: int) -> ClosureReport:
    """Push ``G(d, n, s)`` through the linkage formula and compare with the residual genus."""
    p = decompose(d, n, s)
    if not p.planar_residual_range:
        raise DomainError("planar_residual_range", f"eps = {p.eps} outside [{s - 2 - p.w}, {s - 2}]")
    kind, genus, linked_deg, _, _ = _residual(p)
    if kind is ResidualKind.OUT_OF_RANGE:
        raise DomainError("v_is_n_minus_3_or_4", f"v = {p.v} not in {{n-3, n-4}} for n = {n}")
    return _close(p, genus_from_profile(p), linked_deg, genus)


def line_vertex_lower_bound(d: int, n: int, s: int, i: int) -> LowerBound:
    """Lower bound for ``h0(I_{C''|X}(i, n-4))`` when the 3-fold's vertex is a line."""
    return LowerBound(h0_residual(decompose(d, n, s), i))


# ---------------------------------------------------------------- sweeps


@dataclass(frozen=True)
class LinearBound:
    """``coef * n + const``, used for ranges given relative to ``n``."""

    coef: int
    const: int

    def at(self, n: int) -> int:
        return self.coef * n + self.const


@dataclass(frozen=True)
class SweepConfig:
    n_range: tuple[int, int]
    s_range: tuple[LinearBound, LinearBound]
    m_range: tuple[int, int]
    eps_filter: str | tuple[int, int] = "all"
    threads: int | None = None


@dataclass(frozen=True)
class SweepResult:
    rows: list = field(default_factory=list)

    @property
    def closure_attempted(self) -> int:
        return sum(1 for r in self.rows if r.closure_ok is not None)

    @property
    def closure_passed(self) -> int:
        return sum(1 for r in self.rows if r.closure_ok)


def _eps_values(eps_filter, s: int, w: int):
    if eps_filter == "all":
        return range(0, s)
    if eps_filter == "planar":
        return range(max(s - 2 - w, 0), s - 1)
    lo, hi = eps_filter
    return range(max(lo, 0), min(hi, s - 1) + 1)


def _rows_for(n: int, s: int, cfg: SweepConfig):
    if s < n - 1:
        return []
    w = (s - 1) // (n - 2)
    rows = []
    for m in range(max(cfg.m_range[0], w + 1), cfg.m_range[1] + 1):
        for eps in _eps_values(cfg.eps_filter, s, w):
            rows.append(classify(s * m + eps + 1, n, s))
    return rows


def resolve_threads(threads: int | None) -> int:
    """Worker count; ``SCROLLINK_THREADS`` is the default and also a cap."""
    cap = os.environ.get(THREADS_ENV, "").strip()
    cap = int(cap) if cap else None
    if threads is None:
        threads = cap or 1
    elif cap is not None:
        threads = min(threads, cap)
    return max(1, threads)


def sweep(cfg: SweepConfig) -> SweepResult:
    """Classify every admissible ``(d, n, s)``, in lexicographic ``(n, s, m, eps)`` order."""
    cells = [
        (n, s)
        for n in range(cfg.n_range[0], cfg.n_range[1] + 1)
        if n >= 4
        for s in range(cfg.s_range[0].at(n), cfg.s_range[1].at(n) + 1)
    ]
    workers = resolve_threads(cfg.threads)
    if workers == 1:
        chunks = [_rows_for(n, s, cfg) for n, s in cells]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda c: _rows_for(c[0], c[1], cfg), cells))
    return SweepResult([row for chunk in chunks for row in chunk])

