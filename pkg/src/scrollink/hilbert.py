"""Numerical data of curves of maximal genus: parameters, Hilbert profiles, bounds.

For a curve of degree ``d`` in ``P^n`` lying on no surface of degree ``< s``
the hyperplane section ``Z`` has a forced first difference ``Delta h`` of its
Hilbert function.  When the genus is maximal the curve is ACM and its genus is
the total Hilbert-function deficiency of ``Z``; :func:`genus_from_profile` is
the bound computed that way.  The closed form from the literature is kept as a
comparator only (:func:`genus_closed_form`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate

from .errors import ConsistencyError, DomainError


@dataclass(frozen=True)
class MaxGenusParams:
    d: int
    n: int
    s: int
    m: int
    eps: int
    w: int
    v: int
    k: int
    delta: int
    e: int
    in_asymptotic_range: bool
    planar_residual_range: bool

    @property
    def top(self) -> int:
        """Last index where the profile can be nonzero."""
        return self.m + self.w + self.e


@lru_cache(maxsize=None)
def _threshold_terms(n: int):
    # prod_{i=1}^{n-2} ((n-1)!)^(1/(n-1-i)) = ((n-1)!)^(H_{n-2})
    harmonic = sum(Fraction(1, j) for j in range(1, n - 1))
    return harmonic.numerator, harmonic.denominator, math.factorial(n - 1) ** harmonic.numerator


def in_asymptotic_range(d: int, n: int, s: int) -> bool:
    """Exact test of ``d > 2s/(n-2) * prod_{i=1}^{n-2} ((n-1)!)^(1/(n-1-i))``."""
    p, q, fact_pow = _threshold_terms(n)
    # both sides positive: raise d*(n-2)/(2s) > (n-1)!^(p/q) to the q-th power
    return (d * (n - 2)) ** q > (2 * s) ** q * fact_pow


def decompose(d: int, n: int, s: int) -> MaxGenusParams:
    if n < 4:
        raise DomainError("n_ge_4", f"n = {n} < 4")
    if s < n - 1:
        raise DomainError("s_ge_n_minus_1", f"s = {s} < n - 1 = {n - 1}")
    if d < 1:
        raise DomainError("d_positive", f"d = {d} < 1")
    m, eps = divmod(d - 1, s)
    w, v = divmod(s - 1, n - 2)
    if m <= w:
        raise DomainError("m_gt_w", f"m = {m} <= w = {w}: profile table is ill-formed")
    if eps < w * (n - 1 - v):
        e = 0
        k, delta = divmod(eps, w)
    else:
        e = 1
        k, delta = divmod(eps + n - 2 - v, w + 1)
    return MaxGenusParams(
        d=d, n=n, s=s, m=m, eps=eps, w=w, v=v, k=k, delta=delta, e=e,
        in_asymptotic_range=in_asymptotic_range(d, n, s),
        planar_residual_range=s - 2 - w <= eps <= s - 2,
    )


def delta_h(params: MaxGenusParams, r: int) -> int:
    p = params
    if r < 0:
        return 0
    if r <= p.w:
        return (p.n - 2) * r + 1
    if r <= p.m:
        return p.s
    if r <= p.m + p.delta:
        return p.s + p.k - (p.n - 2) * (r - p.m)
    if r <= p.top:
        return p.s + p.k - (p.n - 2) * (r - p.m) - 1
    return 0


@dataclass(frozen=True)
class HilbertProfile:
    """First difference of a Hilbert function, ``deltas[r] = Delta h(r)`` for ``r >= 0``."""

    deltas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(int(x) for x in self.deltas))
        if any(x < 0 for x in self.deltas):
            raise ConsistencyError(f"negative entry in profile {self.deltas}")

    @property
    def cumulative(self) -> tuple[int, ...]:
        return tuple(accumulate(self.deltas))

    @property
    def mass(self) -> int:
        return sum(self.deltas)

    def h(self, r: int) -> int:
        """Hilbert function value ``h(r)``; zero for negative r, the mass past the end."""
        if r < 0:
            return 0
        return sum(self.deltas[: r + 1])

    @classmethod
    def plane_curve(cls, d: int) -> "HilbertProfile":
        """Profile of ``d`` collinear points, ``h(r) = min(r + 1, d)``."""
        return cls((1,) * d)


def profile(params: MaxGenusParams) -> HilbertProfile:
    prof = HilbertProfile(tuple(delta_h(params, r) for r in range(params.top + 1)))
    if prof.mass != params.d:
        raise ConsistencyError(f"profile mass {prof.mass} != d = {params.d} for {params}")
    return prof


def acm_genus(prof: HilbertProfile) -> int:
    """``sum_{r >= 1} (deg - h(r))`` for an ACM curve with section profile ``prof``."""
    total = prof.mass
    return sum(total - h for h in prof.cumulative[1:])


def genus_from_profile(params: MaxGenusParams) -> int:
    return acm_genus(profile(params))


def max_genus(d: int, n: int, s: int) -> int:
    """The bound ``G(d, n, s)``, computed from the profile."""
    return genus_from_profile(decompose(d, n, s))


@dataclass(frozen=True)
class ClosedFormReport:
    closed_form: Fraction
    profile_sum: int
    difference: Fraction


def closed_form_value(params: MaxGenusParams) -> Fraction:
    """The literature's closed expression for ``G(d, n, s)``, evaluated verbatim."""
    p = params
    half = Fraction(1, 2)
    if p.e == 0:
        rho = -half * p.delta * (p.w - p.delta)
    else:
        rho = half * p.eps - half * p.w * (p.n - 2 - p.v) - half * p.delta * (p.w - p.delta + 1)
    return (
        1
        + half * p.d * (p.m + p.w - 2)
        - half * (p.m + 1) * (p.w - 3)
        + half * p.v * p.m * (p.w + 1)
        + rho
    )


def genus_closed_form(params: MaxGenusParams) -> ClosedFormReport:
    closed = closed_form_value(params)
    prof_sum = genus_from_profile(params)
    return ClosedFormReport(closed, prof_sum, closed - prof_sum)


def castelnuovo_genus(s: int, N: int) -> int:
    """Castelnuovo's bound for a nondegenerate degree-``s`` curve in ``P^N``."""
    if N < 2 or s < N:
        raise DomainError("s_ge_N_ge_2", f"need s >= N >= 2, got s = {s}, N = {N}")
    w, v = divmod(s - 1, N - 1)
    return math.comb(w, 2) * (N - 1) + w * v


def castelnuovo_genus_printed(s: int, N: int) -> int:
    """``binom(w, 2) + w*v`` as printed in the source, without the ``N - 1`` factor."""
    if N < 2 or s < N:
        raise DomainError("s_ge_N_ge_2", f"need s >= N >= 2, got s = {s}, N = {N}")
    w, v = divmod(s - 1, N - 1)
    return math.comb(w, 2) + w * v


def h0_residual(params: MaxGenusParams, i: int) -> int:
    """``sum_{r >= m+w-i+1} Delta h(r)``: sections of the linked curve's ideal in degree (i, n-4)."""
    if i > params.w or i > params.m:
        raise DomainError("i_le_w_and_m", f"i = {i} exceeds min(w, m) = {min(params.w, params.m)}")
    start = params.m + params.w - i + 1
    return sum(delta_h(params, r) for r in range(max(start, 0), params.top + 1))


def h1_points(prof: HilbertProfile, k: int) -> int:
    """``h^1`` of the twisted ideal of the points: ``deg - h(k)``."""
    return max(prof.mass - prof.h(k), 0)
