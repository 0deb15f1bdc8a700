from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import castelnuovo_by_points, deficiency_genus, table_profile
from scrollink.errors import ConsistencyError, DomainError
from scrollink.hilbert import (
    HilbertProfile,
    acm_genus,
    castelnuovo_genus,
    castelnuovo_genus_printed,
    decompose,
    delta_h,
    genus_closed_form,
    genus_from_profile,
    h0_residual,
    h1_points,
    in_asymptotic_range,
    profile,
)

P96 = decompose(96, 5, 9)


def test_decompose_anchor():
    p = P96
    assert (p.m, p.eps, p.w, p.v, p.e, p.k, p.delta) == (10, 5, 2, 2, 1, 2, 0)
    assert p.planar_residual_range


def test_decompose_first_case():
    p = decompose(109, 5, 9)
    assert (p.m, p.eps, p.e, p.k, p.delta) == (12, 0, 0, 0, 0)


@pytest.mark.parametrize(
    "args, rule",
    [((96, 3, 9), "n_ge_4"), ((96, 5, 3), "s_ge_n_minus_1"), ((0, 5, 9), "d_positive"), ((10, 5, 9), "m_gt_w")],
)
def test_decompose_errors(args, rule):
    with pytest.raises(DomainError) as exc:
        decompose(*args)
    assert exc.value.precondition == rule


def test_asymptotic_threshold():
    # n = 5, s = 9: 2s/3 * 24^(1/2 + 1) * 24^(1/3) = 6 * 24^(11/6) = 2034.87...
    assert not in_asymptotic_range(2034, 5, 9)
    assert in_asymptotic_range(2035, 5, 9)
    assert decompose(2035, 5, 9).in_asymptotic_range
    assert not P96.in_asymptotic_range


def test_asymptotic_threshold_against_float():
    import math

    for n in range(4, 9):
        for s in (n - 1, 2 * n, 3 * n + 1):
            bound = 2 * s / (n - 2) * math.prod(math.factorial(n - 1) ** (1 / (n - 1 - i)) for i in range(1, n - 1))
            lo = math.floor(bound * (1 - 1e-9))
            hi = math.ceil(bound * (1 + 1e-9)) + 1
            assert not in_asymptotic_range(lo - 1, n, s)
            assert in_asymptotic_range(hi, n, s)


def test_delta_h_values():
    assert delta_h(P96, 1) == 4
    assert delta_h(P96, 13) == 1
    assert delta_h(P96, -3) == 0
    assert delta_h(P96, 14) == 0


def test_profile_anchor():
    prof = profile(P96)
    assert prof.deltas == (1, 4, 7, 9, 9, 9, 9, 9, 9, 9, 9, 7, 4, 1)
    assert prof.mass == 96
    assert list(prof.deltas) == table_profile(96, 5, 9)
    assert profile(decompose(109, 5, 9)).mass == 109


def test_profile_rejects_negative():
    with pytest.raises(ConsistencyError):
        HilbertProfile((1, -1))


def test_genus_from_profile():
    assert genus_from_profile(P96) == 529 == deficiency_genus(table_profile(96, 5, 9))
    # frozen from the summation oracle
    assert genus_from_profile(decompose(109, 5, 9)) == 678 == deficiency_genus(table_profile(109, 5, 9))


@pytest.mark.parametrize("d", range(3, 13))
def test_plane_curve_control(d):
    assert acm_genus(HilbertProfile.plane_curve(d)) == (d - 1) * (d - 2) // 2


def test_closed_form_anchor():
    rep = genus_closed_form(P96)
    assert rep.closed_form == 518
    assert rep.profile_sum == 529
    assert rep.difference == -11


def test_closed_form_rho_vanishes():
    # e = 0, delta = 0, v = 0: s = 13 in P^5 gives w = 4, v = 0; eps = 0
    p = decompose(13 * 6 + 1, 5, 13)
    assert (p.e, p.delta, p.v) == (0, 0, 0)
    d, m, w = p.d, p.m, p.w
    expected = 1 + Fraction(d, 2) * (m + w - 2) - Fraction(m + 1, 2) * (w - 3)
    assert genus_closed_form(p).closed_form == expected


def test_closed_form_can_be_fractional():
    assert genus_closed_form(decompose(109, 5, 9)).closed_form == Fraction(1395, 2)


@pytest.mark.parametrize("s, N, expected", [(9, 4, 7), (3, 3, 0), (3, 2, 1), (5, 2, 6), (10, 3, 16)])
def test_castelnuovo(s, N, expected):
    assert castelnuovo_genus(s, N) == expected == castelnuovo_by_points(s, N)


def test_castelnuovo_printed():
    assert castelnuovo_genus_printed(9, 4) == 5
    with pytest.raises(DomainError):
        castelnuovo_genus(3, 4)


def test_castelnuovo_sweep():
    for N in range(2, 9):
        for s in range(N, 40):
            assert castelnuovo_genus(s, N) == castelnuovo_by_points(s, N)


def test_h0_residual():
    assert h0_residual(P96, 0) == 1
    assert h0_residual(P96, 1) == 5
    assert h0_residual(P96, 2) == 12
    with pytest.raises(DomainError):
        h0_residual(P96, 3)


def test_h1_points():
    prof = profile(P96)
    assert h1_points(prof, 13) == 0
    assert h1_points(prof, 10) == 12
    assert h1_points(prof, -1) == 96
    assert h1_points(prof, 40) == 0


valid = st.integers(5, 9).flatmap(
    lambda n: st.integers(2 * n - 1, 2 * n + 8).flatmap(
        lambda s: st.tuples(
            st.just(n), st.just(s), st.integers((s - 1) // (n - 2) + 1, 25), st.integers(0, s - 1)
        )
    )
)


@given(valid)
def test_profile_matches_table_oracle(case):
    n, s, m, eps = case
    d = s * m + eps + 1
    prof = profile(decompose(d, n, s))
    assert list(prof.deltas) == table_profile(d, n, s)
    assert all(x >= 0 for x in prof.deltas)


@given(valid)
def test_h1_tail_monotone(case):
    n, s, m, eps = case
    p = decompose(s * m + eps + 1, n, s)
    prof = profile(p)
    values = [h1_points(prof, k) for k in range(-1, p.top + 3)]
    assert all(x >= y for x, y in zip(values, values[1:]))
    assert h1_points(prof, p.top) == 0


@given(valid)
def test_h0_residual_increments(case):
    n, s, m, eps = case
    p = decompose(s * m + eps + 1, n, s)
    for i in range(1, min(p.w, p.m) + 1):
        assert h0_residual(p, i) - h0_residual(p, i - 1) == delta_h(p, p.m + p.w - i + 1)


def test_h0_residual_planar_anchor_sweep():
    for n in range(5, 10):
        for s in range(2 * n - 1, 2 * n + 9):
            w, v = divmod(s - 1, n - 2)
            if v != n - 3:
                continue
            for m in range(w + 1, 26):
                for eps in range(s - 2 - w, s - 1):
                    p = decompose(s * m + eps + 1, n, s)
                    assert p.k == n - 3
                    assert h0_residual(p, 0) == n - 4
