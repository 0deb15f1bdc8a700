import random

import pytest
from hypothesis import given, strategies as st

from oracles import adjunction_genus, naive_intersect
from scrollink.chow import ci_invariants, intersect
from scrollink.errors import DomainError
from scrollink.scroll import H_TILDE, R_TILDE, ResolvedClass, make_scroll

S003 = make_scroll([0, 0, 3])


def test_intersect_examples():
    assert intersect(S003, [H_TILDE] * 3) == 3
    assert intersect(S003, [H_TILDE, H_TILDE, R_TILDE]) == 1
    assert intersect(S003, [ResolvedClass(2, 1), H_TILDE, H_TILDE]) == 7
    assert intersect(S003, [R_TILDE, R_TILDE, H_TILDE]) == 0


def test_intersect_arity():
    with pytest.raises(DomainError) as exc:
        intersect(S003, [H_TILDE, H_TILDE])
    assert exc.value.precondition == "intersection_arity"


def test_intersect_surface_case():
    # on a surface scroll of degree f: H^2 = f, H.R = 1, R^2 = 0
    sc = make_scroll([1, 3])
    assert intersect(sc, [H_TILDE, H_TILDE]) == 4
    assert intersect(sc, [H_TILDE - 3 * R_TILDE, R_TILDE]) == 1


@pytest.mark.parametrize(
    "degrees, a, b, expected",
    [
        ([0, 0, 3], 1, 1, (3, 1, 0)),
        ([0, 0, 3], 3, 11, (99, 33, 562)),
        # recorded elsewhere as genus 7; adjunction gives 2g-2 = 12 + 4
        ([1, 1, 1], 2, 2, (12, 4, 9)),
    ],
)
def test_ci_invariants(degrees, a, b, expected):
    ci = ci_invariants(make_scroll(degrees), a, b)
    assert (ci.degree, ci.ruling_degree, ci.genus) == expected
    assert ci.genus == adjunction_genus(a, b, sum(degrees))


def test_ci_invariants_errors():
    with pytest.raises(DomainError):
        ci_invariants(S003, 0, 2)
    with pytest.raises(DomainError):
        ci_invariants(make_scroll([1, 1, 1, 1]), 1, 1)


def test_matches_naive_expansion():
    rng = random.Random(7)
    for _ in range(300):
        r = rng.randint(2, 6)
        f = rng.randint(1, 8)
        sc = make_scroll([0] * (r - 1) + [f])
        pairs = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(r)]
        assert intersect(sc, [ResolvedClass(*p) for p in pairs]) == naive_intersect(f, pairs)


coef = st.integers(-5, 5)
cls = st.builds(ResolvedClass, coef, coef)


@given(st.integers(2, 6), st.integers(1, 8), st.data())
def test_symmetric_and_multilinear(r, f, data):
    sc = make_scroll([0] * (r - 1) + [f])
    classes = data.draw(st.lists(cls, min_size=r, max_size=r))
    perm = data.draw(st.permutations(classes))
    assert intersect(sc, classes) == intersect(sc, perm)
    extra = data.draw(cls)
    k = data.draw(st.integers(-3, 3))
    mixed = [classes[0] + k * extra] + classes[1:]
    assert intersect(sc, mixed) == intersect(sc, classes) + k * intersect(sc, [extra] + classes[1:])


def test_ci_parity_sweep():
    for f in range(1, 13):
        for a in range(1, 13):
            for b in range(1, 13):
                assert ((a + b - 3) * a * b * f + (f - 2) * a * b) % 2 == 0
                ci = ci_invariants(make_scroll([0, 0, f]), a, b)
                assert ci.degree == a * b * f and ci.ruling_degree == a * b
