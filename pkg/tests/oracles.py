"""Independent brute-force oracles used to freeze expected values.

None of these import the code under test's algorithms.
"""

from itertools import product


def naive_intersect(f, classes):
    """Expand a product of (h, rr) pairs over all 2^r monomial choices."""
    r = len(classes)
    total = 0
    for choice in product((0, 1), repeat=r):
        coef = 1
        for (h, rr), pick in zip(classes, choice):
            coef *= rr if pick else h
        j = sum(choice)
        total += coef * (f if j == 0 else 1 if j == 1 else 0)
    return total


def table_profile(d, n, s):
    """Build the Delta h list segment by segment from the piecewise table."""
    m, eps = (d - 1) // s, (d - 1) % s
    w, v = (s - 1) // (n - 2), (s - 1) % (n - 2)
    if eps < w * (n - 1 - v):
        e, k, delta = 0, eps // w, eps % w
    else:
        e, k, delta = 1, (eps + n - 2 - v) // (w + 1), (eps + n - 2 - v) % (w + 1)
    seq = [(n - 2) * r + 1 for r in range(0, w + 1)]
    seq += [s] * (m - w)
    seq += [s + k - (n - 2) * (r - m) for r in range(m + 1, m + delta + 1)]
    seq += [s + k - (n - 2) * (r - m) - 1 for r in range(m + delta + 1, m + w + e + 1)]
    return seq


def deficiency_genus(seq):
    """Sum over r >= 1 of (total - h(r)) for a Delta h list."""
    total = sum(seq)
    genus, h = 0, 0
    for r, x in enumerate(seq):
        h += x
        if r >= 1:
            genus += total - h
    return genus


def castelnuovo_by_points(s, N):
    """Deficiency sum for s points with h(r) = min(s, r(N-1)+1)."""
    genus, r = 0, 1
    while True:
        h = min(s, r * (N - 1) + 1)
        if h == s:
            return genus
        genus += s - h
        r += 1


def adjunction_genus(a, b, f):
    """Genus of a c.i. of type (a, b) on a 3-fold scroll of degree f in P^(f+2)."""
    degree = a * b * f
    twice = (a + b - 3) * degree + (f - 2) * a * b
    assert twice % 2 == 0
    return twice // 2 + 1
