"""Univariate polynomials over F_p, checked against sympy."""

import random

import sympy

from gmforge import _univar as U

P = 31991


def random_poly(rng, d, p=P):
    f = [rng.randrange(p) for _ in range(d)] + [1]
    return f


def test_roots_of_split_polynomial():
    rng = random.Random(0)
    rts = rng.sample(range(P), 7)
    f = [1]
    for r in rts:
        f = U.mul(f, [(-r) % P, 1], P)
    assert sorted(U.roots(f, P, rng)) == sorted(rts)


def test_gcd_and_divmod():
    rng = random.Random(1)
    a, b, c = (random_poly(rng, d) for d in (3, 4, 2))
    g = U.gcd(U.mul(a, c, P), U.mul(b, c, P), P)
    assert g == U.monic(c, P)
    q, r = U.divmod_(U.mul(a, b, P), b, P)
    assert q == a and not U.trim(r)


def _sympy_degrees(f, p):
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(f)), x, modulus=p)
    return sorted(g.degree() for g, _ in poly.factor_list()[1])


def test_factor_squarefree_against_sympy():
    rng = random.Random(2)
    for trial in range(10):
        f = [1]
        for d in rng.sample([1, 1, 2, 3, 3, 4, 5], 4):
            f = U.mul(f, random_poly(rng, d), P)
        if U.gcd(f, U.trim([(i * c) % P for i, c in enumerate(f)][1:]), P) != [1]:
            continue
        ours = U.factor_squarefree(f, P, rng)
        assert sorted(len(g) - 1 for g in ours) == _sympy_degrees(f, P)
        prod = [1]
        for g in ours:
            prod = U.mul(prod, g, P)
        assert prod == U.monic(f, P)
