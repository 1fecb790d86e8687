"""Groebner bases: comparison with sympy and Buchberger's criterion."""

import itertools
import random

import pytest
import sympy

from gmforge.arith import Ring
from gmforge.ideals import Ideal
from gmforge.recipes import build_edge_surface

from .conftest import P, grassmannian, rational_quartic, segre_threefold, twisted_cubic, veronese_surface


def naive_remainder(f, G):
    """Multivariate division of f by G, term by term, in plain Python."""
    R = f.ring
    lead = [(g.leading_monomial(), g.leading_coefficient(), g) for g in G]
    rem = R.zero()
    while not f.is_zero():
        lm, lc = f.leading_monomial(), f.leading_coefficient()
        for glm, glc, g in lead:
            if all(a >= b for a, b in zip(lm, glm)):
                q = [a - b for a, b in zip(lm, glm)]
                f = f - R.monomial(q, lc * pow(glc, -1, R.prime)) * g
                break
        else:
            term = R.monomial(lm, lc)
            rem = rem + term
            f = f - term
    return rem


def s_polynomial(f, g):
    R = f.ring
    a, b = f.leading_monomial(), g.leading_monomial()
    L = [max(x, y) for x, y in zip(a, b)]
    p = R.prime
    fa = R.monomial([x - y for x, y in zip(L, a)], pow(f.leading_coefficient(), -1, p))
    gb = R.monomial([x - y for x, y in zip(L, b)], pow(g.leading_coefficient(), -1, p))
    return fa * f - gb * g


def assert_spairs_reduce(G):
    for f, g in itertools.combinations(G, 2):
        assert naive_remainder(s_polynomial(f, g), G).is_zero()


def random_ideal(rng, n, k, deg, p=P, terms=4):
    R = Ring(n, p)
    mons = [m for m in itertools.product(range(deg + 1), repeat=n) if sum(m) == deg]
    gens = [R.from_terms((rng.choice(mons), rng.randrange(1, p)) for _ in range(terms)) for _ in range(k)]
    return Ideal(R, gens)


def to_sympy(polys, syms):
    out = []
    for f in polys:
        expr = 0
        for exps, c in f.terms():
            expr += c * sympy.prod([s**e for s, e in zip(syms, exps)])
        out.append(expr)
    return out


def from_sympy(R, basis, syms):
    out = []
    for g in basis:
        poly = sympy.Poly(g, *syms)
        f = R.from_terms((m, int(c) % R.prime) for m, c in poly.terms())
        out.append(f.monic())
    return out


@pytest.mark.parametrize("trial", range(6))
def test_groebner_matches_sympy(trial):
    rng = random.Random(1000 + trial)
    p = 101
    I = random_ideal(rng, 3 + trial % 2, 3, 2, p)
    syms = sympy.symbols(f"x0:{I.ring.nvars}")
    ref = sympy.groebner(to_sympy(I.gens, syms), *syms, order="grevlex", modulus=p)
    ours = {str(g.monic()) for g in I.groebner()}
    theirs = {str(g) for g in from_sympy(I.ring, ref.exprs, syms)}
    assert ours == theirs


@pytest.mark.parametrize(
    "make", [twisted_cubic, rational_quartic, veronese_surface, segre_threefold, grassmannian]
)
def test_spair_zero_reduction_fixtures(make):
    assert_spairs_reduce(make().ideal.groebner())


def test_spair_zero_reduction_edge_surface():
    E = build_edge_surface(random.Random(3)).surface
    assert_spairs_reduce(E.ideal.groebner())


@pytest.mark.parametrize("trial", range(4))
def test_spair_zero_reduction_random(trial):
    rng = random.Random(trial)
    I = random_ideal(rng, 4, 4, 2 + trial % 2)
    assert_spairs_reduce(I.groebner())


def test_reduced_basis_is_interreduced():
    G = grassmannian().ideal.groebner()
    for g in G:
        others = [h for h in G if h is not g]
        lm = g.leading_monomial()
        assert not any(all(a >= b for a, b in zip(lm, h.leading_monomial())) for h in others)
        assert g.leading_coefficient() == 1


def test_unit_ideal():
    R = Ring(3)
    x, y, z = R.gens()
    I = Ideal(R, [x, y, z, x + y])
    assert not I.is_unit()
    assert Ideal(R, [R.one()]).is_unit()
    assert len(I.groebner()) == 3
