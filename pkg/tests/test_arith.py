"""Tests for prime fields, rings and polynomials."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gmforge.arith import GF, MonomialOrder, Ring, RingMismatchError, check_prime, is_prime

from .conftest import P


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(31991) and is_prime(10000019)


def test_check_prime_rejects():
    for bad in (2, 15, 1, 2**31 + 11):
        with pytest.raises(ValueError):
            check_prime(bad)


def test_field_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == 1
    assert a * b == 1
    assert a / b == F(3) * F(3)
    assert a ** -1 == b
    assert -a == 4
    with pytest.raises(ZeroDivisionError):
        F(0).inv()


@given(st.integers(1, P - 1), st.integers(0, P - 1))
def test_field_inverse(x, y):
    F = GF(P)
    assert F(x) * F(x).inv() == 1
    assert (F(y) / F(x)) * F(x) == F(y)


def test_grevlex_order():
    R = Ring(3)
    x, y, z = R.gens()
    f = x * z + y**2 + z**2 + x**2
    # grevlex: x^2 > y^2 > xz > z^2 (a smaller exponent of the last variable wins ties)
    assert f.leading_monomial() == (2, 0, 0)
    g = x * z + y**2
    assert g.leading_monomial() == (0, 2, 0)


def test_lex_order():
    R = Ring(3, order=MonomialOrder.lex(3))
    x, y, z = R.gens()
    assert (y**5 + x * z).leading_monomial() == (1, 0, 1)


def test_ring_mismatch():
    R, S = Ring(2), Ring(2, 7)
    with pytest.raises(RingMismatchError):
        R.var(0) + S.var(0)


def test_parse_roundtrip():
    R = Ring(3)
    f = R.parse("3*x0^2*x1 - x2^3 + 5")
    x0, x1, x2 = R.gens()
    assert f == 3 * x0**2 * x1 - x2**3 + 5
    assert R.parse(str(f)) == f


def test_evaluate_and_compose():
    R = Ring(2)
    x, y = R.gens()
    f = x**2 - 3 * x * y
    assert f.evaluate((2, 1)) == (4 - 6) % P
    g = f.compose([x + y, y])
    assert g == (x + y) ** 2 - 3 * (x + y) * y


def test_derivative():
    R = Ring(2)
    x, y = R.gens()
    assert (x**3 * y + y**2).derivative(0) == 3 * x**2 * y


polys = st.lists(
    st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), st.integers(0, P - 1)),
    max_size=6,
)


@settings(max_examples=100)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    R = Ring(3)
    f, g, h = R.from_terms(a), R.from_terms(b), R.from_terms(c)
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R.zero()
    pt = (3, 14, 159)
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt) % P
