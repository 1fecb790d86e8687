"""Hilbert series of monomial ideals and the invariants read off them.

For a homogeneous ideal I in k[x_0..x_n] the Hilbert series of R/I equals
that of R/LT(I), so everything here works on exponent tuples of leading
monomials.  The numerator is found by the pivot recursion

    N(I) = N(I + (x^e)) + t^{|e|} N(I : x^e)

which terminates because both sides have fewer or smaller generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _shift(a, k):
    return [0] * k + list(a)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens):
    """Minimal generators of the monomial ideal generated by ``gens``."""
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def hilbert_numerator(gens, nvars):
    """Coefficients of N(t) with HS(R/I) = N(t) / (1-t)^nvars.

    ``gens`` are exponent tuples of monomial generators.
    """
    memo = {}
    return _numerator(tuple(sorted(minimalize(gens))), nvars, memo)


def _numerator(gens, n, memo):
    if gens in memo:
        return memo[gens]
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    # base case: pairwise coprime generators
    support = [0] * n
    coprime = True
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if support[i]:
                    coprime = False
                support[i] += 1
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        memo[gens] = out
        return out
    # pivot on the variable shared by most generators
    i = max(range(n), key=lambda k: support[k])
    exps = sorted(g[i] for g in gens if g[i])
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if k == i else 0 for k in range(n))
    plus = tuple(sorted(minimalize(list(gens) + [pivot])))
    colon = tuple(
        sorted(minimalize([tuple(max(x - y, 0) for x, y in zip(g, pivot)) for g in gens]))
    )
    out = _poly_add(_numerator(plus, n, memo), _shift(_numerator(colon, n, memo), e))
    memo[gens] = out
    return out


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series data of R/I for a homogeneous ideal I.

    ``numerator`` is N(t) over (1-t)^nvars; ``h`` is the reduced numerator
    over (1-t)^(dim+1); ``dim`` is the projective dimension (-1 for the
    empty scheme).
    """

    nvars: int
    numerator: tuple
    h: tuple
    dim: int
    degree: int

    @classmethod
    def from_numerator(cls, numerator, nvars):
        num = list(numerator)
        k = nvars
        while k > 0 and sum(num) == 0:
            # synthetic division by (1 - t)
            q = []
            acc = 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = q if q else [0]
            k -= 1
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        if all(c == 0 for c in num):
            return cls(nvars, tuple(numerator), (0,), -1, 0)
        return cls(nvars, tuple(numerator), tuple(num), k - 1, sum(num))

    def hilbert_function(self, d: int) -> int:
        """dim_k (R/I)_d."""
        if d < 0:
            return 0
        n = self.nvars
        return sum(c * comb(d - j + n - 1, n - 1) for j, c in enumerate(self.numerator) if d >= j)

    def hilbert_polynomial(self) -> list:
        """Coefficients (Fractions, constant term first) of the Hilbert polynomial."""
        if self.dim < 0:
            return [Fraction(0)]
        k = self.dim + 1
        pts = list(range(k + 1))
        vals = [self._hp_value(t) for t in pts]
        return _interpolate(pts, vals)

    def _hp_value(self, t: int) -> int:
        # sum_j h_j C(t - j + k - 1, k - 1) as a polynomial identity in t
        k = self.dim + 1
        total = Fraction(0)
        for j, c in enumerate(self.h):
            total += c * _binom_poly(t - j + k - 1, k - 1)
        return total

    def hilbert_polynomial_value(self, t: int):
        return self._hp_value(t)

    @property
    def regularity_index(self) -> int:
        """Degree from which the Hilbert function equals the polynomial."""
        return max(len(self.h) - self.dim - 1, 0) if self.dim >= 0 else len(self.numerator)

    @property
    def arithmetic_genus(self) -> int:
        v = self._hp_value(0)
        return int((-1) ** self.dim * (v - 1))

    @property
    def euler_char(self) -> int:
        """chi(O_X) = P(0)."""
        return int(self._hp_value(0))

    @property
    def sectional_genus(self) -> int:
        """Genus of a general curve section of a surface (or the curve itself)."""
        if self.dim == 1:
            return int(1 - self._hp_value(0))
        if self.dim != 2:
            raise ValueError(f"sectional genus needs a curve or surface, got dimension {self.dim}")
        # P(t) = (d/2) t^2 + (d/2 + 1 - g) t + chi
        c = self.hilbert_polynomial()
        g = Fraction(self.degree, 2) + 1 - c[1]
        if g.denominator != 1:
            raise ArithmeticError("non-integral sectional genus")
        return int(g)


def _binom_poly(x, k):
    """C(x, k) as a polynomial in x, valid for negative x."""
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(x - i, i + 1)
    return out


def _interpolate(xs, ys):
    """Lagrange interpolation, coefficients constant-first."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
