"""Exact arithmetic over a prime field F_p.

Monomials are packed into Python ints.  The low ``nvars`` 16-bit fields hold
the exponents (variable ``i`` in field ``i``); above them sit one field per
row of the monomial order's weight matrix, most significant row on top.
Because every field is linear in the exponent vector, monomial product is
integer addition and the order key is a cheap integer expression::

    key(m) = m - 2 * (m & EXPMASK)

i.e. compare the weight rows first, then the exponents in reverse
lexicographic fashion (a smaller exponent of the last variable wins).
With the single weight row ``(1, ..., 1)`` this is grevlex.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property

DEFAULT_PRIME = 31991
LARGE_PRIME = 10000019

_BITS = 16
_FIELD = (1 << _BITS) - 1
_MAX_EXP = (1 << (_BITS - 1)) - 1


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    p = int(p)
    if p % 2 == 0 or not is_prime(p) or p >= 2**31:
        raise ValueError(f"expected an odd prime below 2**31, got {p}")
    return p


# --------------------------------------------------------------------------
# Field elements
# --------------------------------------------------------------------------


class GF:
    """The prime field F_p."""

    def __init__(self, p: int = DEFAULT_PRIME):
        self.p = check_prime(p)

    def __call__(self, value: int) -> FieldElem:
        return FieldElem(int(value) % self.p, self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(x, -1, self.p)


@dataclass(frozen=True)
class FieldElem:
    value: int
    p: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise ValueError("field elements over different primes")
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return FieldElem((self.value + self._coerce(other)) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem((self.value - self._coerce(other)) % self.p, self.p)

    def __rsub__(self, other):
        return FieldElem((self._coerce(other) - self.value) % self.p, self.p)

    def __mul__(self, other):
        return FieldElem((self.value * self._coerce(other)) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem((-self.value) % self.p, self.p)

    def inv(self) -> FieldElem:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FieldElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * FieldElem(self._coerce(other), self.p).inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return FieldElem(pow(self.value, k, self.p), self.p)

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))


# --------------------------------------------------------------------------
# Monomial orders and rings
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """Weight rows compared in turn, ties broken reverse-lexicographically.

    Rows must be nonnegative and together with the tie-break form a well
    order (in practice: some row is positive on every variable).
    """

    rows: tuple[tuple[int, ...], ...]
    name: str = "custom"

    @classmethod
    def grevlex(cls, weights):
        return cls((tuple(weights),), "grevlex")

    @classmethod
    def eliminate(cls, weights, block):
        """Elimination order for the variables in ``block``.

        The first row counts (weighted) degree in the block, so any monomial
        touching the block beats every monomial outside it.
        """
        block = set(block)
        first = tuple(max(w, 1) if i in block else 0 for i, w in enumerate(weights))
        return cls((first, tuple(weights)), "eliminate")

    @classmethod
    def lex(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), "lex")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring F_p[x_0, ..., x_{n-1}] with a fixed monomial order.

    ``weights`` is the grading (all ones unless stated).  Two rings are equal
    iff variable count, prime, order, grading and names agree.
    """

    nvars: int
    prime: int = DEFAULT_PRIME
    order: MonomialOrder | None = None
    weights: tuple[int, ...] | None = None
    names: tuple[str, ...] | None = None
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        check_prime(self.prime)
        n = self.nvars
        if self.weights is None:
            object.__setattr__(self, "weights", (1,) * n)
        if len(self.weights) != n or any(w < 0 for w in self.weights):
            raise ValueError("bad grading")
        if self.order is None:
            object.__setattr__(self, "order", MonomialOrder.grevlex(self.weights))
        if any(len(r) != n for r in self.order.rows):
            raise ValueError("order rows must have one weight per variable")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(n)))

    # -- packing ---------------------------------------------------------

    @cached_property
    def _layout(self):
        n = self.nvars
        rows = self.order.rows
        r = len(rows)
        expmask = (1 << (_BITS * n)) - 1
        guard = sum(1 << (_BITS * i + _BITS - 1) for i in range(n))
        varm = []
        for i in range(n):
            m = 1 << (_BITS * i)
            for k, row in enumerate(rows):
                m += row[i] << (_BITS * (n + r - 1 - k))
            varm.append(m)
        deg_row = None
        for k, row in enumerate(rows):
            if row == tuple(self.weights):
                deg_row = k
        return expmask, guard, varm, deg_row, r

    @property
    def expmask(self) -> int:
        return self._layout[0]

    @property
    def var_monomials(self) -> list[int]:
        return self._layout[2]

    def pack(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        varm = self._layout[2]
        m = 0
        for e, v in zip(exps, varm):
            if e:
                if e < 0 or e > _MAX_EXP:
                    raise ValueError("exponent out of range")
                m += e * v
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (_BITS * i)) & _FIELD for i in range(self.nvars))

    def key(self, m: int) -> int:
        return m - 2 * (m & self._layout[0])

    def mdeg(self, m: int) -> int:
        """Graded degree of a packed monomial."""
        _, _, _, deg_row, r = self._layout
        if deg_row is not None:
            shift = _BITS * (self.nvars + r - 1 - deg_row)
            if deg_row == 0:
                return m >> shift
            return (m >> shift) & _FIELD
        return sum(w * e for w, e in zip(self.weights, self.unpack(m)))

    def divides(self, a: int, b: int) -> bool:
        """Does monomial ``a`` divide monomial ``b``?"""
        expmask, guard = self._layout[0], self._layout[1]
        return (((b & expmask) + guard - (a & expmask)) & guard) == guard

    def lcm(self, a: int, b: int) -> int:
        return self.pack(tuple(max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))))

    def coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.unpack(a), self.unpack(b)))

    # -- derived rings ---------------------------------------------------

    def with_order(self, order: MonomialOrder) -> Ring:
        return Ring(self.nvars, self.prime, order, self.weights, self.names)

    def with_prime(self, p: int) -> Ring:
        return Ring(self.nvars, p, self.order, self.weights, self.names)

    def grevlex(self) -> Ring:
        return self.with_order(MonomialOrder.grevlex(self.weights))

    def elimination(self, block) -> Ring:
        return self.with_order(MonomialOrder.eliminate(self.weights, block))

    @property
    def is_standard_graded(self) -> bool:
        return all(w == 1 for w in self.weights)

    # -- elements --------------------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return Polynomial(self, {0: 1})

    def const(self, c: int) -> Polynomial:
        c %= self.prime
        return Polynomial(self, {0: c} if c else {})

    def var(self, i: int) -> Polynomial:
        return Polynomial(self, {self.var_monomials[i]: 1})

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coef: int = 1) -> Polynomial:
        c = coef % self.prime
        return Polynomial(self, {self.pack(exps): c} if c else {})

    def from_terms(self, terms) -> Polynomial:
        """Build from ``(exponent tuple, coefficient)`` pairs; duplicates add up."""
        p = self.prime
        d: dict[int, int] = {}
        for exps, c in terms:
            m = self.pack(exps)
            d[m] = (d.get(m, 0) + c) % p
        return Polynomial(self, {m: c for m, c in d.items() if c})

    def monomials_of_degree(self, d: int) -> list[int]:
        """Packed monomials of graded degree ``d``, descending in the order."""
        cache = self._cache.setdefault("mondeg", {})
        if d in cache:
            return cache[d]
        if not self.is_standard_graded:
            raise ValueError("monomials_of_degree needs the standard grading")
        varm = self.var_monomials
        out = []
        for combo in itertools.combinations_with_replacement(range(self.nvars), d):
            m = 0
            for i in combo:
                m += varm[i]
            out.append(m)
        out.sort(key=self.key, reverse=True)
        cache[d] = out
        return out

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(self, text)

    def __repr__(self):
        return f"Ring(nvars={self.nvars}, p={self.prime}, order={self.order.name})"


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------


def _mul_dicts(a: dict, b: dict, p: int) -> dict:
    if len(a) < len(b):
        a, b = b, a
    acc: dict[int, int] = {}
    get = acc.get
    for m2, c2 in b.items():
        for m1, c1 in a.items():
            m = m1 + m2
            acc[m] = get(m, 0) + c1 * c2
    return {m: c % p for m, c in acc.items() if c % p}


class Polynomial:
    """Immutable polynomial: a ring and a map packed-monomial -> coefficient."""

    __slots__ = ("ring", "_t", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self._t = terms
        self._sorted = None
        self._hash = None

    # -- structure -------------------------------------------------------

    @property
    def termdict(self) -> dict:
        return self._t

    def sorted_monomials(self) -> list[int]:
        if self._sorted is None:
            self._sorted = sorted(self._t, key=self.ring.key, reverse=True)
        return self._sorted

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms as ``(exponents, coefficient)``, strictly descending."""
        return [(self.ring.unpack(m), self._t[m]) for m in self.sorted_monomials()]

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def leading_monomial(self) -> tuple[int, ...]:
        return self.ring.unpack(self.sorted_monomials()[0])

    def leading_coefficient(self) -> int:
        return self._t[self.sorted_monomials()[0]]

    def degree(self) -> int:
        if not self._t:
            return -1
        return max(self.ring.mdeg(m) for m in self._t)

    def homogeneous_degree(self):
        """The common degree of all terms, or None (also None for zero)."""
        degs = {self.ring.mdeg(m) for m in self._t}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self._t or self.homogeneous_degree() is not None

    def monic(self) -> Polynomial:
        if not self._t:
            return self
        return self * pow(self.leading_coefficient(), -1, self.ring.prime)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, FieldElem)):
            return self.ring.const(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.prime
        d = dict(self._t)
        for m, c in other._t.items():
            v = (d.get(m, 0) + c) % p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.prime
        return Polynomial(self.ring, {m: p - c for m, c in self._t.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            c = int(other) % self.ring.prime
            if c == 0:
                return self.ring.zero()
            p = self.ring.prime
            return Polynomial(self.ring, {m: (v * c) % p for m, v in self._t.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _mul_dicts(self._t, other._t, self.ring.prime))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps) -> Polynomial:
        """Multiply by the monomial with exponent vector ``exps``."""
        u = self.ring.pack(exps)
        return Polynomial(self.ring, {m + u: c for m, c in self._t.items()})

    def exact_divide_monomial(self, exps) -> Polynomial:
        u = self.ring.pack(exps)
        out = {}
        for m, c in self._t.items():
            if not self.ring.divides(u, m):
                raise ValueError("monomial does not divide polynomial")
            out[m - u] = c
        return Polynomial(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._t == other._t
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.nvars, self.ring.prime, frozenset(self._t.items())))
        return self._hash

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, point) -> int:
        r = self.ring
        if len(point) != r.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {r.nvars} variables")
        p = r.prime
        pt = [int(x) % p for x in point]
        total = 0
        for m, c in self._t.items():
            v = c
            for x, e in zip(pt, r.unpack(m)):
                if e:
                    v = (v * pow(x, e, p)) % p
            total += v
        return total % p

    def compose(self, forms, memo=None) -> Polynomial:
        """Substitute ``forms[i]`` for ``x_i``; the result lives in the forms' ring."""
        r = self.ring
        if len(forms) != r.nvars:
            raise ValueError(f"need {r.nvars} forms, got {len(forms)}")
        target = forms[0].ring if forms else r
        for f in forms:
            if f.ring != target:
                raise RingMismatchError("forms live in different rings")
        p = target.prime
        if memo is None:
            memo = {}
        memo.setdefault(0, {0: 1})
        varm = r.var_monomials

        def image(m):
            got = memo.get(m)
            if got is not None:
                return got
            exps = r.unpack(m)
            i = next(i for i, e in enumerate(exps) if e)
            val = _mul_dicts(image(m - varm[i]), forms[i]._t, p)
            memo[m] = val
            return val

        acc: dict[int, int] = {}
        for m in sorted(self._t, key=r.mdeg):
            c = self._t[m]
            for mm, v in image(m).items():
                acc[mm] = acc.get(mm, 0) + c * v
        return Polynomial(target, {m: v % p for m, v in acc.items() if v % p})

    def substitute(self, matrix) -> Polynomial:
        """Linear change of variables ``x_i -> sum_j matrix[i][j] x_j``."""
        r = self.ring
        if len(matrix) != r.nvars or any(len(row) != r.nvars for row in matrix):
            raise ValueError("substitution matrix has the wrong shape")
        forms = [
            r.from_terms(
                (tuple(int(j == k) for k in range(r.nvars)), int(a)) for j, a in enumerate(row)
            )
            for row in matrix
        ]
        return self.compose(forms)

    def to_ring(self, ring: Ring, varmap=None) -> Polynomial:
        """Re-express in ``ring``; ``varmap[i]`` is the target index of x_i."""
        src = self.ring
        if varmap is None:
            if ring.nvars != src.nvars:
                raise ValueError("variable counts differ; give a varmap")
            varmap = range(src.nvars)
        varm = ring.var_monomials
        p = ring.prime
        out = {}
        for m, c in self._t.items():
            mm = 0
            for e, j in zip(src.unpack(m), varmap):
                if e:
                    mm += e * varm[j]
            out[mm] = c % p
        return Polynomial(ring, {m: c for m, c in out.items() if c})

    def derivative(self, i: int) -> Polynomial:
        r = self.ring
        p = r.prime
        v = r.var_monomials[i]
        out = {}
        for m, c in self._t.items():
            e = r.unpack(m)[i]
            if e:
                c2 = (c * e) % p
                if c2:
                    out[m - v] = c2
        return Polynomial(r, out)

    def variables(self) -> set[int]:
        used = set()
        for m in self._t:
            used.update(i for i, e in enumerate(self.ring.unpack(m)) if e)
        return used

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for m, c in self._t.items() if self.ring.mdeg(m) == d})

    # -- text ------------------------------------------------------------

    def __str__(self):
        if not self._t:
            return "0"
        names = self.ring.names
        parts = []
        for m in self.sorted_monomials():
            c = self._t[m]
            factors = []
            for name, e in zip(names, self.ring.unpack(m)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return "+".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    """Parse the canonical grammar (``3*x0^2*x1+31990*x2^3``); ``-`` is accepted."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ring.zero()
    index = {name: i for i, name in enumerate(ring.names)}
    terms = []
    for sign, body in _TERM_RE.findall(s):
        coef = 1
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"malformed term {body!r}")
            if factor.isdigit():
                coef *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r}")
            exps[index[name]] += int(power) if power else 1
        if sign == "-":
            coef = -coef
        terms.append((tuple(exps), coef))
    return ring.from_terms(terms)
