"""Grassmannians of lines G(1,n) in P^n: Pluecker ideals and Schubert calculus.

Pluecker coordinates p_ij (i < j) are ordered lexicographically, so
G(1,4) lives in P^9 with coordinates p01, p02, p03, p04, p12, ..., p34.

Schubert classes sigma_(l1,l2) with n-1 >= l1 >= l2 >= 0 are combined into
:class:`SchubertCycle`; multiplication goes through the Pieri rule and the
Giambelli formula sigma_(a,b) = sigma_a sigma_b - sigma_(a+1) sigma_(b-1).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .arith import DEFAULT_PRIME, Polynomial, Ring
from .ideals import Ideal, make_rng
from .geom import BudgetExhausted, Scheme


def pluecker_index(n: int) -> dict:
    """Map (i, j), i < j, to the variable index of p_ij in P^{C(n+1,2)-1}."""
    return {pair: k for k, pair in enumerate(itertools.combinations(range(n + 1), 2))}


def pluecker_ring(n: int, p: int = DEFAULT_PRIME) -> Ring:
    idx = pluecker_index(n)
    names = tuple(f"p{i}{j}" for (i, j) in idx)
    return Ring(len(idx), p, names=names)


def _pvar(R, idx, i, j):
    if i == j:
        return R.zero()
    if i < j:
        return R.var(idx[i, j])
    return -R.var(idx[j, i])


def pluecker_ideal(n: int, p: int = DEFAULT_PRIME, ring: Ring | None = None) -> Ideal:
    """Ideal of G(1,n): the 4x4 sub-Pfaffians of the generic skew matrix."""
    if n not in (4, 5):
        raise ValueError("only G(1,4) and G(1,5) are supported")
    idx = pluecker_index(n)
    R = ring or pluecker_ring(n, p)
    x = R.gens()
    gens = []
    for a, b, c, d in itertools.combinations(range(n + 1), 4):
        gens.append(
            x[idx[a, b]] * x[idx[c, d]] - x[idx[a, c]] * x[idx[b, d]] + x[idx[a, d]] * x[idx[b, c]]
        )
    return Ideal(R, gens)


def line_pluecker(u, v, p: int) -> list[int]:
    """Pluecker vector of the line spanned by u and v."""
    n1 = len(u)
    return [(u[i] * v[j] - u[j] * v[i]) % p for i, j in itertools.combinations(range(n1), 2)]


# --------------------------------------------------------------------------
# Schubert calculus
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SchubertCycle:
    """Integer combination of Schubert classes sigma_(l1,l2) on G(1,n)."""

    n: int
    terms: tuple  # sorted ((l1, l2), coefficient) pairs, nonzero coefficients

    @classmethod
    def make(cls, n: int, terms) -> SchubertCycle:
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, c in items:
            lam = _normalize_partition(lam)
            if not _fits(lam, n):
                continue
            acc[lam] = acc.get(lam, 0) + c
        return cls(n, tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def sigma(cls, n: int, l1: int, l2: int = 0) -> SchubertCycle:
        return cls.make(n, {(l1, l2): 1})

    @classmethod
    def one(cls, n: int) -> SchubertCycle:
        return cls.sigma(n, 0, 0)

    @property
    def as_dict(self) -> dict:
        return dict(self.terms)

    def codims(self) -> set:
        return {a + b for (a, b), _ in self.terms}

    def coefficient(self, l1: int, l2: int = 0) -> int:
        return self.as_dict.get((l1, l2), 0)

    def __add__(self, other: SchubertCycle) -> SchubertCycle:
        _same_n(self, other)
        return SchubertCycle.make(self.n, list(self.terms) + list(other.terms))

    def __sub__(self, other: SchubertCycle) -> SchubertCycle:
        return self + other.scale(-1)

    def scale(self, k: int) -> SchubertCycle:
        return SchubertCycle.make(self.n, [(lam, c * k) for lam, c in self.terms])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return cycle_mult(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SchubertCycle:
        out = SchubertCycle.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms, key=lambda t: (-t[0][0], -t[0][1])):
            lam = f"s({a},{b})" if b else f"s({a})"
            parts.append(lam if c == 1 else f"{c}*{lam}")
        return "+".join(parts).replace("+-", "-")


def _normalize_partition(lam):
    if isinstance(lam, int):
        return (lam, 0)
    lam = tuple(lam) + (0,) * (2 - len(lam))
    return (lam[0], lam[1])


def _fits(lam, n):
    a, b = lam
    return n - 1 >= a >= b >= 0


def _same_n(c1, c2):
    if c1.n != c2.n:
        raise ValueError("cycles on different Grassmannians")


_CYCLE_RE = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*\s*)?s_?\((\d+)(?:,(\d+))?\)")


def parse_cycle(n: int, text: str) -> SchubertCycle:
    """Parse ``11*s(3,1)+6*s(2,2)`` (underscores as in ``s_(3,1)`` accepted)."""
    terms = []
    s = text.replace(" ", "")
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse cycle {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        terms.append(((int(m.group(3)), int(m.group(4) or 0)), sign * c))
    if pos != len(s):
        raise ValueError(f"cannot parse cycle {text!r}")
    return SchubertCycle.make(n, terms)


def pieri(c: SchubertCycle, k: int) -> SchubertCycle:
    """c * sigma_k by the Pieri rule (added boxes form a horizontal strip)."""
    n = c.n
    if k < 0:
        return SchubertCycle.make(n, [])
    out = []
    for (l1, l2), coef in c.terms:
        # mu1 >= l1 >= mu2 >= l2, mu1 + mu2 = l1 + l2 + k
        for mu2 in range(l2, l1 + 1):
            mu1 = l1 + l2 + k - mu2
            if mu1 < l1 or mu1 < mu2:
                continue
            if mu1 <= n - 1:
                out.append(((mu1, mu2), coef))
    return SchubertCycle.make(n, out)


def cycle_mult(c1: SchubertCycle, c2: SchubertCycle) -> SchubertCycle:
    """Product in the Chow ring via Giambelli and iterated Pieri."""
    _same_n(c1, c2)
    total = SchubertCycle.make(c1.n, [])
    for (a, b), coef in c2.terms:
        if b == 0:
            part = pieri(c1, a)
        else:
            part = pieri(pieri(c1, a), b) - pieri(pieri(c1, a + 1), b - 1)
        total = total + part.scale(coef)
    return total


def integral(c: SchubertCycle) -> int:
    """Degree of the zero-dimensional part (coefficient of the point class)."""
    return c.coefficient(c.n - 1, c.n - 1)


def dual(lam, n: int):
    a, b = _normalize_partition(lam)
    return (n - 1 - b, n - 1 - a)


def lattice_path_count(n: int) -> int:
    """Standard Young tableaux of the 2 x (n-1) rectangle, counted by dynamic programming."""
    m = n - 1
    # ways[a][b]: fillings reaching shape (a, b)
    ways = [[0] * (m + 1) for _ in range(m + 1)]
    ways[0][0] = 1
    for a in range(m + 1):
        for b in range(a + 1):
            if a == b == 0:
                continue
            w = ways[a - 1][b] if a - 1 >= b else 0
            if b > 0:
                w += ways[a][b - 1]
            ways[a][b] = w
    return ways[m][m]


# --------------------------------------------------------------------------
# the bridge: Schubert class of a surface in G(1,4)
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceClassG14:
    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.a + self.b

    def cycle(self) -> SchubertCycle:
        return SchubertCycle.make(4, {(3, 1): self.a, (2, 2): self.b})

    def __str__(self):
        return str(self.cycle())


def sigma11_equations(R: Ring, h) -> list[Polynomial]:
    """Lines contained in the hyperplane h.x = 0 of P^4: sum_i h_i p_ij = 0."""
    idx = pluecker_index(4)
    out = []
    for j in range(5):
        f = R.zero()
        for i in range(5):
            if i != j and h[i] % R.prime:
                f = f + _pvar(R, idx, i, j) * h[i]
        out.append(f)
    return out


def wedge_equations(R: Ring, q) -> list[Polynomial]:
    """p wedge q = 0 for a fixed 2-vector q: the lines meeting the line q."""
    idx = pluecker_index(4)
    p = R.prime

    def qv(i, j):
        if i < j:
            return q[idx[i, j]] % p
        return (-q[idx[j, i]]) % p

    out = []
    for i, j, k, l in itertools.combinations(range(5), 4):
        f = (
            _pvar(R, idx, i, j) * qv(k, l)
            - _pvar(R, idx, i, k) * qv(j, l)
            + _pvar(R, idx, i, l) * qv(j, k)
            + _pvar(R, idx, j, k) * qv(i, l)
            - _pvar(R, idx, j, l) * qv(i, k)
            + _pvar(R, idx, k, l) * qv(i, j)
        )
        out.append(f)
    return out


def sigma22_plane(p: int = DEFAULT_PRIME, plane=(0, 1, 2)) -> Scheme:
    """All lines in the coordinate plane spanned by e_i, i in ``plane``."""
    R = pluecker_ring(4, p)
    idx = pluecker_index(4)
    gens = list(pluecker_ideal(4, ring=R).gens)
    inside = set(plane)
    for (i, j), k in idx.items():
        if i not in inside or j not in inside:
            gens.append(R.var(k))
    return Scheme(Ideal(R, gens), "sigma22-plane")


def sigma2_variety(q, p: int = DEFAULT_PRIME) -> Ideal:
    """Ideal of the lines meeting the line with Pluecker vector q."""
    R = pluecker_ring(4, p)
    return pluecker_ideal(4, ring=R) + wedge_equations(R, q)


def _finite_length(I: Ideal):
    d = I.dimension()
    if d > 0:
        return None
    return 0 if d < 0 else I.degree()


def surface_class(S: Scheme, rng=None, budget: int = 5) -> SurfaceClassG14:
    """Class a*sigma_(3,1) + b*sigma_(2,2) of a surface S in G(1,4) in P^9.

    b is the number of lines of S inside a random hyperplane of P^4
    (intersection with a sigma_(1,1) variety), a the number meeting a
    random line (sigma_2 variety).  a + b must equal deg S.
    """
    rng = make_rng(rng)
    R = S.ring
    p = R.prime
    if R.nvars != 10:
        raise ValueError("surface_class expects a scheme in the Pluecker P^9")
    deg = S.degree()
    if S.dim() != 2:
        raise ValueError(f"expected a surface, got dimension {S.dim()}")
    for _ in range(budget):
        h = [rng.randrange(1, p) for _ in range(5)]
        b = _finite_length(S.ideal + sigma11_equations(R, h))
        u = [rng.randrange(p) for _ in range(5)]
        v = [rng.randrange(p) for _ in range(5)]
        a = _finite_length(S.ideal + wedge_equations(R, line_pluecker(u, v, p)))
        if a is None or b is None:
            continue
        if a + b != deg:
            raise ArithmeticError(f"class ({a},{b}) does not add up to degree {deg}")
        return SurfaceClassG14(a, b)
    raise BudgetExhausted("no transverse Schubert varieties found")


# --------------------------------------------------------------------------
# Pfaffian presentations
# --------------------------------------------------------------------------


def skew_syzygy_matrix(quadrics) -> list[list[Polynomial]]:
    """A skew 5x5 matrix M of linear forms with M q = 0 for the 5 quadrics q.

    For a codimension-3 Gorenstein ideal generated by 5 quadrics (such as a
    linear section of G(1,4)) the linear syzygies form a 5-dimensional space
    and exactly one basis of it is skew-symmetric, up to scaling; the 4x4
    Pfaffians of that matrix are then proportional to the quadrics.
    """
    import numpy as np

    from . import _kernels

    q = list(quadrics)
    if len(q) != 5:
        raise ValueError("expected 5 quadrics")
    R = q[0].ring
    p = R.prime
    n = R.nvars
    xs = R.gens()
    cols: dict = {}
    prods = []
    for i in range(5):
        for k in range(n):
            h = xs[k] * q[i]
            prods.append(h)
            for m in h.termdict:
                cols.setdefault(m, len(cols))
    A = np.zeros((5 * n, len(cols)), dtype=np.int64)
    for r, h in enumerate(prods):
        for m, c in h.termdict.items():
            A[r, cols[m]] = c
    syz = _kernels.left_nullspace(A, p)
    if len(syz) != 5:
        raise ValueError(f"{len(syz)} linear syzygies, expected 5")
    S = syz.reshape(5, 5, n)  # S[r, i, k]: coefficient of x_k in entry i of syzygy r
    # find B with (B S) skew: M[a,i,k] + M[i,a,k] = 0, M = sum_r B[a,r] S[r,i,k]
    rows = []
    for a in range(5):
        for i in range(a, 5):
            for k in range(n):
                row = np.zeros(25, dtype=np.int64)
                for r in range(5):
                    row[a * 5 + r] = (row[a * 5 + r] + S[r, i, k]) % p
                    row[i * 5 + r] = (row[i * 5 + r] + S[r, a, k]) % p
                rows.append(row)
    K = _kernels.nullspace(np.array(rows, dtype=np.int64), p)
    if len(K) != 1:
        raise ValueError(f"skew syzygy matrices form a space of dimension {len(K)}, expected 1")
    Bm = K[0].reshape(5, 5)
    M = np.einsum("ar,rik->aik", Bm, S) % p
    varm = R.var_monomials
    return [
        [Polynomial(R, {varm[k]: int(M[a, i, k]) for k in range(n) if M[a, i, k]}) for i in range(5)]
        for a in range(5)
    ]


def pfaffian_embedding(quadrics) -> list[Polynomial]:
    """Linear forms (p_01, ..., p_34) mapping V(quadrics) into G(1,4) in P^9."""
    M = skew_syzygy_matrix(quadrics)
    return [M[i][j] for i, j in itertools.combinations(range(5), 2)]
