"""Homogeneous ideals and the invariants of the schemes they cut out.

:class:`Ideal` wraps a generator list with lazily filled caches (Groebner
bases per monomial order, Hilbert data).  Ideals are create-once: every
operation returns a new handle.
"""

from __future__ import annotations

import itertools
import logging
import random
import threading
from math import comb

import numpy as np

from . import _kernels
from .arith import MonomialOrder, Polynomial, Ring
from .groebner import GBStats, buchberger, elems_from_basis, normal_forms_raw
from .hilbert import HilbertData, hilbert_numerator

log = logging.getLogger(__name__)

IDEAL_HEADER = "gmforge-ideal v1"


class NotASurfaceError(ValueError):
    """An invariant defined only for surfaces (or curves) was requested."""


class PositiveDimensionalError(ValueError):
    """A scheme expected to be finite turned out to have positive dimension."""


class Ideal:
    """Homogeneous ideal of ``ring`` given by generators.

    Examples
    ========

    >>> from gmforge.arith import Ring
    >>> R = Ring(4)
    >>> x0, x1, x2, x3 = R.gens()
    >>> I = Ideal(R, [x0*x2 - x1**2, x1*x3 - x2**2, x0*x3 - x1*x2])
    >>> I.dimension(), I.degree()
    (1, 3)
    """

    def __init__(self, ring: Ring, gens, check=True):
        gens = [g for g in gens if not g.is_zero()]
        if check:
            for g in gens:
                if g.ring != ring:
                    raise ValueError("generator lives in a different ring")
                if not g.is_homogeneous():
                    raise ValueError(f"generator is not homogeneous: {g}")
        self.ring = ring
        self.gens = tuple(gens)
        self._lock = threading.RLock()
        self._gb: dict = {}
        self._hilbert = None
        self.stats = GBStats()

    def __repr__(self):
        return f"Ideal(<{len(self.gens)} generators in {self.ring.nvars} variables>)"

    # -- Groebner bases ----------------------------------------------------

    def _raw_basis(self, ring: Ring | None = None):
        ring = self.ring if ring is None else ring
        with self._lock:
            got = self._gb.get(ring)
            if got is None:
                gens = self.gens if ring == self.ring else [g.to_ring(ring) for g in self.gens]
                got = buchberger(gens, ring, stats=self.stats)
                self._gb[ring] = got
            return got

    def groebner(self, ring: Ring | None = None) -> list[Polynomial]:
        """Reduced Groebner basis (in ``ring``'s order, default the own one)."""
        ring = self.ring if ring is None else ring
        return [Polynomial(ring, dict(zip(m, c))) for m, c in self._raw_basis(ring)]

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [self.ring.unpack(m[0]) for m, _ in self._raw_basis()]

    def is_unit(self) -> bool:
        return self._raw_basis() == [([0], [1])]

    def is_zero(self) -> bool:
        return not self.gens

    # -- membership and normal forms ---------------------------------------

    def normal_forms(self, polys) -> list[Polynomial]:
        R = self.ring
        basis = self._raw_basis()
        if not basis:
            return list(polys)
        raw = []
        for f in polys:
            if f.ring != R:
                raise ValueError("polynomial lives in a different ring")
            mons = f.sorted_monomials()
            raw.append((mons, [f.termdict[m] for m in mons]))
        out = normal_forms_raw(R, elems_from_basis(basis), raw)
        return [Polynomial(R, dict(zip(m, c))) for m, c in out]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.normal_forms([f])[0]

    def contains(self, f) -> bool:
        if isinstance(f, Ideal):
            return all(g.is_zero() for g in self.normal_forms(list(f.gens)))
        return self.normal_form(f).is_zero()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self._raw_basis() == other._raw_basis()

    __hash__ = object.__hash__

    # -- Hilbert data --------------------------------------------------------

    def hilbert(self) -> HilbertData:
        with self._lock:
            if self._hilbert is None:
                if not self.ring.is_standard_graded:
                    raise ValueError("Hilbert data needs the standard grading")
                num = hilbert_numerator(self.leading_monomials(), self.ring.nvars)
                self._hilbert = HilbertData.from_numerator(num, self.ring.nvars)
            return self._hilbert

    def dimension(self) -> int:
        """Projective dimension of the scheme (-1 if empty)."""
        return self.hilbert().dim

    def degree(self) -> int:
        return self.hilbert().degree

    def sectional_genus(self) -> int:
        h = self.hilbert()
        if h.dim not in (1, 2):
            raise NotASurfaceError(f"sectional genus needs a curve or surface, got dimension {h.dim}")
        return h.sectional_genus

    def euler_char(self) -> int:
        h = self.hilbert()
        if h.dim != 2:
            raise NotASurfaceError(f"chi(O_S) is read here only for surfaces, got dimension {h.dim}")
        return h.euler_char

    def hilbert_function(self, d: int) -> int:
        return self.hilbert().hilbert_function(d)

    def graded_piece_dim(self, d: int) -> int:
        """dim_k I_d."""
        n = self.ring.nvars
        return comb(n + d - 1, d) - self.hilbert_function(d)

    def basis_in_degree(self, d: int) -> list[Polynomial]:
        """A basis of I_d: ``m - NF(m)`` over the leading-term monomials m of degree d."""
        R = self.ring
        lts = [m[0] for m, _ in self._raw_basis()]
        mons = [m for m in R.monomials_of_degree(d) if any(R.divides(t, m) for t in lts)]
        polys = [Polynomial(R, {m: 1}) for m in mons]
        nfs = self.normal_forms(polys)
        return [f - g for f, g in zip(polys, nfs)]

    def minimal_generators(self) -> list[Polynomial]:
        """A minimal homogeneous generating set picked from the generators."""
        R = self.ring
        p = R.prime
        out: list[Polynomial] = []
        for d in sorted({g.homogeneous_degree() for g in self.gens}):
            cols = {m: i for i, m in enumerate(R.monomials_of_degree(d))}
            rows = Ideal(R, out, check=False).basis_in_degree(d) if out else []
            A = _to_matrix(rows, cols, p)
            rank = len(_kernels.rref(A, p)) if rows else 0
            A = A[:rank]
            for g in self.gens:
                if g.homogeneous_degree() != d:
                    continue
                B = np.vstack([A, _to_matrix([g], cols, p)])
                piv = _kernels.rref(B, p)
                if len(piv) > rank:
                    rank = len(piv)
                    A = B[:rank]
                    out.append(g)
        return out

    def minimal_generators_by_degree(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for g in self.minimal_generators():
            d = g.homogeneous_degree()
            counts[d] = counts.get(d, 0) + 1
        return dict(sorted(counts.items()))

    def generator_degrees(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for g in self.gens:
            d = g.homogeneous_degree()
            counts[d] = counts.get(d, 0) + 1
        return dict(sorted(counts.items()))

    # -- constructions -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, list(self.gens) + list(other.gens))
        return Ideal(self.ring, list(self.gens) + list(other))

    def __mul__(self, other: Ideal):
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def reduced(self) -> Ideal:
        """Same ideal, generated by its reduced Groebner basis (cache carried over)."""
        J = Ideal(self.ring, self.groebner(), check=False)
        J._gb[self.ring] = self._raw_basis()
        return J

    def evaluate(self, point) -> list[int]:
        return [g.evaluate(point) for g in self.gens]

    def vanishes_at(self, point) -> bool:
        return all(v == 0 for v in self.evaluate(point))


def _to_matrix(polys, cols, p):
    A = np.zeros((len(polys), len(cols)), dtype=np.int64)
    for i, f in enumerate(polys):
        for m, c in f.termdict.items():
            A[i, cols[m]] = c % p
    return A


# --------------------------------------------------------------------------
# randomness
# --------------------------------------------------------------------------


def make_rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_linear_form(ring: Ring, rng) -> Polynomial:
    p = ring.prime
    return ring.from_terms(
        (tuple(int(i == j) for j in range(ring.nvars)), rng.randrange(1, p))
        for i in range(ring.nvars)
    )


def random_combination(polys, rng, p) -> Polynomial:
    out = polys[0].ring.zero()
    for f in polys:
        out = out + f * rng.randrange(1, p)
    return out


# --------------------------------------------------------------------------
# elimination, saturation, quotients
# --------------------------------------------------------------------------


def eliminate(I: Ideal, block, keep_ring: bool = False) -> Ideal:
    """``I`` intersected with the subring of variables outside ``block``.

    The result lives in a ring on the kept variables (in order), unless
    ``keep_ring`` is set.
    """
    R = I.ring
    block = sorted(set(block))
    E = R.elimination(block)
    G = I.groebner(E)
    bset = set(block)
    kept = [i for i in range(R.nvars) if i not in bset]
    out = [g for g in G if not (g.variables() & bset)]
    if keep_ring:
        return Ideal(R, [g.to_ring(R) for g in out], check=False)
    S = Ring(
        len(kept), R.prime,
        weights=tuple(R.weights[i] for i in kept),
        names=tuple(f"x{j}" for j in range(len(kept))),
    )
    varmap = {i: j for j, i in enumerate(kept)}
    full = [varmap.get(i, 0) for i in range(R.nvars)]
    return Ideal(S, [g.to_ring(S, full) for g in out], check=False)


def saturate_by_poly(I: Ideal, h: Polynomial) -> Ideal:
    """``I : h^infinity``.

    Adds a variable z of the same degree as h placed last in a reverse
    lexicographic order; in such an order the Groebner basis of ``I + (z-h)``
    saturates with respect to z by simply dividing out powers of z.
    """
    R = I.ring
    if h.is_zero():
        return Ideal(R, [R.one()], check=False)
    d = h.homogeneous_degree()
    if d is None:
        raise ValueError("saturation needs a homogeneous polynomial")
    if d == 0:
        return I
    n = R.nvars
    S = Ring(n + 1, R.prime, weights=tuple(R.weights) + (d,), names=tuple(R.names) + ("z",))
    gens = [g.to_ring(S, range(n)) for g in I.gens]
    z = S.var(n)
    gens.append(z - h.to_ring(S, range(n)))
    G = buchberger(gens, S)
    zshift = S.var_monomials[n]
    forms_memo: dict = {}
    images = R.gens() + [h]
    out = []
    for mons, coefs in G:
        k = min(S.unpack(m)[n] for m in mons)
        poly = Polynomial(S, {m - k * zshift: c for m, c in zip(mons, coefs)})
        out.append(poly.compose(images, forms_memo))
    return Ideal(R, out, check=False).reduced()


def saturate(I: Ideal, J=None, rng=None, exact: bool = False) -> Ideal:
    """``I : J^infinity``; ``J=None`` means the irrelevant ideal.

    For ``J`` with several generators a random combination h of them (lifted
    to a common degree by powers of a random linear form) gives
    ``I : J^inf = I : h^inf`` for all but a proper closed set of choices.
    ``exact=True`` intersects the saturations by each generator instead.
    """
    R = I.ring
    rng = make_rng(0 if rng is None else rng)
    if J is None:
        return saturate_by_poly(I, random_linear_form(R, rng))
    if isinstance(J, Polynomial):
        return saturate_by_poly(I, J)
    gens = [g for g in (J.gens if isinstance(J, Ideal) else J) if not g.is_zero()]
    if not gens:
        return I
    if len(gens) == 1:
        return saturate_by_poly(I, gens[0])
    if exact:
        parts = [saturate_by_poly(I, g) for g in gens]
        out = parts[0]
        for P in parts[1:]:
            out = intersect(out, P)
        return out
    top = max(g.homogeneous_degree() for g in gens)
    ell = random_linear_form(R, rng)
    h = R.zero()
    for g in gens:
        h = h + g * ell ** (top - g.homogeneous_degree()) * rng.randrange(1, R.prime)
    return saturate_by_poly(I, h)


def _t_ring(R: Ring) -> Ring:
    n = R.nvars
    weights = tuple(R.weights) + (0,)
    order = MonomialOrder.eliminate(weights, [n])
    return Ring(n + 1, R.prime, order=order, weights=weights, names=tuple(R.names) + ("t",))


def intersect(I: Ideal, K: Ideal) -> Ideal:
    """``I`` intersected with ``K``, as the t-free part of ``tI + (1-t)K``."""
    R = I.ring
    if I.is_zero() or K.is_zero():
        return Ideal(R, [])
    n = R.nvars
    S = _t_ring(R)
    t = S.var(n)
    idx = range(n)
    gens = [t * g.to_ring(S, idx) for g in I.gens]
    gens += [(1 - t) * g.to_ring(S, idx) for g in K.gens]
    G = buchberger(gens, S)
    tm = S.var_monomials[n]
    out = []
    for mons, coefs in G:
        if any(S.divides(tm, m) for m in mons):
            continue
        out.append(Polynomial(S, dict(zip(mons, coefs))).to_ring(R, list(range(n)) + [0]))
    return Ideal(R, out, check=False).reduced()


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g`` when g divides f (ValueError otherwise)."""
    R = f.ring
    p = R.prime
    gl = g.sorted_monomials()[0]
    ginv = pow(g.termdict[gl], -1, p)
    rem = dict(f.termdict)
    q = {}
    while rem:
        m = max(rem, key=R.key)
        if not R.divides(gl, m):
            raise ValueError("not divisible")
        u = m - gl
        c = rem[m] * ginv % p
        q[u] = c
        for t, v in g.termdict.items():
            mm = t + u
            w = (rem.get(mm, 0) - c * v) % p
            if w:
                rem[mm] = w
            else:
                rem.pop(mm, None)
    return Polynomial(R, q)


def quotient(I: Ideal, J) -> Ideal:
    """``I : J = {f : f J in I}``."""
    R = I.ring
    gens = [g for g in (J.gens if isinstance(J, Ideal) else [J] if isinstance(J, Polynomial) else J)]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return Ideal(R, [R.one()], check=False)
    out = None
    for g in gens:
        inter = intersect(I, Ideal(R, [g], check=False))
        part = Ideal(R, [divide_exact(f, g) for f in inter.gens], check=False)
        out = part if out is None else intersect(out, part)
    return out


def ideal_power(I: Ideal, m: int, saturated: bool = False, rng=None) -> Ideal:
    """Ordinary power ``I^m``, optionally saturated by the irrelevant ideal."""
    R = I.ring
    if m < 0:
        raise ValueError("negative power")
    if m == 0:
        return Ideal(R, [R.one()], check=False)
    gens = I.reduced().gens if len(I.gens) > 1 else I.gens
    prods = []
    seen = set()
    for combo in itertools.combinations_with_replacement(range(len(gens)), m):
        f = R.one()
        for i in combo:
            f = f * gens[i]
        if f not in seen:
            seen.add(f)
            prods.append(f)
    out = Ideal(R, prods, check=False)
    if saturated:
        out = saturate(out, None, rng)
    return out


# --------------------------------------------------------------------------
# singular loci
# --------------------------------------------------------------------------


def jacobian(polys) -> list[list[Polynomial]]:
    if not polys:
        return []
    n = polys[0].ring.nvars
    return [[f.derivative(i) for i in range(n)] for f in polys]


def minors(matrix, k: int, row_sets=None) -> list[Polynomial]:
    """All k x k minors of a polynomial matrix (rows x cols lists).

    Uses Laplace expansion along successive rows with memoized column-subset
    minors, so each row subset costs about ``sum_j C(ncols, j) j`` products.
    """
    if not matrix:
        return []
    nrows, ncols = len(matrix), len(matrix[0])
    if k == 0:
        return [matrix[0][0].ring.one()]
    if k > min(nrows, ncols):
        return []
    out = []
    for rows in row_sets or itertools.combinations(range(nrows), k):
        prev = {(): None}
        for j, r in enumerate(rows):
            cur = {}
            for S in itertools.combinations(range(ncols), j + 1):
                acc = None
                for idx, c in enumerate(S):
                    a = matrix[r][c]
                    if a.is_zero():
                        continue
                    sub = S[:idx] + S[idx + 1:]
                    below = prev[sub]
                    if j > 0 and (below is None or below.is_zero()):
                        continue
                    term = a if j == 0 else a * below
                    if (j + idx) % 2:
                        term = -term
                    acc = term if acc is None else acc + term
                cur[S] = acc if acc is not None else matrix[0][0].ring.zero()
            prev = cur
        out.extend(f for f in prev.values() if not f.is_zero())
    return out


def singular_locus(
    I: Ideal, codim: int | None = None, rng=None, max_minors: int = 2000, draws: int | None = None
) -> Ideal:
    """Ideal of the singular locus: I plus the codim-size Jacobian minors.

    When the number of minors exceeds ``max_minors``, the Jacobian of several
    independent random combinations of the generators is used instead (the
    combinations cut a complete intersection containing the scheme; points
    singular on it but smooth on the scheme move with the combination, so
    ``dim + 2`` independent draws leave only the true singular points).
    """
    R = I.ring
    rng = make_rng(0 if rng is None else rng)
    dim = I.dimension()
    if codim is None:
        codim = R.nvars - 1 - dim
    gens = I.minimal_generators()
    total = comb(len(gens), codim) * comb(R.nvars, codim)
    extra: list[Polynomial] = []
    if total <= max_minors:
        extra = minors(jacobian(gens), codim)
    else:
        top = max(g.homogeneous_degree() for g in gens)
        ndraws = draws if draws is not None else dim + 2
        for _ in range(ndraws):
            ell = random_linear_form(R, rng)
            combos = []
            for _ in range(codim):
                h = R.zero()
                for g in gens:
                    h = h + g * ell ** (top - g.homogeneous_degree()) * rng.randrange(1, R.prime)
                combos.append(h)
            extra.extend(minors(jacobian(combos), codim))
    return Ideal(R, list(I.gens) + extra, check=False)


def _finite_singular_locus(I: Ideal, rng, **kw):
    """Reduced Groebner basis ideal of a finite singular locus, or None if empty."""
    S = singular_locus(I, rng=rng, **kw)
    d = S.dimension()
    if d < 0:
        return None
    if d > 0:
        raise PositiveDimensionalError(f"singular locus has dimension {d}")
    return saturate(Ideal(I.ring, S.groebner(), check=False), None, rng)


def singularity_profile(I: Ideal, rng=None, **kw) -> tuple[int, int]:
    """(number of singular points, length of the singular scheme).

    Ordinary double points of a hypersurface give reduced points, but an
    improper double point (two smooth sheets meeting transversally in a
    point) has a singular scheme of length 5, so points are counted on the
    support, by a squarefree eliminant after a random projection.
    """
    from .geom import Scheme, count_slice_points

    rng = make_rng(rng)
    S = _finite_singular_locus(I, rng, **kw)
    if S is None:
        return 0, 0
    return count_slice_points(Scheme(S), rng), S.degree()


def node_count(I: Ideal, rng=None, **kw) -> int:
    """Number of geometric points in the singular locus, which must be finite."""
    return singularity_profile(I, rng, **kw)[0]


def singular_length(I: Ideal, rng=None, **kw) -> int:
    """Length of the (finite) singular scheme."""
    S = _finite_singular_locus(I, make_rng(rng), **kw)
    return 0 if S is None else S.degree()


# --------------------------------------------------------------------------
# text formats
# --------------------------------------------------------------------------


def format_ideal(I: Ideal) -> str:
    R = I.ring
    lines = [IDEAL_HEADER, f"p={R.prime} vars={R.nvars} order=grevlex"]
    lines += [str(g) for g in I.gens]
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> Ideal:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != IDEAL_HEADER:
        raise ValueError(f"expected header {IDEAL_HEADER!r}")
    fields = dict(kv.split("=", 1) for kv in lines[1].split())
    if fields.get("order", "grevlex") != "grevlex":
        raise ValueError("only grevlex ideal files are supported")
    R = Ring(int(fields["vars"]), int(fields["p"]))
    return Ideal(R, [R.parse(ln) for ln in lines[2:]])


def read_ideal(path) -> Ideal:
    with open(path) as fh:
        return parse_ideal(fh.read())


def write_ideal(I: Ideal, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_ideal(I))


def to_macaulay2(I: Ideal, name: str = "I") -> str:
    """Macaulay2 script defining the same ideal, for independent checks."""
    R = I.ring
    gens = ",\n  ".join(str(g) for g in I.gens) or "0_R"
    return (
        f"R = ZZ/{R.prime}[x0..x{R.nvars - 1}];\n"
        f"{name} = ideal(\n  {gens}\n);\n"
        f"(dim {name} - 1, degree {name})\n"
    )
