"""Projective schemes and rational maps over F_p.

A :class:`Scheme` is a saturated homogeneous ideal in ``P^N``; a
:class:`RationalMap` is a list of forms of one degree on a source scheme.
"General" choices (points, linear forms, subspaces) are drawn from a
``random.Random`` passed in by the caller, so results are reproducible from
the seed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels, _univar
from .arith import Polynomial, Ring
from .ideals import (
    Ideal,
    PositiveDimensionalError,
    eliminate,
    make_rng,
    random_combination,
    random_linear_form,
    saturate,
)

log = logging.getLogger(__name__)

MAP_HEADER = "gmforge-map v1"


class BudgetExhausted(RuntimeError):
    """A randomized search ran out of attempts."""


class DegenerateMapError(ValueError):
    """The forms of a map vanish on the source (or a component of it)."""


# --------------------------------------------------------------------------
# points
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PointP:
    """A point of P^N over F_p, scaled so the last nonzero coordinate is 1."""

    coords: tuple
    p: int

    @classmethod
    def make(cls, coords, p):
        c = [int(x) % p for x in coords]
        nz = [i for i, x in enumerate(c) if x]
        if not nz:
            raise ValueError("the zero vector is not a projective point")
        inv = pow(c[nz[-1]], -1, p)
        return cls(tuple((x * inv) % p for x in c), p)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ":".join(str(x) for x in self.coords) + ")"


def points_rank(points, p) -> int:
    return _kernels.rank(np.array([pt.coords for pt in points], dtype=np.int64), p)


# --------------------------------------------------------------------------
# schemes
# --------------------------------------------------------------------------


class Scheme:
    """Closed subscheme of P^N given by a homogeneous ideal.

    The ideal is assumed saturated (constructors in this package ensure it);
    pass ``saturate=True`` to saturate on construction.
    """

    def __init__(self, ideal: Ideal, name: str = "", saturate_ideal: bool = False, rng=None):
        if saturate_ideal:
            ideal = saturate(ideal, None, rng)
        self.ideal = ideal
        self.name = name

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def ambient_dim(self) -> int:
        return self.ring.nvars - 1

    def dim(self) -> int:
        return self.ideal.dimension()

    def degree(self) -> int:
        return self.ideal.degree()

    def sectional_genus(self) -> int:
        return self.ideal.sectional_genus()

    def euler_char(self) -> int:
        return self.ideal.euler_char()

    def generator_degrees(self) -> dict:
        return self.ideal.minimal_generators_by_degree()

    def contains_point(self, pt) -> bool:
        return self.ideal.vanishes_at(pt.coords if isinstance(pt, PointP) else pt)

    def is_subscheme_of(self, other: Scheme) -> bool:
        """self in other, i.e. I_other contained in I_self."""
        return self.ideal.contains(other.ideal)

    def summary(self) -> dict:
        out = {"ambient": self.ambient_dim, "dim": self.dim(), "degree": self.degree()}
        if out["dim"] in (1, 2):
            out["genus"] = self.sectional_genus()
        if out["dim"] == 2:
            out["chi"] = self.euler_char()
        out["generators"] = self.generator_degrees()
        return out

    def __repr__(self):
        return f"Scheme({self.name or '?'} in P^{self.ambient_dim})"


def projective_space(n: int, p: int) -> Scheme:
    return Scheme(Ideal(Ring(n + 1, p), []), f"P^{n}")


# --------------------------------------------------------------------------
# solving and point finding
# --------------------------------------------------------------------------


def _random_matrix(rows, cols, p, rng):
    return [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]


def _linear_forms(ring: Ring, matrix):
    """Forms ``sum_j matrix[i][j] u_j`` in ``ring``."""
    n = ring.nvars
    varm = ring.var_monomials
    p = ring.prime
    out = []
    for row in matrix:
        terms = {}
        for j, a in enumerate(row):
            if a % p:
                terms[varm[j]] = a % p
        out.append(Polynomial(ring, terms))
    assert all(len(r) == n for r in matrix)
    return out


def pullback(I: Ideal, matrix) -> Ideal:
    """Pull ``I`` back along the linear map ``u -> matrix u`` (a map P^m -> P^N)."""
    m = len(matrix[0])
    S = Ring(m, I.ring.prime)
    forms = _linear_forms(S, matrix)
    memo: dict = {}
    return Ideal(S, [g.compose(forms, memo) for g in I.gens], check=False)


def _binary_eliminant(J: Ideal):
    """Univariate f(s) whose roots are the values u_{m-1}/u_m on V(J).

    Also reports whether some point has u_m = 0.
    """
    S = J.ring
    m = S.nvars - 1
    E = eliminate(J, range(m - 1)) if m > 1 else J
    p = S.prime
    polys = []
    for g in E.gens:
        # binary form in (a, b) = (u_{m-1}, u_m); dehomogenize at b = 1
        d = g.homogeneous_degree()
        coeffs = [0] * (d + 1)
        for exps, c in g.terms():
            coeffs[exps[0]] = c
        polys.append(_univar.trim(coeffs))
    if not polys:
        raise PositiveDimensionalError("slice is not zero-dimensional")
    f = polys[0]
    for h in polys[1:]:
        f = _univar.gcd(f, h, p)
    # a point at b = 0 exists iff every eliminant vanishes at (1, 0),
    # i.e. the top coefficient (of a^d) is zero for all
    at_infinity = all(
        len(h) - 1 < g.homogeneous_degree() for h, g in zip(polys, E.gens)
    )
    return f, at_infinity


def rational_points(J: Ideal, rng, limit: int | None = None) -> list[tuple]:
    """F_p-rational points of the zero-dimensional scheme V(J) in P^m.

    The coordinates are put in general position by a random linear change;
    the last two coordinates are isolated by elimination, and each root of
    the resulting univariate polynomial is substituted back recursively.
    Points with residue field larger than F_p are not returned.
    """
    S = J.ring
    p = S.prime
    m = S.nvars - 1
    if m == 0:
        return [(1,)] if all(g.is_zero() for g in J.gens) else []
    if J.is_unit():
        return []
    A = _random_matrix(m + 1, m + 1, p, rng)
    while _kernels.rank(np.array(A, dtype=np.int64), p) < m + 1:
        A = _random_matrix(m + 1, m + 1, p, rng)
    Jg = pullback(J, A)
    f, _ = _binary_eliminant(Jg)
    out = []
    # drop u_{m-1}; the fiber over a root r lives in P^{m-1} with u_{m-1} = r u_m
    T = Ring(m, p)
    for r in _univar.roots(f, p, rng):
        varm = T.var_monomials
        forms = [Polynomial(T, {varm[i]: 1}) for i in range(m - 1)]
        forms.append(Polynomial(T, {varm[m - 1]: r}) if r else T.zero())
        forms.append(Polynomial(T, {varm[m - 1]: 1}))
        memo: dict = {}
        sub = Ideal(T, [g.compose(forms, memo) for g in Jg.gens], check=False)
        for v in rational_points(sub, rng, limit):
            u = list(v[: m - 1]) + [(r * v[m - 1]) % p, v[m - 1]]
            x = [sum(a * b for a, b in zip(row, u)) % p for row in A]
            out.append(tuple(x))
            if limit is not None and len(out) >= limit:
                return out
    return out


def count_slice_points(X: Scheme, rng) -> int:
    """Number of geometric points of X cut by a random complementary subspace.

    Counted as the degree of the squarefree eliminant after a random
    coordinate change (a projection to P^1 that separates points).
    """
    p = X.ring.prime
    N = X.ambient_dim
    k = X.dim()
    M = _random_matrix(N + 1, N - k + 1, p, rng)
    J = pullback(X.ideal, M)
    m = N - k
    if m == 0:
        return 1
    A = _random_matrix(m + 1, m + 1, p, rng)
    Jg = pullback(J, A)
    f, inf = _binary_eliminant(Jg)
    fp = _derivative(f, p)
    sq = _univar.divmod_(f, _univar.gcd(f, fp, p), p)[0] if fp else f
    return len(sq) - 1 + (1 if inf else 0)


def _derivative(f, p):
    return _univar.trim([(i * c) % p for i, c in enumerate(f)][1:])


def random_point(X: Scheme, rng=None, budget: int = 20) -> PointP:
    """A random F_p-point of X, via slices by random complementary subspaces."""
    rng = make_rng(rng)
    p = X.ring.prime
    N = X.ambient_dim
    k = X.dim()
    if k < 0:
        raise ValueError("empty scheme has no points")
    for _ in range(budget):
        M = _random_matrix(N + 1, N - k + 1, p, rng)
        J = pullback(X.ideal, M)
        try:
            pts = rational_points(J, rng, limit=1)
        except PositiveDimensionalError:
            continue
        for u in pts:
            x = [sum(a * b for a, b in zip(row, u)) % p for row in M]
            if any(x) and X.ideal.vanishes_at(x):
                return PointP.make(x, p)
    raise BudgetExhausted(f"no F_{p}-point found in {budget} slices")


def secant_point(X: Scheme, rng=None, budget: int = 20) -> PointP:
    """A random point on the line through two random points of X, off X."""
    rng = make_rng(rng)
    p = X.ring.prime
    for _ in range(budget):
        a = random_point(X, rng)
        b = random_point(X, rng)
        if points_rank([a, b], p) < 2:
            continue
        s, t = rng.randrange(1, p), rng.randrange(1, p)
        z = PointP.make([(s * x + t * y) % p for x, y in zip(a, b)], p)
        if not X.contains_point(z):
            return z
    raise BudgetExhausted("no secant point found")


# --------------------------------------------------------------------------
# linear constructions
# --------------------------------------------------------------------------


def linear_forms_through(pt: PointP, ring: Ring) -> list[Polynomial]:
    """A basis of the linear forms vanishing at ``pt``."""
    A = np.array([pt.coords], dtype=np.int64)
    K = _kernels.nullspace(A, ring.prime)
    return _linear_forms(ring, K.tolist())


def point_ideal(pt: PointP, ring: Ring) -> Ideal:
    return Ideal(ring, linear_forms_through(pt, ring))


def linear_section(X: Scheme, k: int, rng=None, saturate_ideal: bool = True) -> Scheme:
    """X cut by k random hyperplanes (same ambient space)."""
    rng = make_rng(rng)
    forms = [random_linear_form(X.ring, rng) for _ in range(k)]
    I = X.ideal + forms
    return Scheme(I, f"{X.name}.H^{k}", saturate_ideal=saturate_ideal, rng=rng)


def random_subspace_section(X: Scheme, k: int, rng=None) -> tuple[Scheme, list]:
    """X cut by a random codimension-k subspace, re-embedded in P^{N-k}.

    Returns the section and the (N+1) x (N-k+1) parametrizing matrix.
    """
    rng = make_rng(rng)
    p = X.ring.prime
    N = X.ambient_dim
    M = _random_matrix(N + 1, N - k + 1, p, rng)
    return Scheme(pullback(X.ideal, M), f"{X.name}.L^{k}"), M


def cone_over(X: Scheme, vertex=None) -> Scheme:
    """Cone over X in P^{N+1} with the given vertex (default the new coordinate point)."""
    R = X.ring
    n = R.nvars
    S = Ring(n + 1, R.prime)
    gens = [g.to_ring(S, range(n)) for g in X.ideal.gens]
    if vertex is not None:
        p = R.prime
        v = [int(c) % p for c in vertex]
        if len(v) != n + 1:
            raise ValueError("vertex needs N+2 coordinates")
        if v[n] == 0:
            raise ValueError("vertex must lie off the hyperplane x_{N+1} = 0")
        # the linear change fixing x_{N+1} = 0 and sending e_{N+1} to v
        inv = pow(v[n], -1, p)
        varm = S.var_monomials
        forms = []
        for i in range(n):
            terms = {varm[i]: 1}
            c = (-v[i] * inv) % p
            if c:
                terms[varm[n]] = c
            forms.append(Polynomial(S, terms))
        forms.append(S.var(n))
        gens = [g.compose(forms) for g in gens]
    return Scheme(Ideal(S, gens, check=False), f"C({X.name})")


# --------------------------------------------------------------------------
# rational maps
# --------------------------------------------------------------------------


class RationalMap:
    """The map ``x -> (F_0(x) : ... : F_M(x))`` on a source scheme."""

    def __init__(self, source: Scheme, forms, name: str = ""):
        forms = list(forms)
        if not forms:
            raise ValueError("a map needs at least one form")
        degs = {f.homogeneous_degree() for f in forms if not f.is_zero()}
        if len(degs) != 1:
            raise ValueError("forms must be nonzero-homogeneous of one degree")
        for f in forms:
            if f.ring != source.ring:
                raise ValueError("forms live outside the source ring")
        self.source = source
        self.forms = forms
        self.name = name
        self.form_degree = degs.pop()
        self.target_ring = Ring(len(forms), source.ring.prime)

    @property
    def target_dim(self) -> int:
        return len(self.forms) - 1

    def __call__(self, pt) -> PointP | None:
        x = pt.coords if isinstance(pt, PointP) else pt
        vals = [f.evaluate(x) for f in self.forms]
        if not any(vals):
            return None
        return PointP.make(vals, self.source.ring.prime)

    def restrict(self, sub: Scheme) -> RationalMap:
        return RationalMap(sub, self.forms, f"{self.name}|{sub.name}")

    def base_ideal(self) -> Ideal:
        return Ideal(self.source.ring, list(self.source.ideal.gens) + list(self.forms), check=False)


def make_map(X: Scheme, forms, name: str = "") -> RationalMap:
    f = RationalMap(X, forms, name)
    nf = X.ideal.normal_forms(f.forms) if X.ideal.gens else f.forms
    if all(g.is_zero() for g in nf):
        raise DegenerateMapError("all forms vanish on the source")
    return f


def image_dimension(f: RationalMap, rng=None) -> int:
    """Dimension of the image, as the rank of the differential at a random point."""
    rng = make_rng(rng)
    X = f.source
    R = X.ring
    p = R.prime
    x = random_point(X, rng)
    n = R.nvars
    # tangent cone directions: kernel of the Jacobian of I_X at x
    if X.ideal.gens:
        JX = np.array([[g.derivative(i).evaluate(x.coords) for i in range(n)] for g in X.ideal.gens],
                      dtype=np.int64)
        T = _kernels.nullspace(JX, p)
    else:
        T = np.eye(n, dtype=np.int64)
    DF = np.array([[h.derivative(i).evaluate(x.coords) for i in range(n)] for h in f.forms],
                  dtype=np.int64)
    img = (DF @ T.T) % p if T.size else np.zeros((len(f.forms), 0), dtype=np.int64)
    return _kernels.rank(img.T, p) - 1 if img.size else -1


def _graph_image(f: RationalMap) -> Ideal:
    """Image ideal by eliminating x and t from I_X + (y_i - t F_i)."""
    R = f.source.ring
    n = R.nvars
    m = len(f.forms)
    e = f.form_degree
    weights = (1,) * n + (1,) + (e + 1,) * m
    names = tuple(f"x{i}" for i in range(n)) + ("t",) + tuple(f"y{j}" for j in range(m))
    G = Ring(n + 1 + m, R.prime, weights=weights, names=names)
    idx = range(n)
    t = G.var(n)
    gens = [g.to_ring(G, idx) for g in f.source.ideal.gens]
    for j, F in enumerate(f.forms):
        gens.append(G.var(n + 1 + j) - t * F.to_ring(G, idx))
    E = eliminate(Ideal(G, gens, check=False), range(n + 1))
    T = f.target_ring
    out = [g.to_ring(T, range(m)) for g in E.gens]
    return Ideal(T, out, check=False)


def _kernel_image(f: RationalMap, rng=None, max_degree: int = 8, warn: bool = True) -> Ideal:
    """Image ideal degree by degree, as the kernel of y -> F on (R/I_X).

    The degree-k piece of the image ideal is exactly the kernel of
    Sym^k -> (R/I_X)_{ke} when I_X is saturated and radical.  Generators are
    collected until the ideal has the image's dimension and two consecutive
    degrees bring nothing new.
    """
    T = f.target_ring
    p = T.prime
    X = f.source
    target_dim = image_dimension(f, rng)
    gens: list[Polynomial] = []
    memo: dict = {}
    last = 0
    quiet = 0
    for k in range(1, max_degree + 1):
        mons = T.monomials_of_degree(k)
        images = [Polynomial(T, {m: 1}).compose(f.forms, memo) for m in mons]
        if X.ideal.gens:
            images = X.ideal.normal_forms(images)
        cols: dict = {}
        for h in images:
            for mm in h.termdict:
                if mm not in cols:
                    cols[mm] = len(cols)
        A = np.zeros((len(mons), max(len(cols), 1)), dtype=np.int64)
        for i, h in enumerate(images):
            for mm, c in h.termdict.items():
                A[i, cols[mm]] = c
        K = _kernels.left_nullspace(A, p)
        current = Ideal(T, gens, check=False).basis_in_degree(k) if gens else []
        tcols = {m: i for i, m in enumerate(mons)}
        B = np.zeros((len(current), len(mons)), dtype=np.int64)
        for i, g in enumerate(current):
            for mm, c in g.termdict.items():
                B[i, tcols[mm]] = c
        rank = len(_kernels.rref(B.copy(), p)) if len(current) else 0
        new = 0
        for v in K:
            C = np.vstack([B[:rank], v[None, :]]) if rank else v[None, :].copy()
            piv = _kernels.rref(C, p)
            if len(piv) > rank:
                B = C
                rank = len(piv)
                gens.append(Polynomial(T, {mons[j]: int(v[j]) for j in np.nonzero(v)[0]}).monic())
                new += 1
        if new:
            last = k
            quiet = 0
        else:
            quiet += 1
        if quiet >= 2 and k > last:
            if Ideal(T, gens, check=False).dimension() == target_dim:
                break
    else:
        if warn:
            log.warning("kernel image stopped at max_degree=%d", max_degree)
    return Ideal(T, gens, check=False)


def image(f: RationalMap, method: str = "auto", rng=None, max_degree: int = 8) -> Scheme:
    """Closure of the image of ``f``.

    ``method="graph"`` eliminates the source from the graph ideal;
    ``method="kernel"`` computes the image ideal degree by degree by linear
    algebra.  ``auto`` uses the graph for small maps.
    """
    rng = make_rng(rng)
    nvars = f.source.ring.nvars + 1 + len(f.forms)
    if method == "auto":
        method = "graph" if nvars <= 9 else "kernel"
    if method == "graph":
        I = _graph_image(f)
    elif method == "kernel":
        I = _kernel_image(f, rng, max_degree)
    else:
        raise ValueError(f"unknown image method {method!r}")
    I = Ideal(I.ring, I.minimal_generators(), check=False) if I.gens else I
    return Scheme(I, f"im({f.name})")


def restrict_image(f: RationalMap, sub: Scheme, **kw) -> Scheme:
    return image(f.restrict(sub), **kw)


def base_locus(f: RationalMap, rng=None) -> Scheme:
    return Scheme(f.base_ideal(), f"Bs({f.name})", saturate_ideal=True, rng=make_rng(rng))


def fiber(f: RationalMap, q: PointP, rng=None) -> Scheme:
    """Closure of f^{-1}(q) away from the base locus."""
    rng = make_rng(rng)
    R = f.source.ring
    k = max(i for i, c in enumerate(q.coords) if c)
    qk = q.coords[k]
    eqs = [f.forms[i] * qk - f.forms[k] * q.coords[i] for i in range(len(f.forms)) if i != k]
    I = Ideal(R, list(f.source.ideal.gens) + eqs, check=False)
    I = saturate(I, Ideal(R, f.forms, check=False), rng)
    return Scheme(I, f"fiber({f.name})")


def map_degree(f: RationalMap, rng=None, trials: int = 3) -> int:
    """Degree of f onto its image: length of the general fiber, by majority vote."""
    rng = make_rng(rng)
    votes = []
    for _ in range(trials):
        for _attempt in range(10):
            x = random_point(f.source, rng)
            q = f(x)
            if q is not None:
                break
        F = fiber(f, q, rng)
        d = F.dim()
        if d > 0:
            votes.append(None)
        else:
            votes.append(F.degree())
    best = max(set(votes), key=votes.count)
    if votes.count(best) * 2 <= len(votes):
        raise ValueError(f"fiber lengths disagree: {votes}")
    if best is None:
        raise ValueError("map is not generically finite")
    return best


def is_birational_onto_image(f: RationalMap, rng=None) -> bool:
    return map_degree(f, rng) == 1


def projective_degrees(f: RationalMap, rng=None) -> list[int]:
    """d_k = deg(X cut by r-k general hyperplanes and k general pulled-back hyperplanes).

    Points on the base locus are discarded by saturation; ``r = dim X``.
    """
    rng = make_rng(rng)
    X = f.source
    R = X.ring
    r = X.dim()
    base = Ideal(R, f.forms, check=False)
    out = []
    for k in range(r + 1):
        gens = list(X.ideal.gens)
        gens += [random_linear_form(R, rng) for _ in range(r - k)]
        gens += [random_combination(f.forms, rng, R.prime) for _ in range(k)]
        I = saturate(Ideal(R, gens, check=False), base, rng)
        d = I.dimension()
        if d > 0:
            raise PositiveDimensionalError(f"entry {k} is not a finite intersection")
        out.append(0 if d < 0 else I.degree())
    return out


def project_from(X: Scheme, center, rng=None, **kw) -> tuple[Scheme, RationalMap]:
    """Projection of X from a linear center (a PointP or an ideal of linear forms)."""
    R = X.ring
    if isinstance(center, PointP):
        forms = linear_forms_through(center, R)
    else:
        gens = [g for g in center.gens if g.homogeneous_degree() == 1]
        A = np.array([[g.termdict.get(v, 0) for v in R.var_monomials] for g in gens], dtype=np.int64)
        _kernels.rref(A, R.prime)
        A = A[np.any(A != 0, axis=1)]
        forms = _linear_forms(R, A.tolist())
    f = make_map(X, forms, f"proj({X.name})")
    return image(f, rng=rng, **kw), f


def linear_system(X: Scheme, center: Ideal, e: int, m: int = 1, rng=None) -> list[Polynomial]:
    """Basis of degree-e forms on X vanishing to order m along ``center``.

    Degree-e piece of the saturated m-th power of ``center``, modulo I_X.
    """
    from .ideals import ideal_power

    R = X.ring
    p = R.prime
    J = center if m == 1 else ideal_power(center, m, saturated=True, rng=rng)
    basis = J.basis_in_degree(e)
    if X.ideal.gens:
        basis = X.ideal.normal_forms(basis)
    cols = {mm: i for i, mm in enumerate(R.monomials_of_degree(e))}
    A = np.zeros((len(basis), len(cols)), dtype=np.int64)
    for i, g in enumerate(basis):
        for mm, c in g.termdict.items():
            A[i, cols[mm]] = c
    piv = _kernels.rref(A, p)
    mons = list(cols)
    out = []
    for r in range(len(piv)):
        row = A[r]
        out.append(Polynomial(R, {mons[j]: int(row[j]) for j in np.nonzero(row)[0]}))
    return out


# --------------------------------------------------------------------------
# map files
# --------------------------------------------------------------------------


def format_map(f: RationalMap) -> str:
    R = f.source.ring
    lines = [
        MAP_HEADER,
        f"p={R.prime} vars={R.nvars} targets={len(f.forms)} degree={f.form_degree}",
        f"source {len(f.source.ideal.gens)}",
    ]
    lines += [str(g) for g in f.source.ideal.gens]
    lines.append(f"forms {len(f.forms)}")
    lines += [str(g) for g in f.forms]
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> RationalMap:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != MAP_HEADER:
        raise ValueError(f"expected header {MAP_HEADER!r}")
    fields = dict(kv.split("=", 1) for kv in lines[1].split())
    R = Ring(int(fields["vars"]), int(fields["p"]))
    tag, count = lines[2].split()
    if tag != "source":
        raise ValueError("expected a source block")
    k = int(count)
    src = [R.parse(ln) for ln in lines[3:3 + k]]
    tag, count = lines[3 + k].split()
    if tag != "forms":
        raise ValueError("expected a forms block")
    forms = [R.parse(ln) for ln in lines[4 + k:4 + k + int(count)]]
    return RationalMap(Scheme(Ideal(R, src)), forms)


def monomial_count(n: int, d: int) -> int:
    return comb(n + d - 1, d)
