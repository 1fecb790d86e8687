"""Construction of a GM fourfold containing a one-nodal surface of degree 11.

The chain, each step certified by exact invariants:

1. ``E'`` in P^6: image of P^2 by quartics double at q0, simple at q1..q5.
2. ``E`` in P^5: projection of E' from a general point of a secant line.
3. ``C``: image of a plane cubic through q0..q5, a quintic elliptic curve.
4. ``B``: a cubic scroll in the span of C, containing C.
5. ``Y``: image of P^5 by the quadrics through B (a fivefold of degree 5).
6. ``T``: image of E, a surface of degree 11 with one node.
7. ``X``: Y cut by a general quadric through T, a GM fourfold.

Every general choice is drawn from ``random.Random`` keyed on the session
seed, the step and the attempt, so reports are reproducible.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, _univar
from .arith import DEFAULT_PRIME, Polynomial, Ring
from .geom import (
    BudgetExhausted,
    PointP,
    RationalMap,
    Scheme,
    _binary_eliminant,
    _kernel_image,
    _linear_forms,
    _random_matrix,
    image,
    linear_system,
    make_map,
    map_degree,
    point_ideal,
    project_from,
    projective_space,
    pullback,
    random_point,
    rational_points,
    restrict_image,
    secant_point,
)
from .gmtheory import SurfaceNumerics, gm_record, parameter_count
from .grass import pfaffian_embedding, pluecker_ideal, pluecker_ring, surface_class
from .ideals import (
    Ideal,
    PositiveDimensionalError,
    ideal_power,
    intersect,
    make_rng,
    node_count,
    quotient,
    random_combination,
    saturate,
    singularity_profile,
    singular_locus,
)

log = logging.getLogger(__name__)

PRINTED = "printed"
DERIVED = "derived"
TRIVIAL = "trivial"

STEPS = ("edge", "nodal", "quintic", "scroll", "semple", "t-surface", "gm4")

T_CLASS = (7, 4)  # expected a*sigma_(3,1) + b*sigma_(2,2) of T in G(1,4)
# h0 of the normal bundles of T in Y and in X: inputs of the parameter count,
# not recomputed here
T_H0_NORMAL_Y = 29
T_H0_NORMAL_X = 2


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    expected: object
    computed: object
    tag: str

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "tag": self.tag,
            "ok": self.ok,
        }


@dataclass
class ConstructionReport:
    """Outcome of one construction step."""

    step: str
    seeds: list
    objects: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name, expected, computed, tag) -> Check:
        c = Check(name, expected, computed, tag)
        self.checks.append(c)
        return c

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "step": self.step,
            "seeds": list(self.seeds),
            "objects": _jsonable(self.objects),
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
            "ok": self.ok,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def format(self) -> str:
        lines = [f"[{self.step}] {'ok' if self.ok else 'FAILED'}  seeds={self.seeds}  {self.elapsed:.1f}s"]
        for name, summ in self.objects.items():
            lines.append(f"  {name}: {_format_summary(summ)}")
        for c in self.checks:
            mark = "ok " if c.ok else "XX "
            lines.append(f"  {mark}{c.name}: expected {c.expected}, computed {c.computed} ({c.tag})")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def _format_summary(s) -> str:
    if not isinstance(s, dict):
        return str(s)
    return ", ".join(f"{k}={v}" for k, v in s.items())


def summarize(X: Scheme, nodes: int | None = None) -> dict:
    out = X.summary()
    if nodes is not None:
        out["nodes"] = nodes
    return out


# --------------------------------------------------------------------------
# construction steps
# --------------------------------------------------------------------------


@dataclass
class EdgeSurface:
    points: list
    center: Ideal
    forms: list
    map: RationalMap
    surface: Scheme


@dataclass
class NodalSurface:
    secant_point: PointP
    projection: RationalMap
    plane_forms: list  # composite P^2 -> P^5
    surface: Scheme


@dataclass
class QuinticCurve:
    cubic: Polynomial
    plane_cubic: Scheme
    curve: Scheme


@dataclass
class CubicScroll:
    hyperplane: Polynomial
    quadrics: list
    scroll: Scheme
    lines_used: int


@dataclass
class SempleMap:
    map: RationalMap
    fivefold: Scheme


def _plane_points(rng, p, k):
    return [PointP.make([rng.randrange(p) for _ in range(3)], p) for _ in range(k)]


def build_edge_surface(rng, p: int = DEFAULT_PRIME) -> EdgeSurface:
    """Image of P^2 by the quartics double at q0 and through q1..q5."""
    rng = make_rng(rng)
    P2 = projective_space(2, p)
    R = P2.ring
    pts = _plane_points(rng, p, 6)
    center = ideal_power(point_ideal(pts[0], R), 2)
    for q in pts[1:]:
        center = intersect(center, point_ideal(q, R))
    forms = linear_system(P2, center, 4)
    if len(forms) != 7:
        raise ValueError(f"quartic system has {len(forms)} forms, base points are special")
    f = make_map(P2, forms, "quartics")
    Ep = image(f, rng=rng)
    Ep.name = "E'"
    return EdgeSurface(pts, center, forms, f, Ep)


def build_nodal_E(edge: EdgeSurface, rng) -> NodalSurface:
    """Projection of E' from a random point on a random secant line."""
    rng = make_rng(rng)
    z = secant_point(edge.surface, rng)
    E, proj = project_from(edge.surface, z, rng=rng)
    E.name = "E"
    memo: dict = {}
    plane_forms = [L.compose(edge.forms, memo) for L in proj.forms]
    return NodalSurface(z, proj, plane_forms, E)


def build_quintic_elliptic(edge: EdgeSurface, nodal: NodalSurface, rng) -> QuinticCurve:
    """Image in P^5 of a general plane cubic through the six base points."""
    rng = make_rng(rng)
    R = edge.map.source.ring
    p = R.prime
    simple = point_ideal(edge.points[0], R)
    for q in edge.points[1:]:
        simple = intersect(simple, point_ideal(q, R))
    cubics = linear_system(projective_space(2, p), simple, 3)
    if len(cubics) != 4:
        raise ValueError(f"expected 4 cubics through the base points, got {len(cubics)}")
    gamma = random_combination(cubics, rng, p)
    G = Scheme(Ideal(R, [gamma]), "plane cubic")
    f = make_map(G, nodal.plane_forms, "cubic->P5")
    C = image(f, method="kernel", rng=rng)
    C.name = "C"
    return QuinticCurve(gamma, G, C)


def _third_point(gamma: Polynomial, r, s, p):
    """Third intersection of the line rs with the cubic gamma = 0."""
    T = Ring(2, p)
    u, v = T.gens()
    forms = [u * r[i] + v * s[i] for i in range(3)]
    g = gamma.compose(forms)
    coef = {e: c for e, c in g.terms()}
    # g = u v (c21 u + c12 v) since r and s lie on the cubic
    c21 = coef.get((2, 1), 0)
    c12 = coef.get((1, 2), 0)
    if coef.get((3, 0), 0) or coef.get((0, 3), 0) or not c21 or not c12:
        return None
    pt = [(c12 * r[i] - c21 * s[i]) % p for i in range(3)]
    if not any(pt):
        return None
    return PointP.make(pt, p)


def build_cubic_scroll(edge: EdgeSurface, nodal: NodalSurface, quintic: QuinticCurve, rng,
                       lines: int = 5) -> CubicScroll:
    """A cubic scroll B in the span of C containing C.

    A pencil of degree 2 on C (cut by the lines through a fixed point r of
    the plane cubic) sweeps out a scroll; its rulings are the secant lines
    joining the images of the two residual points.  Inside the span of C the
    quadrics through C form a 5-dimensional space, and those containing the
    rulings form the 3-dimensional space of quadrics of the scroll.
    """
    rng = make_rng(rng)
    IC = quintic.curve.ideal
    R = IC.ring
    p = R.prime
    n = R.nvars
    lin = IC.basis_in_degree(1)
    if len(lin) != 1:
        raise ValueError(f"C spans a P^{n - 1 - len(lin)}, expected a P^4")
    L = lin[0]
    coeffs = [L.termdict.get(m, 0) for m in R.var_monomials]
    k = max(i for i, c in enumerate(coeffs) if c)
    inv = pow(coeffs[k], -1, p)
    # substitute x_k = -(sum_{j != k} l_j x_j) / l_k, so forms live on the span
    subs = list(R.gens())
    subs[k] = R.zero()
    for j in range(n):
        if j != k and coeffs[j]:
            subs[k] = subs[k] - R.gens()[j] * ((coeffs[j] * inv) % p)
    memo: dict = {}
    span_quadrics = [q.compose(subs, memo) for q in IC.basis_in_degree(2)]
    span_quadrics = _independent(span_quadrics, R.monomials_of_degree(2), p)
    if len(span_quadrics) != 5:
        raise ValueError(f"{len(span_quadrics)} quadrics through C in its span, expected 5")

    gamma = quintic.cubic
    r = random_point(quintic.plane_cubic, rng)
    phi = nodal.plane_forms
    rows = []
    for _ in range(4 * lines):
        if len(rows) >= lines:
            break
        s = random_point(quintic.plane_cubic, rng)
        s2 = _third_point(gamma, r.coords, s.coords, p)
        if s2 is None:
            continue
        a = [f.evaluate(s.coords) for f in phi]
        b = [f.evaluate(s2.coords) for f in phi]
        if not any(a) or not any(b):
            continue
        ab = [(x + y) % p for x, y in zip(a, b)]
        rows.append([q.evaluate(ab) for q in span_quadrics])
    if len(rows) < lines:
        raise BudgetExhausted("not enough secant lines of the pencil")
    A = np.array(rows, dtype=np.int64)
    K = _kernels.nullspace(A, p)
    if len(K) != 3:
        raise ValueError(f"quadrics containing the rulings: {len(K)}, expected 3")
    quads = []
    for v in K:
        q = R.zero()
        for c, g in zip(v, span_quadrics):
            if c:
                q = q + g * int(c)
        quads.append(q)
    B = Scheme(Ideal(R, [L] + quads), "B")
    return CubicScroll(L, quads, B, len(rows))


def _independent(polys, mons, p):
    cols = {m: i for i, m in enumerate(mons)}
    A = np.zeros((len(polys), len(cols)), dtype=np.int64)
    for i, g in enumerate(polys):
        for m, c in g.termdict.items():
            A[i, cols[m]] = c
    piv = _kernels.rref(A, p)
    R = polys[0].ring
    return [Polynomial(R, {mons[j]: int(A[r, j]) for j in np.nonzero(A[r])[0]}) for r in range(len(piv))]


def complete_intersection_residual(quintic: QuinticCurve, rng) -> Scheme:
    """Residual of C in the intersection of the span with 3 general quadrics through C.

    Kept as a diagnostic: this residual is a curve (a twisted cubic), not a
    surface, which is why the scroll is built from a pencil instead.
    """
    rng = make_rng(rng)
    IC = quintic.curve.ideal
    R = IC.ring
    lin = IC.basis_in_degree(1)
    quads = IC.basis_in_degree(2)
    gens = lin + [random_combination(quads, rng, R.prime) for _ in range(3)]
    return Scheme(quotient(Ideal(R, gens), IC), "residual")


def build_semple_map(scroll: CubicScroll, rng) -> SempleMap:
    """The map of P^5 given by the quadrics through B, and its image."""
    rng = make_rng(rng)
    R = scroll.scroll.ring
    P5 = Scheme(Ideal(R, []), "P^5")
    forms = linear_system(P5, scroll.scroll.ideal, 2)
    f = make_map(P5, forms, "semple")
    Y = image(f, rng=rng)
    Y.name = "Y"
    return SempleMap(f, Y)


def build_T(nodal: NodalSurface, semple: SempleMap, rng) -> Scheme:
    T = restrict_image(semple.map, nodal.surface, rng=make_rng(rng))
    T.name = "T"
    return T


def build_quadratic_section(semple: SempleMap, T: Scheme, rng) -> tuple[Scheme, list]:
    """Y cut by a general quadric containing T; also returns the relative system."""
    rng = make_rng(rng)
    Y = semple.fivefold
    system = linear_system(Y, T.ideal, 2)
    member = random_combination(system, rng, Y.ring.prime)
    X = Scheme(Ideal(Y.ring, list(Y.ideal.gens) + [member]), "X")
    return X, system


# --------------------------------------------------------------------------
# lines through a point and the congruence census
# --------------------------------------------------------------------------


@dataclass
class CongruenceCensus:
    """Lines through a point q of V, optionally sorted by their fiber curves.

    ``classes`` maps (curve degree e, secancy) to the number of lines of
    that kind; ``total`` is the degree of the line scheme.
    """

    point: PointP
    total: int
    lines: list = field(default_factory=list)  # F_p-rational lines as (q, w) point pairs
    classes: dict = field(default_factory=dict)
    unclassified: int = 0
    orbits: list = field(default_factory=list)  # sizes of the Galois orbits of lines
    scheme: Ideal | None = field(default=None, repr=False)  # line scheme, u-coordinates
    chart: list | None = field(default=None, repr=False)  # w = chart u

    def profile(self) -> dict:
        return dict(sorted(self.classes.items()))

    def to_dict(self) -> dict:
        return {
            "point": list(self.point.coords),
            "total": self.total,
            "rational_lines": len(self.lines),
            "orbits": list(self.orbits),
            "classes": [[e, s, m] for (e, s), m in sorted(self.classes.items())],
            "unclassified": self.unclassified,
        }


def lines_through_point(V: Scheme, q: PointP, rng=None) -> CongruenceCensus:
    """Count the lines of V through q.

    A line through q meets a random hyperplane H (not through q) in one
    point w = M u; the line lies on V iff every generator g satisfies
    g(s q + M u) = 0 identically in s.  The coefficients of the powers of s
    give an ideal in u whose degree is the number of lines.
    """
    rng = make_rng(rng)
    R = V.ring
    p = R.prime
    N = R.nvars - 1
    if not V.contains_point(q):
        raise ValueError("the point does not lie on V")
    M = _random_matrix(N + 1, N, p, rng)
    S = Ring(N + 1, p)  # u_0..u_{N-1}, s
    lin = _linear_forms(S, [row + [0] for row in M])
    s = S.var(N)
    forms = [lin[i] + s * q.coords[i] for i in range(N + 1)]
    U = Ring(N, p)
    eqs = []
    memo: dict = {}
    for g in V.ideal.gens:
        h = g.compose(forms, memo)
        parts: dict = {}
        for exps, c in h.terms():
            parts.setdefault(exps[N], {})[U.pack(exps[:N])] = c
        for j, terms in parts.items():
            if j < g.homogeneous_degree():
                eqs.append(Polynomial(U, terms))
    J = saturate(Ideal(U, eqs, check=False), None, rng)
    d = J.dimension()
    if d > 0:
        raise PositiveDimensionalError("the lines through the point are not finite")
    total = 0 if d < 0 else J.degree()
    lines = []
    if total:
        J = Ideal(U, J.groebner(), check=False)
        for u in rational_points(J, rng):
            w = [sum(a * b for a, b in zip(row, u)) % p for row in M]
            lines.append((q, PointP.make(w, p)))
    return CongruenceCensus(q, total, lines, scheme=J, chart=M)


def _inverse_mod(A, p):
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[0]
    aug = np.hstack([A, np.eye(n, dtype=np.int64)])
    piv = _kernels.rref(aug, p)
    if piv[:n] != list(range(n)):
        raise ArithmeticError("matrix is singular")
    return aug[:, n:]


def line_orbits(census: CongruenceCensus, rng=None, budget: int = 10) -> list[tuple[int, Ideal, np.ndarray]]:
    """Split the line scheme into Galois orbits over F_p.

    After a random coordinate change A, the binary eliminant of the line
    scheme factors over F_p; an irreducible factor of degree k cuts out an
    orbit of k conjugate lines.  Returns (k, orbit ideal, A) with the ideal
    in the changed coordinates u'.
    """
    rng = make_rng(rng)
    J = census.scheme
    U = J.ring
    p = U.prime
    N = U.nvars
    for _ in range(budget):
        A = _random_matrix(N, N, p, rng)
        if _kernels.rank(np.array(A, dtype=np.int64), p) < N:
            continue
        Jg = pullback(J, A)
        f, inf = _binary_eliminant(Jg)
        if inf:
            continue
        fp = _univar.trim([(i * c) % p for i, c in enumerate(f)][1:])
        sq = _univar.divmod_(f, _univar.gcd(f, fp, p), p)[0] if fp else f
        orbits = []
        V = Jg.ring
        varm = V.var_monomials
        for g in _univar.factor_squarefree(sq, p, rng):
            k = len(g) - 1
            # homogenize g(a/b) in the last two coordinates a = u'_{N-2}, b = u'_{N-1}
            G = Polynomial(V, {varm[N - 2] * i + varm[N - 1] * (k - i): c for i, c in enumerate(g) if c})
            O = saturate(Ideal(V, list(Jg.gens) + [G], check=False), None, rng)
            orbits.append((k, Ideal(V, O.groebner(), check=False), np.array(A, dtype=np.int64)))
        if sum(O.degree() for _, O, _ in orbits) == census.total:
            return orbits
    raise BudgetExhausted("no coordinate change separates the lines")


def classify_congruence(census: CongruenceCensus, f: RationalMap, S: Scheme, rng=None) -> CongruenceCensus:
    """Sort the lines by (degree e of their fiber curve, length of its intersection with S).

    The fiber curve of a line L through q is the closure of f^{-1}(L) away
    from the base locus of f.  An orbit of k conjugate lines is handled at
    once through the cone over it with vertex q: its preimage is a curve of
    degree k e meeting S in k times the secancy, all over F_p.
    """
    rng = make_rng(rng)
    R = f.source.ring
    p = R.prime
    T = f.target_ring
    q = census.point
    if census.total == 0:
        return census
    # cone coordinates: u with pi_q(y) = (L M) u, where L spans the forms vanishing at q
    L = _kernels.nullspace(np.array([q.coords], dtype=np.int64), p)
    M = np.array(census.chart, dtype=np.int64)
    LM_inv = _inverse_mod((L @ M) % p, p)
    classes: dict = {}
    sizes = []
    unclassified = 0
    base = f.base_ideal()
    for k, O, A in line_orbits(census, rng):
        sizes.append(k)
        P = (_inverse_mod(A, p) @ LM_inv % p) @ L % p
        y_forms = _linear_forms(T, P.tolist())
        memo_y: dict = {}
        memo_x: dict = {}
        cone = [g.compose(y_forms, memo_y) for g in O.gens]
        eqs = [h.compose(f.forms, memo_x) for h in cone]
        I = saturate(Ideal(R, list(f.source.ideal.gens) + eqs, check=False), base, rng)
        mult = O.degree()
        if I.dimension() != 1 or I.degree() % mult:
            unclassified += mult
            continue
        e = I.degree() // mult
        M2 = I + S.ideal
        dm = M2.dimension()
        length = 0 if dm < 0 else (M2.degree() if dm == 0 else None)
        if length is None or length % mult:
            unclassified += mult
            continue
        key = (e, length // mult)
        classes[key] = classes.get(key, 0) + mult
    census.classes = classes
    census.orbits = sorted(sizes)
    census.unclassified = unclassified
    return census


# --------------------------------------------------------------------------
# pipeline
# --------------------------------------------------------------------------


def step_rng(seed, step: str, attempt: int = 0) -> random.Random:
    return random.Random(f"gmforge:{seed}:{step}:{attempt}")


class Pipeline:
    """Runs the construction chain with per-step seeds and re-draws.

    ``attempts`` bounds the re-draws of a step whose general choices turn
    out special.  ``smooth_check`` adds the (slow) smoothness test of X.
    """

    def __init__(self, seed: int = 0, p: int = DEFAULT_PRIME, attempts: int = 3,
                 smooth_check: bool = False):
        self.seed = seed
        self.p = p
        self.attempts = attempts
        self.smooth_check = smooth_check
        self.state: dict = {}
        self.reports: dict = {}

    def run(self, until: str = "gm4") -> list[ConstructionReport]:
        if until not in STEPS:
            raise ValueError(f"unknown step {until!r}")
        out = []
        for name in STEPS[: STEPS.index(until) + 1]:
            rep = self.reports.get(name) or self._run_step(name)
            out.append(rep)
            if not rep.ok:
                break
        return out

    def _run_step(self, name: str) -> ConstructionReport:
        method = getattr(self, "_step_" + name.replace("-", "_"))
        seeds = []
        rep = None
        t0 = time.perf_counter()
        for attempt in range(self.attempts):
            seeds.append(f"{self.seed}:{name}:{attempt}")
            rep = ConstructionReport(name, list(seeds))
            try:
                method(step_rng(self.seed, name, attempt), rep)
            except (ValueError, ArithmeticError, BudgetExhausted) as exc:
                rep.notes.append(f"attempt {attempt} failed: {exc}")
                log.info("step %s attempt %d failed: %s", name, attempt, exc)
                rep.checks.append(Check("construction", "success", f"error: {exc}", TRIVIAL))
                continue
            if rep.ok:
                break
        rep.elapsed = time.perf_counter() - t0
        self.reports[name] = rep
        return rep

    # each step fills a report and stores its objects in self.state

    def _step_edge(self, rng, rep):
        edge = build_edge_surface(rng, self.p)
        Ep = edge.surface
        nodes = node_count(Ep.ideal, rng=rng)
        rep.objects["base points"] = [str(q) for q in edge.points]
        rep.objects["E'"] = summarize(Ep, nodes)
        rep.check("quartic forms", 7, len(edge.forms), DERIVED)
        rep.check("E' dim", 2, Ep.dim(), TRIVIAL)
        rep.check("E' degree", 7, Ep.degree(), PRINTED)
        rep.check("E' sectional genus", 2, Ep.sectional_genus(), PRINTED)
        rep.check("E' generators", {2: 8}, Ep.generator_degrees(), PRINTED)
        rep.check("E' nodes", 0, nodes, PRINTED)
        self.state["edge"] = edge

    def _step_nodal(self, rng, rep):
        edge = self.state["edge"]
        nodal = build_nodal_E(edge, rng)
        E = nodal.surface
        nodes, length = singularity_profile(E.ideal, rng)
        rep.objects["center"] = str(nodal.secant_point)
        rep.objects["E"] = summarize(E, nodes)
        rep.objects["singular scheme length"] = length
        rep.check("E degree", 7, E.degree(), TRIVIAL)
        rep.check("E sectional genus", 2, E.sectional_genus(), PRINTED)
        rep.check("E generators", {2: 2, 3: 5}, E.generator_degrees(), PRINTED)
        rep.check("E nodes", 1, nodes, PRINTED)
        self.state["nodal"] = nodal
        self.state["E nodes"] = nodes

    def _step_quintic(self, rng, rep):
        edge, nodal = self.state["edge"], self.state["nodal"]
        qc = build_quintic_elliptic(edge, nodal, rng)
        C = qc.curve
        rep.objects["C"] = summarize(C)
        rep.check("C dim", 1, C.dim(), TRIVIAL)
        rep.check("C degree", 5, C.degree(), PRINTED)
        rep.check("C genus", 1, C.sectional_genus(), PRINTED)
        rep.check("linear forms through C", 1, C.ideal.graded_piece_dim(1), DERIVED)
        rep.check("C in E", True, C.ideal.contains(nodal.surface.ideal), TRIVIAL)
        self.state["quintic"] = qc

    def _step_scroll(self, rng, rep):
        edge, nodal, qc = self.state["edge"], self.state["nodal"], self.state["quintic"]
        sc = build_cubic_scroll(edge, nodal, qc, rng)
        B = sc.scroll
        sing = singular_locus(B.ideal, rng=rng).dimension()
        BE = Ideal(B.ring, list(B.ideal.gens) + list(nodal.surface.ideal.gens))
        BE = saturate(BE, None, rng)
        resid = complete_intersection_residual(qc, rng)
        rep.objects["B"] = summarize(B)
        rep.objects["B cap E"] = {"dim": BE.dimension(), "degree": BE.degree()}
        rep.objects["residual of 3 quadrics"] = {"dim": resid.dim(), "degree": resid.degree()}
        rep.check("B dim", 2, B.dim(), PRINTED)
        rep.check("B degree", 3, B.degree(), DERIVED)
        rep.check("B smooth", True, sing < 0, PRINTED)
        rep.check("quadrics through B in P^5", 9, B.ideal.graded_piece_dim(2), DERIVED)
        rep.check("C in B", True, qc.curve.ideal.contains(B.ideal), TRIVIAL)
        if BE.dimension() != 1 or BE.degree() != 5:
            rep.notes.append(f"B cap E has dim {BE.dimension()} and degree {BE.degree()}, more than C")
        self.state["scroll"] = sc

    def _step_semple(self, rng, rep):
        sc = self.state["scroll"]
        sm = build_semple_map(sc, rng)
        Y = sm.fivefold
        deg = map_degree(sm.map, rng)
        base = saturate(Ideal(sc.scroll.ring, sm.map.forms), None, rng)
        rep.objects["Y"] = summarize(Y)
        rep.check("quadrics through B", 9, len(sm.map.forms), DERIVED)
        rep.check("Y dim", 5, Y.dim(), PRINTED)
        rep.check("Y degree", 5, Y.degree(), PRINTED)
        rep.check("Y generators", {2: 5}, Y.generator_degrees(), PRINTED)
        rep.check("map degree", 1, deg, PRINTED)
        rep.check("base locus is B", True, base == sc.scroll.ideal, TRIVIAL)
        self.state["semple"] = sm

    def _step_t_surface(self, rng, rep):
        nodal, sm = self.state["nodal"], self.state["semple"]
        T = build_T(nodal, sm, rng)
        nodes, length = singularity_profile(T.ideal, rng)
        h0 = T.ideal.graded_piece_dim(2) - sm.fivefold.ideal.graded_piece_dim(2)
        rep.objects["T"] = summarize(T, nodes)
        rep.objects["singular scheme length"] = length
        rep.check("T degree", 11, T.degree(), PRINTED)
        rep.check("T sectional genus", 3, T.sectional_genus(), PRINTED)
        rep.check("T generators", {2: 16}, T.generator_degrees(), PRINTED)
        rep.check("T nodes", 1, nodes, PRINTED)
        rep.check("T in Y", True, T.ideal.contains(sm.fivefold.ideal), TRIVIAL)
        rep.check("h0(I_T,Y(2))", 11, h0, PRINTED)
        YG, TG = grassmannian_model(sm.fivefold, T, rng)
        cls = surface_class(TG, rng)
        rep.objects["T in G(1,4)"] = str(cls)
        rep.check("Y is a linear section of G(1,4)", True, YG, DERIVED)
        rep.check("T class (a, b)", list(T_CLASS), [cls.a, cls.b], PRINTED)
        self.state["T"] = T
        self.state["T class"] = (cls.a, cls.b)
        self.state["T nodes"] = nodes

    def _step_gm4(self, rng, rep):
        sm, T = self.state["semple"], self.state["T"]
        X, system = build_quadratic_section(sm, T, rng)
        rep.objects["X"] = summarize(X)
        rep.check("relative quadrics", 11, len(system), PRINTED)
        rep.check("X dim", 4, X.dim(), PRINTED)
        rep.check("X degree", 10, X.degree(), PRINTED)
        rep.check("T in X", True, T.ideal.contains(X.ideal), TRIVIAL)
        if self.smooth_check:
            rep.check("X smooth", True, singular_locus(X.ideal, rng=rng).dimension() < 0, PRINTED)
        numerics = t_surface_numerics(T, self.state["T nodes"], self.state["T class"])
        rec = gm_record(numerics)
        rep.objects["T numerics"] = {
            "deg": numerics.deg, "genus": numerics.genus, "chi": numerics.chi,
            "K2": numerics.k2, "delta": numerics.delta, "class": [numerics.a, numerics.b],
        }
        rep.notes.append(
            "K^2 = 9 - 6 for the plane blown up in six points; chi(O) of the "
            "normalization is chi of the Hilbert polynomial plus delta; "
            f"h0 of normal bundles ({T_H0_NORMAL_Y}, {T_H0_NORMAL_X}) are inputs"
        )
        rep.check("(T)^2", 19, rec.self_int, PRINTED)
        rep.check("discriminant", 26, rec.disc, PRINTED)
        rep.check("component", "double-prime", rec.label.kind, PRINTED)
        rep.check("parameter count", 2,
                  parameter_count(39, T_H0_NORMAL_Y, len(system), T_H0_NORMAL_X), PRINTED)
        self.state["X"] = X
        self.state["relative system"] = system


def t_surface_numerics(T: Scheme, delta: int, cls) -> SurfaceNumerics:
    """Double point formula inputs for T.

    T is isomorphic to E, whose normalization E' is P^2 blown up in six
    points, so K^2 = 9 - 6.  Each improper node identifies two points of
    the normalization and lowers chi(O) by one.
    """
    chi = T.euler_char() + delta
    return SurfaceNumerics(T.degree(), T.sectional_genus(), chi, 9 - 6, delta, *cls)


def grassmannian_model(Y: Scheme, T: Scheme, rng=None) -> tuple[bool, Scheme]:
    """Embed Y in G(1,4) by its skew syzygy matrix; return (check, image of T in P^9).

    The check is that the Pluecker quadrics pull back to generators of I_Y.
    """
    rng = make_rng(rng)
    forms = pfaffian_embedding(Y.ideal.minimal_generators())
    pulled = Ideal(Y.ring, [g.compose(forms) for g in pluecker_ideal(4, Y.ring.prime).gens])
    TG = image(make_map(T, forms, "pluecker"), rng=rng)
    R = pluecker_ring(4, Y.ring.prime)
    TG = Scheme(Ideal(R, [g.to_ring(R) for g in TG.ideal.gens]), "T in G(1,4)")
    return pulled == Y.ideal, TG


def run_all(seed: int = 0, p: int = DEFAULT_PRIME, until: str = "gm4", **kw) -> list[ConstructionReport]:
    return Pipeline(seed, p, **kw).run(until)


def relative_fivefold(pipe: Pipeline, rng=None) -> tuple[Scheme, RationalMap]:
    """Image V of Y by the quadrics through T, cut out by its quadrics.

    Only the degree-2 part of the image ideal is computed; callers check
    that it already has the expected dimension and degree.
    """
    rng = make_rng(rng)
    sm, T = pipe.state["semple"], pipe.state["T"]
    Y = sm.fivefold
    system = pipe.state.get("relative system") or linear_system(Y, T.ideal, 2)
    f = make_map(Y, system, "relative quadrics")
    I = _kernel_image(f, rng, max_degree=2, warn=False)
    return Scheme(I, "V"), f


def fivefold_census(pipe: Pipeline, rng=None, classify: bool = True) -> tuple[Scheme, CongruenceCensus]:
    """Lines through a general point of V and their fiber curves on Y."""
    rng = make_rng(rng)
    V, f = relative_fivefold(pipe, rng)
    for _ in range(10):
        x = random_point(f.source, rng)
        q = f(x)
        if q is not None:
            break
    census = lines_through_point(V, q, rng)
    if classify:
        classify_congruence(census, f, pipe.state["T"], rng)
    return V, census
