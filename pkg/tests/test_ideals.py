"""Ideal operations: Hilbert data, saturation, elimination, singular loci."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gmforge.arith import Ring
from gmforge.ideals import (
    Ideal,
    eliminate,
    ideal_power,
    intersect,
    node_count,
    parse_ideal,
    format_ideal,
    quotient,
    saturate,
    singular_length,
    singularity_profile,
    to_macaulay2,
)

from .conftest import P, SMALL_FIXTURES, grassmannian, plane_cubic, twisted_cubic, veronese_surface


def test_hilbert_invariants_of_fixtures():
    for name, (make, dim, deg) in SMALL_FIXTURES.items():
        X = make()
        assert (X.dim(), X.degree()) == (dim, deg), name
    assert twisted_cubic().sectional_genus() == 0
    assert plane_cubic().sectional_genus() == 1
    G = grassmannian()
    assert (G.dim(), G.degree()) == (6, 5)
    assert G.ideal.hilbert_function(1) == 10
    assert G.ideal.hilbert_function(2) == 50


def test_veronese_surface_chi():
    V = veronese_surface()
    assert V.euler_char() == 1
    assert V.sectional_genus() == 0


def test_saturation_removes_embedded_point():
    C = twisted_cubic()
    R = C.ring
    x = R.gens()
    # C intersected with the square of the irrelevant ideal: same scheme, unsaturated
    J = Ideal(R, [g * h for g in C.ideal.gens for h in x])
    assert J != C.ideal
    assert saturate(J) == C.ideal


def test_saturation_idempotent():
    rng = random.Random(5)
    for make in (twisted_cubic, veronese_surface, grassmannian):
        I = make().ideal
        S1 = saturate(I, None, rng)
        assert saturate(S1, None, rng) == S1
    R = Ring(3)
    x, y, z = R.gens()
    I = Ideal(R, [x**2 * y, x * y**2 - x * z**2])
    S1 = saturate(I, Ideal(R, [x]))
    assert saturate(S1, Ideal(R, [x])) == S1


def test_saturation_by_element():
    R = Ring(3)
    x, y, z = R.gens()
    I = Ideal(R, [x * y, x * z])
    # (xy, xz) : x^inf = (y, z)
    assert saturate(I, Ideal(R, [x])) == Ideal(R, [y, z])


def test_elimination():
    R = Ring(4)
    t, x, y, z = R.gens()
    # x = t and y^2 = t z: eliminating t leaves the conic y^2 - x z
    E = eliminate(Ideal(R, [x - t, y**2 - t * z]), [0], keep_ring=True)
    assert E == Ideal(R, [y**2 - x * z])
    C = twisted_cubic()
    # (1:0:0:0) lies on C, so projecting from it gives a conic
    assert eliminate(C.ideal, [0]).degree() == 2


def test_intersection_and_quotient():
    R = Ring(3)
    x, y, z = R.gens()
    I, J = Ideal(R, [x]), Ideal(R, [y])
    assert intersect(I, J) == Ideal(R, [x * y])
    assert quotient(Ideal(R, [x * y, x * z]), Ideal(R, [x])) == Ideal(R, [y, z])


def test_saturated_power():
    C = twisted_cubic()
    sq = ideal_power(C.ideal, 2, saturated=True, rng=random.Random(1))
    assert sq.dimension() == 1
    # cubics singular along C: 0; quartics: the 6 products of the quadrics
    assert sq.graded_piece_dim(3) == 0
    assert sq.graded_piece_dim(4) == 6


def test_node_count_smooth_quadric():
    R = Ring(4)
    x, y, z, w = R.gens()
    assert node_count(Ideal(R, [x * y - z * w])) == 0


def test_node_count_cone():
    R = Ring(4)
    x, y, z, w = R.gens()
    assert node_count(Ideal(R, [x * y - z**2])) == 1
    assert singularity_profile(Ideal(R, [x * y - z**2])) == (1, 1)


def test_nodal_plane_cubic():
    R = Ring(3)
    x, y, z = R.gens()
    I = Ideal(R, [y**2 * z - x**2 * (x + z)])
    assert node_count(I) == 1
    assert singular_length(I) == 1
    cusp = Ideal(R, [y**2 * z - x**3])
    assert singularity_profile(cusp) == (1, 2)


def test_conic_pair_has_four_nodes():
    # two conics meeting transversally: four nodes
    R = Ring(3)
    x, y, z = R.gens()
    I = Ideal(R, [(x**2 + y**2 - z**2) * (x**2 + 2 * y**2 - 3 * z**2)])
    assert node_count(I, rng=random.Random(2)) == 4


def test_improper_double_point_counts_once():
    # two planes in P^4 meeting in a single point: one singular point of length > 1
    R = Ring(5)
    x = R.gens()
    plane1 = Ideal(R, [x[0], x[1]])
    plane2 = Ideal(R, [x[2], x[3]])
    U = intersect(plane1, plane2)
    points, length = singularity_profile(U, rng=random.Random(0))
    assert points == 1
    assert length > 1


def test_text_roundtrip():
    I = veronese_surface().ideal
    J = parse_ideal(format_ideal(I))
    assert J == I and J.ring == I.ring
    assert "ideal(" in to_macaulay2(I)


QUADRIC_MONOMIALS = [(i, j) for i in range(6) for j in range(i, 6)]

terms = st.lists(
    st.tuples(st.integers(0, len(QUADRIC_MONOMIALS) - 1), st.integers(0, P - 1)), max_size=8
)


def _quadric(R, data):
    out = R.zero()
    for k, c in data:
        i, j = QUADRIC_MONOMIALS[k]
        out = out + R.var(i) * R.var(j) * c
    return out


@settings(max_examples=100, deadline=None)
@given(terms, terms, st.integers(0, P - 1))
def test_normal_form_idempotent_and_linear(a, b, c):
    I = veronese_surface().ideal
    R = I.ring
    f, g = _quadric(R, a), _quadric(R, b)
    nf, ng = I.normal_form(f), I.normal_form(g)
    assert I.normal_form(nf) == nf
    assert I.normal_form(f + g * c) == nf + ng * c
    assert I.contains(f - nf)


def test_saturation_of_embedded_origin():
    R = Ring(2)
    x0, x1 = R.gens()
    assert saturate(Ideal(R, [x0**2, x0 * x1])) == Ideal(R, [x0])
    # in P^2 the embedded point x0 = x1 = 0 is a real point, removed by saturating by (x0, x1)
    S = Ring(3)
    y0, y1, y2 = S.gens()
    I = Ideal(S, [y0**2, y0 * y1])
    assert saturate(I) == I
    assert saturate(I, Ideal(S, [y0, y1])) == Ideal(S, [y0])
