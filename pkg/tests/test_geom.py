"""Projective schemes, points and rational maps."""

import random

import pytest

from gmforge.arith import Ring
from gmforge.geom import (
    PointP,
    Scheme,
    base_locus,
    cone_over,
    count_slice_points,
    fiber,
    format_map,
    image,
    image_dimension,
    linear_section,
    linear_system,
    make_map,
    map_degree,
    parse_map,
    point_ideal,
    points_rank,
    project_from,
    projective_degrees,
    projective_space,
    random_point,
    restrict_image,
    secant_point,
)
from gmforge.ideals import Ideal, node_count, singular_locus

from .conftest import P, SMALL_FIXTURES, grassmannian, rational_quartic, twisted_cubic, veronese_surface


def veronese_map(p=P):
    X = projective_space(1, p)
    s, t = X.ring.gens()
    return make_map(X, [s**2, s * t, t**2], "veronese")


def plane_veronese_map(p=P):
    X = projective_space(2, p)
    x, y, z = X.ring.gens()
    return make_map(X, [x * x, x * y, x * z, y * y, y * z, z * z], "veronese2")


def twisted_cubic_map(p=P):
    X = projective_space(1, p)
    s, t = X.ring.gens()
    return make_map(X, [s**3, s**2 * t, s * t**2, t**3], "cubic")


def fixture_maps():
    return [veronese_map(), plane_veronese_map(), twisted_cubic_map()]


def test_random_point_on_fixtures():
    rng = random.Random(0)
    for name, (make, _, _) in SMALL_FIXTURES.items():
        X = make()
        pt = random_point(X, rng)
        assert X.contains_point(pt), name


def test_random_point_on_linear_section_of_grassmannian():
    rng = random.Random(1)
    Y = linear_section(grassmannian(), 1, rng)
    assert (Y.dim(), Y.degree()) == (5, 5)
    assert Y.contains_point(random_point(Y, rng, budget=5))
    Y0 = linear_section(grassmannian(), 2, rng)
    assert (Y0.dim(), Y0.degree()) == (4, 5)


def test_secant_point_collinear_and_off():
    rng = random.Random(2)
    R = Ring(3)
    x, y, z = R.gens()
    conic = Scheme(Ideal(R, [x * z - y**2]))
    q = secant_point(conic, rng)
    assert not conic.contains_point(q)
    a, b = random_point(conic, rng), random_point(conic, rng)
    s = PointP.make([(3 * u + 5 * v) % P for u, v in zip(a, b)], P)
    assert points_rank([a, b, s], P) == 2


def test_identity_and_veronese_images():
    X = projective_space(2, P)
    f = make_map(X, X.ring.gens())
    assert image(f).ideal.is_zero()
    V = image(veronese_map())
    x0, x1, x2 = V.ring.gens()
    assert V.ideal == Ideal(V.ring, [x0 * x2 - x1**2])


def test_graph_and_kernel_images_agree():
    for f in fixture_maps():
        assert image(f, method="graph").ideal == image(f, method="kernel").ideal


def test_veronese_surface_image():
    V = image(plane_veronese_map())
    assert (V.dim(), V.degree()) == (2, 4)
    assert V.ideal == veronese_surface().ideal


def test_image_membership():
    rng = random.Random(3)
    for f in fixture_maps():
        img = image(f)
        for _ in range(10):
            q = f(random_point(f.source, rng))
            assert q is None or img.contains_point(q)


def test_image_dimension_plus_fiber_dimension():
    rng = random.Random(4)
    X = projective_space(2, P)
    x, y, z = X.ring.gens()
    proj = make_map(X, [x, y], "projection")
    for f in fixture_maps() + [proj]:
        d = image(f).dim()
        assert image_dimension(f, rng) == d
        for _ in range(3):
            q = f(random_point(f.source, rng))
            assert d + fiber(f, q, rng).dim() == f.source.dim()


def test_restriction_of_identity():
    X = projective_space(3, P)
    f = make_map(X, X.ring.gens())
    C = twisted_cubic()
    assert restrict_image(f, C).ideal == C.ideal


def test_base_locus():
    assert base_locus(veronese_map()).dim() == -1
    X = projective_space(2, P)
    x, y, z = X.ring.gens()
    f = make_map(X, [x, y])
    B = base_locus(f)
    assert (B.dim(), B.degree()) == (0, 1)
    g = make_map(X, [x * 5, y * 7])
    assert base_locus(g).ideal == B.ideal


def test_fiber_of_projection():
    rng = random.Random(5)
    X = projective_space(2, P)
    x, y, z = X.ring.gens()
    f = make_map(X, [x, y])
    F = fiber(f, PointP.make([2, 3], P), rng)
    # the line through the center minus the center: after saturation one line
    assert (F.dim(), F.degree()) == (1, 1)
    conic = Scheme(Ideal(X.ring, [x * z - y**2]))
    g = make_map(conic, [x, y])
    F = fiber(g, PointP.make([4, 2], P), rng)
    assert (F.dim(), F.degree()) == (0, 1)


def test_map_degree():
    rng = random.Random(6)
    assert map_degree(veronese_map(), rng) == 1
    X = projective_space(1, P)
    s, t = X.ring.gens()
    assert map_degree(make_map(X, [s**2, t**2]), rng) == 2


def test_projective_degrees():
    X = projective_space(2, P)
    f = make_map(X, X.ring.gens())
    assert projective_degrees(f, random.Random(7)) == [1, 1, 1]
    assert projective_degrees(veronese_map(), random.Random(7)) == [1, 2]
    assert projective_degrees(plane_veronese_map(), random.Random(7)) == [1, 2, 4]


def test_projective_degree_zero_is_source_degree():
    rng = random.Random(8)
    for X in (twisted_cubic(), veronese_surface()):
        f = make_map(X, X.ring.gens()[:-1])
        assert projective_degrees(f, rng)[0] == X.degree()


def test_projection_of_twisted_cubic():
    rng = random.Random(9)
    C = twisted_cubic()
    off = PointP.make([1, 2, 7, 3], P)
    assert not C.contains_point(off)
    img, _ = project_from(C, off, rng)
    assert (img.dim(), img.degree()) == (1, 3)
    assert node_count(img.ideal, rng) == 1
    on = random_point(C, rng)
    img, _ = project_from(C, on, rng)
    assert (img.dim(), img.degree()) == (1, 2)


def test_projection_degrees_of_surfaces():
    rng = random.Random(10)
    V = veronese_surface()
    on = random_point(V, rng)
    img, _ = project_from(V, on, rng)
    assert img.degree() == V.degree() - 1
    Q = rational_quartic()
    off = secant_point(Q, rng)
    img, _ = project_from(Q, off, rng)
    assert img.degree() == Q.degree()


def test_projection_of_conic_from_point_on_it():
    R = Ring(3)
    x, y, z = R.gens()
    conic = Scheme(Ideal(R, [x * z - y**2]))
    img, _ = project_from(conic, PointP.make([1, 0, 0], P))
    assert img.ideal.is_zero() and img.ambient_dim == 1


def test_cone_over_conic():
    R = Ring(3)
    x, y, z = R.gens()
    conic = Scheme(Ideal(R, [x * z - y**2]))
    K = cone_over(conic)
    assert (K.dim(), K.degree()) == (2, 2)
    S = singular_locus(K.ideal)
    assert (S.dimension(), S.degree()) == (0, 1)
    assert S.contains(Ideal(K.ring, K.ring.gens()[:3]))
    K2 = cone_over(conic, vertex=[1, 2, 3, 1])
    assert node_count(K2.ideal) == 1
    assert K2.contains_point([1, 2, 3, 1])


def test_linear_system_examples():
    X = projective_space(2, P)
    pt = PointP.make([1, 2, 3], P)
    assert len(linear_system(X, point_ideal(pt, X.ring), 1)) == 2
    C = twisted_cubic()
    assert len(linear_system(projective_space(3, P), C.ideal, 2)) == 3
    assert len(linear_system(projective_space(3, P), C.ideal, 4, 2, rng=random.Random(0))) == 6


@pytest.mark.parametrize("name", sorted(SMALL_FIXTURES))
def test_degree_by_random_slicing(name):
    make, _, deg = SMALL_FIXTURES[name]
    X = make()
    rng = random.Random(11)
    assert count_slice_points(X, rng) == X.degree() == deg


def test_degree_by_slicing_threefold_section():
    X = linear_section(grassmannian(), 3, random.Random(12))
    assert X.dim() == 3
    assert count_slice_points(X, random.Random(13)) == X.degree() == 5


def test_map_file_roundtrip():
    f = plane_veronese_map()
    g = parse_map(format_map(f))
    assert [str(a) for a in g.forms] == [str(a) for a in f.forms]
    assert image(g).ideal == image(f).ideal
