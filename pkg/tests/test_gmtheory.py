"""Double point formula, discriminants, component labels and the surface table."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gmforge.gmtheory import (
    SurfaceNumerics,
    associated_lookup,
    component_label,
    det3,
    discriminant,
    gm_record,
    gram_matrix,
    load_table1,
    parameter_count,
    parse_table1,
    self_intersection,
    table1_check,
)


def test_triple_projected_k3():
    rec = gm_record(SurfaceNumerics(17, 11, 2, -1, 0, 11, 6))
    assert (rec.self_int, rec.disc, rec.label.kind) == (37, 26, "double-prime")


def test_nodal_surface():
    rec = gm_record(SurfaceNumerics(11, 3, 1, 3, 1, 7, 4))
    assert (rec.self_int, rec.disc, rec.label.kind) == (19, 26, "double-prime")


def test_node_raises_self_intersection_by_two():
    a = SurfaceNumerics(11, 3, 1, 3, 0, 7, 4)
    b = SurfaceNumerics(11, 3, 1, 3, 1, 7, 4)
    assert self_intersection(b) - self_intersection(a) == 2


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-200, 200))
def test_discriminant_is_gram_determinant(a, b, si):
    assert discriminant(a, b, si) == det3(gram_matrix(a, b, si))


def test_surface_numerics_validation():
    with pytest.raises(ValueError):
        SurfaceNumerics(10, 0, 1, 0, 0, 7, 4)
    with pytest.raises(ValueError):
        SurfaceNumerics(11, 0, 1, 0, -1, 7, 4)


def test_component_labels():
    assert component_label(10, 1, 1).kind == "prime"
    assert component_label(10, 3, 2).kind == "double-prime"
    assert component_label(26, 7, 4).kind == "double-prime"
    assert component_label(26, 2, 2).kind == "both"
    assert component_label(26, 3, 3).prime
    assert component_label(20, 6, 3).kind == "plain"
    assert component_label(12, 6, 3).kind == "plain"
    assert component_label(6, 1, 1).kind == "out-of-taxonomy"
    assert component_label(13, 1, 1).kind == "out-of-taxonomy"


def test_parameter_count():
    assert parameter_count(39, 29, 11, 2) == 2
    assert parameter_count(39, 37, 7, 6) == 2
    with pytest.raises(ValueError):
        parameter_count(39, -1, 1, 0)


def test_associated_lookup():
    info = associated_lookup(26)
    assert info["known"] and info["K3"]
    assert not associated_lookup(10**6)["known"]


def test_table1_rows():
    rows = load_table1()
    assert len(rows) == 9
    results = [table1_check(r) for r in rows]
    assert [r.status for r in results].count("pass") == 8
    plane = next(r for r in results if r.row.name == "plane")
    assert plane.status == "expected-discrepancy"
    assert all(r.ok for r in results)


def test_table1_parser_rejects_bad_header():
    with pytest.raises(ValueError):
        parse_table1("name\ta\n")


def test_random_triples_fast():
    rng = random.Random(0)
    for _ in range(10**4):
        a, b, si = rng.randint(-99, 99), rng.randint(-99, 99), rng.randint(-999, 999)
        assert discriminant(a, b, si) == det3(gram_matrix(a, b, si))
