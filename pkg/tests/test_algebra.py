"""The zigzag algebra: basis, multiplication table, gradings, wire format."""

import itertools
from fractions import Fraction

import pytest

from zigzagcat.coxeter import graph_a, graph_d
from zigzagcat.zigzag import (AlgebraElement, algebra_basis, algebra_dim,
                              based_extension, check_path, hom_basis,
                              multiply_paths, orient_deg, parse_path, path_deg,
                              path_source, path_str, path_target)


def test_basis_and_dimension():
    g = graph_a(3)
    basis = algebra_basis(g)
    assert algebra_dim(g) == 2 * 3 + 2 * 2  # vertices + loops + both arrows
    assert ("e", 2) in basis and ("x", 2) in basis
    assert ("a", 1, 2) in basis and ("a", 2, 1) in basis
    assert ("a", 1, 3) not in basis
    assert algebra_dim(graph_d(4)) == 2 * 4 + 2 * 3
    # the based vertex keeps its idempotent but loses its loop
    bg = based_extension(graph_a(2))
    assert algebra_dim(bg) == 2 * 3 + 2 * 2 - 1
    assert ("e", 0) in algebra_basis(bg)
    assert ("x", 0) not in algebra_basis(bg)


def test_path_accessors():
    assert path_source(("a", 1, 2)) == 1 and path_target(("a", 1, 2)) == 2
    assert path_source(("x", 3)) == path_target(("x", 3)) == 3
    assert path_deg(("e", 1)) == 0
    assert path_deg(("a", 1, 2)) == 1
    assert path_deg(("x", 1)) == 2
    g = graph_a(2)
    assert orient_deg(g, ("a", 1, 2)) == 0  # with the orientation
    assert orient_deg(g, ("a", 2, 1)) == 1  # against it
    assert orient_deg(g, ("x", 1)) == 1
    assert orient_deg(g, ("e", 1)) == 0


def test_multiplication_table():
    g = graph_a(2)
    e1, e2 = ("e", 1), ("e", 2)
    a12, a21 = ("a", 1, 2), ("a", 2, 1)
    x1 = ("x", 1)
    assert multiply_paths(g, e1, e1) == e1
    assert multiply_paths(g, e1, a12) == a12
    assert multiply_paths(g, a12, e2) == a12
    assert multiply_paths(g, a12, e1) is None  # source/target mismatch
    assert multiply_paths(g, a12, a21) == x1
    assert multiply_paths(g, a21, a12) == ("x", 2)
    assert multiply_paths(g, x1, x1) is None
    assert multiply_paths(g, x1, a12) is None  # length three vanishes
    assert multiply_paths(g, a12, ("x", 2)) is None
    # straight two-step paths vanish
    g3 = graph_a(3)
    assert multiply_paths(g3, ("a", 1, 2), ("a", 2, 3)) is None


def test_based_loop_is_zero():
    bg = based_extension(graph_a(2))
    assert multiply_paths(bg, ("a", 0, 1), ("a", 1, 0)) is None
    assert multiply_paths(bg, ("a", 1, 0), ("a", 0, 1)) == ("x", 1)


def test_associativity_exhaustive():
    for g in (graph_a(3), based_extension(graph_a(2))):
        basis = algebra_basis(g)
        for p, r, s in itertools.product(basis, repeat=3):
            pr = multiply_paths(g, p, r)
            rs = multiply_paths(g, r, s)
            left = multiply_paths(g, pr, s) if pr is not None else None
            right = multiply_paths(g, p, rs) if rs is not None else None
            assert left == right, (p, r, s)


def test_check_path():
    g = graph_a(2)
    assert check_path(g, ("e", 1)) == ("e", 1)
    with pytest.raises(ValueError):
        check_path(g, ("a", 1, 3))
    with pytest.raises(ValueError):
        check_path(g, ("y", 1))


def test_path_str_round_trip():
    for p in algebra_basis(graph_a(3)):
        assert parse_path(path_str(p)) == p
    with pytest.raises(ValueError):
        parse_path("b1")
    with pytest.raises(ValueError):
        parse_path("a1-2")


def test_hom_basis():
    g = graph_a(3)
    diag = hom_basis(g, 2, 2)
    assert diag == ((("e", 2), 0, 0), (("x", 2), 2, 1))
    assert hom_basis(g, 1, 2) == ((("a", 1, 2), 1, 0),)
    assert hom_basis(g, 2, 1) == ((("a", 2, 1), 1, 1),)
    assert hom_basis(g, 1, 3) == ()
    with pytest.raises(ValueError):
        hom_basis(g, 1, 4)
    bg = based_extension(graph_a(2))
    assert hom_basis(bg, 0, 0) == ((("e", 0), 0, 0),)


def test_element_arithmetic():
    g = graph_a(2)
    a = AlgebraElement.from_path(g, ("a", 1, 2))
    b = AlgebraElement.from_path(g, ("a", 2, 1), 3)
    x = a * b
    assert x == AlgebraElement.from_path(g, ("x", 1), 3)
    assert (x * x).is_zero()
    assert (a - a).is_zero()
    assert 2 * a == a * 2
    assert AlgebraElement.zero(g).is_zero()
    e1 = AlgebraElement.from_path(g, ("e", 1))
    assert e1 * a == a and a * e1 != a  # e1 only absorbs on its own side
    assert "a1_2" in repr(a)
    with pytest.raises(ValueError):
        AlgebraElement.from_path(g, ("a", 1, 3))
    with pytest.raises(ValueError):
        a + AlgebraElement.from_path(graph_a(3), ("e", 1))


def test_element_wire_format():
    g = graph_a(2)
    elt = AlgebraElement(g, {("a", 1, 2): Fraction(3, 2),
                             ("e", 1): Fraction(-1)})
    back = AlgebraElement.from_json(g, elt.to_json())
    assert back == elt
    assert elt.to_json() == [{"path": "a1_2", "coef": "3/2"},
                             {"path": "e1", "coef": "-1"}]
