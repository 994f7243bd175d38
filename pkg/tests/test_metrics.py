"""Word metrics: interval enumeration for both grading families, the spread
statistic computed through homological layers, BFS cross-checks, root data,
and the Digne-Gobet style reduction certificates."""

import pytest

from zigzagcat.action import apply_word, is_spherical
from zigzagcat.complexes import projective, validate
from zigzagcat.coxeter import graph_a, graph_d
from zigzagcat.metrics import (classical_generators, digne_gobet_check,
                               dual_generators, dual_root_object,
                               enumerate_interval, group_ball, layer_profile,
                               layer_range, positive_roots, spread,
                               word_length_bfs)

G2 = graph_a(2)
G3 = graph_a(3)


# ---------------------------------------------------------------- spread

@pytest.mark.parametrize("word,grading,value", [
    ([], "dual", 0),
    ([], "classical", 0),
    ([1], "classical", 1),
    ([1], "dual", 1),
    ([-1], "classical", 1),
    # The product of the two standard generators is itself an interval
    # element for the classical family, so its spread is 1, not 2.
    ([1, 2], "classical", 1),
    ([1, 2], "dual", 1),
    ([1, 2, 1], "classical", 1),
    ([1, 2, 1], "dual", 2),
])
def test_spread_frozen_values(word, grading, value):
    assert spread(G2, word, grading=grading) == value


def test_spread_rejects_unknown_grading():
    with pytest.raises(ValueError):
        spread(G2, [1], grading="mystery")


def test_classical_family_needs_linear_type_a():
    with pytest.raises(ValueError):
        spread(graph_d(4), [1], grading="classical")
    # the dual family is defined on any tree
    assert spread(graph_d(4), [1], grading="dual") == 1


@pytest.mark.parametrize("word,grading", [
    ([1], "classical"),
    ([1, 2], "classical"),
    ([1, 2, 1], "dual"),
    ([-1], "dual"),
])
def test_bfs_word_length_agrees_with_spread(word, grading):
    assert word_length_bfs(G2, word, grading) == spread(G2, word, grading=grading)


def test_bfs_gives_none_beyond_the_bound():
    assert word_length_bfs(G2, [1, 1, 1], "classical", bound=1) is None


# ------------------------------------------------------------- intervals

def test_interval_enumeration_frozen():
    assert enumerate_interval(G2, "dual") == [[], [2], [1], [1, 2, -1], [1, 2]]
    assert enumerate_interval(G2, "classical") == \
        [[], [1], [2], [1, 2], [2, 1], [1, 2, 1]]


def test_interval_sizes_are_catalan_and_factorial():
    # classical intervals biject with permutations, dual ones with
    # noncrossing partitions: 4! = 24 and Catalan(4) = 14 on three strands.
    assert len(enumerate_interval(G3, "classical")) == 24
    assert len(enumerate_interval(G3, "dual")) == 14


def test_interval_argument_errors():
    with pytest.raises(ValueError):
        enumerate_interval(G2, "sideways")
    with pytest.raises(ValueError):
        enumerate_interval(graph_d(4), "classical")


# --------------------------------------------------------------- roots

def test_positive_roots_frozen():
    assert positive_roots(G3) == [
        (0, 0, 1), (0, 1, 0), (1, 0, 0),
        (0, 1, 1), (1, 1, 0), (1, 1, 1)]
    assert len(positive_roots(graph_d(4))) == 12


def test_dual_root_objects_are_spherical():
    g = graph_d(4)
    for root in positive_roots(g):
        obj = dual_root_object(g, root)
        assert validate(obj) == []
        assert is_spherical(obj)


def test_dual_root_object_matches_the_string_complex():
    obj = dual_root_object(G3, (1, 1, 0))
    assert [(l.v, l.k, l.l, l.m) for l in obj.gens] == \
        [(1, 0, 0, 0), (2, 1, -1, 0)]


def test_dual_root_object_rejects_non_roots():
    # contract guard, matching the assert_valid style used for complexes
    with pytest.raises(AssertionError):
        dual_root_object(G3, (2, 0, 0))


# ----------------------------------------------------------- generators

def test_generator_set_sizes():
    assert len(classical_generators(G2)) == 4
    assert len(classical_generators(G3)) == 11
    assert len(dual_generators(G2)) == 3  # one object per positive root
    for obj in classical_generators(G3):
        assert validate(obj) == []
        assert is_spherical(obj)


def test_group_ball_radius_one():
    ball = group_ball(G2, "classical", 1)
    assert len(ball) == 11


def test_digne_gobet_certificates():
    ok, certs = digne_gobet_check(G2)
    assert ok is True
    assert len(certs) == 5
    assert all(c["certificate"] is not None for c in certs)
    words = [c["dual_word"] for c in certs]
    assert words == enumerate_interval(G2, "dual")


# --------------------------------------------------------------- layers

def test_layer_profile_of_a_twisted_projective():
    c = apply_word([1, 2, 1], projective(G2, 1))
    prof = layer_profile(c, "classical")
    lo, hi = layer_range(c, "classical")
    assert min(prof) == lo and max(prof) == hi
    assert sum(len(labels) for labels in prof.values()) == c.n_gens


def test_layer_range_rejects_the_zero_complex():
    from zigzagcat.complexes import Complex
    with pytest.raises(ValueError):
        layer_range(Complex(G2, ()), "classical")
