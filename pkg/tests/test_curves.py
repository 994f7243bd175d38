"""The curve dictionary: itinerary parsing, admissibility, translation to
complexes, and the intersection law against standard arcs."""

from fractions import Fraction

import pytest

from zigzagcat.complexes import hom_total_dims, projective, validate
from zigzagcat.coxeter import graph_a, graph_d
from zigzagcat.curves import (CurveError, crossings_with_standard_arc,
                              curve_to_complex, parse_curve)

G2 = graph_a(2)
G4 = graph_a(4)


def labels(c):
    return [(l.v, l.k, l.l, l.m) for l in c.gens]


def test_parse_accepts_the_token_grammar():
    events = parse_curve("2 O3 W+5 U2 E1")
    assert [(e.kind, e.puncture) for e in events] == [
        ("start", 2), ("over", 3), ("wrap+", 5), ("under", 2), ("end", 1)]
    # a leading S on the start token is tolerated
    assert parse_curve("S2 O3 E4") == parse_curve("2 O3 E4")


@pytest.mark.parametrize("text,fragment", [
    ("", "empty"),
    ("1 O2 Q3 E4", "bad curve token"),
    ("O1 O2 E3", "bare start"),
    ("1 2 E3", "unexpected bare"),
    ("1 O2 O3", "finish with an E"),
    ("1 E2 O3 E4", "middle"),
])
def test_parse_rejects_malformed(text, fragment):
    with pytest.raises(CurveError) as err:
        parse_curve(text)
    assert fragment in str(err.value)


@pytest.mark.parametrize("text,fragment", [
    ("1 O2 O2 E3", "same puncture"),
    ("1 O3 E4", "skip a gap"),
    ("1 O2 O1 E2", "only flip at wraps"),
    ("1 W+2 O3 E4", "must flip at the wrap"),
    ("1 W+2 W-2 E1", "cancel"),
    ("1 U2 W+3 O2 E1", "not reduced"),
    ("1 O2 E9", "outside"),
])
def test_validation_rejects_inadmissible(text, fragment):
    with pytest.raises(CurveError) as err:
        curve_to_complex(G4, text)
    assert fragment in str(err.value)


def test_curves_need_linear_type_a():
    with pytest.raises(CurveError):
        curve_to_complex(graph_d(4), "1 O2 E3")
    assert issubclass(CurveError, ValueError)


def test_simple_pass_curves():
    c = curve_to_complex(G2, "1 O2 E3")
    assert labels(c) == [(1, 0, 0, 0), (2, 1, -1, 0)]
    assert c.text() == "P1 -> P2<-1>"
    u = curve_to_complex(G2, "1 U2 E3")
    assert labels(u) == [(1, 0, 0, 0), (2, -1, 1, 1)]
    assert u.text() == "[-1] P2<1>{1} -> P1"
    assert u.diff == {(0, 1): (("a", 2, 1), Fraction(1))}


def test_wrap_curve_gradings():
    c = curve_to_complex(G2, "1 W+2 E1")
    assert labels(c) == [(1, 0, 0, 0), (1, 1, -2, -1)]
    assert c.diff == {(1, 0): (("x", 1), Fraction(1))}
    assert validate(c) == []


GOLDEN_TEXT = "2 O3 O4 W+5 W+4 W-5 O4 U3 U2 E1"
GOLDEN_GENS = [(2, 0, 0, 0), (3, 1, -1, 0), (4, 2, -2, 0), (4, 3, -4, -1),
               (4, 4, -6, -2), (4, 3, -4, -1), (3, 2, -3, -1), (2, 3, -4, -2),
               (1, 4, -5, -3)]
GOLDEN_ARROWS = [(1, 0), (2, 1), (3, 2), (4, 3), (4, 5), (5, 6), (7, 6), (8, 7)]


def test_golden_spiral():
    c = curve_to_complex(G4, GOLDEN_TEXT)
    assert labels(c) == GOLDEN_GENS
    assert sorted(c.diff) == sorted(GOLDEN_ARROWS)
    assert validate(c) == []


def test_every_traversal_makes_one_generator():
    text = "1 U2 U3 W-4 O3 E2"
    c = curve_to_complex(graph_a(3), text)
    assert c.n_gens == len(text.split()) - 1
    assert validate(c) == []


def test_same_side_wrap_is_reduced():
    # flanking crossings on one side of the wrap are a genuine turn, only
    # the opposite-sides drawing is rejected as an unreduced spiral
    assert curve_to_complex(G4, "1 O2 W+3 O2 E1").n_gens == 4
    assert curve_to_complex(G4, "1 O2 W+3 U2 E1").n_gens == 4


@pytest.mark.parametrize("n,text", [
    (2, "1 O2 W+3 E2"),
    (2, "3 W-2 W+3 E2"),
    (3, "2 O3 W+4 U3 U2 E1"),
    (4, GOLDEN_TEXT),
])
def test_intersection_law_matches_hom_dimensions(n, text):
    g = graph_a(n)
    c = curve_to_complex(g, text)
    for arc in range(1, n + 1):
        law = crossings_with_standard_arc(g, text, arc)
        assert law["total"] == 2 * law["transverse"] + law["endpoints"]
        _, t1 = hom_total_dims(c, projective(g, arc))
        _, t2 = hom_total_dims(projective(g, arc), c)
        assert law["total"] == t1 == t2


def test_crossings_frozen_small():
    assert crossings_with_standard_arc(G2, "1 O2 E3", 1) == \
        {"transverse": 0, "endpoints": 1, "total": 1}
    assert crossings_with_standard_arc(G2, "1 O2 E3", 2) == \
        {"transverse": 0, "endpoints": 1, "total": 1}
    with pytest.raises(CurveError):
        crossings_with_standard_arc(G2, "1 O2 E3", 5)
