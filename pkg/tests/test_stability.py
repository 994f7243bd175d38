"""The two-generator stability layer: band-letter expansion, gamma normal
form, stable objects and their Harder-Narasimhan supports, the support
automata, and separating walls."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zigzagcat import stability as S
from zigzagcat.action import apply_word, is_spherical
from zigzagcat.coxeter import graph_a
from zigzagcat.curves import curve_to_complex

G2 = graph_a(2)

SUCC = {1: 2, 2: 3, 3: 1}
FULL_ALPHABET = (1, 2, 3, 4, -1, -2, -3, -4)
words = st.lists(st.sampled_from(FULL_ALPHABET), max_size=8)


# ------------------------------------------------------------- expansion

@pytest.mark.parametrize("letter,plain", [
    (1, [1]), (-2, [-2]),
    (3, [1, 2, -1]), (-3, [1, -2, -1]),
    (4, [1, 2]), (-4, [-2, -1]),
])
def test_expand_letter_frozen(letter, plain):
    assert S.expand_letter(letter) == plain


@pytest.mark.parametrize("bad", [0, 5, -5])
def test_expand_letter_rejects(bad):
    with pytest.raises(ValueError):
        S.expand_letter(bad)


def test_expand_word_concatenates():
    assert S.expand_word([3, -4]) == [1, 2, -1, -2, -1]


# ----------------------------------------------------------- normal form

@pytest.mark.parametrize("word,nf", [
    ([], (0, ())),
    ([4], (1, ())),
    ([-4], (-1, ())),
    ([1, -2, 3], (-1, ((2, 1), (1, 1), (3, 1)))),
])
def test_normal_form_frozen(word, nf):
    assert S.normal_form(word) == nf


def test_nf_expand_frozen():
    assert S.nf_expand(S.normal_form([1, -2, 3])) == [-2, -1, 2, 1, 1, 2, -1]


@given(words)
def test_normal_form_round_trips_through_expansion(w):
    nf = S.normal_form(w)
    assert S.normal_form(S.nf_expand(nf)) == nf


@given(words)
def test_normal_form_runs_are_positive_and_non_successive(w):
    _, runs = S.normal_form(w)
    for letter, mult in runs:
        assert letter in (1, 2, 3) and mult > 0
    # consecutive run letters never sit in successor position, or the
    # gamma in between could be pulled out and absorbed
    for (a, _), (b, _) in zip(runs, runs[1:]):
        assert a == SUCC[b]


@pytest.mark.parametrize("a", [1, 2, 3])
def test_gamma_conjugation_is_the_successor_cycle(a):
    assert S.normal_form([4, a, -4]) == S.normal_form([SUCC[a]])


@pytest.mark.parametrize("word", [[1, -2, 3], [4, -4], [], [3, 3, -1]])
def test_normal_forms_are_certified(word):
    assert S.nf_certified(word) is True


# -------------------------------------------------------- stable objects

def test_stable_objects_and_phases():
    objs = S.stable_objects()
    assert sorted(objs) == ["P1", "P2", "X"]
    assert all(is_spherical(c) for c in objs.values())
    assert objs["X"] == curve_to_complex(G2, "1 O2 E3")
    data = S.stability_data()
    phases = data["phase"]
    assert phases["P2"] < phases["X"] < phases["P1"]
    from fractions import Fraction
    assert phases["X"] == Fraction(1, 4)
    z = data["central_charge"]
    assert z["X"] == z["P1"] + z["P2"]


def test_hn_support_of_the_stable_triple():
    for name, c in S.stable_objects().items():
        assert S.hn_support(c) == frozenset({name})


def test_hn_support_after_a_negative_twist():
    base = S.stable_objects()
    got = {k: S.hn_support(apply_word([-2], c)) for k, c in base.items()}
    assert got == {"P1": frozenset({"X"}),
                   "P2": frozenset({"P2"}),
                   "X": frozenset({"P2", "X"})}


def test_hn_support_needs_the_two_generator_graph():
    from zigzagcat.complexes import projective
    with pytest.raises(ValueError):
        S.hn_support(projective(graph_a(3), 1))


def test_support_union_frozen():
    assert S.support_union([-2]) == frozenset({"P2", "X"})
    assert S.support_union([]) == frozenset({"P1", "P2", "X"})


# --------------------------------------------------------------- automata

def test_transition_tables_are_closed():
    for table, states, alphabet in [
            (S.BASIC_TRANSITIONS, "ABC", S.BASIC_ALPHABET),
            (S.EXTENDED_TRANSITIONS, "ABCM", S.EXTENDED_ALPHABET)]:
        for (s, a), t in table.items():
            assert s in states and t in states and a in alphabet


def test_extended_home_rows_frozen():
    loops = {s: sorted(a for (q, a), t in S.EXTENDED_TRANSITIONS.items()
                       if q == s and t == s) for s in "ABC"}
    assert loops == {"A": [-1, 2], "B": [-2, 3], "C": [-3, 1]}
    start_row = sorted((a, t) for (s, a), t in S.EXTENDED_TRANSITIONS.items()
                       if s == "M")
    assert start_row == [(-3, "C"), (-2, "B"), (-1, "A"),
                         (1, "C"), (2, "A"), (3, "B")]


def test_loop_quotients_are_rejected_at_home_but_not_from_the_start():
    # At each home state the two loop letters commute past each other only
    # trivially: reading one loop letter then a non-loop letter falls off
    # the table immediately, yet the same word read from the natural start
    # may be fine.
    missing = {s: [a for a in S.EXTENDED_ALPHABET
                   if (s, a) not in S.EXTENDED_TRANSITIONS] for s in "ABC"}
    assert missing == {"A": [1, -2], "B": [2, -3], "C": [3, -1]}
    for s, gone in missing.items():
        for a in gone:
            assert S.recognize([a], "extended", s) == (False, 1)


@pytest.mark.parametrize("word,flavour,start,result", [
    ([], "basic", None, (True, ("A", "B", "C"))),
    ([], "extended", None, (True, ("M",))),
    ([2], "basic", None, (True, ("A",))),
    ([2, 1], "extended", None, (True, ("A",))),
    ([2, 1], "extended", "A", (False, 1)),
    ([1, 2, -3, 1], "extended", None, (False, 4)),
    # letters outside the alphabet simply have no transition
    ([5], "basic", None, (False, 1)),
])
def test_recognize_frozen(word, flavour, start, result):
    assert S.recognize(word, flavour, start) == result


def test_recognize_argument_errors():
    with pytest.raises(ValueError):
        S.recognize([1], "fancy")
    with pytest.raises(ValueError):
        S.recognize([1], "extended", "Z")


def test_recognition_report_structure():
    rep = S.recognition_report([1, 2, -3, 1], "extended")
    assert rep["accepted"] is False and rep["final_states"] == ()
    (run,) = rep["runs"]
    assert run["start"] == "M"
    assert run["path"] == ["M", "C", "C", "A"]
    assert run["failed_at"] == 4


# ----------------------------------------------------------------- walls

def test_walls_radius_zero_frozen():
    assert S.separating_walls([], [-2], 0) == [
        {"mu": [], "separator": "P1", "slot": "P1"},
        {"mu": [], "separator": "P2", "slot": "X"},
        {"mu": [], "separator": "X", "slot": "P1"},
    ]


def test_wall_counts_frozen():
    got = {r: S.count_separating_walls([], [-2], r) for r in (0, 1, 2)}
    assert got == {0: 3, 1: 17, 2: 47}


def test_walls_identical_under_a_worker_pool():
    serial = S.separating_walls([], [-2], 1)
    pooled = S.separating_walls([], [-2], 1, threads=2)
    assert pooled == serial


def test_invalid_budgets_and_radii():
    with pytest.raises(ValueError):
        S.separating_walls([], [-2], -1)
    with pytest.raises(ValueError):
        S.separating_walls([], [-2], 0, threads=0)


def test_thread_budget_env(monkeypatch):
    monkeypatch.setenv("ZIGZAGCAT_THREADS", "x")
    with pytest.raises(ValueError):
        S.separating_walls([], [-2], 0)
    monkeypatch.setenv("ZIGZAGCAT_THREADS", "0")
    with pytest.raises(ValueError):
        S.separating_walls([], [-2], 0)
    monkeypatch.setenv("ZIGZAGCAT_THREADS", "2")
    assert S.separating_walls([], [-2], 0) == S.separating_walls([], [-2], 0, threads=1)


def test_walls_between_identical_words_vanish():
    assert S.count_separating_walls([1], [1], 1) == 0


def test_walls_are_symmetric_in_the_two_points():
    a = S.separating_walls([], [-2], 1)
    b = S.separating_walls([-2], [], 1)
    assert a == b
