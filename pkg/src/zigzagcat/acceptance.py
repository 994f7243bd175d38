"""Self-check registry: every promise the engine makes, runnable in one go.

Each check is a zero-argument callable returning ``(ok, detail)``.  The
registry drives both the test suite and the ``selftest`` subcommand of the
command line.  Checks use exact arithmetic throughout; randomized checks
fix their seeds so that every run sees the same words.

One check is expected to fail: the wall-count stabilization clause of
check 13 measures honestly divergent counts (see that check's docstring).
``EXPECTED_FAILURES`` names it so callers can tell a known-red from a
regression.
"""

from __future__ import annotations

import collections
import random
import time

from .action import (apply_word, canonical_tuple, dehornoy_sign, spherical_twist,
                     tuple_invariant_key, tuples_equal)
from .burau import burau_of_word, cancellation_witness, decat_consistency
from .complexes import (hom_total_dims, hom_trigraded_dims, is_isomorphic,
                        projective, validate)
from .coxeter import graph_a, graph_d, dual_generator, inverse_word
from .curves import crossings_with_standard_arc, curve_to_complex
from .metrics import (digne_gobet_check, dual_root_object, group_ball,
                      positive_roots, spread, word_length_bfs)
from .stability import (BASIC_ALPHABET, BASIC_TRANSITIONS, EXTENDED_ALPHABET,
                        EXTENDED_TRANSITIONS, STATE_SETS, count_separating_walls,
                        expand_letter, expand_word, hn_support, nf_certified,
                        recognize, stable_objects)

EXPECTED_FAILURES = (13,)


# ---------------------------------------------------------------------------
# 1. braid relations


def _relator(g, i, j):
    if g.is_edge(i, j):
        return [i, j, i, -j, -i, -j]
    return [i, j, -i, -j]


def check_braid_relations():
    """Adjacent and distant generator pairs satisfy the braid relations up
    to isomorphism of the reduced images, and appending a relator to a
    random word never changes the canonical tuple."""
    problems = []
    for g in (graph_a(3), graph_d(4)):
        gens = g.generator_vertices()
        for a in gens:
            for b in gens:
                if a >= b:
                    continue
                if g.is_edge(a, b):
                    w1, w2 = [a, b, a], [b, a, b]
                else:
                    w1, w2 = [a, b], [b, a]
                for k in gens:
                    p = projective(g, k)
                    if not is_isomorphic(apply_word(w1, p), apply_word(w2, p)):
                        problems.append(f"rank {g.rank}: pair ({a},{b}) on P{k}")
    rng = random.Random(20240801)
    checked = 0
    for n in range(200):
        g = graph_a(3) if n < 100 else graph_d(4)
        gens = g.generator_vertices()
        letters = [s * v for v in gens for s in (1, -1)]
        w = [rng.choice(letters) for _ in range(rng.randint(0, 8))]
        a, b = rng.sample(gens, 2)
        if not tuples_equal(canonical_tuple(g, w),
                            canonical_tuple(g, w + _relator(g, a, b))):
            problems.append(f"random pair {n}: word {w} relator ({a},{b})")
        checked += 1
    detail = f"pair images isomorphic; {checked} random relator pairs equal"
    if problems:
        detail = "; ".join(problems[:5])
    return not problems, detail


# ---------------------------------------------------------------------------
# 2. invertibility


def check_invertibility():
    """A twist followed by its inverse acts as the identity on every
    projective (both orders)."""
    g = graph_a(4)
    bad = []
    for i in g.generator_vertices():
        for j in g.generator_vertices():
            p = projective(g, j)
            for w in ([i, -i], [-i, i]):
                if not is_isomorphic(apply_word(w, p), p):
                    bad.append((w, j))
    return not bad, f"all sigma_i sigma_i^-1 P_j match P_j" if not bad else str(bad[:5])


# ---------------------------------------------------------------------------
# 3. decategorification


_FROZEN_MATRIX = {
    (1, 1): "-q^2", (1, 2): "-q", (2, 2): "1",
    (3, 2): "-q^-1", (3, 3): "-q^-2",
}


def check_decategorification():
    """Euler classes of reduced images agree entry-for-entry with the Burau
    matrix on 500 random words, and the matrix of sigma_1 sigma_3^-1 equals
    its frozen form."""
    g = graph_a(3)
    m = burau_of_word(g, [1, -3])
    got = {pos: str(val) for pos, val in m.m.items()}
    if got != _FROZEN_MATRIX:
        return False, f"matrix of [1,-3] changed: {got}"
    rng = random.Random(20240803)
    letters = [s * v for v in (1, 2, 3) for s in (1, -1)]
    for n in range(500):
        w = [rng.choice(letters) for _ in range(rng.randint(0, 10))]
        ok, report = decat_consistency(g, w)
        if not ok:
            return False, f"word {w}: {report['mismatches'][:3]}"
    return True, "500 random words consistent; frozen matrix reproduced"


# ---------------------------------------------------------------------------
# 4. hom tables


def check_hom_tables():
    """Total morphism dimensions between projectives: 2 on the diagonal
    (identity and the degree (2,1) loop), 1 across an edge, 0 otherwise."""
    bad = []
    for g in (graph_a(4), graph_d(4)):
        for i in g.generator_vertices():
            for j in g.generator_vertices():
                _, total = hom_total_dims(projective(g, i), projective(g, j))
                if i == j:
                    want = 2
                    tri = hom_trigraded_dims(projective(g, i), projective(g, j))
                    if tri != {(0, 0, 0): 1, (0, 2, 1): 1}:
                        bad.append(f"rank {g.rank} diagonal profile {i}: {tri}")
                elif g.is_edge(i, j):
                    want = 1
                else:
                    want = 0
                if total != want:
                    bad.append(f"rank {g.rank} pair ({i},{j}): {total} != {want}")
    return not bad, "A4 and D4 tables exact" if not bad else "; ".join(bad[:5])


# ---------------------------------------------------------------------------
# 5. curve dictionary


_GOLDEN_TEXT = "2 O3 O4 W+5 W+4 W-5 O4 U3 U2 E1"
_GOLDEN_GENS = [(2, 0, 0, 0), (3, 1, -1, 0), (4, 2, -2, 0), (4, 3, -4, -1),
                (4, 4, -6, -2), (4, 3, -4, -1), (3, 2, -3, -1), (2, 3, -4, -2),
                (1, 4, -5, -3)]
_GOLDEN_ARROWS = [(1, 0), (2, 1), (3, 2), (4, 3), (4, 5), (5, 6), (7, 6), (8, 7)]

CURVE_CATALOG = [
    (2, "1 O2 W+3 E2"), (2, "1 U2 W+3 E2"), (2, "1 O2 E3"), (2, "1 U2 E3"),
    (2, "3 W-2 W+3 E2"), (2, "1 O2 W+3 U2 E1"), (2, "1 U2 W-3 O2 E1"),
    (3, "2 O3 W+4 U3 U2 E1"), (3, "1 O2 O3 E4"), (3, "2 W-1 W+2 W+1 E2"),
    (3, "1 U2 U3 W-4 O3 E2"), (3, "1 U2 U3 W+4 U3 E2"), (3, "4 W-3 W+4 E3"),
    (4, _GOLDEN_TEXT), (4, "1 O2 U3 O4 W+5 U4 E3"),
]


def check_curve_dictionary():
    """The spiral-with-three-wraps itinerary translates to its known
    9-generator complex, and geometric intersection numbers with the
    standard arcs reproduce morphism dimensions across the catalog."""
    c = curve_to_complex(graph_a(4), _GOLDEN_TEXT)
    gens = [(l.v, l.k, l.l, l.m) for l in c.gens]
    if gens != _GOLDEN_GENS:
        return False, f"golden generators changed: {gens}"
    if sorted(c.diff.keys()) != sorted(_GOLDEN_ARROWS):
        return False, f"golden arrows changed: {sorted(c.diff.keys())}"
    rows = 0
    for n, text in CURVE_CATALOG:
        g = graph_a(n)
        cc = curve_to_complex(g, text)
        errs = validate(cc)
        if errs:
            return False, f"{text!r}: invalid complex {errs[:2]}"
        for arc in range(1, n + 1):
            law = crossings_with_standard_arc(g, text, arc)
            _, t1 = hom_total_dims(cc, projective(g, arc))
            _, t2 = hom_total_dims(projective(g, arc), cc)
            if not (law["total"] == t1 == t2):
                return False, f"{text!r} arc {arc}: law {law['total']} vs hom {t1}/{t2}"
            rows += 1
    return True, f"golden complex exact; intersection law on {rows} catalog rows"


# ---------------------------------------------------------------------------
# 6. two-column faithfulness


def check_two_column():
    """Reduced images of projectives in the two-vertex graph span at most
    two dual grid columns (the dual weight normalized against homological
    degree), so no Grothendieck cancellation is possible."""
    g = graph_a(2)
    rng = random.Random(20240806)
    letters = [1, -1, 2, -2]
    for n in range(200):
        w = [rng.choice(letters) for _ in range(rng.randint(0, 10))]
        for i in (1, 2):
            c = apply_word(w, projective(g, i))
            layers = {lab.m + lab.k for lab in c.gens}
            if len(layers) > 2:
                return False, f"word {w} on P{i}: {len(layers)} dual columns"
            wit = cancellation_witness(c)
            if wit is not None:
                return False, f"word {w} on P{i}: witness {wit}"
    return True, "200 random images stay within two dual columns, no witnesses"


# ---------------------------------------------------------------------------
# 7. grothendieck cancellation


CANCELLATION_WORD = [1, -2, -1] * 5 + [3, 3, -2, 1, -3, -3, -2]


def check_grothendieck_cancellation():
    """The 22-letter spiral word on P1 reduces to 19 generators of which
    exactly one pair cancels in the Grothendieck group."""
    g = graph_a(3)
    c = apply_word(CANCELLATION_WORD, projective(g, 1))
    wit = cancellation_witness(c)
    if wit is None:
        return False, f"no witness; {len(c.gens)} generators"
    want = {"vertex": 2, "weight": -5, "generators": 2, "euler": 0}
    if wit != want:
        return False, f"witness moved: {wit}"
    return True, f"{len(c.gens)} generators, cancelling pair at vertex 2 weight -5"


# ---------------------------------------------------------------------------
# 8. dual generators as spherical twists


def check_dual_generators():
    """For every positive root, twisting about the root object agrees with
    the conjugate braid word on every projective."""
    g = graph_a(3)
    bad = []
    for root in positive_roots(g):
        support = [n + 1 for n, coef in enumerate(root) if coef]
        i, j = min(support), max(support)
        word = dual_generator(g, i, j - i)
        xobj = dual_root_object(g, root)
        for k in g.generator_vertices():
            a = apply_word(word, projective(g, k))
            b = spherical_twist(xobj, projective(g, k))
            if not is_isomorphic(a, b):
                bad.append((root, k))
    return not bad, "6 roots x 3 projectives agree" if not bad else str(bad)


# ---------------------------------------------------------------------------
# 9. spread equals word length


_SPOT_WORDS = [
    [1], [2], [3], [-1], [-2], [1, 2], [2, 3], [1, 3], [1, -3], [2, 2],
    [1, 2, -1], [3, -2, 1], [1, 2, 3], [-1, -2], [2, -3], [3, 3], [1, 1],
    [-2, 1], [3, 2, 1], [2, -1, 3],
]


def check_spread():
    """Spread equals Cayley-graph word length: exhaustively over the dual
    ball of radius 4 in the two-vertex graph, and on 20 three-vertex spot
    checks in both gradings."""
    g2 = graph_a(2)
    ball = group_ball(g2, "dual", 4)
    depths = collections.Counter()
    for word, _tuple, depth in ball:
        sp = spread(g2, word, "dual")
        if sp != depth:
            return False, f"dual ball: word {word} spread {sp} != depth {depth}"
        depths[depth] += 1
    if len(ball) != 267:
        return False, f"dual ball size changed: {len(ball)}"
    g3 = graph_a(3)
    for w in _SPOT_WORDS:
        for grading in ("classical", "dual"):
            sp = spread(g3, w, grading)
            wl = word_length_bfs(g3, w, grading, bound=sp + 1)
            if wl != sp:
                return False, f"spot {w} {grading}: spread {sp} vs length {wl}"
    sizes = dict(sorted(depths.items()))
    return True, f"267 elements exhaustive (ball sizes {sizes}); 20 spots x 2 gradings"


# ---------------------------------------------------------------------------
# 10. interval factorization


def check_interval_factorization():
    """Every element of the dual interval factors as a left quotient of two
    permutation-interval elements, with explicit certificates."""
    ok, certs = digne_gobet_check(graph_a(3))
    if len(certs) != 14:
        return False, f"dual interval size {len(certs)} != 14"
    missing = [c["dual_word"] for c in certs if c["certificate"] is None]
    if missing or not ok:
        return False, f"uncertified elements: {missing}"
    return True, "14 dual-interval elements certified as a * b^-1"


# ---------------------------------------------------------------------------
# 11. Dehornoy sign


def _flip(sign):
    return {"positive": "negative", "negative": "positive", "zero": "zero"}[sign]


def check_dehornoy():
    """sigma_1 sigma_2^-1 is Dehornoy-positive; the sign is antisymmetric
    under inversion and vanishes exactly on trivial elements."""
    g2, g3 = graph_a(2), graph_a(3)
    if dehornoy_sign(g2, [1, -2]) != "positive":
        return False, f"[1,-2] sign {dehornoy_sign(g2, [1, -2])}"
    rng = random.Random(20240811)
    for n in range(100):
        g = g2 if n < 50 else g3
        gens = g.generator_vertices()
        letters = [s * v for v in gens for s in (1, -1)]
        w = [rng.choice(letters) for _ in range(rng.randint(0, 8))]
        s = dehornoy_sign(g, w)
        if dehornoy_sign(g, list(inverse_word(w))) != _flip(s):
            return False, f"antisymmetry fails on {w}"
        trivial = tuples_equal(canonical_tuple(g, w), canonical_tuple(g, []))
        if (s == "zero") != trivial:
            return False, f"zero/trivial mismatch on {w}: sign {s}"
    return True, "positivity, antisymmetry and zero-locus on 100 random words"


# ---------------------------------------------------------------------------
# 12. automaton suite


def _coherence(flavour, alphabet, starts):
    words, layer = [[]], [[]]
    for _ in range(3):
        layer = [w + [letter] for w in layer for letter in alphabet]
        words += layer
    buckets = {}
    for w in words:
        t = canonical_tuple(graph_a(2), expand_word(w))
        key = tuple_invariant_key(t)
        for old_t, members in buckets.setdefault(key, []):
            if tuples_equal(t, old_t):
                members.append(w)
                break
        else:
            buckets[key].append((t, [w]))
    for groups in buckets.values():
        for _t, members in groups:
            for start in starts:
                finals = set()
                for w in members:
                    accepted, result = recognize(w, flavour, start)
                    if accepted:
                        finals.update(result)
                if len(finals) > 1:
                    return f"{flavour} start {start}: words {members[:3]} land in {sorted(finals)}"
    return None


def _soundness_pool(rng, per_label=50, max_tries=6000):
    stables = stable_objects()
    pool = {key: [] for key in STATE_SETS if key != "M"}
    labels = {key: STATE_SETS[key] for key in pool}
    tries = 0
    while tries < max_tries and any(len(v) < per_label for v in pool.values()):
        tries += 1
        w = [rng.choice(EXTENDED_ALPHABET) for _ in range(rng.randint(1, 5))]
        obj = apply_word(expand_word(w), stables[rng.choice(("P1", "P2", "X"))])
        sup = hn_support(obj)
        for key, label in labels.items():
            if sup == label and len(pool[key]) < per_label:
                pool[key].append(obj)
    return pool


def _transition_soundness(pool):
    for flavour, table in (("basic", BASIC_TRANSITIONS),
                           ("extended", EXTENDED_TRANSITIONS)):
        for (state, letter), target in table.items():
            if state == "M":
                continue
            step = expand_letter(letter)
            for obj in pool[state]:
                image = apply_word(step, obj)
                if hn_support(image) != STATE_SETS[target]:
                    return (f"{flavour} edge {state}-{letter}->{target}: image "
                            f"support {sorted(hn_support(image))}")
    return None


def _reversal_closure():
    words = [[]]
    checked = 0
    for _ in range(6):
        words = [w + [l] for w in words for l in EXTENDED_ALPHABET]
        for w in words:
            rev = [-x for x in reversed(w)]
            if recognize(w, "extended")[0] != recognize(rev, "extended")[0]:
                return None, f"reversal mismatch at {w}"
            checked += 1
    return checked, None


def _loop_separation():
    """For powers u = x^p, v = y^q of loop letters at the same state, the
    word u v^-1 is never recognized from that state: the automaton cannot
    undo a loop through another loop's inverse.  The base state matters --
    the same words ARE recognized from other states.  At extended state A
    the loops are 2 and -1, so the quotient [2, 1] is rejected from A, yet
    from the natural start M it walks M -> C -> A and is accepted."""
    for flavour, table in (("basic", BASIC_TRANSITIONS),
                           ("extended", EXTENDED_TRANSITIONS)):
        loops = {}
        for (state, letter), target in table.items():
            if state == target:
                loops.setdefault(state, []).append(letter)
        for state, letters in sorted(loops.items()):
            for x in letters:
                for y in letters:
                    for p in (1, 2, 3):
                        for q in (1, 2, 3):
                            if (x, p) == (y, q):
                                continue
                            word = [x] * p + [-y] * q
                            if recognize(word, flavour, state)[0]:
                                return (f"{flavour} state {state}: loop "
                                        f"word {x}^{p} {y}^-{q} recognized")
    return None


def check_automaton():
    """Coherence, edge soundness on 50 objects per edge, reversal closure
    to length 6, loop-quotient separation, and 500 certified normal forms."""
    for flavour, alphabet, starts in (
            ("basic", BASIC_ALPHABET, ("A", "B", "C")),
            ("extended", EXTENDED_ALPHABET, ("A", "B", "C", "M"))):
        problem = _coherence(flavour, alphabet, starts)
        if problem:
            return False, problem
    rng = random.Random(20240812)
    pool = _soundness_pool(rng)
    short = {k: len(v) for k, v in pool.items() if len(v) < 50}
    if short:
        return False, f"could not sample 50 objects per label: {short}"
    problem = _transition_soundness(pool)
    if problem:
        return False, problem
    checked, problem = _reversal_closure()
    if problem:
        return False, problem
    problem = _loop_separation()
    if problem:
        return False, problem
    for n in range(500):
        w = [rng.choice((1, -1, 2, -2, 3, -3, 4, -4))
             for _ in range(rng.randint(0, 12))]
        if not nf_certified(w):
            return False, f"normal form not certified for {w}"
    return True, (f"coherence both flavours; 24 edges x 50 objects; "
                  f"{checked} reversal words; loop quotients unrecognized; "
                  f"500 normal forms certified")


# ---------------------------------------------------------------------------
# 13. separating walls


def check_walls():
    """Wall counts: 3 at radius 0 for the adjacent pair, stabilization over
    radii 2..4, and at least n walls for recognized words of length n.

    The stabilization clause fails honestly: the slot-resolved wall count
    (the only reading that yields 3 at radius 0) keeps growing with the
    radius because twist powers transport the slots to supports that differ
    forever.  The measured counts are frozen in the test suite.
    """
    r0 = count_separating_walls([], [-2], 0)
    stab = {r: count_separating_walls([], [-2], r) for r in (2, 3, 4)}
    beta = [2, 1, 3, 2, 1, 3]
    growth = {}
    for n in (2, 4, 6):
        word = beta[-n:]
        accepted, _ = recognize(word, "extended")
        count = count_separating_walls([], word, n)
        growth[n] = (accepted, count)
    ok_r0 = r0 == 3
    ok_stab = len(set(stab.values())) == 1
    ok_beta = all(acc and count >= n for n, (acc, count) in growth.items())
    ok = ok_r0 and ok_stab and ok_beta
    detail = (f"radius 0: {r0} (want 3); radii 2..4: {stab} "
              f"({'stable' if ok_stab else 'diverging — known failure'}); "
              f"recognized growth: {growth}")
    return ok, detail


# ---------------------------------------------------------------------------
# registry and runner


REGISTRY = [
    (1, "braid relations", check_braid_relations),
    (2, "invertibility", check_invertibility),
    (3, "decategorification", check_decategorification),
    (4, "hom tables", check_hom_tables),
    (5, "curve dictionary", check_curve_dictionary),
    (6, "two-column faithfulness", check_two_column),
    (7, "grothendieck cancellation", check_grothendieck_cancellation),
    (8, "dual generator twists", check_dual_generators),
    (9, "spread vs word length", check_spread),
    (10, "interval factorization", check_interval_factorization),
    (11, "dehornoy sign", check_dehornoy),
    (12, "automaton suite", check_automaton),
    (13, "separating walls", check_walls),
]


def run_one(number):
    for num, name, fn in REGISTRY:
        if num == number:
            start = time.monotonic()
            ok, detail = fn()
            return {"number": num, "name": name, "ok": ok,
                    "seconds": time.monotonic() - start, "detail": detail,
                    "expected_failure": num in EXPECTED_FAILURES}
    raise ValueError(f"no check number {number}")


def run_all(numbers=None):
    selected = [num for num, _, _ in REGISTRY] if numbers is None else list(numbers)
    return [run_one(num) for num in selected]


def format_record(record) -> str:
    mark = "ok  " if record["ok"] else "FAIL"
    line = (f"{mark} {record['number']:2d} {record['name']}"
            f" ({record['seconds']:.1f}s): {record['detail']}")
    if not record["ok"] and record["expected_failure"]:
        line += " [known failure]"
    return line
