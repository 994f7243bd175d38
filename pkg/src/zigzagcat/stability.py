"""Three-strand stability layer: stable objects, Harder-Narasimhan supports,
the rotating normal form on dual letters, landing automata, and wall counts.

Everything here is specific to the rank-2 linear graph.  The braid group on
three strands acts on complexes over the A2 zigzag algebra; up to shift there
are exactly three spherical objects fixed by the stability heart:

    P1, P2  the two projectives,
    X       the length-2 string P1 -> P2<-1>[1]  (the third positive root).

Words are written in *dual letters*: 1 and 2 are the simple twists, 3 is the
band twist s1 s2 s1^-1, and 4 is the rotation gamma = s1 s2; negative letters
invert.  The rotating normal form writes every group element uniquely as
gamma^n * r1 * r2 * ... with each run r_j a positive power of a dual
generator and consecutive run letters descending through the cycle
X -> 2 -> 1 -> X; uniqueness is certified in the tests, and the wall search
below leans on it for deduplication.

The landing automata are small finite-state machines over the dual letters
(read right to left) whose states name which of {P1, P2, X} can appear in the
Harder-Narasimhan filtration after acting by a recognized word.
"""

from __future__ import annotations

import os

from fractions import Fraction

from .action import apply_word, canonical_tuple, tuples_equal
from .complexes import Complex, GenLabel, frac_rank, gaussian_reduce, projective
from .coxeter import graph_a, inverse_word

__all__ = [
    "LETTER_X",
    "LETTER_GAMMA",
    "BASIC_ALPHABET",
    "EXTENDED_ALPHABET",
    "STATE_SETS",
    "BASIC_TRANSITIONS",
    "EXTENDED_TRANSITIONS",
    "expand_letter",
    "expand_word",
    "stable_objects",
    "stability_data",
    "hn_support",
    "support_union",
    "normal_form",
    "nf_expand",
    "nf_certified",
    "recognize",
    "recognition_report",
    "separating_walls",
    "count_separating_walls",
]

LETTER_X = 3
LETTER_GAMMA = 4

# the rotation gamma conjugates dual generators cyclically: s_a -> s_succ(a)
_SUCC = {3: 1, 1: 2, 2: 3}
_PRED = {1: 3, 2: 1, 3: 2}

_PLAIN = {1: (1,), 2: (2,), 3: (1, 2, -1), 4: (1, 2)}

BASIC_ALPHABET = (1, 2, 3, 4, -4)
EXTENDED_ALPHABET = (1, 2, 3, -1, -2, -3)

_SLOTS = ("P1", "P2", "X")


def expand_letter(letter: int) -> list[int]:
    """A dual letter as a word in the simple twists 1, 2 and inverses."""
    a = abs(letter)
    if letter == 0 or a > 4:
        raise ValueError(f"bad dual letter {letter!r}; use +-1, +-2, +-3, +-4")
    word = list(_PLAIN[a])
    return word if letter > 0 else list(inverse_word(word))


def expand_word(word) -> list[int]:
    out: list[int] = []
    for letter in word:
        out.extend(expand_letter(int(letter)))
    return out


# ---------------------------------------------------------------------------
# stable objects and the stability data


def stable_objects() -> dict[str, Complex]:
    """The three spherical objects of the heart, keyed P1, P2, X."""
    g = graph_a(2)
    x = Complex(
        g,
        [GenLabel(1, 0, 0, 0), GenLabel(2, 1, -1, 0)],
        {(1, 0): (("a", 1, 2), Fraction(1))},
    )
    return {"P1": projective(g, 1), "P2": projective(g, 2), "X": x}


def stability_data():
    """Central charges and phases of the three stable objects.

    Phases are exact rationals (in half-turns); charges are the complex
    numbers they are arguments of.  The ordering P2 < X < P1 is what the
    Harder-Narasimhan vanishing tests check: no degree-(0,0,0) maps from a
    strictly larger phase to a strictly smaller one.
    """
    return {
        "central_charge": {"P2": complex(1, 0), "X": complex(1, 1), "P1": complex(0, 1)},
        "phase": {"P2": Fraction(0), "X": Fraction(1, 4), "P1": Fraction(1, 2)},
    }


def hn_support(c: Complex) -> frozenset:
    """Which of P1, P2, X occur (up to shift) in a complex's filtration.

    The complex is reduced, then sliced by the second internal grading m:
    within one slice the only possible differential entries are the edge
    path from a vertex-1 generator to a vertex-2 generator, so the slice
    splits as X^r + P1^a + P2^b with r the rank of that entry matrix.
    """
    if c.graph.rank != 2 or not c.graph.is_linear_a or c.graph.based:
        raise ValueError("Harder-Narasimhan supports are computed over the "
                         "plain rank-2 linear graph only")
    c = gaussian_reduce(c)
    slices: dict[int, tuple[list[int], list[int]]] = {}
    for idx, lab in enumerate(c.gens):
        ones, twos = slices.setdefault(lab.m, ([], []))
        (ones if lab.v == 1 else twos).append(idx)
    out = set()
    for ones, twos in slices.values():
        rows = []
        for i in ones:
            row = []
            for j in twos:
                entry = c.diff.get((j, i))
                if entry is None:
                    row.append(Fraction(0))
                else:
                    path, coef = entry
                    assert path == ("a", 1, 2), path
                    row.append(coef)
            rows.append(row)
        r = frac_rank(rows) if twos else 0
        if r:
            out.add("X")
        if len(ones) - r:
            out.add("P1")
        if len(twos) - r:
            out.add("P2")
    return frozenset(out)


def support_union(word) -> frozenset:
    """Union of the supports of the images of all three stable objects."""
    plain = expand_word(word)
    out = set()
    for obj in stable_objects().values():
        out |= hn_support(apply_word(plain, obj))
    return frozenset(out)


# ---------------------------------------------------------------------------
# rotating normal form


def _pred_pow(a: int, n: int) -> int:
    for _ in range(n % 3):
        a = _PRED[a]
    return a


def normal_form(word):
    """Rotating normal form (n, runs) with runs ((letter, mult), ...).

    The element equals gamma^n times the runs read left to right; run
    letters descend through succ (each is succ of the next) and mults are
    positive.  Letters are consumed right to left; a negative dual letter
    -a enters as gamma^-1 * s_pred(a), the incoming generator slides past
    the stored gamma power by conjugation, and a prepended letter either
    extends the first run, opens a new one, or closes up with the first
    run's letter into one more gamma.
    """
    n = 0
    runs: list[list[int]] = []
    for raw in reversed(list(word)):
        letter = int(raw)
        a = abs(letter)
        if letter == 0 or a > 4:
            raise ValueError(f"bad dual letter {letter!r}; use +-1, +-2, +-3, +-4")
        if a == LETTER_GAMMA:
            n += 1 if letter > 0 else -1
            continue
        if letter > 0:
            p, delta = letter, 0
        else:
            p, delta = _PRED[a], -1
        p = _pred_pow(p, n)
        n += delta
        if runs and runs[0][0] == p:
            runs[0][1] += 1
        elif runs and runs[0][0] == _SUCC[p]:
            # s_p * s_succ(p) = gamma: one letter of the first run closes up
            n += 1
            runs[0][1] -= 1
            if runs[0][1] == 0:
                runs.pop(0)
        else:
            runs.insert(0, [p, 1])
    return n, tuple((a, m) for a, m in runs)


def nf_expand(nf) -> list[int]:
    """A normal form back as a word in the simple twists 1, 2 and inverses."""
    n, runs = nf
    word: list[int] = []
    if n >= 0:
        word.extend([1, 2] * n)
    else:
        word.extend([-2, -1] * (-n))
    for a, m in runs:
        word.extend(list(_PLAIN[a]) * m)
    return word


def nf_certified(word) -> bool:
    """Does the normal form name the same group element as the word?"""
    g = graph_a(2)
    return tuples_equal(
        canonical_tuple(g, expand_word(word)),
        canonical_tuple(g, nf_expand(normal_form(word))),
    )


# ---------------------------------------------------------------------------
# landing automata

STATE_SETS = {
    "A": frozenset({"P1", "P2"}),
    "B": frozenset({"P2", "X"}),
    "C": frozenset({"P1", "X"}),
    "M": frozenset({"P1", "P2", "X"}),
}

BASIC_TRANSITIONS = {
    ("A", 2): "A", ("B", 3): "B", ("C", 1): "C",
    ("A", 3): "B", ("B", 1): "C", ("C", 2): "A",
    ("A", 4): "B", ("B", 4): "C", ("C", 4): "A",
    ("A", -4): "C", ("B", -4): "A", ("C", -4): "B",
}

EXTENDED_TRANSITIONS = {
    ("A", 2): "A", ("A", -1): "A",
    ("B", 3): "B", ("B", -2): "B",
    ("C", 1): "C", ("C", -3): "C",
    ("A", 3): "B", ("B", 1): "C", ("C", 2): "A",
    ("B", -1): "A", ("C", -2): "B", ("A", -3): "C",
    ("M", 2): "A", ("M", -1): "A",
    ("M", 3): "B", ("M", -2): "B",
    ("M", 1): "C", ("M", -3): "C",
}


def recognition_report(word, flavour: str = "basic", start: str | None = None):
    """Run the automaton on a word (right to left), one run per start state.

    Returns {"accepted", "final_states", "runs"} where each run records its
    start, the state path actually walked, and failed_at (1-based position
    from the right) when it died.
    """
    if flavour == "basic":
        table = BASIC_TRANSITIONS
        starts = [start] if start else ["A", "B", "C"]
    elif flavour == "extended":
        table = EXTENDED_TRANSITIONS
        starts = [start] if start else ["M"]
    else:
        raise ValueError(f"unknown flavour {flavour!r}; use 'basic' or 'extended'")
    for s in starts:
        if s not in STATE_SETS:
            raise ValueError(f"unknown state {s!r}")
    letters = [int(x) for x in word]
    runs = []
    for s in starts:
        state, path, failed = s, [s], None
        for pos, letter in enumerate(reversed(letters), start=1):
            nxt = table.get((state, letter))
            if nxt is None:
                failed = pos
                break
            state = nxt
            path.append(state)
        runs.append({"start": s, "path": path, "failed_at": failed})
    finals = sorted({r["path"][-1] for r in runs if r["failed_at"] is None})
    return {"accepted": bool(finals), "final_states": tuple(finals), "runs": runs}


def recognize(word, flavour: str = "basic", start: str | None = None):
    """(True, final states) when some run survives, else (False, position):
    the 1-based position from the right where the furthest run died."""
    report = recognition_report(word, flavour, start)
    if report["accepted"]:
        return True, report["final_states"]
    return False, max(r["failed_at"] for r in report["runs"])


# ---------------------------------------------------------------------------
# walls


def _thread_budget(threads: int | None) -> int:
    if threads is None:
        raw = os.environ.get("ZIGZAGCAT_THREADS", "1")
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(
                f"ZIGZAGCAT_THREADS must be a positive integer, got {raw!r}"
            ) from None
    if threads < 1:
        raise ValueError("thread budget must be >= 1")
    return threads


def _transport_child(task):
    """One unit of per-mu work: pull all six tracked objects back along one
    letter and record their supports."""
    mu, back, objs = task
    child = {key: apply_word(back, c) for key, c in objs.items()}
    return mu, child, {key: hn_support(c) for key, c in child.items()}


def separating_walls(x_word, y_word, radius: int, threads: int | None = None):
    """Walls (mu, S, slot) within the given radius telling x and y apart.

    mu runs over the ball of the given radius in the six dual-generator
    letters, deduplicated by normal form; S and slot over the stable
    objects.  The wall separates when S lies in the Harder-Narasimhan
    support of exactly one of the transported slot objects
    mu^-1 x (slot object), mu^-1 y (slot object).  Returned as dicts with a
    witness word for mu.

    The count is slot-resolved: each component of the base triple is
    tracked against its own image.  That is what makes three walls visible
    already at radius 0 for adjacent points; the price is that the count
    keeps growing with the radius (twist powers transport one slot to a
    fixed support and the other to a different fixed support forever), so
    callers should treat the radius as an explicit budget, not expect a
    limit.

    threads=None reads ZIGZAGCAT_THREADS (default 1).  A budget above 1
    fans the per-mu transport work over worker processes; the wall list is
    identical whatever the budget, in breadth-first order.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    workers = _thread_budget(threads)
    base = stable_objects()
    transported = {}
    for side, w in (("x", list(x_word)), ("y", list(y_word))):
        plain = expand_word(w)
        for slot in _SLOTS:
            transported[side, slot] = apply_word(plain, base[slot])

    walls = []
    seen = {normal_form([])}
    supports = {key: hn_support(c) for key, c in transported.items()}
    frontier = [([], transported, supports)]
    for depth in range(radius + 1):
        tasks = []
        for mu, objs, sup in frontier:
            for sep in _SLOTS:
                for slot in _SLOTS:
                    if (sep in sup["x", slot]) != (sep in sup["y", slot]):
                        walls.append({"mu": list(mu), "separator": sep, "slot": slot})
            if depth == radius:
                continue
            for step in (1, 2, 3, -1, -2, -3):
                child_mu = mu + [step]
                key = normal_form(child_mu)
                if key in seen:
                    continue
                seen.add(key)
                tasks.append((child_mu, expand_letter(-step), objs))
        if workers > 1 and len(tasks) > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
                frontier = list(pool.map(_transport_child, tasks))
        else:
            frontier = [_transport_child(t) for t in tasks]
    return walls


def count_separating_walls(x_word, y_word, radius: int,
                           threads: int | None = None) -> int:
    return len(separating_walls(x_word, y_word, radius, threads=threads))
