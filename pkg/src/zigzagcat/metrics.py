"""Word-metric quantities read off from the graded support of complexes.

Two gradings each induce a "layer" function on generators:

    classical: layer = l + k   (weight plus homological degree)
    dual:      layer = m       (the second internal grading)

For a group element g and the family of linear generators of the matching
flavour, the spread of g is (how far the layers of g.X stick out below 0)
+ (how far above) — the action on the whole family is scanned and the
extremes clamped at zero, so the identity comes out 0.  Spread equals word
length over the Garside interval of the same flavour, which
``word_length_bfs`` verifies independently by breadth-first search.

The linear generator families:

    classical (linear type A only): complexes of monotone curves, one per
    pair of punctures p < q and per choice of over/under at each puncture
    passed between them.

    dual (any simply laced graph): one spherical object per positive root;
    for type A these are the interval strings P_i -> P_{i+1}<-1>[1] -> ...;
    for D and E they are rigid quiver representations with the root as
    dimension vector, found by seeded search and certified spherical.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .complexes import Complex, GenLabel, hom_trigraded_dims, invariant_key, \
    is_isomorphic, projective, validate
from .coxeter import CoxeterGraph, free_reduce, inverse_word, validate_word, \
    dual_generator, special_word
from .curves import curve_to_complex
from .action import apply_word, apply_letter, canonical_tuple, tuples_equal, \
    is_spherical

__all__ = [
    "layer_profile",
    "layer_range",
    "classical_generators",
    "positive_roots",
    "dual_root_object",
    "dual_generators",
    "spread",
    "word_length_bfs",
    "enumerate_interval",
    "digne_gobet_check",
]

_GRADINGS = ("classical", "dual")


def _layer(lab: GenLabel, grading: str) -> int:
    if grading == "classical":
        return lab.l + lab.k
    if grading == "dual":
        return lab.m
    raise ValueError(f"unknown grading {grading!r}; use 'classical' or 'dual'")


def layer_profile(c: Complex, grading: str) -> dict[int, list[GenLabel]]:
    """Generators of a complex bucketed by layer."""
    out: dict[int, list[GenLabel]] = {}
    for lab in c.gens:
        out.setdefault(_layer(lab, grading), []).append(lab)
    return {k: out[k] for k in sorted(out)}


def layer_range(c: Complex, grading: str) -> tuple[int, int]:
    layers = [_layer(lab, grading) for lab in c.gens]
    if not layers:
        raise ValueError("the zero complex has no layers")
    return min(layers), max(layers)


# ---------------------------------------------------------------------------
# linear generator families


def classical_generators(g: CoxeterGraph) -> list[Complex]:
    """Monotone-curve complexes: every curve descending from puncture p to
    puncture q > p with an arbitrary over/under choice at each puncture
    strictly between."""
    if not g.is_linear_a:
        raise ValueError("classical linear generators need a linear type A graph")
    n = g.rank
    out = []
    for p in range(1, n + 2):
        for q in range(p + 1, n + 2):
            mids = range(p + 1, q)
            for pattern in itertools.product("OU", repeat=q - p - 1):
                tokens = [str(p)]
                tokens += [f"{c}{m}" for c, m in zip(pattern, mids)]
                tokens.append(f"E{q}")
                out.append(curve_to_complex(g, " ".join(tokens)))
    return out


def positive_roots(g: CoxeterGraph) -> list[tuple[int, ...]]:
    """Positive roots of the simply laced root system, as coefficient
    vectors over the graph vertices, by closing the simple roots under
    reflections."""
    verts = g.generator_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    simples = []
    for v in verts:
        e = [0] * n
        e[idx[v]] = 1
        simples.append(tuple(e))
    # Cartan pairing <alpha, alpha_v> = 2 a_v - sum of neighbours' coords.
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for root in frontier:
            for v in verts:
                pairing = 2 * root[idx[v]] - sum(
                    root[idx[u]] for u in g.neighbors(v))
                refl = list(root)
                refl[idx[v]] -= pairing
                t = tuple(refl)
                if all(x >= 0 for x in t) and any(x > 0 for x in t) \
                        and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), r))


def _interval_string(g: CoxeterGraph, i: int, j: int) -> Complex:
    """Type A root object for the root alpha_i + ... + alpha_j."""
    gens = [GenLabel(v, v - i, i - v, 0) for v in range(i, j + 1)]
    diff = {}
    for t in range(j - i):
        diff[(t + 1, t)] = (("a", i + t, i + t + 1), Fraction(1))
    return Complex(g, gens, diff)


def dual_root_object(g: CoxeterGraph, root: tuple[int, ...]) -> Complex:
    """Spherical object with the given positive root as its vertexwise
    generator count.

    Type A roots are intervals and get the explicit string complex. On
    branched graphs the object is built as a quiver representation shaped
    like the root: ``root[v]`` generators at vertex v in homological degree
    = distance from the support's chosen source, differentials given by
    small integer matrices chosen by seeded search until the object is
    spherical.  Deterministic: the seed sequence is fixed.
    """
    verts = g.generator_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    support = [v for v in verts if root[idx[v]] > 0]
    if g.is_linear_a:
        lo, hi = min(support), max(support)
        assert all(root[idx[v]] == 1 for v in support) and \
            support == list(range(lo, hi + 1)), "not a type A root"
        return _interval_string(g, lo, hi)
    # Depth-first layering of the support from its smallest vertex.
    base = support[0]
    depth = {base: 0}
    order = [base]
    frontier = [base]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.neighbors(v):
                if u in support and u not in depth:
                    depth[u] = depth[v] + 1
                    order.append(u)
                    nxt.append(u)
        frontier = nxt
    assert set(order) == set(support), "root support is disconnected"

    tree_edges = [(s, t) for (s, t) in g.edges
                  if s in support and t in support]

    def build(coeffs: dict[tuple[int, int, int, int], int]) -> Complex:
        gens: list[GenLabel] = []
        slots: dict[int, list[int]] = {}
        for v in order:
            d = depth[v]
            slots[v] = []
            for _ in range(root[idx[v]]):
                slots[v].append(len(gens))
                gens.append(GenLabel(v, d, -d, 0))
        diff = {}
        for (s, t) in tree_edges:
            lo_v, hi_v = (s, t) if depth[s] < depth[t] else (t, s)
            arrow = ("a", lo_v, hi_v)
            for a, src in enumerate(slots[lo_v]):
                for b, tgt in enumerate(slots[hi_v]):
                    coef = coeffs.get((lo_v, hi_v, a, b), 0)
                    if coef:
                        diff[(tgt, src)] = (arrow, Fraction(coef))
        return Complex(g, gens, diff)

    # Seeded deterministic search over small integer matrices.
    import random
    for seed in range(64):
        rng = random.Random(f"{root}/{seed}")
        coeffs = {}
        for (s, t) in tree_edges:
            lo_v, hi_v = (s, t) if depth[s] < depth[t] else (t, s)
            for a in range(root[idx[lo_v]]):
                for b in range(root[idx[hi_v]]):
                    coeffs[(lo_v, hi_v, a, b)] = rng.randint(1, 5) if seed else 1
        cand = build(coeffs)
        if validate(cand) == [] and is_spherical(cand):
            return cand
    raise ValueError(f"no spherical representative found for root {root}")


def dual_generators(g: CoxeterGraph) -> list[Complex]:
    """One spherical root object per positive root."""
    return [dual_root_object(g, r) for r in positive_roots(g)]


def _generator_family(g: CoxeterGraph, grading: str) -> list[Complex]:
    if grading == "classical":
        return classical_generators(g)
    if grading == "dual":
        return dual_generators(g)
    raise ValueError(f"unknown grading {grading!r}")


# ---------------------------------------------------------------------------
# spread and honest word length


def spread(g: CoxeterGraph, word, grading: str = "classical") -> int:
    """Reach of the word's action below layer 0 plus reach above.

    The reach is measured over the images of the whole linear generator
    family of the given flavour; each side clamps at zero, so the identity
    has spread 0 and a single twist has spread 1.  On type A this equals
    the word length in the Garside interval of the matching flavour (the
    permutation words classically, the noncrossing-partition words dually),
    which ``word_length_bfs`` recomputes independently.
    """
    letters = validate_word(g, word)
    family = _generator_family(g, grading)
    lo = hi = 0
    for x in family:
        image = apply_word(letters, x)
        a, b = layer_range(image, grading)
        lo = min(lo, a)
        hi = max(hi, b)
    return -lo + hi


def _word_generators(g: CoxeterGraph, grading: str) -> list[list[int]]:
    """Generating set of the group matching a grading's metric: the whole
    Garside interval of that flavour minus the identity.  Classically that
    is every nontrivial permutation below the half twist; dually every
    nontrivial noncrossing-partition element below the Coxeter element
    (which is itself included)."""
    if grading not in _GRADINGS:
        raise ValueError(f"unknown grading {grading!r}")
    return [w for w in enumerate_interval(g, grading) if w]


def word_length_bfs(g: CoxeterGraph, word, grading: str = "classical",
                    bound: int = 6):
    """Distance from the identity in the Cayley graph of the grading's
    generating set, by breadth-first search on canonical tuples.  Returns
    None when the element is farther than ``bound``."""
    letters = validate_word(g, word)
    target = canonical_tuple(g, letters)
    dist = _bfs_distances(g, grading, bound, targets=[target])[0]
    return dist


def group_ball(g: CoxeterGraph, grading: str, radius: int):
    """Every distinct group element within ``radius`` of the identity in the
    grading's generating set, as (witness word, canonical tuple, distance).
    """
    from .action import tuple_invariant_key

    gens = _word_generators(g, grading)
    steps = [list(w) for w in gens] + [list(inverse_word(w)) for w in gens]
    identity = canonical_tuple(g, [])
    out = [([], identity, 0)]
    seen: dict[tuple, list[tuple]] = {tuple_invariant_key(identity): [identity]}
    frontier = [([], identity)]
    for depth in range(1, radius + 1):
        nxt = []
        for word, t in frontier:
            for step in steps:
                child = tuple(apply_word(step, comp) for comp in t)
                key = tuple_invariant_key(child)
                bucket = seen.setdefault(key, [])
                if any(tuples_equal(child, old) for old in bucket):
                    continue
                bucket.append(child)
                cword = step + word
                out.append((cword, child, depth))
                nxt.append((cword, child))
        frontier = nxt
    return out


def _bfs_distances(g: CoxeterGraph, grading: str, bound: int, targets):
    """BFS over the group, returning the distance of each target tuple
    (None when not reached within ``bound``).

    States are canonical tuples bucketed by invariant key; expensive
    isomorphism checks only run inside a bucket.
    """
    gens = _word_generators(g, grading)
    steps = gens + [inverse_word(w) for w in gens]
    from .action import tuple_invariant_key

    identity = canonical_tuple(g, [])
    seen: dict[tuple, list[tuple]] = {tuple_invariant_key(identity): [identity]}
    found: list = [None] * len(targets)

    def check_targets(t, depth):
        for n, tgt in enumerate(targets):
            if found[n] is None and tuples_equal(t, tgt):
                found[n] = depth

    check_targets(identity, 0)
    frontier = [identity]
    depth = 0
    while frontier and depth < bound and any(f is None for f in found):
        depth += 1
        nxt = []
        for t in frontier:
            for step in steps:
                child = tuple(apply_word(step, comp) for comp in t)
                key = tuple_invariant_key(child)
                bucket = seen.setdefault(key, [])
                if any(tuples_equal(child, old) for old in bucket):
                    continue
                bucket.append(child)
                nxt.append(child)
                check_targets(child, depth)
        frontier = nxt
    return found


# ---------------------------------------------------------------------------
# interval enumeration and the lattice cross-check


def _permutations_words(n: int):
    """Reduced words, one per permutation of n+1 strands, as positive lifts."""
    import itertools as it
    words = {}
    # BFS over the symmetric group by right multiplication keeps words reduced.
    start = tuple(range(1, n + 2))
    words[start] = []
    frontier = [start]
    while frontier:
        nxt = []
        for perm in frontier:
            for i in range(1, n + 1):
                child = list(perm)
                child[i - 1], child[i] = child[i], child[i - 1]
                child = tuple(child)
                if child not in words:
                    words[child] = words[perm] + [i]
                    nxt.append(child)
        frontier = nxt
    return list(words.values())


def _noncrossing_partitions(n: int):
    """All noncrossing partitions of {1..n}: the block containing the
    smallest element is chosen, the leftover elements fall into the gaps
    between its members and are partitioned there independently."""

    def rec(elems):
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(rest, r):
                block = (first,) + combo
                bounds = list(block) + [n + 1]
                chosen = set(combo)
                pieces = [[e for e in rest if e not in chosen and lo < e < hi]
                          for lo, hi in zip(bounds, bounds[1:])]
                for tails in itertools.product(*(list(rec(p)) for p in pieces)):
                    part = [list(block)]
                    for sub in tails:
                        part.extend(sub)
                    yield part

    return list(rec(list(range(1, n + 1))))


def enumerate_interval(g: CoxeterGraph, flavour: str) -> list[list[int]]:
    """Words for every group element in the weak interval below the half
    twist ("classical") or below the rotation element ("dual")."""
    if not g.is_linear_a:
        raise ValueError("interval enumeration implemented for linear type A")
    n = g.rank
    if flavour == "classical":
        return _permutations_words(n)
    if flavour == "dual":
        out = []
        for part in _noncrossing_partitions(n + 1):
            word: list[int] = []
            for block in part:
                block = sorted(block)
                for a, b in zip(block, block[1:]):
                    word.extend(dual_generator(g, a, b - 1 - a))
            out.append(word)
        return out
    raise ValueError(f"unknown flavour {flavour!r}; use 'classical' or 'dual'")


def digne_gobet_check(g: CoxeterGraph, max_report: int = 200):
    """Every element of the dual interval must occur among the left
    quotients a * b^{-1} of classical interval elements; returns
    (ok, certificates) with one matched pair per dual element."""
    from .action import tuple_invariant_key

    classical = enumerate_interval(g, "classical")
    dual = enumerate_interval(g, "dual")
    # Bucket the quotients by invariant key, keep one witness pair per
    # distinct element.
    buckets: dict[tuple, list[tuple[list[int], list[int], tuple, tuple]]] = {}
    for a in classical:
        for b in classical:
            w = free_reduce(tuple(a) + inverse_word(b))
            t = canonical_tuple(g, w)
            key = tuple_invariant_key(t)
            bucket = buckets.setdefault(key, [])
            if not any(tuples_equal(t, old) for _, _, _, old in bucket):
                bucket.append((a, b, w, t))
    certificates = []
    ok = True
    for dword in dual:
        t = canonical_tuple(g, dword)
        key = tuple_invariant_key(t)
        match = None
        for a, b, w, old in buckets.get(key, []):
            if tuples_equal(t, old):
                match = {"a_word": list(a), "b_word": list(b),
                         "quotient_word": list(w)}
                break
        if match is None:
            ok = False
        certificates.append({"dual_word": list(dword), "certificate": match})
        if len(certificates) >= max_report:
            break
    return ok, certificates
