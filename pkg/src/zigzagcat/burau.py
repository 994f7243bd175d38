"""Burau representation over Laurent polynomials, and the decategorification
bridge from complexes back to it.

Matrices act on the free module with one basis vector per graph vertex. The
matrix of a word is the product of letter matrices with the rightmost letter
applied first, matching ``apply_word``.  Columns hold images: column ``j`` of
``burau_generator(g, i)`` is the image of the basis vector at vertex ``j``.

``euler_class`` collapses a complex to its signed Poincare vector in the
classical grading; ``decat_consistency`` checks that the triangle

    word -> complex -> euler class   ==   word -> matrix -> euler class

commutes, which exercises every sign and shift in the categorical action.
"""

from __future__ import annotations

from .complexes import Complex
from .coxeter import CoxeterGraph, validate_word
from .laurent import Laurent

__all__ = [
    "LaurentMatrix",
    "burau_generator",
    "burau_of_word",
    "gram_matrix",
    "squier_check",
    "euler_class",
    "decat_consistency",
    "cancellation_witness",
]


class LaurentMatrix:
    """Dense square matrix of Laurent polynomials, indexed by graph vertices."""

    __slots__ = ("vertices", "m")

    def __init__(self, vertices, entries):
        self.vertices = tuple(vertices)
        self.m = {k: v for k, v in entries.items() if v.c}

    @classmethod
    def identity(cls, vertices):
        one = Laurent.one()
        return cls(vertices, {(v, v): one for v in vertices})

    def __getitem__(self, key):
        return self.m.get(key, Laurent.zero())

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.vertices == other.vertices and self.m == other.m

    def __hash__(self):
        return hash((self.vertices, tuple(sorted((k, tuple(sorted(v.c.items()))) for k, v in self.m.items()))))

    def __mul__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if self.vertices != other.vertices:
            raise ValueError("matrix size mismatch")
        out: dict[tuple[int, int], Laurent] = {}
        # Sparse product: group the right factor's entries by row, then each
        # entry (r, k) of self only meets other's row k.
        by_row: dict[int, list[tuple[int, Laurent]]] = {}
        for (r, c), val in other.m.items():
            by_row.setdefault(r, []).append((c, val))
        for (r, k), a in self.m.items():
            for c, b in by_row.get(k, ()):
                key = (r, c)
                cur = out.get(key)
                out[key] = a * b if cur is None else cur + a * b
        return LaurentMatrix(self.vertices, out)

    def transpose(self):
        return LaurentMatrix(self.vertices, {(c, r): v for (r, c), v in self.m.items()})

    def bar(self):
        """Entrywise q -> q^{-1}."""
        return LaurentMatrix(self.vertices, {k: v.bar() for k, v in self.m.items()})

    def apply(self, vec: dict[int, Laurent]) -> dict[int, Laurent]:
        out: dict[int, Laurent] = {}
        for (r, c), a in self.m.items():
            if c in vec:
                term = a * vec[c]
                cur = out.get(r)
                tot = term if cur is None else cur + term
                if tot.c:
                    out[r] = tot
                elif r in out:
                    del out[r]
        return {r: v for r, v in out.items() if v.c}

    def det(self) -> Laurent:
        """Determinant by minor expansion with memoization on column subsets.

        Fine for the graph ranks this engine targets; exact throughout.
        """
        verts = self.vertices
        n = len(verts)
        idx = {v: i for i, v in enumerate(verts)}
        rows = [[self[(r, c)] for c in verts] for r in verts]
        from functools import lru_cache

        @lru_cache(maxsize=None)
        def minor(row: int, colmask: int) -> Laurent:
            if row == n:
                return Laurent.one()
            total = Laurent.zero()
            sign = 1
            for c in range(n):
                bit = 1 << c
                if not colmask & bit:
                    continue
                a = rows[row][c]
                if a.c:
                    term = a * minor(row + 1, colmask & ~bit)
                    total = total + term if sign > 0 else total - term
                sign = -sign
            return total

        return minor(0, (1 << n) - 1)

    def __str__(self):
        width = {c: max([len(str(self[(r, c)])) for r in self.vertices] + [1])
                 for c in self.vertices}
        lines = []
        for r in self.vertices:
            cells = [str(self[(r, c)]).rjust(width[c]) for c in self.vertices]
            lines.append("[ " + "  ".join(cells) + " ]")
        return "\n".join(lines)

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "entries": [
                {"row": r, "col": c, "value": str(v)}
                for (r, c), v in sorted(self.m.items())
            ],
        }


def burau_generator(g: CoxeterGraph, letter: int) -> LaurentMatrix:
    """Matrix of one signed generator letter.

    The positive letter at vertex i scales the i-th basis vector by -q^2 and
    corrects each neighbour j by -q times the i-th vector; the negative
    letter is its inverse (scale -q^{-2}, correction -q^{-1}).
    """
    i = abs(letter)
    if i not in g.generator_vertices():
        raise ValueError(f"letter {letter} is not a generator of this graph")
    verts = g.vertices
    entries = {(v, v): Laurent.one() for v in verts}
    if letter > 0:
        entries[(i, i)] = Laurent({2: -1})
        corr = Laurent({1: -1})
    else:
        entries[(i, i)] = Laurent({-2: -1})
        corr = Laurent({-1: -1})
    for j in g.neighbors(i):
        entries[(i, j)] = corr
    return LaurentMatrix(verts, entries)


def burau_of_word(g: CoxeterGraph, word) -> LaurentMatrix:
    """Product of letter matrices, rightmost letter acting first."""
    letters = validate_word(g, word)
    out = LaurentMatrix.identity(g.vertices)
    for letter in letters:
        out = out * burau_generator(g, letter)
    return out


def gram_matrix(g: CoxeterGraph) -> LaurentMatrix:
    """The sesquilinear form the representation preserves: 1 + q^2 on the
    diagonal, q at each edge."""
    entries = {}
    for v in g.vertices:
        entries[(v, v)] = Laurent({0: 1, 2: 1})
    for (s, t) in g.edges:
        entries[(s, t)] = Laurent({1: 1})
        entries[(t, s)] = Laurent({1: 1})
    return LaurentMatrix(g.vertices, entries)


def squier_check(g: CoxeterGraph, word) -> bool:
    """Whether the word's matrix M preserves the form: M^T G bar(M) == G."""
    m = burau_of_word(g, word)
    gram = gram_matrix(g)
    return m.transpose() * gram * m.bar() == gram


def euler_class(c: Complex) -> dict[int, Laurent]:
    """Signed generator count per vertex, weighted (-1)^k q^l.

    The dual grading m is deliberately forgotten: this is the classical
    decategorification.
    """
    out: dict[int, Laurent] = {v: Laurent.zero() for v in c.graph.vertices}
    for lab in c.gens:
        sign = -1 if lab.k % 2 else 1
        out[lab.v] = out[lab.v] + Laurent({lab.l: sign})
    return out


def decat_consistency(g: CoxeterGraph, word, matrix: LaurentMatrix | None = None):
    """Check the square: act on each projective, take Euler classes, compare
    with the matrix columns.  Returns (ok, report).

    ``matrix`` overrides the word's own matrix, so a corrupted matrix can be
    fed in as a negative control; the report then locates the bad column.
    """
    from .action import apply_word
    from .complexes import projective

    letters = validate_word(g, word)
    m = burau_of_word(g, letters) if matrix is None else matrix
    bad = []
    for v in g.generator_vertices():
        image = apply_word(letters, projective(g, v))
        got = {r: val for r, val in euler_class(image).items() if val.c}
        want = {r: m[(r, v)] for r in g.vertices if m[(r, v)].c}
        if got != want:
            bad.append({"column": v, "from_complex": {r: str(x) for r, x in sorted(got.items())},
                        "from_matrix": {r: str(x) for r, x in sorted(want.items())}})
    report = {"word": list(letters), "ok": not bad, "mismatches": bad}
    return (not bad, report)


def cancellation_witness(c: Complex):
    """First (vertex, weight) class whose generator count exceeds the Euler
    bound, i.e. where the complex genuinely needs cancelling generator pairs
    that the decategorification cannot see.  None if every class is tight.
    """
    counts: dict[tuple[int, int], int] = {}
    signed: dict[tuple[int, int], int] = {}
    for lab in c.gens:
        key = (lab.v, lab.l)
        counts[key] = counts.get(key, 0) + 1
        signed[key] = signed.get(key, 0) + (-1 if lab.k % 2 else 1)
    for key in sorted(counts):
        if counts[key] != abs(signed[key]):
            return {"vertex": key[0], "weight": key[1],
                    "generators": counts[key], "euler": signed[key]}
    return None
