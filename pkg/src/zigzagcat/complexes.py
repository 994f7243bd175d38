"""Bounded complexes of shifted indecomposable projectives, exactly.

A complex is a finite list of generators and a differential matrix.  Each
generator is a shifted projective P_v with three integer gradings:

* k -- homological degree (the differential raises k by one),
* l -- internal grading of the algebra (arrows sit in degree 1),
* m -- the second, orientation grading (counter-oriented arrows and loops
  sit in degree 1).

The differential entry at (a, b) is the component mapping generator b into
generator a; it is an element of e_{v_b} A e_{v_a} acting by right
multiplication, and composition of entries is the algebra product in path
order.  Homogeneity pins every entry to a single scaled basis path: path
degree l_b - l_a, orientation degree m_b - m_a.  That rigidity is what makes
an integer kernel possible, so the representation stores (path, coefficient)
pairs rather than general algebra elements.

Gaussian reduction repeatedly cancels invertible idempotent entries until
none remain; the result is the minimal model, unique up to isomorphism.
Generators are kept in a canonical order, sorted by (k, v, l, m).
"""

from __future__ import annotations

import hashlib
import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .coxeter import CoxeterGraph
from .laurent import Laurent
from .zigzag import (AlgebraElement, Path, algebra_basis, hom_basis,
                     multiply_paths, orient_deg, path_deg, path_source,
                     path_target, path_str, parse_path, check_path)
from . import _kernel


class GenLabel(NamedTuple):
    v: int
    k: int
    l: int
    m: int


Entry = tuple[Path, Fraction]


class Complex:
    """gens: tuple of GenLabel; diff: {(target_idx, source_idx): (path, coeff)}."""

    __slots__ = ("graph", "gens", "diff")

    def __init__(self, graph: CoxeterGraph, gens: Iterable[GenLabel],
                 diff: dict[tuple[int, int], Entry] | None = None):
        self.graph = graph
        self.gens = tuple(GenLabel(*g) for g in gens)
        self.diff = {k: v for k, v in (diff or {}).items() if v[1]}

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return (self.graph == other.graph and self.gens == other.gens
                and self.diff == other.diff)

    def __repr__(self):
        return f"<Complex {len(self.gens)} gens, {len(self.diff)} entries>"

    @property
    def n_gens(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def shift(self, k: int = 0, l: int = 0, m: int = 0) -> "Complex":
        gens = [GenLabel(g.v, g.k + k, g.l + l, g.m + m) for g in self.gens]
        return Complex(self.graph, gens, dict(self.diff))

    def direct_sum(self, other: "Complex") -> "Complex":
        if self.graph != other.graph:
            raise ValueError("summands over different graphs")
        off = self.n_gens
        diff = dict(self.diff)
        diff.update({(a + off, b + off): e for (a, b), e in other.diff.items()})
        return Complex(self.graph, self.gens + other.gens, diff)

    def canonical_sorted(self) -> "Complex":
        order = sorted(range(self.n_gens), key=lambda i: self.gens[i])
        pos = {old: new for new, old in enumerate(order)}
        gens = [self.gens[i] for i in order]
        diff = {(pos[a], pos[b]): e for (a, b), e in self.diff.items()}
        return Complex(self.graph, gens, diff)

    def entry_element(self, a: int, b: int) -> AlgebraElement:
        e = self.diff.get((a, b))
        if e is None:
            return AlgebraElement.zero(self.graph)
        return AlgebraElement.from_path(self.graph, e[0], e[1])

    # -- wire format ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "generators": [{"v": g.v, "h": g.k, "l": g.l, "m": g.m}
                           for g in self.gens],
            "diff": [{"row": a, "col": b,
                      "elt": [{"path": path_str(p), "coef": str(c)}]}
                     for (a, b), (p, c) in sorted(self.diff.items())],
        }

    @staticmethod
    def from_json(graph: CoxeterGraph, data: dict) -> "Complex":
        gens = [GenLabel(int(g["v"]), int(g["h"]), int(g["l"]), int(g["m"]))
                for g in data.get("generators", [])]
        diff: dict[tuple[int, int], Entry] = {}
        for item in data.get("diff", []):
            a, b = int(item["row"]), int(item["col"])
            if not (0 <= a < len(gens) and 0 <= b < len(gens)):
                raise ValueError(f"diff entry ({a},{b}) out of range")
            elt = item["elt"]
            terms = [(check_path(graph, parse_path(t["path"])), Fraction(t["coef"]))
                     for t in elt if Fraction(t["coef"])]
            if not terms:
                continue
            if len(terms) > 1:
                raise ValueError("a homogeneous differential entry is a single "
                                 f"scaled basis path; ({a},{b}) has {len(terms)}")
            if (a, b) in diff:
                raise ValueError(f"duplicate diff entry ({a},{b})")
            diff[(a, b)] = terms[0]
        return Complex(graph, gens, diff)

    def text(self) -> str:
        """Compact one-line rendering, e.g. "P1 -> P2<-1>"."""
        if not self.gens:
            return "0"
        by_k: dict[int, list[GenLabel]] = {}
        for g in self.gens:
            by_k.setdefault(g.k, []).append(g)
        ks = sorted(by_k)
        cols = []
        for k in ks:
            cols.append(" (+) ".join(
                f"P{g.v}" + (f"<{g.l}>" if g.l else "") + (f"{{{g.m}}}" if g.m else "")
                for g in sorted(by_k[k])))
        head = f"[{ks[0]}] " if ks[0] != 0 else ""
        return head + " -> ".join(cols)


def projective(g: CoxeterGraph, v: int) -> Complex:
    if v not in g.vertices:
        raise ValueError(f"no vertex {v}")
    return Complex(g, [GenLabel(v, 0, 0, 0)])


# -- validation ---------------------------------------------------------------

def validate(c: Complex) -> list[str]:
    """All structural invariants; returns a list of violations (empty = valid)."""
    out: list[str] = []
    g = c.graph
    basis = set(algebra_basis(g))
    for v, k, l, m in c.gens:
        if v not in g.vertices:
            out.append(f"generator vertex {v} not in graph")
    for (a, b), (p, coeff) in c.diff.items():
        if not (0 <= a < c.n_gens and 0 <= b < c.n_gens):
            out.append(f"entry ({a},{b}) out of range")
            continue
        ga, gb = c.gens[a], c.gens[b]
        if p not in basis:
            out.append(f"entry ({a},{b}): {p} not a basis path")
            continue
        if coeff == 0:
            out.append(f"entry ({a},{b}) has zero coefficient")
        if ga.k != gb.k + 1:
            out.append(f"entry ({a},{b}) does not raise homological degree by 1")
        if path_source(p) != gb.v or path_target(p) != ga.v:
            out.append(f"entry ({a},{b}): path {p} does not run {gb.v} -> {ga.v}")
            continue
        if path_deg(p) != gb.l - ga.l:
            out.append(f"entry ({a},{b}) breaks the internal grading")
        if orient_deg(g, p) != gb.m - ga.m:
            out.append(f"entry ({a},{b}) breaks the orientation grading")
    # d^2 = 0, checked componentwise
    by_source: dict[int, list[int]] = {}
    for (a, b) in c.diff:
        by_source.setdefault(b, []).append(a)
    for b, mids in by_source.items():
        acc: dict[tuple[int, Path], Fraction] = {}
        for mid in mids:
            p1, c1 = c.diff[(mid, b)]
            for (a2, b2), (p2, c2) in list(c.diff.items()):
                if b2 != mid:
                    continue
                pr = multiply_paths(g, p1, p2)
                if pr is None:
                    continue
                key = (a2, pr)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        for (a2, pr), val in acc.items():
            if val:
                out.append(f"d^2 != 0: component {b} -> {a2} equals {val}*{pr}")
    return out


def assert_valid(c: Complex) -> Complex:
    problems = validate(c)
    if problems:
        raise AssertionError("; ".join(problems[:5]))
    return c


# -- Gaussian reduction --------------------------------------------------------

@lru_cache(maxsize=None)
def _kernel_tables(g: CoxeterGraph):
    basis = algebra_basis(g)
    index = {p: i for i, p in enumerate(basis)}
    is_idem = [p[0] == "e" for p in basis]
    prod = []
    for p in basis:
        row = []
        for r in basis:
            pr = multiply_paths(g, p, r)
            row.append(-1 if pr is None else index[pr])
        prod.append(row)
    return basis, index, is_idem, prod


def gaussian_reduce(c: Complex) -> Complex:
    """Cancel all idempotent entries; returns the minimal model, canonically
    sorted.  Idempotent on its own output."""
    c = c.canonical_sorted()
    basis, index, is_idem, prod = _kernel_tables(c.graph)
    entries = [(a, b, index[p], coeff.numerator, coeff.denominator)
               for (a, b), (p, coeff) in c.diff.items()]
    kept, out = _kernel.reduce_complex(c.n_gens, entries, is_idem, prod)
    gens = [c.gens[i] for i in kept]
    diff = {(a, b): (basis[s], Fraction(num, den))
            for a, b, s, num, den in out}
    return Complex(c.graph, gens, diff).canonical_sorted()


# -- exact linear algebra over Q ------------------------------------------------

def frac_rank(rows: list[list[Fraction]]) -> int:
    """Rank by destructive echelon over the rationals."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                f *= inv
                row = rows[r]
                for j in range(col, ncols):
                    row[j] -= f * prow[j]
        rank += 1
        if rank == len(rows):
            break
    return rank


def frac_nullspace(rows: list[list[Fraction]], nvars: int) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} via reduced echelon; deterministic."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(nvars):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = 1 / prow[col]
        for j in range(col, nvars):
            prow[j] *= inv
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                row = mat[r]
                for j in range(col, nvars):
                    row[j] -= f * prow[j]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    free = [j for j in range(nvars) if j not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * nvars
        vec[fcol] = Fraction(1)
        for r, pcol in enumerate(pivots):
            vec[pcol] = -mat[r][fcol]
        basis.append(vec)
    return basis


# -- Hom complexes and their homology -------------------------------------------

def _hom_components(cfrom: Complex, cto: Complex):
    """Basis (i, j, path) of the Hom complex with tri-degree
    (t, dl, dm) = (k_j - k_i, pd + l_j - l_i, od + m_j - m_i)."""
    g = cfrom.graph
    if g != cto.graph:
        raise ValueError("Hom between complexes over different graphs")
    comps = []
    for i, gi in enumerate(cfrom.gens):
        for j, gj in enumerate(cto.gens):
            for p, pd, od in hom_basis(g, gi.v, gj.v):
                tri = (gj.k - gi.k, pd + gj.l - gi.l, od + gj.m - gi.m)
                comps.append(((i, j, p), tri))
    return comps


def _hom_homology(cfrom: Complex, cto: Complex) -> dict[tuple[int, int, int], int]:
    """Trigraded homology dimensions of the Hom complex, exact over Q.
    delta f = d_to o f - (-1)^t f o d_from, computed blockwise per (dl, dm)."""
    g = cfrom.graph
    comps = _hom_components(cfrom, cto)
    blocks: dict[tuple[int, int], dict[int, list[tuple[int, int, Path]]]] = {}
    for (i, j, p), (t, dl, dm) in comps:
        blocks.setdefault((dl, dm), {}).setdefault(t, []).append((i, j, p))

    to_rows: dict[int, list[tuple[int, Path, Fraction]]] = {}
    for (a, b), (p, coeff) in cto.diff.items():
        to_rows.setdefault(b, []).append((a, p, coeff))
    from_rows: dict[int, list[tuple[int, Path, Fraction]]] = {}
    for (a, b), (p, coeff) in cfrom.diff.items():
        from_rows.setdefault(a, []).append((b, p, coeff))

    def delta(comp, t):
        i, j, p = comp
        out: dict[tuple[int, int, Path], Fraction] = {}
        for j2, q, coeff in to_rows.get(j, ()):  # d_to o f
            pq = multiply_paths(g, p, q)
            if pq is not None:
                key = (i, j2, pq)
                out[key] = out.get(key, Fraction(0)) + coeff
        sign = -1 if t % 2 == 0 else 1  # -(-1)^t
        for i2, q, coeff in from_rows.get(i, ()):  # f o d_from
            qp = multiply_paths(g, q, p)
            if qp is not None:
                key = (i2, j, qp)
                out[key] = out.get(key, Fraction(0)) + sign * coeff
        return out

    dims: dict[tuple[int, int, int], int] = {}
    for (dl, dm), layers in blocks.items():
        ts = sorted(layers)
        ranks: dict[int, int] = {}
        for t in ts:
            src = layers[t]
            tgt = layers.get(t + 1, [])
            if not tgt:
                ranks[t] = 0
                continue
            pos = {comp: r for r, comp in enumerate(tgt)}
            rows = []
            for comp in src:
                col = [Fraction(0)] * len(tgt)
                for key, val in delta(comp, t).items():
                    col[pos[key]] = val
                rows.append(col)
            # rows indexed by source components; rank is the same either way
            ranks[t] = frac_rank(rows)
        for t in ts:
            dim = len(layers[t]) - ranks.get(t, 0) - ranks.get(t - 1, 0)
            if dim:
                dims[(t, dl, dm)] = dim
    return dims


def hom_trigraded_dims(cfrom: Complex, cto: Complex) -> dict[tuple[int, int, int], int]:
    return _hom_homology(cfrom, cto)


def hom_total_dims(cfrom: Complex, cto: Complex) -> tuple[dict[int, int], int]:
    """Homology dimensions of the Hom complex per cohomological degree t,
    plus the total over all degrees."""
    by_t: dict[int, int] = {}
    for (t, _, _), d in _hom_homology(cfrom, cto).items():
        by_t[t] = by_t.get(t, 0) + d
    return dict(sorted(by_t.items())), sum(by_t.values())


# -- isomorphism --------------------------------------------------------------

def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def is_isomorphic(a: Complex, b: Complex) -> bool:
    """Exact isomorphism test for *reduced* complexes.

    Strategy: a degree-(0,0,0) chain map with invertible idempotent blocks is
    an isomorphism (the non-idempotent part is radical, hence nilpotent), and
    on reduced complexes every homotopy equivalence is of this form.  So:
    solve the chain-map equations over Q, then check that no label class has
    identically vanishing block determinant on the solution space.
    """
    if a.graph != b.graph:
        raise ValueError("complexes over different graphs")
    if sorted(a.gens) != sorted(b.gens):
        return False
    if a.gens == b.gens and a.diff == b.diff:
        return True
    if not a.gens:
        return True
    g = a.graph

    # degree-(0,0,0) components: path p from v_i to v_j with
    # pd(p) = l_i - l_j, od(p) = m_i - m_j, k_i = k_j
    comps: list[tuple[int, int, Path]] = []
    for i, gi in enumerate(a.gens):
        for j, gj in enumerate(b.gens):
            if gi.k != gj.k:
                continue
            for p, pd, od in hom_basis(g, gi.v, gj.v):
                if pd == gi.l - gj.l and od == gi.m - gj.m:
                    comps.append((i, j, p))
    cpos = {c: n for n, c in enumerate(comps)}

    # chain-map equations d_b f = f d_a, one row per (i, j, path) target
    rows_idx: dict[tuple[int, int, Path], dict[int, Fraction]] = {}

    def put(key, col, val):
        row = rows_idx.setdefault(key, {})
        row[col] = row.get(col, Fraction(0)) + val

    b_out: dict[int, list[tuple[int, Path, Fraction]]] = {}
    for (t, s), (p, coeff) in b.diff.items():
        b_out.setdefault(s, []).append((t, p, coeff))
    # entries of d_a INTO generator i, for precomposition
    a_in: dict[int, list[tuple[int, Path, Fraction]]] = {}
    for (t, s), (p, coeff) in a.diff.items():
        a_in.setdefault(t, []).append((s, p, coeff))

    for n, (i, j, p) in enumerate(comps):
        for j2, q, coeff in b_out.get(j, ()):      # d_b o f
            pq = multiply_paths(g, p, q)
            if pq is not None:
                put((i, j2, pq), n, coeff)
        for i0, q, coeff in a_in.get(i, ()):       # f o d_a
            qp = multiply_paths(g, q, p)
            if qp is not None:
                put((i0, j, qp), n, -coeff)

    rows = []
    for key in sorted(rows_idx, key=lambda k: (k[0], k[1], str(k[2]))):
        row = [Fraction(0)] * len(comps)
        for col, val in rows_idx[key].items():
            row[col] = val
        rows.append(row)
    null = frac_nullspace(rows, len(comps))
    if not null:
        return False
    d = len(null)

    # label classes and their determinant polynomials
    classes: dict[GenLabel, tuple[list[int], list[int]]] = {}
    for i, gi in enumerate(a.gens):
        classes.setdefault(gi, ([], []))[0].append(i)
    for j, gj in enumerate(b.gens):
        classes.setdefault(gj, ([], []))[1].append(j)

    zero = tuple([0] * d)

    for label, (ais, bjs) in classes.items():
        s = len(ais)
        esym: Path = ("e", label.v)
        # T[r][c]: coefficient of the e-component a_is[c] -> b_js[r], linear in z
        forms = [[{} for _ in range(s)] for _ in range(s)]
        for r, j in enumerate(bjs):
            for c, i in enumerate(ais):
                n = cpos.get((i, j, esym))
                if n is None:
                    continue
                form: dict = {}
                for var, vec in enumerate(null):
                    if vec[n]:
                        e = [0] * d
                        e[var] = 1
                        form[tuple(e)] = vec[n]
                forms[r][c] = form
        if s == 1:
            if not forms[0][0]:
                return False
            continue
        # deterministic evaluations first; symbolic Leibniz only as fallback
        found = False
        for seed in range(3):
            vals = [Fraction(2 * seed + var + 1, var + seed + 2) for var in range(d)]
            det_rows = [[sum((c * _eval(e, vals) for e, c in forms[r][cc].items()),
                             Fraction(0)) for cc in range(s)] for r in range(s)]
            if _num_det(det_rows):
                found = True
                break
        if found:
            continue
        det: dict = {}
        for perm in itertools.permutations(range(s)):
            term = {zero: Fraction(_perm_sign(perm))}
            ok = True
            for r in range(s):
                cell = forms[r][perm[r]]
                if not cell:
                    ok = False
                    break
                term = _poly_mul(term, cell)
            if not ok:
                continue
            for e, coeff in term.items():
                v = det.get(e, Fraction(0)) + coeff
                if v:
                    det[e] = v
                else:
                    det.pop(e, None)
        if not det:
            return False
    return True


def _eval(expvec, vals) -> Fraction:
    out = Fraction(1)
    for e, v in zip(expvec, vals):
        out *= v ** e
    return out


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _num_det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free-ish elimination; destructive."""
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                for j in range(col, n):
                    rows[r][j] -= f * rows[col][j]
    return det


# -- decategorification ---------------------------------------------------------

def euler_class(c: Complex) -> dict[int, Laurent]:
    """Graded Euler characteristic: sum of (-1)^k q^l per vertex."""
    out = {v: Laurent.zero() for v in c.graph.vertices}
    for v, k, l, m in c.gens:
        out[v] += Laurent.q_power(l, -1 if k % 2 else 1)
    return out


# -- fingerprints ----------------------------------------------------------------

def invariant_key(c: Complex) -> tuple:
    """Sorted generator labels: an isomorphism invariant used for bucketing.
    (Not complete -- confirm candidates with is_isomorphic.)"""
    return tuple(sorted(c.gens))


def digest(c: Complex) -> str:
    """Stable fingerprint of the on-the-nose representative (generators and
    differential entries).  Equal digests imply equal reduced representatives;
    it is NOT an isomorphism certificate, since isomorphic reduced complexes
    can differ by entry rescaling."""
    c2 = c.canonical_sorted()
    payload = {
        "graph": c2.graph.to_json(),
        "gens": [list(g) for g in c2.gens],
        "diff": [[a, b, path_str(p), str(co)]
                 for (a, b), (p, co) in sorted(c2.diff.items())],
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()
