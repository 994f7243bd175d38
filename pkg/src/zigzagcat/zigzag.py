"""The zigzag algebra of an oriented simply-laced graph, with exact scalars.

The algebra A has a basis of short paths in the doubled quiver:

* an idempotent e_i for every vertex i,
* an arrow (i|j) for every edge {i, j}, in both directions,
* a loop x_i = (i|j)(j|i) at every vertex (any neighbour j gives the same
  loop; on a based graph the loop x_0 at the based vertex is zero and is
  dropped from the basis).

Multiplication: paths of length three or more vanish, and a two-step path
(i|j)(j|k) survives only when k == i, where it equals x_i.  So x_i kills
every arrow, x_i^2 = 0, and dim A = 2*V + 2*E (one less when based).

Gradings: path degree counts arrows (e=0, arrow=1, x=2); orientation degree
counts arrows traversed against the chosen edge orientation (so x_i always
has orientation degree 1).

Basis paths are encoded as small tuples: ("e", i), ("a", i, j), ("x", i).
An (i, j) entry of a module map P_i -> P_j lives in e_i A e_j, i.e. paths
from i to j, acting by right multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coxeter import CoxeterGraph

Path = tuple  # ("e", i) | ("a", i, j) | ("x", i)


def path_source(p: Path) -> int:
    return p[1]


def path_target(p: Path) -> int:
    return p[2] if p[0] == "a" else p[1]


def path_deg(p: Path) -> int:
    return {"e": 0, "a": 1, "x": 2}[p[0]]


def orient_deg(g: CoxeterGraph, p: Path) -> int:
    if p[0] == "e":
        return 0
    if p[0] == "x":
        return 1
    return 0 if g.edge_oriented(p[1], p[2]) else 1


@lru_cache(maxsize=None)
def algebra_basis(g: CoxeterGraph) -> tuple[Path, ...]:
    basis: list[Path] = [("e", v) for v in g.vertices]
    basis += [("x", v) for v in g.vertices if not (g.based and v == 0)]
    for i, j in g.edges:
        basis += [("a", i, j), ("a", j, i)]
    return tuple(basis)


def algebra_dim(g: CoxeterGraph) -> int:
    return len(algebra_basis(g))


def multiply_paths(g: CoxeterGraph, p: Path, r: Path) -> Path | None:
    """Product of two basis paths; None means zero.  Path order: p then r."""
    if path_target(p) != path_source(r):
        return None
    if p[0] == "e":
        return r
    if r[0] == "e":
        return p
    if p[0] == "a" and r[0] == "a":
        if r[2] != p[1]:
            return None  # straight two-step path
        v = p[1]
        if g.based and v == 0:
            return None  # the based loop is zero
        return ("x", v)
    return None  # anything through a loop is too long


def check_path(g: CoxeterGraph, p: Path) -> Path:
    if p not in algebra_basis(g):
        raise ValueError(f"{p} is not a basis path of this algebra")
    return p


class AlgebraElement:
    """A Q-linear combination of basis paths of one algebra."""

    __slots__ = ("graph", "terms")

    def __init__(self, graph: CoxeterGraph, terms: dict[Path, Fraction] | None = None):
        self.graph = graph
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @staticmethod
    def zero(graph: CoxeterGraph) -> "AlgebraElement":
        return AlgebraElement(graph)

    @staticmethod
    def from_path(graph: CoxeterGraph, p: Path, coeff=1) -> "AlgebraElement":
        return AlgebraElement(graph, {check_path(graph, p): Fraction(coeff)})

    def _same(self, other: "AlgebraElement"):
        if self.graph != other.graph:
            raise ValueError("elements of different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, Fraction(0)) + c
        return AlgebraElement(self.graph, t)

    def __neg__(self):
        return AlgebraElement(self.graph, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.graph,
                                  {p: c * other for p, c in self.terms.items()})
        self._same(other)
        t: dict[Path, Fraction] = {}
        for p, c in self.terms.items():
            for r, d in other.terms.items():
                pr = multiply_paths(self.graph, p, r)
                if pr is not None:
                    t[pr] = t.get(pr, Fraction(0)) + c * d
        return AlgebraElement(self.graph, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __hash__(self):
        return hash((self.graph, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{path_str(p)}" if c != 1 else path_str(p)
                          for p, c in sorted(self.terms.items()))

    # -- wire format ---------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"path": path_str(p), "coef": str(c)}
                for p, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(graph: CoxeterGraph, data: list[dict]) -> "AlgebraElement":
        t: dict[Path, Fraction] = {}
        for item in data:
            p = parse_path(item["path"])
            check_path(graph, p)
            t[p] = t.get(p, Fraction(0)) + Fraction(item["coef"])
        return AlgebraElement(graph, t)


def path_str(p: Path) -> str:
    if p[0] == "a":
        return f"a{p[1]}_{p[2]}"
    return f"{p[0]}{p[1]}"


def parse_path(s: str) -> Path:
    s = s.strip()
    try:
        if s.startswith("a"):
            i, j = s[1:].split("_")
            return ("a", int(i), int(j))
        if s[0] in "ex":
            return (s[0], int(s[1:]))
    except (ValueError, IndexError):
        pass
    raise ValueError(f"cannot parse path {s!r}")


@lru_cache(maxsize=None)
def hom_basis(g: CoxeterGraph, i: int, j: int) -> tuple[tuple[Path, int, int], ...]:
    """Basis of e_i A e_j (maps P_i -> P_j) with (path degree, orientation
    degree): the identity-and-loop pair at i == j, a single arrow across an
    edge, nothing otherwise."""
    if i not in g.vertices or j not in g.vertices:
        raise ValueError(f"({i}, {j}) outside the vertex set")
    if i == j:
        out = [(("e", i), 0, 0)]
        if not (g.based and i == 0):
            out.append((("x", i), 2, 1))
        return tuple(out)
    if g.is_edge(i, j):
        p: Path = ("a", i, j)
        return ((p, 1, orient_deg(g, p)),)
    return ()


def based_extension(g: CoxeterGraph) -> CoxeterGraph:
    """Adjoin the based vertex 0 with an edge 0 -> 1 and kill its loop."""
    if g.based:
        raise ValueError("graph is already based")
    if 1 not in g.vertices:
        raise ValueError("based extension attaches to vertex 1")
    return CoxeterGraph((0,) + g.vertices,
                        ((0, 1),) + g.edges,
                        ((0, 1),) + g.orientation,
                        based=True)
