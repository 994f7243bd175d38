"""Simply-laced Coxeter graphs, braid words, and distinguished words.

Conventions used throughout the package:

* Vertices are labelled 1..n.  A *based* graph additionally carries vertex 0,
  joined to vertex 1 by an edge oriented 0 -> 1; the based vertex is never a
  valid braid-generator index.
* Every edge carries an orientation, one of the two directions.  The ADE
  constructors orient low -> high.
* A braid word is a tuple of nonzero ints: letter i means the positive
  generator at vertex i, letter -i its inverse.  Words act right-to-left,
  like function composition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CoxeterGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]        # sorted pairs, no duplicates
    orientation: tuple[tuple[int, int], ...]  # one (src, tgt) per edge
    based: bool = False

    def __post_init__(self):
        n = len(self.vertices)
        lo = 0 if self.based else 1
        if self.vertices != tuple(range(lo, lo + n)):
            raise ValueError(f"vertices must be consecutive labels starting at {lo}")
        seen = set()
        for e in self.edges:
            if len(e) != 2 or e[0] >= e[1]:
                raise ValueError(f"edge {e} must be a sorted pair")
            if e[0] not in self.vertices or e[1] not in self.vertices:
                raise ValueError(f"edge {e} leaves the vertex set")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if len(self.orientation) != len(self.edges):
            raise ValueError("need exactly one orientation per edge")
        for (s, t), e in zip(self.orientation, self.edges):
            if tuple(sorted((s, t))) != e:
                raise ValueError(f"orientation {(s, t)} does not match edge {e}")

    # -- basic queries -----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.vertices) - (1 if self.based else 0)

    def is_vertex(self, v: int) -> bool:
        return v in self.vertices

    def is_edge(self, i: int, j: int) -> bool:
        return tuple(sorted((i, j))) in self.edges

    def edge_oriented(self, i: int, j: int) -> bool:
        """True iff the edge {i, j} is oriented i -> j."""
        return (i, j) in self.orientation

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _neighbors(self)[v]

    def generator_vertices(self) -> tuple[int, ...]:
        """Vertices that index braid generators (the based vertex excluded)."""
        return tuple(v for v in self.vertices if not (self.based and v == 0))

    @property
    def is_linear_a(self) -> bool:
        """Type A with every edge i -> i+1 (what the curve dictionary needs)."""
        if self.based:
            return False
        n = self.rank
        want = tuple((i, i + 1) for i in range(1, n))
        return self.edges == want and self.orientation == want

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "type": "custom",
            "n": self.rank,
            "edges": [list(e) for e in self.edges],
            "orientation": [list(o) for o in self.orientation],
            **({"based": True} if self.based else {}),
        }


@lru_cache(maxsize=None)
def _neighbors(g: CoxeterGraph) -> dict[int, tuple[int, ...]]:
    nbr: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, j in g.edges:
        nbr[i].append(j)
        nbr[j].append(i)
    return {v: tuple(sorted(ws)) for v, ws in nbr.items()}


# -- constructors ------------------------------------------------------------

def graph_a(n: int) -> CoxeterGraph:
    if n < 1:
        raise ValueError("type A needs n >= 1")
    edges = tuple((i, i + 1) for i in range(1, n))
    return CoxeterGraph(tuple(range(1, n + 1)), edges, edges)


def graph_d(n: int) -> CoxeterGraph:
    if n < 4:
        raise ValueError("type D needs n >= 4")
    edges = tuple((i, i + 1) for i in range(1, n - 2)) + ((n - 2, n - 1), (n - 2, n))
    return CoxeterGraph(tuple(range(1, n + 1)), edges, edges)


def graph_e(n: int) -> CoxeterGraph:
    if n not in (6, 7, 8):
        raise ValueError("type E needs n in {6, 7, 8}")
    # chain 1-2-3-5-6(-7-8) with 4 hanging off vertex 3
    chain = [(1, 2), (2, 3), (3, 4), (3, 5)] + [(i, i + 1) for i in range(5, n)]
    edges = tuple(sorted(tuple(sorted(e)) for e in chain))
    return CoxeterGraph(tuple(range(1, n + 1)), edges, edges)


def graph_from_json(data: dict) -> CoxeterGraph:
    kind = data.get("type", "custom")
    if kind == "A":
        return graph_a(int(data["n"]))
    if kind == "D":
        return graph_d(int(data["n"]))
    if kind == "E":
        return graph_e(int(data["n"]))
    if kind != "custom":
        raise ValueError(f"unknown graph type {kind!r}")
    edges = tuple(sorted(tuple(sorted(map(int, e))) for e in data["edges"]))
    orient_in = {tuple(sorted(map(int, o))): (int(o[0]), int(o[1]))
                 for o in data["orientation"]}
    try:
        orientation = tuple(orient_in[e] for e in edges)
    except KeyError as missing:
        raise ValueError(f"edge {missing} has no orientation") from None
    based = bool(data.get("based", False))
    lo = 0 if based else 1
    n = int(data["n"])
    return CoxeterGraph(tuple(range(lo, lo + n + (1 if based else 0))),
                        edges, orientation, based)


def graph_from_spec(spec: str) -> CoxeterGraph:
    """Parse a shorthand like "a3"/"d4"/"e6", or a path to a JSON graph file."""
    s = spec.strip().lower()
    if len(s) >= 2 and s[0] in "ade" and s[1:].isdigit():
        n = int(s[1:])
        fam = {"a": graph_a, "d": graph_d, "e": graph_e}[s[0]]
        if s[0] == "a" and not 2 <= n <= 9:
            raise ValueError("shorthand covers a2..a9")
        if s[0] == "d" and not 4 <= n <= 6:
            raise ValueError("shorthand covers d4..d6")
        return fam(n)
    with open(spec) as fh:
        return graph_from_json(json.load(fh))


# -- braid words -------------------------------------------------------------

def validate_word(g: CoxeterGraph, word: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in word)
    for letter in w:
        v = abs(letter)
        if letter == 0 or v not in g.vertices or (g.based and v == 0):
            raise ValueError(f"letter {letter} is not a braid generator here")
    return w

def free_reduce(word: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))


def special_word(g: CoxeterGraph, kind: str) -> tuple[int, ...]:
    """Distinguished positive words: "half_twist" (linear type A only) or
    "coxeter_element" (any acyclic orientation, taken in topological order)."""
    if kind == "half_twist":
        if not g.is_linear_a:
            raise ValueError("half_twist needs a linearly oriented type-A graph")
        word: list[int] = []
        for j in range(1, g.rank + 1):
            word.extend(range(j, 0, -1))
        return tuple(word)
    if kind == "coxeter_element":
        # topological sort of the orientation (sources first), smallest vertex
        # breaking ties, so linear type A gives (1, 2, ..., n)
        in_deg = {v: 0 for v in g.generator_vertices()}
        succ: dict[int, list[int]] = {v: [] for v in g.generator_vertices()}
        for s, t in g.orientation:
            if g.based and 0 in (s, t):
                continue
            in_deg[t] += 1
            succ[s].append(t)
        order: list[int] = []
        ready = sorted(v for v, d in in_deg.items() if d == 0)
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in succ[v]:
                in_deg[w] -= 1
                if in_deg[w] == 0:
                    ready.append(w)
            ready.sort()
        if len(order) != len(in_deg):
            raise ValueError("orientation has a cycle; no Coxeter element order")
        return tuple(order)
    raise ValueError(f"unknown special word {kind!r}")


def dual_generator(g: CoxeterGraph, i: int, k: int) -> tuple[int, ...]:
    """Band generator for the interval i..i+k in linear type A:
    [i, i+1, ..., i+k, -(i+k-1), ..., -i], a freely reduced word of length 2k+1."""
    if not g.is_linear_a:
        raise ValueError("dual generators are defined for linear type A")
    if not (1 <= i and i + k <= g.rank and k >= 0):
        raise ValueError(f"interval {i}..{i + k} out of range")
    return tuple(range(i, i + k + 1)) + tuple(range(-(i + k - 1), -i + 1))


def all_dual_generators(g: CoxeterGraph) -> list[tuple[int, ...]]:
    """All n(n+1)/2 band generators of linear type A, one per positive root."""
    return [dual_generator(g, i, k)
            for i in range(1, g.rank + 1) for k in range(0, g.rank - i + 1)]
