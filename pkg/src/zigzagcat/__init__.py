"""Exact computational engine for categorical braid group actions.

Everything is exact: complexes of projective modules over zigzag algebras of
ADE graphs, the braid action by mangling those complexes, its Laurent-matrix
decategorification, a curve dictionary in type A, spread/word-length metrics,
and the three-strand stability automaton.  No floats anywhere.
"""

__version__ = "0.1.0"

from .coxeter import CoxeterGraph, free_reduce, graph_from_spec
from .complexes import Complex, gaussian_reduce, hom_total_dims, is_isomorphic
from .action import apply_word, canonical_tuple

__all__ = [
    "CoxeterGraph", "free_reduce", "graph_from_spec",
    "Complex", "gaussian_reduce", "hom_total_dims", "is_isomorphic",
    "apply_word", "canonical_tuple",
]
