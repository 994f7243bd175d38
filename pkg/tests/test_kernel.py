"""Reduction kernels: the compiled and pure implementations must be
interchangeable — identical outputs on real workloads, graceful overflow
fallback, and environment-driven selection.  The pure kernel's own contract
is tested unconditionally; parity tests skip when no compiled kernel built."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from zigzagcat import _kernel
from zigzagcat._kernel import pure
from zigzagcat.action import apply_word
from zigzagcat.complexes import _kernel_tables, gaussian_reduce, projective
from zigzagcat.coxeter import graph_a, graph_d

try:
    from zigzagcat._kernel import _speed as speed
except ImportError:
    speed = None

needs_speed = pytest.mark.skipif(speed is None,
                                 reason="compiled kernel not built")


def instance(c):
    """The exact (n, entries, is_idem, prod) tuple gaussian_reduce feeds the
    kernel for a canonical-sorted complex."""
    c = c.canonical_sorted()
    basis, index, is_idem, prod = _kernel_tables(c.graph)
    entries = [(a, b, index[p], coeff.numerator, coeff.denominator)
               for (a, b), (p, coeff) in c.diff.items()]
    return c.n_gens, entries, is_idem, prod


WORKLOADS = [
    (graph_a(3), [1, 2, 1, -3]),
    (graph_a(3), [2, -1, 2, -1, 3]),
    (graph_a(3), [-1, -2, -3]),
    (graph_d(4), [1, 2, 3, 4]),
    (graph_d(4), [2, -4, 2, 3]),
]


@needs_speed
@pytest.mark.parametrize("g,word", WORKLOADS,
                         ids=[f"{g.rank}v-{''.join(str(x) for x in w)}"
                              for g, w in WORKLOADS])
def test_kernels_agree_on_real_workloads(g, word):
    fat = apply_word(word, projective(g, 1), reduce=False)
    n, entries, is_idem, prod = instance(fat)
    assert pure.reduce_complex(n, entries, is_idem, prod) == \
        speed.reduce_complex(n, entries, is_idem, prod)


@needs_speed
@settings(max_examples=25)
@given(st.integers(1, 3),
       st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=4))
def test_kernels_agree_on_random_words(vertex, word):
    fat = apply_word(word, projective(graph_a(3), vertex), reduce=False)
    n, entries, is_idem, prod = instance(fat)
    assert pure.reduce_complex(n, entries, is_idem, prod) == \
        speed.reduce_complex(n, entries, is_idem, prod)


def small_tables():
    basis, index, is_idem, prod = _kernel_tables(graph_a(2))
    return index, is_idem, prod


@needs_speed
def test_compiled_overflow_raises_and_dispatcher_falls_back():
    index, is_idem, prod = small_tables()
    e1 = index[("e", 1)]
    entries = [(1, 0, e1, 1 << 80, 1)]
    with pytest.raises(OverflowError):
        speed.reduce_complex(2, entries, is_idem, prod)
    assert _kernel.reduce_complex(2, entries, is_idem, prod) == \
        pure.reduce_complex(2, entries, is_idem, prod) == ([], [])


def test_mid_computation_overflow_falls_back():
    # pivot e1 at (1,0); two 2^40 coefficients meet in the update and
    # outgrow 64-bit storage, so a compiled kernel must hand the whole call
    # to the pure one mid-flight and still match it exactly
    index, is_idem, prod = small_tables()
    e1 = index[("e", 1)]
    big = 1 << 40
    entries = [(1, 0, e1, 1, 1), (1, 2, e1, big, 1), (3, 0, e1, big, 1)]
    want = pure.reduce_complex(4, entries, is_idem, prod)
    kept, out = want
    assert kept == [2, 3]
    assert out == [(1, 0, e1, -(1 << 80), 1)]
    assert _kernel.reduce_complex(4, entries, is_idem, prod) == want


def test_normalization_and_duplicate_rejection():
    index, is_idem, prod = small_tables()
    a12 = index[("a", 1, 2)]
    kept, out = pure.reduce_complex(2, [(1, 0, a12, -2, -4)], is_idem, prod)
    assert kept == [0, 1]
    assert out == [(1, 0, a12, 1, 2)]  # lowest terms, positive denominator
    with pytest.raises(ValueError):
        pure.reduce_complex(2, [(1, 0, a12, 1, 1), (1, 0, a12, 1, 1)],
                            is_idem, prod)
    # zero coefficients are skipped entirely
    assert pure.reduce_complex(2, [(1, 0, a12, 0, 1)], is_idem, prod) == \
        ([0, 1], [])


def test_output_is_sorted():
    g = graph_a(3)
    fat = apply_word([1, 2, -1, 3], projective(g, 2), reduce=False)
    n, entries, is_idem, prod = instance(fat)
    _, out = pure.reduce_complex(n, entries, is_idem, prod)
    assert out == sorted(out, key=lambda e: (e[0], e[1]))
    assert all(den > 0 for *_, den in out)


def _active_kernel(env_value):
    env = os.environ.copy()
    env["ZIGZAGCAT_KERNEL"] = env_value
    return subprocess.run(
        [sys.executable, "-c",
         "from zigzagcat import _kernel; print(_kernel.ACTIVE)"],
        capture_output=True, text=True, env=env)


def test_kernel_selection_pure_and_invalid():
    assert _active_kernel("pure").stdout.strip() == "pure"
    bad = _active_kernel("turbo")
    assert bad.returncode != 0
    assert "ZIGZAGCAT_KERNEL" in bad.stderr


@needs_speed
def test_kernel_selection_fast():
    assert _active_kernel("fast").stdout.strip() == "fast"
    assert _active_kernel("auto").stdout.strip() == "fast"


def test_pure_kernel_reduces_like_the_public_entry_point():
    g = graph_a(3)
    word = [1, -2, 3, -1]
    fat = apply_word(word, projective(g, 2), reduce=False).canonical_sorted()
    n, entries, is_idem, prod = instance(fat)
    kept, out = pure.reduce_complex(n, entries, is_idem, prod)
    slim = gaussian_reduce(fat)
    assert len(kept) == slim.n_gens
    assert len(out) == len(slim.diff)
