"""Benchmark the two Gaussian-reduction kernels on real braid-action work.

Records every kernel call made while acting by pseudorandom words on
projectives (the dominant workload), then replays the recorded calls
through the pure-Python kernel and, when built, the compiled one,
verifying that both return identical output while timing them.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--words N] [--length L]
"""

from __future__ import annotations

import argparse
import random
import time

import zigzagcat._kernel as kernel_dispatch
from zigzagcat._kernel import pure
from zigzagcat.action import apply_word
from zigzagcat.complexes import projective
from zigzagcat.coxeter import graph_a, graph_d


def record_workload(words: int, length: int):
    """Run braid actions while capturing the raw kernel calls they make."""
    calls = []
    original = kernel_dispatch.reduce_complex

    def recorder(n, entries, is_idem, prod):
        entries = list(entries)
        calls.append((n, entries, is_idem, prod))
        return original(n, entries, is_idem, prod)

    kernel_dispatch.reduce_complex = recorder
    try:
        rng = random.Random(20240819)
        for g in (graph_a(3), graph_a(5), graph_d(4)):
            rank = g.rank
            letters = [s * v for v in range(1, rank + 1) for s in (1, -1)]
            for _ in range(words):
                word = [rng.choice(letters) for _ in range(length)]
                apply_word(word, projective(g, rng.randint(1, rank)))
    finally:
        kernel_dispatch.reduce_complex = original
    return calls


def replay(kernel, calls):
    best = None
    result = None
    for _ in range(3):
        t0 = time.perf_counter()
        result = [kernel.reduce_complex(n, list(entries), is_idem, prod)
                  for n, entries, is_idem, prod in calls]
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--words", type=int, default=8,
                        help="pseudorandom words per graph (default 8)")
    parser.add_argument("--length", type=int, default=24,
                        help="letters per word (default 24)")
    args = parser.parse_args()

    calls = record_workload(args.words, args.length)
    sizes = sorted(c[0] for c in calls)
    print(f"workload: {len(calls)} reduction calls, "
          f"matrix sizes {sizes[0]}..{sizes[-1]} "
          f"(median {sizes[len(sizes) // 2]})")

    pure_time, pure_out = replay(pure, calls)
    print(f"pure kernel:     {pure_time:8.3f} s")

    speed = kernel_dispatch._speed
    if speed is None:
        print("compiled kernel: not built (pip install rebuilds it when "
              "Cython and a C compiler are available)")
        return 0
    fast_time, fast_out = replay(speed, calls)
    print(f"compiled kernel: {fast_time:8.3f} s   "
          f"({pure_time / fast_time:.2f}x the pure kernel)")
    if fast_out != pure_out:
        print("MISMATCH: kernels disagree -- this is a bug")
        return 1
    print("outputs identical across kernels")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
