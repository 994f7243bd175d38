"""Pure-Python Gaussian elimination kernel.

Reference implementation; the compiled kernel in _speed.pyx mirrors this
algorithm step for step (same pivot order, same arithmetic) so the two
produce identical output.  Keep them in sync.

Pivots are entries whose path is an idempotent (homogeneity then guarantees
the two generator labels agree up to the forced homological step).  They are
consumed in a fixed priority order -- by source position, then target
position, positions frozen at entry -- via a lazy heap, so elimination order
does not depend on dict iteration order.
"""

from __future__ import annotations

import heapq
from fractions import Fraction


def reduce_complex(n, entries, is_idem, prod):
    """entries: iterable of (target, source, sym, num, den).
    Returns (kept, out): kept = surviving original indices in input order,
    out = list of (target_pos, source_pos, sym, num, den) into `kept`,
    sorted by (target_pos, source_pos); coefficients normalized (den > 0,
    lowest terms)."""
    rows: list[dict[int, tuple[int, Fraction]]] = [dict() for _ in range(n)]
    cols: list[set[int]] = [set() for _ in range(n)]
    heap: list[tuple[int, int]] = []

    for a, b, s, num, den in entries:
        coeff = Fraction(num, den)
        if not coeff:
            continue
        if b in rows[a]:
            raise ValueError(f"duplicate entry ({a},{b})")
        rows[a][b] = (s, coeff)
        cols[b].add(a)
        if is_idem[s]:
            heap.append((b, a))
    heapq.heapify(heap)
    alive = [True] * n

    while heap:
        pb, pa = heapq.heappop(heap)
        if not (alive[pa] and alive[pb]):
            continue
        cur = rows[pa].get(pb)
        if cur is None or not is_idem[cur[0]]:
            continue
        alpha = cur[1]
        alive[pa] = alive[pb] = False

        row_pa = [(c, rows[pa][c]) for c in sorted(rows[pa]) if c != pb]
        col_pb = [(r, rows[r][pb]) for r in sorted(cols[pb]) if r != pa]

        # drop the eliminated pair everywhere first
        for c in list(rows[pa]):
            cols[c].discard(pa)
        rows[pa].clear()
        for r in list(cols[pb]):
            rows[r].pop(pb, None)
        cols[pb].clear()
        for c in list(rows[pb]):
            cols[c].discard(pb)
        rows[pb].clear()
        for r in list(cols[pa]):
            rows[r].pop(pa, None)
        cols[pa].clear()

        # D'[r][c] = D[r][c] - D[pa][c] * alpha^-1 * D[r][pb]
        for c, (s1, c1) in row_pa:
            for r, (s2, c2) in col_pb:
                s12 = prod[s1][s2]
                if s12 < 0:
                    continue
                delta = c1 * c2 / alpha
                old = rows[r].get(c)
                if old is None:
                    coeff = -delta
                    if coeff:
                        rows[r][c] = (s12, coeff)
                        cols[c].add(r)
                        if is_idem[s12]:
                            heapq.heappush(heap, (c, r))
                else:
                    assert old[0] == s12, "homogeneity broken during reduction"
                    coeff = old[1] - delta
                    if coeff:
                        rows[r][c] = (s12, coeff)
                    else:
                        del rows[r][c]
                        cols[c].discard(r)

    kept = [i for i in range(n) if alive[i]]
    pos = {old: new for new, old in enumerate(kept)}
    out = []
    for a in kept:
        for b, (s, coeff) in rows[a].items():
            out.append((pos[a], pos[b], s, coeff.numerator, coeff.denominator))
    out.sort(key=lambda e: (e[0], e[1]))
    return kept, out
