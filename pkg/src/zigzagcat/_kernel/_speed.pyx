# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled Gaussian elimination kernel.

Mirrors pure.py step for step: same pivot priority (lazy heap on
(source, target) positions), same snapshots, same update formula, so both
kernels return identical output.  The only difference is the arithmetic:
rationals live in C 64-bit integers (lowest terms, positive denominator)
with 128-bit intermediates.  Any coefficient that leaves the +/-2^62
window raises OverflowError, and the dispatcher in __init__ redoes that
call with exact Python arithmetic.
"""

import heapq

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef int128 LIMIT = (<int128>1) << 62


cdef inline int128 c_abs(int128 x) noexcept nogil:
    return -x if x < 0 else x


cdef int128 c_gcd(int128 a, int128 b) noexcept nogil:
    cdef int128 t
    a = c_abs(a)
    b = c_abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef tuple norm(int128 n, int128 d):
    """Lowest terms, positive denominator, boxed to Python ints."""
    cdef int128 g
    if d < 0:
        n = -n
        d = -d
    if n == 0:
        return (0, 1)
    g = c_gcd(n, d)
    n = n // g
    d = d // g
    if c_abs(n) > LIMIT or d > LIMIT:
        raise OverflowError("kernel coefficient exceeded the 64-bit budget")
    return (<long long>n, <long long>d)


cdef inline tuple q_mul(long long n1, long long d1, long long n2, long long d2):
    return norm(<int128>n1 * n2, <int128>d1 * d2)


cdef inline tuple q_div(long long n1, long long d1, long long n2, long long d2):
    return norm(<int128>n1 * d2, <int128>d1 * n2)


cdef inline tuple q_sub(long long n1, long long d1, long long n2, long long d2):
    return norm(<int128>n1 * d2 - <int128>n2 * d1, <int128>d1 * d2)


def reduce_complex(n, entries, is_idem, prod):
    """entries: iterable of (target, source, sym, num, den).
    Returns (kept, out): kept = surviving original indices in input order,
    out = list of (target_pos, source_pos, sym, num, den) into `kept`,
    sorted by (target_pos, source_pos); coefficients normalized (den > 0,
    lowest terms)."""
    cdef list rows = [dict() for _ in range(n)]
    cdef list cols = [set() for _ in range(n)]
    cdef list heap = []
    cdef list alive = [True] * n
    cdef dict row_pa_d, row_r
    cdef set col_set
    cdef tuple cur, v1, v2, coeff, old
    cdef long long anum, aden, dn, dd, newn
    cdef int pa, pb, r, c, s12
    cdef object a, b, s, num, den

    for a, b, s, num, den in entries:
        coeff = norm(<int128><long long>num, <int128><long long>den)
        if coeff[0] == 0:
            continue
        if b in <dict>rows[a]:
            raise ValueError(f"duplicate entry ({a},{b})")
        (<dict>rows[a])[b] = (s, coeff[0], coeff[1])
        (<set>cols[b]).add(a)
        if is_idem[s]:
            heap.append((b, a))
    heapq.heapify(heap)

    while heap:
        pb, pa = heapq.heappop(heap)
        if not (alive[pa] and alive[pb]):
            continue
        cur = (<dict>rows[pa]).get(pb)
        if cur is None or not is_idem[cur[0]]:
            continue
        anum = cur[1]
        aden = cur[2]
        alive[pa] = alive[pb] = False

        row_pa = [(c, (<dict>rows[pa])[c]) for c in sorted(<dict>rows[pa]) if c != pb]
        col_pb = [(r, (<dict>rows[r])[pb]) for r in sorted(<set>cols[pb]) if r != pa]

        # drop the eliminated pair everywhere first
        for c in list(<dict>rows[pa]):
            (<set>cols[c]).discard(pa)
        (<dict>rows[pa]).clear()
        for r in list(<set>cols[pb]):
            (<dict>rows[r]).pop(pb, None)
        (<set>cols[pb]).clear()
        for c in list(<dict>rows[pb]):
            (<set>cols[c]).discard(pb)
        (<dict>rows[pb]).clear()
        for r in list(<set>cols[pa]):
            (<dict>rows[r]).pop(pa, None)
        (<set>cols[pa]).clear()

        # D'[r][c] = D[r][c] - D[pa][c] * alpha^-1 * D[r][pb]
        for c, v1 in row_pa:
            for r, v2 in col_pb:
                s12 = prod[v1[0]][v2[0]]
                if s12 < 0:
                    continue
                coeff = q_mul(v1[1], v1[2], v2[1], v2[2])
                dn, dd = coeff
                coeff = q_div(dn, dd, anum, aden)
                dn, dd = coeff
                row_r = <dict>rows[r]
                old = row_r.get(c)
                if old is None:
                    if dn:
                        row_r[c] = (s12, -dn, dd)
                        (<set>cols[c]).add(r)
                        if is_idem[s12]:
                            heapq.heappush(heap, (c, r))
                else:
                    if old[0] != s12:
                        raise AssertionError("homogeneity broken during reduction")
                    coeff = q_sub(old[1], old[2], dn, dd)
                    newn = coeff[0]
                    if newn:
                        row_r[c] = (s12, newn, coeff[1])
                    else:
                        del row_r[c]
                        (<set>cols[c]).discard(r)

    kept = [i for i in range(n) if alive[i]]
    pos = {old_i: new_i for new_i, old_i in enumerate(kept)}
    out = []
    for a in kept:
        for b, v1 in (<dict>rows[a]).items():
            out.append((pos[a], pos[b], v1[0], v1[1], v1[2]))
    out.sort(key=lambda e: (e[0], e[1]))
    return kept, out
