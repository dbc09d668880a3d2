# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled state-sum kernel; same contract as ``arrowpoly._statesum``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libcpp.unordered_map cimport unordered_map
from cython.operator cimport dereference as deref, preincrement as inc

ctypedef unsigned long long u64

MAX_CROSSINGS = 24


def state_counts(arc_partner, signs, starts):
    cdef int n = len(signs)
    if n > MAX_CROSSINGS:
        raise OverflowError(f"kernel handles at most {MAX_CROSSINGS} crossings")
    cdef int nports = 4 * n
    cdef int nstarts = len(starts)
    cdef int *partner = <int *> malloc(max(nports, 1) * sizeof(int))
    cdef int *sgn = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *st = <int *> malloc(max(nstarts, 1) * sizeof(int))
    cdef char *visited = <char *> malloc(max(nports, 1))
    cdef int *mult = <int *> malloc((n + 2) * sizeof(int))
    cdef u64 *weight = <u64 *> malloc((n + 2) * sizeof(u64))
    cdef unordered_map[u64, u64] acc
    cdef int i, c, local, p, q, start, pos, total, ab, circles, k
    cdef u64 mask, nmask, code, key
    cdef u64 ab_span = 2 * n + 1
    cdef unordered_map[u64, u64].iterator it
    cdef u64 rest
    cdef u64 circ_span = 2 * n + 2
    try:
        for i in range(nports):
            partner[i] = arc_partner[i]
        for i in range(n):
            sgn[i] = signs[i]
        for i in range(nstarts):
            st[i] = starts[i]
        # mixed radix for K multiplicities: m_i <= n // i
        weight[1] = 1
        for i in range(1, n + 1):
            weight[i + 1] = weight[i] * <u64> (n // i + 1)
        nmask = (<u64> 1) << n
        with nogil:
            mask = 0
            while mask < nmask:
                ab = 0
                for c in range(n):
                    if (mask >> c) & 1:
                        ab -= sgn[c]
                    else:
                        ab += sgn[c]
                memset(visited, 0, nports)
                memset(mult, 0, (n + 2) * sizeof(int))
                circles = 0
                for i in range(nstarts):
                    start = st[i]
                    if visited[start]:
                        continue
                    circles += 1
                    p = start
                    pos = 0
                    total = 0
                    while True:
                        visited[p] = 1
                        q = partner[p]
                        visited[q] = 1
                        c = q >> 2
                        local = q & 3
                        if (mask >> c) & 1:
                            if local == 1 or local == 2:
                                total += 1 if (pos & 1) == 0 else -1
                            else:
                                total += -1 if (pos & 1) == 0 else 1
                            pos += 1
                            p = (c << 2) | (local ^ 1)
                        else:
                            p = (c << 2) | (local ^ 2)
                        if p == start:
                            break
                    if total != 0:
                        if total < 0:
                            total = -total
                        mult[total >> 1] += 1
                code = 0
                for k in range(1, n + 1):
                    code += <u64> mult[k] * weight[k]
                key = (code * ab_span + <u64> (ab + n)) * circ_span + <u64> circles
                acc[key] += 1
                mask += 1

        out = {}
        it = acc.begin()
        while it != acc.end():
            key = deref(it).first
            circles = <int> (key % circ_span)
            rest = key // circ_span
            ab = <int> (rest % ab_span) - n
            code = rest // ab_span
            parts = []
            for k in range(n, 0, -1):
                c = <int> (code // weight[k])
                code -= <u64> c * weight[k]
                parts.extend([k] * c)
            out[(ab, circles, tuple(sorted(parts)))] = deref(it).second
            inc(it)
    finally:
        free(partner)
        free(sgn)
        free(st)
        free(visited)
        free(mult)
        free(weight)
    return out
