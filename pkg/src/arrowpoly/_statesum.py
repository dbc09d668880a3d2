"""Pure-Python state-sum kernel (fallback for the compiled ``_kernel``).

Both kernels share one contract::

    state_counts(arc_partner, signs, starts) -> {(ab, circles, parts): count}

``arc_partner[p]`` is the port joined to port ``p`` by an arc, ``signs[c]``
the sign of internal crossing ``c`` and ``starts`` the out-ports of the
passages in reading order (each circle is traced from the first unvisited
one).  ``ab`` is alpha - beta, ``circles`` the number of state circles and
``parts`` the sorted tuple of K indices of the non-trivial circles.

Reduced cusp words are never built here: cancelling an adjacent equal pair
removes two letters of opposite position parity, so the sum of
``(+1 for L, -1 for R) * (-1)**position`` is invariant and its absolute
value is the reduced length.
"""

from __future__ import annotations

from typing import Dict, Sequence, Tuple

Key = Tuple[int, int, Tuple[int, ...]]


def state_counts(
    arc_partner: Sequence[int], signs: Sequence[int], starts: Sequence[int]
) -> Dict[Key, int]:
    n = len(signs)
    nports = 4 * n
    counts: Dict[Key, int] = {}
    for mask in range(1 << n):
        ab = 0
        for c in range(n):
            ab += -signs[c] if (mask >> c) & 1 else signs[c]
        visited = [False] * nports
        circles = 0
        parts = []
        for start in starts:
            if visited[start]:
                continue
            circles += 1
            p = start
            pos = 0
            total = 0
            while True:
                visited[p] = True
                q = arc_partner[p]
                visited[q] = True
                c, local = q >> 2, q & 3
                if (mask >> c) & 1:
                    # SE->SW and NW->NE read L; SW->SE and NE->NW read R
                    letter = 1 if local in (1, 2) else -1
                    total += letter if pos % 2 == 0 else -letter
                    pos += 1
                    p = (c << 2) | (local ^ 1)
                else:
                    p = (c << 2) | (local ^ 2)
                if p == start:
                    break
            if total:
                parts.append(abs(total) // 2)
        key = (ab, circles, tuple(sorted(parts)))
        counts[key] = counts.get(key, 0) + 1
    return counts
