"""Oriented state expansion and the arrow polynomial.

Smoothing rules in port terms (see :mod:`arrowpoly.gauss`):

* oriented smoothing joins SW-NW and SE-NE, no cusps;
* disoriented smoothing joins SW-SE (sink cusp) and NW-NE (source cusp).

Passing a cusp emits a side letter relative to the direction of travel:
SW->SE and NE->NW read ``R``, SE->SW and NW->NE read ``L``.  A positive
crossing weighs oriented by ``A`` and disoriented by ``A^-1``; a negative
crossing the other way round.

The sum over all ``2**n`` states runs in a compiled kernel when available
(``arrowpoly._kernel``), otherwise in :mod:`arrowpoly._statesum`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, NamedTuple, Sequence, Set, Tuple

from .gauss import NE, NW, SE, SW, GaussCode, ports, writhe
from .poly import D_LOOP, ArrowPoly, KMonomial, k_degree_set, monomial

try:  # pragma: no cover - depends on build
    from ._kernel import state_counts as _compiled_state_counts
except ImportError:  # pragma: no cover
    _compiled_state_counts = None

from ._statesum import state_counts as _python_state_counts

__all__ = [
    "SINK",
    "SOURCE",
    "Cusp",
    "CuspWord",
    "StateTrace",
    "TooLarge",
    "OddLength",
    "DEFAULT_MAX_CROSSINGS",
    "KERNEL",
    "trace_state",
    "reduce_word",
    "circle_variable",
    "state_counts",
    "arrow_bracket",
    "arrow_normalized",
    "as_set",
]

SINK = "sink"
SOURCE = "source"

DEFAULT_MAX_CROSSINGS = 24

if os.environ.get("ARROWPOLY_PURE_PYTHON") or _compiled_state_counts is None:
    KERNEL = "python"
else:
    KERNEL = "compiled"


class TooLarge(ValueError):
    pass


class OddLength(AssertionError):
    """Raised for an odd cusp word; only an engine bug can cause it."""


class Cusp(NamedTuple):
    side: str  # "L" or "R"
    crossing: int
    kind: str  # SINK or SOURCE


CuspWord = Tuple[Cusp, ...]


@dataclass(frozen=True)
class StateTrace:
    alpha: int
    beta: int
    circles: Tuple[CuspWord, ...]

    @property
    def letters(self) -> List[str]:
        return ["".join(c.side for c in w) for w in self.circles]


_DISORIENTED_LETTER = {(SW, SE): "R", (SE, SW): "L", (NW, NE): "L", (NE, NW): "R"}


def trace_state(code: GaussCode, choice: int) -> StateTrace:
    """Trace the circles of one state.

    ``choice`` is a bitmask over crossings in first-appearance order; a set
    bit selects the disoriented smoothing.  Each circle is traversed from
    the first unvisited passage, forwards along its outgoing arc.
    """
    cp = ports(code)
    sign = code.sign
    ids = code.crossings
    alpha = beta = 0
    for c, cid in enumerate(ids):
        oriented = not (choice >> c) & 1
        if oriented == (sign[cid] > 0):
            alpha += 1
        else:
            beta += 1
    visited = [False] * (4 * len(ids))
    circles: List[CuspWord] = []
    for _, start in cp.passage_ports:
        if visited[start]:
            continue
        word: List[Cusp] = []
        p = start
        while True:
            visited[p] = True
            q = cp.arc_partner[p]
            visited[q] = True
            c, local = divmod(q, 4)
            if (choice >> c) & 1:
                r = local ^ 1
                kind = SINK if local in (SW, SE) else SOURCE
                word.append(Cusp(_DISORIENTED_LETTER[(local, r)], ids[c], kind))
            else:
                r = local ^ 2
            p = 4 * c + r
            if p == start:
                break
        circles.append(tuple(word))
    circles.extend(() for _ in range(cp.free_loops))
    return StateTrace(alpha, beta, tuple(circles))


def reduce_word(word: Sequence) -> tuple:
    """Cancel adjacent equal letters cyclically until none remain.

    Accepts a string over ``{L, R}`` or a sequence of :class:`Cusp`; the
    result has the same element type (as a tuple, or a string for str input).
    """
    side = (lambda x: x) if isinstance(word, str) else (lambda x: x.side)
    stack: List = []
    for item in word:
        if stack and side(stack[-1]) == side(item):
            stack.pop()
        else:
            stack.append(item)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and side(stack[lo]) == side(stack[hi - 1]):
        lo += 1
        hi -= 1
    out = stack[lo:hi]
    return "".join(out) if isinstance(word, str) else tuple(out)


def circle_variable(reduced: Sequence) -> KMonomial:
    if len(reduced) % 2:
        raise OddLength(f"cusp word of odd length {len(reduced)}")
    n = len(reduced) // 2
    return monomial({n: 1}) if n else ()


def _kernel_inputs(code: GaussCode):
    cp = ports(code)
    sign = code.sign
    signs = [sign[c] for c in code.crossings]
    starts = [out for _, out in cp.passage_ports]
    return list(cp.arc_partner), signs, starts, cp.free_loops


def state_counts(code: GaussCode, kernel: str | None = None) -> Dict[Tuple[int, int, Tuple[int, ...]], int]:
    """Histogram of states by (alpha-beta, circle count, K indices)."""
    partner, signs, starts, free = _kernel_inputs(code)
    kernel = kernel or KERNEL
    if kernel == "compiled":
        if _compiled_state_counts is None:
            raise RuntimeError("compiled kernel is not available")
        raw = _compiled_state_counts(partner, signs, starts)
    elif kernel == "python":
        raw = _python_state_counts(partner, signs, starts)
    else:
        raise ValueError(f"unknown kernel {kernel!r}")
    if not free:
        return raw
    return {(ab, circ + free, parts): v for (ab, circ, parts), v in raw.items()}


@lru_cache(maxsize=64)
def _d_power(k: int) -> ArrowPoly:
    return D_LOOP ** k


def arrow_bracket(
    code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS, kernel: str | None = None
) -> ArrowPoly:
    """Unnormalised arrow bracket: sum of A^(alpha-beta) d^(|S|-1) <S>."""
    if code.n_crossings > max_crossings:
        raise TooLarge(f"{code.n_crossings} crossings exceeds limit {max_crossings}")
    grouped: Dict[Tuple[int, KMonomial], Dict[int, int]] = {}
    for (ab, circ, parts), count in state_counts(code, kernel).items():
        mono = monomial((k, 1) for k in parts)
        bucket = grouped.setdefault((circ - 1, mono), {})
        bucket[ab] = bucket.get(ab, 0) + count
    total = ArrowPoly()
    for (dexp, mono), by_ab in grouped.items():
        coeff = ArrowPoly({(ab, mono): v for ab, v in by_ab.items()})
        total = total + coeff * _d_power(dexp)
    return total


def arrow_normalized(
    code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS, kernel: str | None = None
) -> ArrowPoly:
    """Multiply the bracket by (-A^3)^(-writhe)."""
    w = writhe(code)
    return arrow_bracket(code, max_crossings, kernel).scale((-1) ** (w % 2), -3 * w)


def as_set(code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> Set[int]:
    return k_degree_set(arrow_normalized(code, max_crossings))
