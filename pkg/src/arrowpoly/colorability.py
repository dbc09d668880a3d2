"""Checkerboard colorability: a diagram-level GF(2) solver and knot-level
obstructions from the odd writhe and the arrow polynomial.

A diagram is checkerboard colorable iff the edges of its 4-valent graph
can be oriented so that, around every crossing, ends alternate in/out.
One unknown per arc says whether it is reversed against the diagram's own
orientation.  With ``status(end) = head(end) xor x(arc)`` meaning "points
into the crossing", each crossing contributes::

    status(SW) = status(NE)
    status(NW) = status(SE)
    status(SW) = 1 xor status(SE)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .arrow import DEFAULT_MAX_CROSSINGS, arrow_normalized
from .gauss import NE, NW, SE, SW, GaussCode, arcs
from .parity import odd_writhe
from .poly import ArrowPoly, k_degree, print_poly

__all__ = [
    "COLORABLE",
    "NOT_COLORABLE",
    "UNKNOWN",
    "AlternationSystem",
    "Obstruction",
    "ColorabilityVerdict",
    "alternation_system",
    "solve_gf2",
    "diagram_colorable",
    "verify_witness",
    "obstructions",
    "criteria_verdict",
]

COLORABLE = "Colorable"
NOT_COLORABLE = "NotColorable"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class AlternationSystem:
    n_arcs: int
    rows: Tuple[int, ...]  # bit i = arc i, bit n_arcs = right-hand side
    end_arc: Dict[int, Tuple[int, int]]  # port id -> (arc index, head bit)


def _end_table(code: GaussCode):
    table: Dict[int, Tuple[int, int]] = {}
    arc_list = arcs(code)
    for i, arc in enumerate(arc_list):
        if arc.tail is None:
            continue
        table[arc.tail] = (i, 0)
        table[arc.head] = (i, 1)
    return arc_list, table


def alternation_system(code: GaussCode) -> AlternationSystem:
    arc_list, ends = _end_table(code)
    n = len(arc_list)
    rows = []
    for c in range(code.n_crossings):
        base = 4 * c
        for a, b, rhs in ((SW, NE, 0), (NW, SE, 0), (SW, SE, 1)):
            ia, ha = ends[base + a]
            ib, hb = ends[base + b]
            row = (1 << ia) ^ (1 << ib)
            if ha ^ hb ^ rhs:
                row |= 1 << n
            rows.append(row)
    return AlternationSystem(n, tuple(rows), ends)


def solve_gf2(rows: List[int], n_vars: int) -> Optional[List[int]]:
    """Solve an augmented GF(2) system; free variables are set to 0.

    Pivots are taken on the lowest variable index first.  Returns ``None``
    when the system is inconsistent.
    """
    work = list(rows)
    pivots: List[Tuple[int, int]] = []
    r = 0
    for col in range(n_vars):
        pivot = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        pivots.append((r, col))
        r += 1
    rhs_bit = 1 << n_vars
    for i in range(r, len(work)):
        if work[i] == rhs_bit:
            return None
    solution = [0] * n_vars
    for row, col in pivots:
        solution[col] = (work[row] >> n_vars) & 1
    return solution


def diagram_colorable(code: GaussCode) -> Optional[Tuple[int, ...]]:
    """Return an arc-reversal witness if the diagram is checkerboard
    colorable, else ``None``."""
    system = alternation_system(code)
    sol = solve_gf2(list(system.rows), system.n_arcs)
    return None if sol is None else tuple(sol)


def verify_witness(code: GaussCode, witness) -> bool:
    arc_list, ends = _end_table(code)
    if len(witness) != len(arc_list):
        return False
    for c in range(code.n_crossings):
        base = 4 * c
        status = {}
        for port in (NE, NW, SW, SE):
            i, head = ends[base + port]
            status[port] = head ^ (witness[i] & 1)
        ring = [status[NE], status[NW], status[SW], status[SE]]
        if any(ring[k] == ring[(k + 1) % 4] for k in range(4)):
            return False
    return True


@dataclass(frozen=True)
class Obstruction:
    criterion: str  # "C1", "C2" or "C3"
    detail: str
    value: Optional[int] = None
    summand: Optional[str] = None

    def to_json(self) -> dict:
        out = {"criterion": self.criterion, "detail": self.detail}
        if self.value is not None:
            out["value"] = self.value
        if self.summand is not None:
            out["summand"] = self.summand
        return out


@dataclass(frozen=True)
class ColorabilityVerdict:
    verdict: str
    witness: Optional[Tuple[int, ...]] = None
    obstructions: Tuple[Obstruction, ...] = field(default_factory=tuple)

    def criteria(self) -> List[str]:
        return sorted({o.criterion for o in self.obstructions})

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.obstructions:
            out["obstructions"] = [o.to_json() for o in self.obstructions]
        if self.verdict == UNKNOWN:
            out["diagram_check"] = "failed"
        return out


def _summand_text(a: int, mono, coeff: int) -> str:
    return print_poly(ArrowPoly({(a, mono): coeff}))


def obstructions(
    code: GaussCode, poly: Optional[ArrowPoly] = None, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> List[Obstruction]:
    """Knot-level obstructions to checkerboard colorability.

    C1: nonzero odd writhe (knots only).  C2: an odd k-degree, one entry
    per distinct degree.  C3: a summand whose largest K index i_v has
    2*i_v > its k-degree, one entry per such summand.
    """
    found: List[Obstruction] = []
    if code.is_knot:
        j = odd_writhe(code)
        if j:
            found.append(Obstruction("C1", f"odd writhe J = {j}", value=j))
    if poly is None:
        poly = arrow_normalized(code, max_crossings)
    seen_odd = set()
    for (a, mono), coeff in poly.items():
        kd = k_degree(mono)
        if kd % 2 and kd not in seen_odd:
            seen_odd.add(kd)
            found.append(
                Obstruction("C2", f"odd k-degree {kd}", value=kd, summand=_summand_text(a, mono, coeff))
            )
    for (a, mono), coeff in poly.items():
        if not mono:
            continue
        top, kd = mono[-1][0], k_degree(mono)
        if 2 * top > kd:
            found.append(
                Obstruction("C3", f"2*{top} > k-degree {kd}", value=top, summand=_summand_text(a, mono, coeff))
            )
    return found


def criteria_verdict(
    code: GaussCode, poly: Optional[ArrowPoly] = None, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> ColorabilityVerdict:
    found = obstructions(code, poly, max_crossings)
    if found:
        return ColorabilityVerdict(NOT_COLORABLE, obstructions=tuple(found))
    witness = diagram_colorable(code)
    if witness is not None:
        return ColorabilityVerdict(COLORABLE, witness=witness)
    return ColorabilityVerdict(UNKNOWN)
