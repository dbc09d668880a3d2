"""Odd crossings and the odd writhe of virtual knots."""

from __future__ import annotations

from typing import Dict, List, Tuple

from .gauss import GaussCode

__all__ = ["NotAKnot", "chord_diagram", "is_odd", "odd_crossings", "odd_writhe"]


class NotAKnot(ValueError):
    pass


def chord_diagram(code: GaussCode) -> Dict[int, Tuple[int, int]]:
    """Positions ``(first, second)`` of the two passages of every crossing."""
    if not code.is_knot:
        raise NotAKnot(f"expected one component, got {len(code.components)}")
    pos: Dict[int, List[int]] = {}
    for i, p in enumerate(code.components[0]):
        pos.setdefault(p.crossing, []).append(i)
    return {c: (ps[0], ps[1]) for c, ps in pos.items()}


def is_odd(code: GaussCode, crossing: int) -> bool:
    """True iff an odd number of passages lie strictly between the two
    visits to ``crossing`` (the count has the same parity on both sides)."""
    i, j = chord_diagram(code)[crossing]
    return (j - i - 1) % 2 == 1


def odd_crossings(code: GaussCode) -> List[int]:
    return [c for c, (i, j) in chord_diagram(code).items() if (j - i) % 2 == 0]


def odd_writhe(code: GaussCode) -> int:
    sign = code.sign
    return sum(sign[c] for c in odd_crossings(code))
