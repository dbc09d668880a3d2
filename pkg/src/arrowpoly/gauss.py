"""Signed oriented Gauss codes of virtual links.

A code is a list of components separated by ``;``.  Each component is a
cyclic word of passages ``O<id><sign>`` / ``U<id><sign>``.  Virtual
crossings are not recorded: detour moves act trivially on the code.

Each classical crossing is put in a local normal form with both strands
pointing up, incoming ends at the bottom ports ``SW``/``SE`` and outgoing
ends at the top ports ``NW``/``NE``.  The sign picks the over-diagonal::

    sign +1: over SW -> NE, under SE -> NW
    sign -1: under SW -> NE, over SE -> NW
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

__all__ = [
    "OVER",
    "UNDER",
    "SW",
    "SE",
    "NW",
    "NE",
    "PORT_NAMES",
    "Passage",
    "GaussCode",
    "Arc",
    "CrossingPorts",
    "GaussCodeError",
    "GaussSyntaxError",
    "DuplicateRole",
    "SignMismatch",
    "DanglingCrossing",
    "parse_code",
    "serialize",
    "writhe",
    "mirror",
    "ports",
    "arcs",
    "read_table",
]

OVER = "O"
UNDER = "U"

# local port numbering; port id of a crossing with internal index c is 4*c + port
SW, SE, NW, NE = 0, 1, 2, 3
PORT_NAMES = ("SW", "SE", "NW", "NE")


class GaussCodeError(ValueError):
    """Base class for malformed Gauss codes."""


class GaussSyntaxError(GaussCodeError):
    pass


class DuplicateRole(GaussCodeError):
    pass


class SignMismatch(GaussCodeError):
    pass


class DanglingCrossing(GaussCodeError):
    pass


class Passage(NamedTuple):
    crossing: int
    role: str  # OVER or UNDER


@dataclass(frozen=True)
class GaussCode:
    """Immutable, validated signed Gauss code."""

    components: Tuple[Tuple[Passage, ...], ...]
    signs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        _validate(self.components, dict(self.signs))

    @classmethod
    def from_parts(
        cls, components: Iterable[Iterable[Passage]], signs: Dict[int, int]
    ) -> "GaussCode":
        comps = tuple(tuple(Passage(int(c), r) for c, r in comp) for comp in components)
        used = {p.crossing for comp in comps for p in comp}
        return cls(comps, tuple(sorted((c, int(s)) for c, s in signs.items() if c in used)))

    @property
    def sign(self) -> Dict[int, int]:
        return dict(self.signs)

    @property
    def crossings(self) -> List[int]:
        """Crossing ids in order of first appearance."""
        seen: Dict[int, None] = {}
        for comp in self.components:
            for p in comp:
                seen.setdefault(p.crossing, None)
        return list(seen)

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    def passages(self) -> List[Passage]:
        return [p for comp in self.components for p in comp]

    def canonical(self) -> "GaussCode":
        """Relabel crossings 1..n in order of first appearance."""
        relabel = {c: i + 1 for i, c in enumerate(self.crossings)}
        sign = self.sign
        return GaussCode.from_parts(
            [[Passage(relabel[p.crossing], p.role) for p in comp] for comp in self.components],
            {relabel[c]: sign[c] for c in relabel},
        )

    def __str__(self) -> str:
        return serialize(self)


def _validate(components, signs: Dict[int, int]) -> None:
    roles: Dict[int, List[str]] = {}
    for comp in components:
        for p in comp:
            if p.role not in (OVER, UNDER):
                raise GaussSyntaxError(f"bad role {p.role!r}")
            if not isinstance(p.crossing, int) or p.crossing < 1:
                raise GaussSyntaxError(f"bad crossing id {p.crossing!r}")
            seen = roles.setdefault(p.crossing, [])
            if p.role in seen:
                raise DuplicateRole(f"crossing {p.crossing} has two {p.role} passages")
            seen.append(p.role)
    for c, rs in roles.items():
        if len(rs) != 2:
            raise DanglingCrossing(f"crossing {c} has only one passage")
        if signs.get(c) not in (1, -1):
            raise SignMismatch(f"crossing {c} has no valid sign")
    extra = set(signs) - set(roles)
    if extra:
        raise DanglingCrossing(f"signs given for absent crossings {sorted(extra)}")


_TOKEN = re.compile(r"([OU])(\d+)([+-])")


def parse_code(text: str) -> GaussCode:
    """Parse ``"O1+U2-..."`` style text into a :class:`GaussCode`.

    >>> serialize(parse_code("O1+ U1+"))
    'O1+U1+'
    """
    components = []
    signs: Dict[int, int] = {}
    for chunk in text.split(";"):
        body = re.sub(r"\s+", "", chunk)
        comp = []
        pos = 0
        while pos < len(body):
            m = _TOKEN.match(body, pos)
            if m is None:
                raise GaussSyntaxError(f"bad token at {body[pos:pos + 8]!r}")
            role, cid, s = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
            if cid < 1:
                raise GaussSyntaxError("crossing ids must be positive")
            if signs.setdefault(cid, s) != s:
                raise SignMismatch(f"crossing {cid} carries both signs")
            comp.append(Passage(cid, role))
            pos = m.end()
        components.append(tuple(comp))
    return GaussCode(tuple(components), tuple(sorted(signs.items())))


def serialize(code: GaussCode) -> str:
    """Canonical text form; crossings are renumbered by first appearance."""
    canon = code.canonical()
    sign = canon.sign
    return ";".join(
        "".join(f"{p.role}{p.crossing}{'+' if sign[p.crossing] > 0 else '-'}" for p in comp)
        for comp in canon.components
    )


def writhe(code: GaussCode) -> int:
    return sum(s for _, s in code.signs)


def mirror(code: GaussCode) -> GaussCode:
    """Switch every crossing: roles swapped, signs negated."""
    swap = {OVER: UNDER, UNDER: OVER}
    return GaussCode(
        tuple(tuple(Passage(p.crossing, swap[p.role]) for p in comp) for comp in code.components),
        tuple((c, -s) for c, s in code.signs),
    )


def in_port(role: str, sign: int) -> int:
    return SW if (role == OVER) == (sign > 0) else SE


def out_port(role: str, sign: int) -> int:
    return NE if in_port(role, sign) == SW else NW


@dataclass(frozen=True)
class CrossingPorts:
    """Port tables of a code.

    ``index`` maps crossing id to its internal index (first-appearance
    order).  ``passage_ports[k]`` is the ``(in_port_id, out_port_id)`` of
    the k-th passage in reading order, with global port ids ``4*index+port``.
    ``arc_partner[p]`` is the port at the other end of the arc leaving or
    entering port ``p``.
    """

    index: Dict[int, int]
    layout: Dict[int, Dict[str, int]]
    passage_ports: Tuple[Tuple[int, int], ...]
    arc_partner: Tuple[int, ...]
    free_loops: int


class Arc(NamedTuple):
    """Arc from the out-port of one passage to the in-port of the next.

    ``tail``/``head`` are global port ids, or ``None`` for a crossing-free
    component.
    """

    component: int
    tail: int | None
    head: int | None


def ports(code: GaussCode) -> CrossingPorts:
    sign = code.sign
    index = {c: i for i, c in enumerate(code.crossings)}
    layout = {}
    for c, i in index.items():
        s = sign[c]
        layout[c] = {
            "over_in": in_port(OVER, s),
            "over_out": out_port(OVER, s),
            "under_in": in_port(UNDER, s),
            "under_out": out_port(UNDER, s),
        }
    pp = []
    partner = [-1] * (4 * len(index))
    free = 0
    for comp in code.components:
        if not comp:
            free += 1
            continue
        local = []
        for p in comp:
            base = 4 * index[p.crossing]
            s = sign[p.crossing]
            local.append((base + in_port(p.role, s), base + out_port(p.role, s)))
        for k, (_, out) in enumerate(local):
            nxt_in = local[(k + 1) % len(local)][0]
            partner[out] = nxt_in
            partner[nxt_in] = out
        pp.extend(local)
    return CrossingPorts(index, layout, tuple(pp), tuple(partner), free)


def arcs(code: GaussCode) -> List[Arc]:
    """Edges of the underlying 4-valent graph, one per passage."""
    cp = ports(code)
    out: List[Arc] = []
    k = 0
    for ci, comp in enumerate(code.components):
        if not comp:
            out.append(Arc(ci, None, None))
            continue
        n = len(comp)
        for j in range(n):
            tail = cp.passage_ports[k + j][1]
            head = cp.passage_ports[k + (j + 1) % n][0]
            out.append(Arc(ci, tail, head))
        k += n
    return out


def read_table(lines: Sequence[str]):
    """Yield ``(lineno, name, code_text)`` from table lines.

    Blank lines and lines starting with ``#`` are skipped.  A line without
    a tab yields ``name=None`` so that callers can report it.
    """
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            yield lineno, None, line
            continue
        name, text = line.split("\t", 1)
        yield lineno, name.strip(), text.strip()
