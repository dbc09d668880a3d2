"""Classical Reidemeister rewrites on Gauss codes.

Virtual moves and detour moves do not change a Gauss code, so only the
classical moves are modelled:

* ``R1Add`` / ``R1Remove``: a kink, two adjacent passages of one crossing.
* ``R2Add`` / ``R2Remove``: two crossings of opposite sign whose over
  passages are adjacent on one strand and whose under passages are
  adjacent on another.
* ``R3``: three crossings forming a triangle (top strand over two, middle
  strand under one and over one, bottom strand under two), every pair of
  passages adjacent.  The move reverses each pair.  Which sign patterns
  form a triangle is decided by placing three straight lines and reading
  off crossing signs, see :func:`r3_signs`.

Gaps are ``(component, index)``: inserting at index ``k`` puts the new
passages before the current ``k``-th one (``k == len`` appends).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .gauss import OVER, UNDER, GaussCode, Passage

__all__ = [
    "R1_ADD",
    "R1_REMOVE",
    "R2_ADD",
    "R2_REMOVE",
    "R3",
    "ALL_KINDS",
    "InvalidSite",
    "MoveStep",
    "enumerate_sites",
    "apply",
    "random_walk",
    "random_code",
    "same_code",
    "r3_signs",
]

R1_ADD = "R1Add"
R1_REMOVE = "R1Remove"
R2_ADD = "R2Add"
R2_REMOVE = "R2Remove"
R3 = "R3"
ALL_KINDS = (R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3)

Pos = Tuple[int, int]  # (component, index)


class InvalidSite(ValueError):
    pass


@dataclass(frozen=True)
class MoveStep:
    """One rewrite, bound to the code it was enumerated on.

    Field use by kind:

    * R1Add: ``gaps=(g,)``, ``labels=(c,)``, ``roles=(r1, r2)``, ``signs=(s,)``
    * R1Remove: ``labels=(c,)``, ``pairs=((p, q),)``
    * R2Add: ``gaps=(g_over, g_under)``, ``labels=(a, b)``, ``signs=(s_a, s_b)``,
      ``parallel``, ``over_first`` (only matters when both gaps coincide)
    * R2Remove: ``labels=(a, b)``, ``pairs=(over_pair, under_pair)``
    * R3: ``labels=(x, y, z)``, ``pairs=(top, middle, bottom)``
    """

    kind: str
    labels: Tuple[int, ...]
    gaps: Tuple[Pos, ...] = ()
    pairs: Tuple[Tuple[Pos, Pos], ...] = ()
    roles: Tuple[str, ...] = ()
    signs: Tuple[int, ...] = ()
    parallel: bool = True
    over_first: bool = True
    source: Optional[GaussCode] = field(default=None, compare=False, repr=False)

    @property
    def inverse(self) -> "MoveStep":
        if self.source is None:
            raise InvalidSite("step is not bound to a code")
        return _inverse(self.source, self)


# ----------------------------------------------------------------- helpers


def _comps(code: GaussCode) -> List[List[Passage]]:
    return [list(c) for c in code.components]


def _build(comps: Sequence[Sequence[Passage]], signs: Dict[int, int]) -> GaussCode:
    return GaussCode.from_parts(comps, signs)


def _locate(code: GaussCode) -> Dict[Passage, Pos]:
    return {p: (ci, i) for ci, comp in enumerate(code.components) for i, p in enumerate(comp)}


def _next(code: GaussCode, pos: Pos) -> Pos:
    ci, i = pos
    return (ci, (i + 1) % len(code.components[ci]))


def _adjacent_pair(code: GaussCode, p: Pos, q: Pos) -> Optional[Tuple[Pos, Pos]]:
    """Return ``(p, q)`` or ``(q, p)`` ordered along the strand, if adjacent."""
    if p[0] != q[0] or p == q:
        return None
    if _next(code, p) == q:
        return (p, q)
    if _next(code, q) == p:
        return (q, p)
    return None


def _ordered_pairs(code: GaussCode, p: Pos, q: Pos) -> List[Tuple[Pos, Pos]]:
    """Every strand-ordered form of an adjacent pair.  On a two-passage
    component both orders are arcs, so both are returned."""
    if p[0] != q[0] or p == q:
        return []
    return [pair for pair in ((p, q), (q, p)) if _next(code, pair[0]) == pair[1]]


def _gaps(code: GaussCode) -> List[Pos]:
    return [(ci, i) for ci, comp in enumerate(code.components) for i in range(max(len(comp), 1))]


def _fresh(code: GaussCode, k: int) -> Tuple[int, ...]:
    top = max(code.crossings, default=0)
    return tuple(range(top + 1, top + 1 + k))


def _insert(code: GaussCode, inserts: Iterable[Tuple[Pos, Sequence[Passage]]], signs: Dict[int, int]) -> GaussCode:
    """Insert passage runs at gaps; runs at the same gap keep their order."""
    comps = _comps(code)
    by_comp: Dict[int, List[Tuple[int, int, Sequence[Passage]]]] = {}
    for order, ((ci, idx), run) in enumerate(inserts):
        if not 0 <= ci < len(comps) or not 0 <= idx <= len(comps[ci]):
            raise InvalidSite(f"gap {(ci, idx)} out of range")
        by_comp.setdefault(ci, []).append((idx, order, run))
    for ci, runs in by_comp.items():
        old = comps[ci]
        new: List[Passage] = []
        runs.sort(key=lambda t: (t[0], t[1]))
        k = 0
        for i in range(len(old) + 1):
            while k < len(runs) and runs[k][0] == i:
                new.extend(runs[k][2])
                k += 1
            if i < len(old):
                new.append(old[i])
        comps[ci] = new
    sign = code.sign
    sign.update(signs)
    return _build(comps, sign)


def _remove(code: GaussCode, labels: Sequence[int]) -> GaussCode:
    drop = set(labels)
    comps = [[p for p in comp if p.crossing not in drop] for comp in code.components]
    return _build(comps, {c: s for c, s in code.signs if c not in drop})


def _check_pair(code: GaussCode, pair: Tuple[Pos, Pos], expect: Sequence[Passage]) -> None:
    try:
        got = [code.components[ci][i] for ci, i in pair]
    except IndexError:
        raise InvalidSite("position out of range") from None
    if got != list(expect) or _next(code, pair[0]) != pair[1]:
        raise InvalidSite(f"expected {expect} at {pair}, found {got}")


def _gap_after_removal(code: GaussCode, pair: Tuple[Pos, Pos], removed: set) -> Tuple[int, int]:
    """Gap index in the reduced component where ``pair`` used to sit, plus a
    sort key that orders runs sharing that gap."""
    (ci, i), (_, j) = pair
    comp = code.components[ci]
    if j == (i + 1) and j < len(comp):
        before = sum(1 for k in range(i) if (ci, k) not in removed)
        return before, i
    # wrap-around pair: reinsert at the end of the reduced component
    remaining = sum(1 for k in range(len(comp)) if (ci, k) not in removed)
    return remaining, len(comp)


# -------------------------------------------------------------- R3 geometry


def _cross(u, v) -> int:
    z = u[0] * v[1] - u[1] * v[0]
    return (z > 0) - (z < 0)


def r3_signs(top_xy: bool, mid_xz: bool, bot_yz: bool, ccw: bool) -> Tuple[int, int, int]:
    """Crossing signs of three straight strands forming a triangle.

    ``x`` = top∩middle, ``y`` = top∩bottom, ``z`` = middle∩bottom.  The
    flags say whether each strand meets its crossings in the order named.
    A crossing is positive when cross(over_dir, under_dir) > 0.
    """
    X, Y, Z = (0, 0), (1, 0), (0, 1 if ccw else -1)

    def d(p, q, forward):
        return (q[0] - p[0], q[1] - p[1]) if forward else (p[0] - q[0], p[1] - q[1])

    top, mid, bot = d(X, Y, top_xy), d(X, Z, mid_xz), d(Y, Z, bot_yz)
    return _cross(top, mid), _cross(top, bot), _cross(mid, bot)


def _r3_valid(top_xy: bool, mid_xz: bool, bot_yz: bool, signs: Tuple[int, int, int]) -> bool:
    return any(r3_signs(top_xy, mid_xz, bot_yz, ccw) == signs for ccw in (True, False))


# ------------------------------------------------------------ enumeration


def _sites_r1_add(code: GaussCode) -> List[MoveStep]:
    (label,) = _fresh(code, 1)
    out = []
    for g in _gaps(code):
        for roles in ((OVER, UNDER), (UNDER, OVER)):
            for s in (1, -1):
                out.append(MoveStep(R1_ADD, (label,), gaps=(g,), roles=roles, signs=(s,), source=code))
    return out


def _sites_r1_remove(code: GaussCode) -> List[MoveStep]:
    loc = _locate(code)
    out = []
    for c in code.crossings:
        pair = _adjacent_pair(code, loc[Passage(c, OVER)], loc[Passage(c, UNDER)])
        if pair is not None:
            out.append(MoveStep(R1_REMOVE, (c,), pairs=(pair,), source=code))
    return out


def _sites_r2_add(code: GaussCode) -> List[MoveStep]:
    a, b = _fresh(code, 2)
    gaps = _gaps(code)
    out = []
    for go in gaps:
        for gu in gaps:
            for parallel in (True, False):
                for s in (1, -1):
                    orders = (True, False) if go == gu else (True,)
                    for first in orders:
                        out.append(
                            MoveStep(
                                R2_ADD,
                                (a, b),
                                gaps=(go, gu),
                                signs=(s, -s),
                                parallel=parallel,
                                over_first=first,
                                source=code,
                            )
                        )
    return out


def _sites_r2_remove(code: GaussCode) -> List[MoveStep]:
    loc = _locate(code)
    sign = code.sign
    ids = code.crossings
    out = []
    for ia, a in enumerate(ids):
        for b in ids[ia + 1:]:
            if sign[a] != -sign[b]:
                continue
            over = _adjacent_pair(code, loc[Passage(a, OVER)], loc[Passage(b, OVER)])
            under = _adjacent_pair(code, loc[Passage(a, UNDER)], loc[Passage(b, UNDER)])
            if over is None or under is None:
                continue
            first = code.components[over[0][0]][over[0][1]].crossing
            labels = (a, b) if first == a else (b, a)
            out.append(MoveStep(R2_REMOVE, labels, pairs=(over, under), source=code))
    return out


def _sites_r3(code: GaussCode) -> List[MoveStep]:
    loc = _locate(code)
    sign = code.sign
    out = []
    seen = set()
    for ci, comp in enumerate(code.components):
        n = len(comp)
        if n < 2:
            continue
        for i in range(n):
            top = ((ci, i), (ci, (i + 1) % n))
            p, q = comp[i], comp[(i + 1) % n]
            if p.role != OVER or q.role != OVER:
                continue
            for x, y in ((p.crossing, q.crossing), (q.crossing, p.crossing)):
                ux, uy = loc[Passage(x, UNDER)], loc[Passage(y, UNDER)]
                for nb in (_next(code, ux), _prev(code, ux)):
                    z_pass = code.components[nb[0]][nb[1]]
                    z = z_pass.crossing
                    if z_pass.role != OVER or z in (x, y):
                        continue
                    for mid in _ordered_pairs(code, ux, nb):
                        for bot in _ordered_pairs(code, uy, loc[Passage(z, UNDER)]):
                            flags = (p.crossing == x, mid[0] == ux, bot[0] == uy)
                            key = (top, mid, bot)
                            if key in seen or not _r3_valid(*flags, (sign[x], sign[y], sign[z])):
                                continue
                            seen.add(key)
                            out.append(MoveStep(R3, (x, y, z), pairs=key, source=code))
    return out


def _prev(code: GaussCode, pos: Pos) -> Pos:
    ci, i = pos
    return (ci, (i - 1) % len(code.components[ci]))


_ENUM = {
    R1_ADD: _sites_r1_add,
    R1_REMOVE: _sites_r1_remove,
    R2_ADD: _sites_r2_add,
    R2_REMOVE: _sites_r2_remove,
    R3: _sites_r3,
}


def enumerate_sites(code: GaussCode, kind: str) -> List[MoveStep]:
    """All applicable steps of one kind, in a deterministic order."""
    try:
        return _ENUM[kind](code)
    except KeyError:
        raise ValueError(f"unknown move kind {kind!r}") from None


# ------------------------------------------------------------------ apply


def apply(code: GaussCode, step: MoveStep) -> GaussCode:
    kind = step.kind
    if kind == R1_ADD:
        (c,), (g,) = step.labels, step.gaps
        if c in code.sign:
            raise InvalidSite(f"label {c} already used")
        run = [Passage(c, step.roles[0]), Passage(c, step.roles[1])]
        return _insert(code, [(g, run)], {c: step.signs[0]})
    if kind == R1_REMOVE:
        (c,), (pair,) = step.labels, step.pairs
        got = {code.components[ci][i] for ci, i in pair if ci < len(code.components) and i < len(code.components[ci])}
        if got != {Passage(c, OVER), Passage(c, UNDER)} or _next(code, pair[0]) != pair[1]:
            raise InvalidSite(f"no kink of crossing {c} at {pair}")
        return _remove(code, [c])
    if kind == R2_ADD:
        a, b = step.labels
        if a in code.sign or b in code.sign:
            raise InvalidSite("labels already used")
        over = [Passage(a, OVER), Passage(b, OVER)]
        under = [Passage(a, UNDER), Passage(b, UNDER)] if step.parallel else [Passage(b, UNDER), Passage(a, UNDER)]
        go, gu = step.gaps
        runs = [(go, over), (gu, under)] if step.over_first else [(gu, under), (go, over)]
        return _insert(code, runs, {a: step.signs[0], b: step.signs[1]})
    if kind == R2_REMOVE:
        a, b = step.labels
        over, under = step.pairs
        sign = code.sign
        if sign.get(a) is None or sign.get(b) is None or sign[a] != -sign[b]:
            raise InvalidSite("R2 crossings must have opposite signs")
        _check_pair(code, over, [Passage(a, OVER), Passage(b, OVER)])
        ua, ub = Passage(a, UNDER), Passage(b, UNDER)
        try:
            _check_pair(code, under, [ua, ub])
        except InvalidSite:
            _check_pair(code, under, [ub, ua])
        return _remove(code, [a, b])
    if kind == R3:
        fresh = [s for s in _sites_r3(code) if s == step]
        if not fresh:
            raise InvalidSite(f"no R3 triangle at {step.pairs}")
        comps = _comps(code)
        for (c1, i1), (c2, i2) in step.pairs:
            comps[c1][i1], comps[c2][i2] = comps[c2][i2], comps[c1][i1]
        return _build(comps, code.sign)
    raise ValueError(f"unknown move kind {kind!r}")


def _inverse(code: GaussCode, step: MoveStep) -> MoveStep:
    after = apply(code, step)
    kind = step.kind
    if kind == R1_ADD:
        (c,) = step.labels
        (s,) = _sites_of(after, R1_REMOVE, lambda t: t.labels == (c,))
        return s
    if kind == R2_ADD:
        wanted = set(step.labels)
        (s,) = _sites_of(after, R2_REMOVE, lambda t: set(t.labels) == wanted)
        return s
    if kind == R3:
        return MoveStep(R3, step.labels, pairs=step.pairs, source=after)
    if kind == R1_REMOVE:
        (c,), (pair,) = step.labels, step.pairs
        removed = set(pair)
        idx, _ = _gap_after_removal(code, pair, removed)
        roles = tuple(code.components[ci][i].role for ci, i in pair)
        return MoveStep(
            R1_ADD, (c,), gaps=((pair[0][0], idx),), roles=roles, signs=(code.sign[c],), source=after
        )
    if kind == R2_REMOVE:
        a, b = step.labels
        over, under = step.pairs
        removed = set(over) | set(under)
        go, ko = _gap_after_removal(code, over, removed)
        gu, ku = _gap_after_removal(code, under, removed)
        first_under = code.components[under[0][0]][under[0][1]].crossing
        sign = code.sign
        return MoveStep(
            R2_ADD,
            (a, b),
            gaps=((over[0][0], go), (under[0][0], gu)),
            signs=(sign[a], sign[b]),
            parallel=first_under == a,
            over_first=ko < ku if (over[0][0], go) == (under[0][0], gu) else True,
            source=after,
        )
    raise ValueError(f"unknown move kind {kind!r}")


def _sites_of(code: GaussCode, kind: str, pred) -> List[MoveStep]:
    found = [s for s in enumerate_sites(code, kind) if pred(s)]
    return found[:1] if found else []


# ------------------------------------------------------------ comparisons


def _min_rotation(comp: Sequence[Passage]) -> Tuple[Passage, ...]:
    if not comp:
        return ()
    return min(tuple(comp[i:]) + tuple(comp[:i]) for i in range(len(comp)))


def same_code(a: GaussCode, b: GaussCode) -> bool:
    """Equality up to cyclic rotation of each component."""
    if a.signs != b.signs or len(a.components) != len(b.components):
        return False
    return all(_min_rotation(x) == _min_rotation(y) for x, y in zip(a.components, b.components))


# ----------------------------------------------------------- random walks


def random_code(rng: random.Random, n_crossings: int, n_components: int = 1) -> GaussCode:
    """Uniformly shuffled signed Gauss code (not necessarily planar)."""
    passages = []
    signs = {}
    for c in range(1, n_crossings + 1):
        first = rng.choice((OVER, UNDER))
        passages += [Passage(c, first), Passage(c, UNDER if first == OVER else OVER)]
        signs[c] = rng.choice((1, -1))
    rng.shuffle(passages)
    cuts = sorted(rng.randint(0, len(passages)) for _ in range(n_components - 1))
    comps, prev = [], 0
    for cut in cuts + [len(passages)]:
        comps.append(passages[prev:cut])
        prev = cut
    return _build(comps, signs).canonical()


def random_walk(
    code: GaussCode,
    n: int,
    seed: int,
    kinds: Sequence[str] = ALL_KINDS,
    max_crossings: Optional[int] = None,
) -> List[GaussCode]:
    """Apply ``n`` random moves; returns the ``n + 1`` codes visited.

    A kind is drawn uniformly among those with at least one site, then a
    site uniformly.  Add-moves that would exceed ``max_crossings`` are
    skipped.  If nothing applies the code repeats.
    """
    rng = random.Random(seed)
    path = [code]
    growth = {R1_ADD: 1, R2_ADD: 2}
    for _ in range(n):
        current = path[-1]
        options = []
        for kind in kinds:
            if max_crossings is not None and current.n_crossings + growth.get(kind, 0) > max_crossings:
                continue
            sites = enumerate_sites(current, kind)
            if sites:
                options.append(sites)
        if not options:
            path.append(current)
            continue
        step = rng.choice(rng.choice(options))
        path.append(apply(current, step))
    return path
