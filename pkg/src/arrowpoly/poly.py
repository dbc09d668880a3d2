"""Exact sparse Laurent polynomials in ``A`` with monomials in ``K1, K2, ...``.

Terms are stored as ``{(a_exp, mono): coeff}`` where ``mono`` is a sorted
tuple of ``(index, exponent)`` pairs.  Coefficients are Python ints, so
there is no overflow.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, List, Mapping, Set, Tuple

__all__ = [
    "KMonomial",
    "ArrowPoly",
    "PolySyntaxError",
    "monomial",
    "mono_mul",
    "add",
    "mul",
    "scale",
    "substitute_K_one",
    "k_degree",
    "k_degree_set",
    "parse_poly",
    "print_poly",
    "D_LOOP",
]

KMonomial = Tuple[Tuple[int, int], ...]
Term = Tuple[int, KMonomial]


class PolySyntaxError(ValueError):
    pass


def monomial(exps: Mapping[int, int] | Iterable[Tuple[int, int]]) -> KMonomial:
    """Normalise an index->exponent association into a KMonomial."""
    items = exps.items() if isinstance(exps, Mapping) else exps
    acc: Dict[int, int] = {}
    for i, j in items:
        if i < 1 or j < 0:
            raise ValueError(f"bad K factor K{i}^{j}")
        acc[i] = acc.get(i, 0) + j
    return tuple(sorted((i, j) for i, j in acc.items() if j))


def mono_mul(m1: KMonomial, m2: KMonomial) -> KMonomial:
    if not m1:
        return m2
    if not m2:
        return m1
    return monomial(m1 + m2)


class ArrowPoly:
    """Immutable element of ``Z[A, A^-1][K1, K2, ...]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Term, int] | None = None):
        self._terms: Dict[Term, int] = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int) -> "ArrowPoly":
        return cls({(0, ()): c})

    @classmethod
    def A(cls, exp: int = 1, coeff: int = 1) -> "ArrowPoly":
        return cls({(exp, ()): coeff})

    @classmethod
    def K(cls, index: int, exp: int = 1) -> "ArrowPoly":
        return cls({(0, monomial({index: exp})): 1})

    @property
    def terms(self) -> Dict[Term, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ArrowPoly.const(other)
        if not isinstance(other, ArrowPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "ArrowPoly":
        if isinstance(other, ArrowPoly):
            return other
        if isinstance(other, int):
            return ArrowPoly.const(other)
        raise TypeError(f"cannot combine ArrowPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return ArrowPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ArrowPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Term, int] = {}
        for (a1, m1), c1 in self._terms.items():
            for (a2, m2), c2 in other._terms.items():
                key = (a1 + a2, mono_mul(m1, m2))
                out[key] = out.get(key, 0) + c1 * c2
        return ArrowPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not ring elements")
        result = ArrowPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int, a_shift: int = 0) -> "ArrowPoly":
        return ArrowPoly({(a + a_shift, m): v * c for (a, m), v in self._terms.items()})

    def invert_A(self) -> "ArrowPoly":
        """Substitute ``A -> A^-1``."""
        return ArrowPoly({(-a, m): v for (a, m), v in self._terms.items()})

    def to_json(self) -> List[dict]:
        return [
            {"coeff": v, "a_exp": a, "k": {str(i): j for i, j in m}}
            for (a, m), v in self.items()
        ]

    @classmethod
    def from_json(cls, data: List[dict]) -> "ArrowPoly":
        out: Dict[Term, int] = {}
        for t in data:
            key = (int(t["a_exp"]), monomial({int(i): int(j) for i, j in t["k"].items()}))
            out[key] = out.get(key, 0) + int(t["coeff"])
        return cls(out)

    def __str__(self):
        return print_poly(self)

    def __repr__(self):
        return f"ArrowPoly({print_poly(self)!r})"


D_LOOP = ArrowPoly({(2, ()): -1, (-2, ()): -1})


def add(p: ArrowPoly, q: ArrowPoly) -> ArrowPoly:
    return p + q


def mul(p: ArrowPoly, q: ArrowPoly) -> ArrowPoly:
    return p * q


def scale(p: ArrowPoly, c: int, a_shift: int = 0) -> ArrowPoly:
    return p.scale(c, a_shift)


def substitute_K_one(p: ArrowPoly) -> ArrowPoly:
    out: Dict[Term, int] = {}
    for (a, _), v in p._terms.items():
        out[(a, ())] = out.get((a, ()), 0) + v
    return ArrowPoly(out)


def k_degree(mono: KMonomial) -> int:
    return sum(i * j for i, j in mono)


def k_degree_set(p: ArrowPoly) -> Set[int]:
    return {k_degree(m) for (_, m) in p._terms}


# ---------------------------------------------------------------- text form


def _factor_text(a: int, mono: KMonomial) -> List[str]:
    parts = []
    if a:
        parts.append(f"A^{a}")
    for i, j in mono:
        parts.append(f"K{i}" if j == 1 else f"K{i}^{j}")
    return parts


def print_poly(p: ArrowPoly) -> str:
    """Canonical text: ascending A exponent, then lexicographic monomial."""
    items = p.items()
    if not items:
        return "0"
    out = []
    for n, ((a, mono), c) in enumerate(items):
        factors = _factor_text(a, mono)
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if n == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TOK = re.compile(r"\s*(?:(\d+)|(A)|(K)|(\^)|([-+*()]))")


def _tokenize(text: str) -> List[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if m is None or m.end() == pos:
            raise PolySyntaxError(f"unexpected input at {text[pos:pos + 10]!r}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: List[str]):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise PolySyntaxError(f"expected {expect or 'token'}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> ArrowPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        total = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            total = total + self.term().scale(sign)
        return total

    def term(self) -> ArrowPoly:
        acc = self.factor()
        while True:
            if self.peek() == "*":
                self.take()
                acc = acc * self.factor()
            elif self.peek() in ("A", "K", "("):
                acc = acc * self.factor()
            else:
                return acc

    def integer(self, signed: bool) -> int:
        neg = False
        if signed and self.peek() in ("-", "+"):
            neg = self.take() == "-"
        tok = self.take()
        if not tok.isdigit():
            raise PolySyntaxError(f"expected integer, got {tok!r}")
        return -int(tok) if neg else int(tok)

    def factor(self) -> ArrowPoly:
        tok = self.peek()
        if tok is None:
            raise PolySyntaxError("unexpected end of input")
        if tok.isdigit():
            return ArrowPoly.const(int(self.take()))
        if tok == "A":
            self.take()
            exp = 1
            if self.peek() == "^":
                self.take()
                exp = self.integer(signed=True)
            return ArrowPoly.A(exp)
        if tok == "K":
            self.take()
            idx = self.integer(signed=False)
            if idx < 1:
                raise PolySyntaxError("K indices start at 1")
            exp = 1
            if self.peek() == "^":
                self.take()
                exp = self.integer(signed=False)
            return ArrowPoly.K(idx, exp) if exp else ArrowPoly.const(1)
        if tok == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise PolySyntaxError(f"unexpected token {tok!r}")


def parse_poly(text: str) -> ArrowPoly:
    """Parse polynomial text; parenthesised A-coefficients are accepted.

    >>> print_poly(parse_poly("A^4 + A^-4 + 1 - (A^4 + A^-4 + 2)*K1^2 + 2*K2"))
    'A^-4 - A^-4*K1^2 + 1 - 2*K1^2 + 2*K2 + A^4 - A^4*K1^2'
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolySyntaxError("empty polynomial")
    p = _Parser(tokens)
    result = p.expr()
    if p.peek() is not None:
        raise PolySyntaxError(f"trailing input {p.peek()!r}")
    return result
