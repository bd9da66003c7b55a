"""Sparse integer Laurent polynomials in q."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(q(?:\^\(?(-?\d+)\)?)?)?")


class Laurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def const(cls, c: int) -> Laurent:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> Laurent:
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def _coerce(self, other) -> Laurent:
        return Laurent.const(other) if isinstance(other, int) else other

    def __add__(self, other) -> Laurent:
        other = self._coerce(other)
        return Laurent(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> Laurent:
        return Laurent((e, -c) for e, c in self._terms)

    def __sub__(self, other) -> Laurent:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Laurent:
        return self._coerce(other) - self

    def __mul__(self, other) -> Laurent:
        other = self._coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Laurent(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Laurent:
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only monomials with unit coefficient are invertible")
            (e, c), = self._terms
            return Laurent({-e * -k: c ** -k})
        out = Laurent.const(1)
        for _ in range(k):
            out = out * self
        return out

    def eval_q1(self) -> int:
        return sum(c for _, c in self._terms)

    def evaluate(self, q):
        return sum(c * q**e for e, c in self._terms)

    def __repr__(self) -> str:
        return f"Laurent({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            body = body + mono
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


Q = Laurent.monomial(1)
ONE = Laurent.const(1)
ZERO = Laurent()


def parse_laurent(text: str) -> Laurent:
    """Parse expressions like ``q^2 - 3q^-1 + 2`` or ``-q``."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty coefficient")
    pos, acc = 0, Laurent()
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"bad Laurent polynomial {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing operator in {text!r} at {pos}")
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        acc = acc + Laurent({exp: sign * coef})
        pos = m.end()
    return acc
