"""The quotient G_{g,n} = B_{g,n} / <s_i^2>, realised as F_g^n x| S_n.

An element is ``(h_1, ..., h_n; alpha)``.  Column c holds a free word in the
letters b_{1,g+c}, ..., b_{g,g+c}.  Multiplication is

    (h; a) (h'; a') = (h * a.h'; a a')

where ``a.h'`` moves column c of h' to column a(c) (relabelling its letters).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import Permutation
from .freewords import FreeWord, format_word, gen, reduce
from .handlebody import HandleWord


def _relabel(h: FreeWord, g: int, col: int) -> FreeWord:
    return FreeWord._trusted(tuple((gen("b", s.indices[0], g + col), e) for s, e in h.letters))


@dataclass(frozen=True)
class WreathElement:
    g: int
    n: int
    columns: tuple[FreeWord, ...]
    perm: Permutation

    def __post_init__(self):
        if len(self.columns) != self.n or self.perm.size != self.n:
            raise ValueError("column count and permutation size must equal n")
        for c, h in enumerate(self.columns, start=1):
            for s, _ in h.letters:
                if s.family != "b" or s.indices[1] != self.g + c or not 1 <= s.indices[0] <= self.g:
                    raise ValueError(f"letter {s} does not belong to column {c}")

    @classmethod
    def identity(cls, g: int, n: int) -> WreathElement:
        return cls(g, n, (FreeWord(),) * n, Permutation.identity(n))

    @classmethod
    def loop(cls, g: int, n: int, i: int, col: int, e: int = 1) -> WreathElement:
        """The single letter b_{i,g+col}^e."""
        cols = [FreeWord()] * n
        cols[col - 1] = reduce([(gen("b", i, g + col), e)])
        return cls(g, n, tuple(cols), Permutation.identity(n))

    @classmethod
    def swap(cls, g: int, n: int, k: int) -> WreathElement:
        return cls(g, n, (FreeWord(),) * n, Permutation.transposition(n, k, k + 1))

    def __mul__(self, other: WreathElement) -> WreathElement:
        return multiply(self, other)

    def is_identity(self) -> bool:
        return self == WreathElement.identity(self.g, self.n)

    def __str__(self) -> str:
        cols = ", ".join(f"h{c}={format_word(h)}" for c, h in enumerate(self.columns, start=1))
        return f"({cols}; {self.perm})"


def act(alpha: Permutation, cols: tuple[FreeWord, ...], g: int) -> tuple[FreeWord, ...]:
    inv = alpha.inverse()
    return tuple(_relabel(cols[inv(d) - 1], g, d) for d in range(1, len(cols) + 1))


def multiply(x: WreathElement, y: WreathElement) -> WreathElement:
    if (x.g, x.n) != (y.g, y.n):
        raise ValueError("parameter mismatch")
    moved = act(x.perm, y.columns, x.g)
    cols = tuple(a * b for a, b in zip(x.columns, moved))
    return WreathElement(x.g, x.n, cols, x.perm * y.perm)


def inverse(x: WreathElement) -> WreathElement:
    pinv = x.perm.inverse()
    cols = act(pinv, tuple(~h for h in x.columns), x.g)
    return WreathElement(x.g, x.n, cols, pinv)


def eq(x: WreathElement, y: WreathElement) -> bool:
    if (x.g, x.n) != (y.g, y.n):
        raise ValueError("parameter mismatch")
    return x == y


def project_letter(g: int, n: int, kind: str, idx: int, e: int) -> WreathElement:
    if kind == "t":
        return WreathElement.loop(g, n, idx, 1, e)
    # s_i^{-1} = s_i in the quotient
    return WreathElement.swap(g, n, idx - g)


def project(w: HandleWord) -> WreathElement:
    out = WreathElement.identity(w.g, w.n)
    for kind, idx, e in w.letters:
        out = multiply(out, project_letter(w.g, w.n, kind, idx, e))
    return out


def project_pure(letters, g: int, n: int) -> WreathElement:
    """Image of a word in the a_ij with j > g: a_{i,g+c} -> b_{i,g+c} for i <= g,
    lower-block letters map to the identity."""
    out = WreathElement.identity(g, n)
    for i, j, e in letters:
        if j <= g:
            raise ValueError(f"a{i}.{j} is not in B_{{{g},{n}}}")
        if i <= g:
            out = multiply(out, WreathElement.loop(g, n, i, j - g, e))
    return out
