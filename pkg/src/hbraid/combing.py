"""Combing pure braids into vertical (column) and horizontal (row) normal forms.

Vertical:   P_m = U_m x| (U_{m-1} x| ... (U_3 x| U_2)),  U_j = <a_1j, ..., a_{j-1,j}>
Horizontal: P_m = V_1 x| (V_2 x| ... (V_{m-2} x| V_{m-1})), V_i = <a_{i,i+1}, ..., a_im>

A form stores the components with the normal factor first, so the braid is the
product ``u_m u_{m-1} ... u_2`` (resp. ``v_1 v_2 ... v_{m-1}``).  Components are
found by peeling: scanning the word right to left, a letter of the factor being
peeled is prepended, and any other letter ``x`` is moved to the rest by
replacing the collected component ``U`` with ``x U x^-1``, rewritten letter by
letter with the conjugation tables.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .braid import braid_eq
from .conjrules import (
    PureLetter,
    PureWord,
    conj_row,
    conj_top,
    format_pure,
    reduce_pure,
)

DEFAULT_CAP = 10**6


class CombingOverflow(RuntimeError):
    """A component grew past the configured length cap."""


@dataclass(frozen=True)
class VerticalForm:
    strands: int
    columns: tuple[tuple[int, tuple[PureLetter, ...]], ...]  # (j, u_j), j descending

    def component(self, j: int) -> tuple[PureLetter, ...]:
        return dict(self.columns).get(j, ())

    def __str__(self) -> str:
        return "\n".join(f"u{j} = {format_pure(u)}" for j, u in self.columns)


@dataclass(frozen=True)
class HorizontalForm:
    strands: int
    rows: tuple[tuple[int, tuple[PureLetter, ...]], ...]  # (i, v_i), i ascending

    def component(self, i: int) -> tuple[PureLetter, ...]:
        return dict(self.rows).get(i, ())

    def __str__(self) -> str:
        return "\n".join(f"v{i} = {format_pure(v)}" for i, v in self.rows)


def _letters(w) -> tuple[PureLetter, ...]:
    return w.letters if isinstance(w, PureWord) else reduce_pure(w)


def _peel(letters: Sequence[PureLetter], inside, conj, m: int, cap: int):
    comp: deque[PureLetter] = deque()
    rest: list[PureLetter] = []
    for x in reversed(letters):
        if inside(x):
            if comp and comp[0] == (x[0], x[1], -x[2]):
                comp.popleft()
            else:
                comp.appendleft(x)
        else:
            inv = (x[0], x[1], -x[2])
            new: list[PureLetter] = []
            for y in comp:
                for z in conj(y, inv, m):
                    if new and new[-1] == (z[0], z[1], -z[2]):
                        new.pop()
                    else:
                        new.append(z)
            if len(new) > cap:
                raise CombingOverflow(f"component exceeded {cap} letters")
            comp = deque(new)
            rest.append(x)
    rest.reverse()
    return tuple(comp), rest


def comb_vertical(w, m: int | None = None, *, cap: int = DEFAULT_CAP) -> VerticalForm:
    if m is None:
        m = w.strands
    letters = list(_letters(w))
    cols = []
    for j in range(m, 1, -1):
        comp, letters = _peel(letters, lambda x, j=j: x[1] == j, conj_top, m, cap)
        cols.append((j, comp))
    return VerticalForm(m, tuple(cols))


def comb_horizontal(w, m: int | None = None, *, cap: int = DEFAULT_CAP) -> HorizontalForm:
    if m is None:
        m = w.strands
    letters = list(_letters(w))
    rows = []
    for i in range(1, m):
        comp, letters = _peel(letters, lambda x, i=i: x[0] == i, conj_row, m, cap)
        rows.append((i, comp))
    return HorizontalForm(m, tuple(rows))


def recompose(form) -> PureWord:
    if isinstance(form, VerticalForm):
        parts = form.columns
    elif isinstance(form, HorizontalForm):
        parts = form.rows
    elif isinstance(form, PgnHorizontalForm):
        return PureWord(form.strands, tuple(x for _, v in form.rows for x in v)) * recompose(form.tail)
    else:
        raise TypeError(f"cannot recompose {type(form).__name__}")
    return PureWord(form.strands, tuple(x for _, u in parts for x in u))


# -- P_{g,n}: braids on g+n strands generated by the letters a_ij with j > g -------------

def check_pgn_letters(letters: Sequence[PureLetter], g: int, n: int) -> None:
    for i, j, _ in letters:
        if not (1 <= i < j <= g + n and j > g):
            raise ValueError(f"a{i}.{j} is not a generator of P_{{{g},{n}}}")


def comb_pgn_vertical(w, g: int, n: int, *, cap: int = DEFAULT_CAP) -> VerticalForm:
    letters = _letters(w)
    check_pgn_letters(letters, g, n)
    full = comb_vertical(letters, g + n, cap=cap)
    assert all(not u for j, u in full.columns if j <= g)
    return VerticalForm(g + n, tuple((j, u) for j, u in full.columns if j > g))


@dataclass(frozen=True)
class PgnHorizontalForm:
    """``w = vbar_1 ... vbar_g * tail`` with tail in the lower block P~_n."""

    g: int
    n: int
    rows: tuple[tuple[int, tuple[PureLetter, ...]], ...]  # (i, vbar_i), i = 1..g
    tail: HorizontalForm  # rows g+1 .. g+n-1

    @property
    def strands(self) -> int:
        return self.g + self.n

    def __str__(self) -> str:
        lines = [f"vbar{i} = {format_pure(v)}" for i, v in self.rows]
        lines += [f"v{i} = {format_pure(v)}" for i, v in self.tail.rows]
        return "\n".join(lines)


def comb_pgn_horizontal(w, g: int, n: int, *, cap: int = DEFAULT_CAP) -> PgnHorizontalForm:
    letters = _letters(w)
    check_pgn_letters(letters, g, n)
    full = comb_horizontal(letters, g + n, cap=cap)
    rows = tuple((i, v) for i, v in full.rows if i <= g)
    tail = HorizontalForm(g + n, tuple((i, v) for i, v in full.rows if i > g))
    return PgnHorizontalForm(g, n, rows, tail)


def delete_rows(letters: Sequence[PureLetter], rows) -> tuple[PureLetter, ...]:
    """Letter deletion a_ij -> 1 for i in ``rows``: forgetting those strands."""
    rows = set(rows)
    return reduce_pure([x for x in letters if x[0] not in rows])


def delete_columns(letters: Sequence[PureLetter], cols) -> tuple[PureLetter, ...]:
    cols = set(cols)
    return reduce_pure([x for x in letters if x[1] not in cols])


def closure_certificate(form: PgnHorizontalForm, i: int) -> bool:
    """vbar_i lies in P_{g,n}: forgetting the moving strands leaves it trivial.

    vbar_i is a word in the free group V_i, where forgetting strands g+1..g+n
    is just deleting the letters a_ij with j > g.
    """
    v = dict(form.rows)[i]
    return not delete_columns(v, range(form.g + 1, form.g + form.n + 1))


def kill_certificate(w, form: PgnHorizontalForm, i: int) -> bool:
    """Killing rows 1..i-1 of ``w`` leaves ``vbar_i ... vbar_g * tail``."""
    letters = _letters(w)
    m = form.strands
    killed = PureWord(m, delete_rows(letters, range(1, i)))
    rest = PureWord(m, tuple(x for k, v in form.rows if k >= i for x in v)) * recompose(form.tail)
    return braid_eq(killed.to_braid(), rest.to_braid())


def in_u_series(w, r: int, m: int | None = None) -> bool:
    """Membership in U_m^(r) = <a_ij : j > r>."""
    form = comb_vertical(w, m)
    return all(not u for j, u in form.columns if j <= r)


def in_v_series(w, r: int, m: int | None = None) -> bool:
    """Membership in V_m^(r) = <a_ij : i < r>."""
    form = comb_horizontal(w, m)
    return all(not v for i, v in form.rows if i >= r)
