"""The Iwahori-Hecke algebra H_n(q) on the basis {T_w : w in S_n}.

Elements are dicts ``Permutation -> Laurent``.  Generators are indexed
1..n-1 locally; callers working on strands g+1..g+n shift by g themselves.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from ..braid import Permutation
from .laurent import ONE, Laurent, Q

HnElement = dict  # Permutation -> Laurent

S_INV_S = Laurent({-1: 1})  # s^-1 = q^-1 s + (q^-1 - 1)
S_INV_1 = Laurent({-1: 1, 0: -1})


def _swap_pos(p: Permutation, i: int) -> Permutation:
    im = list(p.images)
    im[i - 1], im[i] = im[i], im[i - 1]
    return Permutation(tuple(im))


def _swap_val(p: Permutation, i: int) -> Permutation:
    return Permutation(tuple(i + 1 if x == i else i if x == i + 1 else x for x in p.images))


def _add(acc: dict, key, c: Laurent) -> None:
    v = acc.get(key)
    v = c if v is None else v + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def basis(n: int, p: Permutation | None = None) -> HnElement:
    return {p or Permutation.identity(n): ONE}


def hn_mul(x: Mapping[Permutation, Laurent], i: int, e: int = 1) -> HnElement:
    """Right multiplication ``x * s_i^e``."""
    out: dict = {}
    for w, c in x.items():
        ws = _swap_pos(w, i)
        if e == -1:
            # s^-1 = q^-1 s + (q^-1 - 1)
            for key, coef in _rmul_s(w, ws, i).items():
                _add(out, key, c * coef * S_INV_S)
            _add(out, w, c * S_INV_1)
        else:
            for key, coef in _rmul_s(w, ws, i).items():
                _add(out, key, c * coef)
    return out


def _rmul_s(w: Permutation, ws: Permutation, i: int) -> dict:
    if w(i) < w(i + 1):
        return {ws: ONE}
    return {w: Q - 1, ws: Q}


def hn_lmul(i: int, x: Mapping[Permutation, Laurent], e: int = 1) -> HnElement:
    """Left multiplication ``s_i^e * x``."""
    out: dict = {}
    for w, c in x.items():
        sw = _swap_val(w, i)
        inv = w.inverse()
        if inv(i) < inv(i + 1):
            terms = {sw: ONE}
        else:
            terms = {w: Q - 1, sw: Q}
        if e == -1:
            for key, coef in terms.items():
                _add(out, key, c * coef * S_INV_S)
            _add(out, w, c * S_INV_1)
        else:
            for key, coef in terms.items():
                _add(out, key, c * coef)
    return out


def hn_reduce(word: Iterable[tuple[int, int]], n: int) -> HnElement:
    """Expand a word ``[(i, e), ...]`` in the s_i^e over the T_w basis."""
    x = basis(n)
    for i, e in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"s{i} out of range for H_{n}")
        x = hn_mul(x, i, e)
    return x


def reduced_word(p: Permutation) -> tuple[int, ...]:
    """A reduced word i_1 ... i_r with p = s_{i_1} ... s_{i_r}."""
    word: list[int] = []
    while not p.is_identity():
        for i in range(1, p.size):
            if p(i) > p(i + 1):
                word.append(i)
                p = _swap_pos(p, i)
                break
    return tuple(reversed(word))


def hn_product(x: Mapping[Permutation, Laurent], y: Mapping[Permutation, Laurent]) -> HnElement:
    out: dict = {}
    for w, c in y.items():
        part = dict(x)
        for i in reduced_word(w):
            part = hn_mul(part, i)
        for key, coef in part.items():
            _add(out, key, coef * c)
    return out


def hn_add(*xs: Mapping[Permutation, Laurent]) -> HnElement:
    out: dict = {}
    for x in xs:
        for key, c in x.items():
            _add(out, key, c)
    return out


def scale(x: Mapping[Permutation, Laurent], c: Laurent) -> HnElement:
    return {k: v * c for k, v in x.items() if v * c}


def s_basis_words(n: int) -> list[tuple[int, ...]]:
    """Words (s_{i1} s_{i1-1} ... s_{i1-k1}) ... (s_{ip} ... s_{ip-kp}), i1 < ... < ip."""
    words = []
    # for each top index i choose a run length 0..i (0 = factor absent)
    for lens in itertools.product(*(range(i + 1) for i in range(1, n))):
        w: list[int] = []
        for i, k in zip(range(1, n), lens):
            w.extend(range(i, i - k, -1))
        words.append(tuple(w))
    return words


def word_perm(word: Sequence[int], n: int) -> Permutation:
    p = Permutation.identity(n)
    for i in word:
        p = _swap_pos(p, i)
    return p


def specialize_hn_q1(x: Mapping[Permutation, Laurent]) -> dict[Permutation, int]:
    out = {}
    for k, c in x.items():
        v = c.eval_q1()
        if v:
            out[k] = v
    return out


def format_hn(x: Mapping[Permutation, Laurent]) -> str:
    if not x:
        return "0"
    parts = []
    for w in sorted(x, key=lambda p: (p.length(), p.images)):
        word = " ".join(f"s{i}" for i in reduced_word(w))
        parts.append(f"({x[w]})*T[{word}]")
    return " + ".join(parts)
