"""Exact normal forms in H_{1,n}(q) on the basis Sigma_n.

With one handle the elements ``X_c = t_{1,c+1}`` (c = 1..n), where
``t_{1,j} = s_{j-1} ... s_2 t s_2 ... s_{j-1}``, commute with each other, so a
basis element is a Laurent monomial ``X^lam`` times ``T_w``.  Crossings move
past monomials with four identities, for ``s = s_{c+1}``, ``X = X_c`` and
``Y = X_{c+1} = s X s``::

    s X    = q^-1 Y s + (q^-1 - 1) Y
    s X^-1 = q Y^-1 s + (q - 1) X^-1
    s Y    = q X s + (q - 1) Y
    s Y^-1 = q^-1 X^-1 s + (q^-1 - 1) X^-1

and every other X_d commutes with s.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from ..braid import Permutation
from .hn import S_INV_1, S_INV_S, _add, hn_lmul, hn_mul, reduced_word
from .laurent import ONE, Laurent, Q

QI = Laurent({-1: 1})

# (letter is Y?, exponent) -> [(coef, new letter is Y?, s survives?)]
_PUSH = {
    (False, 1): [(QI, True, True), (QI - 1, True, False)],
    (False, -1): [(Q, True, True), (Q - 1, False, False)],
    (True, 1): [(Q, False, True), (Q - 1, True, False)],
    (True, -1): [(QI, False, True), (QI - 1, False, False)],
}

Key = tuple[tuple[int, ...], Permutation]  # (lam, w)


def s_times_monomial(c: int, lam: tuple[int, ...]) -> dict[tuple[tuple[int, ...], bool], Laurent]:
    """``s_c * X^lam`` (local index c) as {(lam', s survives): coef}."""
    a, b = lam[c - 1], lam[c]
    letters = [(False, 1 if a > 0 else -1)] * abs(a) + [(True, 1 if b > 0 else -1)] * abs(b)
    states: dict[tuple[int, int, bool], Laurent] = {(0, 0, True): ONE}
    for is_y, e in letters:
        nxt: dict = {}
        for (x_exp, y_exp, alive), coef in states.items():
            if not alive:
                key = (x_exp + (0 if is_y else e), y_exp + (e if is_y else 0), False)
                _add(nxt, key, coef)
                continue
            for k, new_y, survive in _PUSH[(is_y, e)]:
                key = (x_exp + (0 if new_y else e), y_exp + (e if new_y else 0), survive)
                _add(nxt, key, coef * k)
        states = nxt
    out: dict = {}
    for (x_exp, y_exp, alive), coef in states.items():
        new = list(lam)
        new[c - 1], new[c] = x_exp, y_exp
        _add(out, (tuple(new), alive), coef)
    return out


def lmul_s(c: int, x: Mapping[Key, Laurent], e: int = 1) -> dict[Key, Laurent]:
    """``s_c^e * x``."""
    if e == -1:
        # s^-1 = q^-1 s + (q^-1 - 1)
        out: dict = {}
        for key, coef in lmul_s(c, x).items():
            _add(out, key, coef * S_INV_S)
        for key, coef in x.items():
            _add(out, key, coef * S_INV_1)
        return out
    out = {}
    for (lam, w), coef in x.items():
        for (lam2, alive), k in s_times_monomial(c, lam).items():
            if alive:
                for w2, k2 in hn_lmul(c, {w: ONE}).items():
                    _add(out, (lam2, w2), coef * k * k2)
            else:
                _add(out, (lam2, w), coef * k)
    return out


def lmul_x(col: int, x: Mapping[Key, Laurent], e: int = 1) -> dict[Key, Laurent]:
    out: dict = {}
    for (lam, w), coef in x.items():
        new = list(lam)
        new[col - 1] += e
        _add(out, (tuple(new), w), coef)
    return out


def rmul_s(x: Mapping[Key, Laurent], c: int, e: int = 1) -> dict[Key, Laurent]:
    out: dict = {}
    for (lam, w), coef in x.items():
        for w2, k in hn_mul({w: ONE}, c, e).items():
            _add(out, (lam, w2), coef * k)
    return out


def rmul_x1(x: Mapping[Key, Laurent], e: int, n: int) -> dict[Key, Laurent]:
    """``x * t^e``: move t^e left through each T_w."""
    out: dict = {}
    cache: dict = {}
    unit = tuple(1 if c == 1 else 0 for c in range(1, n + 1))
    for (lam, w), coef in x.items():
        if w not in cache:
            part = {(tuple(e * u for u in unit), Permutation.identity(n)): ONE}
            for i in reversed(reduced_word(w)):
                part = lmul_s(i, part)
            cache[w] = part
        for (mu, w2), k in cache[w].items():
            _add(out, (tuple(a + b for a, b in zip(lam, mu)), w2), coef * k)
    return out


def identity(n: int) -> dict[Key, Laurent]:
    return {((0,) * n, Permutation.identity(n)): ONE}


def reduce_word(word: Iterable[tuple[str, int, int]], n: int, strategy: str = "right") -> dict[Key, Laurent]:
    """Normal form of a word in ``("t", 1, e)`` and ``("s", c, e)`` (local c).

    ``right`` multiplies the generators in from the right, ``left`` from the
    left; the two only share the push identities and the H_n tables.
    """
    word = list(word)
    x = identity(n)
    if strategy == "right":
        for kind, idx, e in word:
            x = rmul_s(x, idx, e) if kind == "s" else rmul_x1(x, e, n)
    elif strategy == "left":
        for kind, idx, e in reversed(word):
            x = lmul_s(idx, x, e) if kind == "s" else lmul_x(1, x, e)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return x
