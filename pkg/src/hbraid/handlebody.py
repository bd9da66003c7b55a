"""Handlebody braid groups B_{g,n} inside B_{g+n}.

Strands 1..g are the fixed cores of the handlebody and strands g+1..g+n move.
B_{g,n} is generated by the loops ``t_k = a_{k,g+1}`` (1 <= k <= g) and the
crossings ``s_i`` with g+1 <= i <= g+n-1.

The kernel R_{g,n} of ``phi`` (kill every loop) is the normal closure of the
letters Q_{g,n} = {a_ij : i <= g < j}.  Every handle word factors as
``w = P * phi(w)`` with ``P`` a word over Q_{g,n}; ``q_part`` finds ``P`` by
conjugating each loop past the crossings to its right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .syntax import WordSyntaxError, scan
from .braid import BraidWord, Permutation, braid_eq, is_trivial, perm_of, pure_letters_to_braid, tau_gen
from .combing import comb_horizontal, comb_vertical
from .conjrules import (
    PureLetter,
    conj_by_sigma,
    conj_word_row,
    conj_word_top,
    format_pure,
    invert_pure,
    reduce_pure,
)

HandleLetter = tuple[str, int, int]  # ("t", k, e) or ("s", i, e)


class NotInRError(ValueError):
    """The word does not lie in the kernel of phi."""


@dataclass(frozen=True)
class HandleWord:
    g: int
    n: int
    letters: tuple[HandleLetter, ...] = ()

    def __post_init__(self):
        if self.g < 0 or self.n < 1:
            raise ValueError(f"need g >= 0 and n >= 1, got g={self.g}, n={self.n}")
        out = []
        for kind, idx, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
            if kind == "t":
                if not 1 <= idx <= self.g:
                    raise ValueError(f"t{idx} out of range for g={self.g}")
            elif kind == "s":
                if not self.g + 1 <= idx <= self.g + self.n - 1:
                    raise ValueError(f"s{idx} out of range for g={self.g}, n={self.n}")
            else:
                raise ValueError(f"unknown letter kind {kind!r}")
            out.append((kind, int(idx), int(e)))
        object.__setattr__(self, "letters", tuple(out))

    @property
    def strands(self) -> int:
        return self.g + self.n

    def __mul__(self, other: HandleWord) -> HandleWord:
        if (self.g, self.n) != (other.g, other.n):
            raise ValueError("parameter mismatch")
        return HandleWord(self.g, self.n, self.letters + other.letters)

    def inverse(self) -> HandleWord:
        return HandleWord(self.g, self.n, tuple((k, i, -e) for k, i, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"{k}{i}" + ("" if e == 1 else "^-1") for k, i, e in self.letters)


def parse_handle(text: str, g: int, n: int) -> HandleWord:
    """Parse ``t1 s2^-1 t2^3``; ``1`` or an empty string is the identity."""
    letters: list[HandleLetter] = []
    for pos, name, i, j, power in scan(text.replace("*", " ")):
        if name not in ("t", "s") or j is not None:
            raise WordSyntaxError(text, pos, "expected t<k> or s<i>")
        e = 1 if power > 0 else -1
        letters += [(name, i, e)] * abs(power)
    return HandleWord(g, n, tuple(letters))


def embed(w: HandleWord) -> BraidWord:
    out: list[tuple[int, int]] = []
    for kind, idx, e in w.letters:
        if kind == "s":
            out.append((idx, e))
        else:
            body = tau_gen(idx, w.g, w.n).letters
            out.extend(body if e == 1 else [(k, -f) for k, f in reversed(body)])
    return BraidWord(w.strands, tuple(out))


# -- presentation ------------------------------------------------------------------

@dataclass(frozen=True)
class RelationInstance:
    family: str
    lhs: HandleWord
    rhs: HandleWord
    holds: bool

    def __str__(self) -> str:
        return f"[{self.family}] {self.lhs} = {self.rhs} : {'ok' if self.holds else 'FAILS'}"


@dataclass(frozen=True)
class PresentationReport:
    g: int
    n: int
    instances: tuple[RelationInstance, ...]

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.instances)

    @property
    def failures(self) -> list[RelationInstance]:
        return [r for r in self.instances if not r.holds]


def relations(g: int, n: int) -> list[tuple[str, HandleWord, HandleWord]]:
    """The defining relations of B_{g,n} as (family, lhs, rhs) pairs."""
    def hw(*letters):
        return HandleWord(g, n, tuple(letters))

    def s(i, e=1):
        return ("s", i, e)

    def t(k, e=1):
        return ("t", k, e)

    lo, hi = g + 1, g + n - 1
    out = []
    for i in range(lo, hi + 1):
        for j in range(i + 2, hi + 1):
            out.append(("far", hw(s(i), s(j)), hw(s(j), s(i))))
    for i in range(lo, hi):
        out.append(("braid", hw(s(i), s(i + 1), s(i)), hw(s(i + 1), s(i), s(i + 1))))
    for k in range(1, g + 1):
        for i in range(g + 2, hi + 1):
            out.append(("loop-far", hw(t(k), s(i)), hw(s(i), t(k))))
    if n >= 2:
        for k in range(1, g + 1):
            c = (s(lo), t(k), s(lo))
            out.append(("loop-self", hw(t(k), *c), hw(*c, t(k))))
        for k in range(1, g):
            for l in range(1, g - k + 1):
                c = (s(lo, -1), t(k + l), s(lo))
                out.append(("loop-pair", hw(t(k), *c), hw(*c, t(k))))
    return out


def presentation_check(g: int, n: int) -> PresentationReport:
    inst = tuple(
        RelationInstance(fam, lhs, rhs, braid_eq(embed(lhs), embed(rhs)))
        for fam, lhs, rhs in relations(g, n)
    )
    return PresentationReport(g, n, inst)


# -- epimorphisms onto the braids of the moving strands -----------------------------

def free_reduce(w: HandleWord) -> HandleWord:
    out: list[HandleLetter] = []
    for x in w.letters:
        if out and out[-1] == (x[0], x[1], -x[2]):
            out.pop()
        else:
            out.append(x)
    return HandleWord(w.g, w.n, tuple(out))


def phi(w: HandleWord) -> HandleWord:
    return free_reduce(HandleWord(w.g, w.n, tuple(x for x in w.letters if x[0] == "s")))


def psi(w: HandleWord) -> Permutation:
    """Permutation of {1..n}; s_i acts as the transposition (i-g, i-g+1)."""
    low = BraidWord(w.n, tuple((i - w.g, e) for kind, i, e in w.letters if kind == "s"))
    return perm_of(low)


def r_part(w: HandleWord) -> HandleWord:
    return w * phi(w).inverse()


def in_r(w: HandleWord) -> bool:
    return is_trivial(embed(phi(w)))


# -- coset representatives -------------------------------------------------------------

def _m(k: int, l: int) -> tuple[tuple[str, int, int], ...]:
    # m_kl = s_{k-1} s_{k-2} ... s_l, trivial unless l < k
    return tuple(("s", i, 1) for i in range(k - 1, l - 1, -1))


@lru_cache(maxsize=None)
def coset_table(g: int, n: int) -> dict[Permutation, HandleWord]:
    """All products m_{g+2, j_{g+2}} ... m_{g+n, j_{g+n}} with g+1 <= j_k <= k."""
    ranges = [range(g + 1, k + 1) for k in range(g + 2, g + n + 1)]
    table: dict[Permutation, HandleWord] = {}
    for js in itertools.product(*ranges):
        letters = tuple(x for k, j in zip(range(g + 2, g + n + 1), js) for x in _m(k, j))
        w = HandleWord(g, n, letters)
        p = psi(w)
        if p in table:
            raise AssertionError(f"two representatives for {p}")
        table[p] = w
    return table


def coset_rep(p: Permutation, g: int = 0) -> HandleWord:
    n = p.size
    return coset_table(g, n)[p]


def is_schreier(g: int, n: int) -> bool:
    """Every prefix of a representative is again a representative."""
    words = {w.letters for w in coset_table(g, n).values()}
    return all(w[:k] in words for w in words for k in range(len(w)))


# -- the Q-part of a handle word ---------------------------------------------------

def _conj_word_sigma(u: Sequence[PureLetter], k: int, e: int, m: int) -> tuple[PureLetter, ...]:
    return reduce_pure([z for x in u for z in conj_by_sigma(x, k, e, m)])


def q_part(w: HandleWord) -> tuple[PureLetter, ...]:
    """A word P over {a_ij : i <= g < j} with ``w = P * phi(w)`` in B_{g+n}.

    Each loop t_k is moved left past the crossings before it:
    ``S t S^-1`` is built innermost letter first.
    """
    m = w.strands
    out: list[PureLetter] = []
    sigmas: list[tuple[int, int]] = []
    for kind, idx, e in w.letters:
        if kind == "s":
            sigmas.append((idx, e))
            continue
        x: tuple[PureLetter, ...] = ((idx, w.g + 1, e),)
        for k, f in reversed(sigmas):
            # s_k^f x s_k^-f = conj_by_sigma(x, k, -f)
            x = _conj_word_sigma(x, k, -f, m)
        out.extend(x)
    return reduce_pure(out)


def in_q_alphabet(letters: Iterable[PureLetter], g: int) -> bool:
    return all(i <= g < j for i, j, _ in letters)


# -- decompositions of the kernel R_{g,n} ------------------------------------------

def kill_top(u: Sequence[PureLetter], g: int) -> tuple[PureLetter, ...]:
    """pi_k on a column word: delete every a_ik with i <= g."""
    return reduce_pure([x for x in u if x[0] > g])


@dataclass(frozen=True)
class ShiftForm:
    """``h = c_{g+1} ... c_{g+n} * w_{g+1} ... w_{g+n}``.

    ``c_k = W ubar_k W^-1`` with ``W = w_{g+1} ... w_{k-1}``, already rewritten
    as a word in column k; ``w_k = pi_k(u_k)``.
    """

    g: int
    n: int
    conjugated: tuple[tuple[int, tuple[PureLetter, ...]], ...]
    kernel_parts: tuple[tuple[int, tuple[PureLetter, ...]], ...]
    projections: tuple[tuple[int, tuple[PureLetter, ...]], ...]

    def product(self) -> tuple[PureLetter, ...]:
        left = [x for _, c in self.conjugated for x in c]
        right = [x for _, w in self.projections for x in w]
        return reduce_pure(left + right)


def comb_ascending(letters: Sequence[PureLetter], m: int) -> list[tuple[int, tuple[PureLetter, ...]]]:
    """Vertical components in the order u_2 u_3 ... u_m (lowest column first)."""
    inv = comb_vertical(invert_pure(letters), m)
    return [(j, invert_pure(u)) for j, u in reversed(inv.columns)]


def conjugate_into_column(u: Sequence[PureLetter], by: Sequence[PureLetter], m: int) -> tuple[PureLetter, ...]:
    """``by * u * by^-1`` for ``by`` in lower columns, as a word in u's column."""
    out = tuple(u)
    for i, j, e in reversed(by):
        out = conj_word_top(out, (i, j, -e), m)
    return out


def shift_decompose(letters: Sequence[PureLetter], g: int, n: int) -> ShiftForm:
    """Split each column of a P_{g,n} word into its pi_k-kernel and image parts."""
    m = g + n
    for i, j, _ in letters:
        if j <= g:
            raise ValueError(f"a{i}.{j} is not in P_{{{g},{n}}}")
    cols = [(j, u) for j, u in comb_ascending(letters, m) if j > g]
    kernel, proj, conj = [], [], []
    prefix: list[PureLetter] = []
    for j, u in cols:
        w = kill_top(u, g)
        ubar = reduce_pure(list(u) + list(invert_pure(w)))
        kernel.append((j, ubar))
        proj.append((j, w))
        conj.append((j, conjugate_into_column(ubar, reduce_pure(prefix), m)))
        prefix.extend(w)
    return ShiftForm(g, n, tuple(conj), tuple(kernel), tuple(proj))


@dataclass(frozen=True)
class RDecomp:
    g: int
    n: int
    columns: tuple[tuple[int, tuple[PureLetter, ...]], ...]  # (k, ubar_k), k ascending
    rows: tuple[tuple[int, tuple[PureLetter, ...]], ...]  # (i, vbar_i), i = 1..g
    tail: HandleWord

    def column_product(self) -> tuple[PureLetter, ...]:
        return reduce_pure([x for _, u in self.columns for x in u])

    def row_product(self) -> tuple[PureLetter, ...]:
        return reduce_pure([x for _, v in self.rows for x in v])

    def certificates(self) -> dict[int, bool]:
        """Column k passes when it lives in column k and pi_k kills it."""
        return {
            k: all(j == k for _, j, _ in u) and not kill_top(u, self.g)
            for k, u in self.columns
        }

    def alphabet(self, which: str = "rows") -> set[tuple[int, int]]:
        parts = self.rows if which == "rows" else self.columns
        return {(i, j) for _, u in parts for i, j, _ in u}

    def __str__(self) -> str:
        lines = [f"ubar{k} = {format_pure(u)}" for k, u in self.columns]
        lines += [f"vbar{i} = {format_pure(v)}" for i, v in self.rows]
        lines.append(f"tail = {self.tail}")
        return "\n".join(lines)


def r_decompose(w: HandleWord, *, allow_tail: bool = False) -> RDecomp:
    """Column and row decompositions of the R-part of ``w``.

    Unless ``allow_tail`` is set, ``w`` must lie in R_{g,n}; otherwise the
    decomposition is of ``w * phi(w)^-1`` and ``tail`` holds ``phi(w)``.
    """
    tail = phi(w)
    if not allow_tail and not is_trivial(embed(tail)):
        raise NotInRError(f"{w} is not in R_{{{w.g},{w.n}}}: phi(w) = {tail}")
    g, n, m = w.g, w.n, w.strands
    p = q_part(w)
    shift = shift_decompose(p, g, n)
    if any(u for _, u in shift.projections):
        raise AssertionError("a Q-word has non-trivial pi_k projections")
    hor = comb_horizontal(p, m)
    if any(v for i, v in hor.rows if i > g):
        raise AssertionError("a Q-word has a non-trivial lower tail")
    rows = tuple((i, v) for i, v in hor.rows if i <= g)
    return RDecomp(g, n, shift.conjugated, rows, tail)


def recompose_r(d: RDecomp, which: str = "columns") -> BraidWord:
    body = d.column_product() if which == "columns" else d.row_product()
    return pure_letters_to_braid(body, d.g + d.n) * embed(d.tail)


def r1n_rank_witness(n: int, samples: int = 50, max_len: int = 8, seed: int = 0) -> dict:
    """For g = 1 every R-component uses only a_12, ..., a_{1,n+1}."""
    import random

    rng = random.Random(seed)
    allowed = {(1, j) for j in range(2, n + 2)}
    seen: set[tuple[int, int]] = set()
    ok = True
    for _ in range(samples):
        w = random_handle_word(rng, 1, n, rng.randint(0, max_len))
        d = r_decompose(w, allow_tail=True)
        alph = d.alphabet("rows")
        seen |= alph
        ok &= alph <= allowed
        ok &= braid_eq(recompose_r(d, "rows"), embed(w))
    return {"n": n, "allowed": sorted(allowed), "seen": sorted(seen), "ok": ok}


def random_handle_word(rng, g: int, n: int, length: int) -> HandleWord:
    choices = [("t", k) for k in range(1, g + 1)] + [("s", i) for i in range(g + 1, g + n)]
    if not choices:
        return HandleWord(g, n)
    return HandleWord(g, n, tuple((*rng.choice(choices), rng.choice((1, -1))) for _ in range(length)))


# -- structural checks used by the acceptance suite ---------------------------------

def q_closure_check(g: int, n: int) -> list[tuple[str, bool]]:
    """Conjugates of Q-letters by s_k^(+-1) and by coset representatives stay in Q."""
    m = g + n
    results = []
    qletters = [(i, j) for i in range(1, g + 1) for j in range(g + 1, m + 1)]
    for i, j in qletters:
        x = pure_letters_to_braid([(i, j, 1)], m)
        for k in range(g + 1, m):
            for e in (1, -1):
                u = conj_by_sigma((i, j, 1), k, e, m)
                s = BraidWord(m, ((k, e),))
                ok = in_q_alphabet(u, g) and braid_eq(s.inverse() * x * s, pure_letters_to_braid(u, m))
                results.append((f"s{k}^{e} on a{i}.{j}", ok))
        for alpha in coset_table(g, n).values():
            u: tuple[PureLetter, ...] = ((i, j, 1),)
            for _, k, e in alpha.letters:
                u = _conj_word_sigma(u, k, e, m)
            a = embed(alpha)
            ok = in_q_alphabet(u, g) and braid_eq(a.inverse() * x * a, pure_letters_to_braid(u, m))
            results.append((f"{alpha} on a{i}.{j}", ok))
    return results


def lemma2_check(g: int, n: int) -> list[tuple[str, bool]]:
    """Row-g letters conjugated by lower-block letters comb back into row g."""
    m = g + n
    results = []
    if g < 1:
        return results
    lower = [(p, q) for p in range(g + 1, m) for q in range(p + 1, m + 1)]
    for j in range(g + 1, m + 1):
        for p, q in lower:
            for eps in (1, -1):
                u = conj_word_row(((g, j, 1),), (p, q, eps), m)
                y = pure_letters_to_braid([(p, q, eps)], m)
                x = pure_letters_to_braid([(g, j, 1)], m)
                ok = all(i == g for i, _, _ in u) and braid_eq(y.inverse() * x * y, pure_letters_to_braid(u, m))
                results.append((f"a{g}.{j} by a{p}.{q}^{eps}", ok))
    return results
