"""Rewriting in H_{g,n}(q) = C[B_{g,n}] / (s_i^2 - (q-1) s_i - q).

A mixed word is a tuple of items ``(i, j, e)``.  Items with ``i >= 1`` are pure
letters a_ij^e of B_{g+n}; items ``(0, k, e)`` are crossings s_k^e.  For
i <= g < j the pure letter a_ij is the loop element written ``t'_{i,j}``:
``t'_{i,g+1} = t_i`` and ``t'_{i,j+1} = s_j t'_{i,j} s_j^-1``.  Pure letters with
both indices above g are braids of the moving strands and get expanded with the
quadratic relation.

A term is ``coefficient * mixed_word * T_w``.  Every rewrite step is an exact
identity in H_{g,n}(q):

* ``s^-1 -> q^-1 s + (q^-1 - 1)``;
* ``s_k t'_{a,b}^f`` moves s_k to the right: it commutes unless k is b or b-1,
  ``s_b t'_{a,b}^f = t'_{a,b+1}^f s_b`` and
  ``s_{b-1} t'_{a,b}^f = (q-1) t'_{a,b}^f + (1-q) t'_{a,b-1}^f + t'_{a,b-1}^f s_{b-1}``;
  a final s is absorbed into the tail by left multiplication in H_n(q);
* ``a_ij^e = W s_i^(2e) W^-1 -> c1 W s_i W^-1 + c0`` for a lower-block letter;
* ``x y -> y (y^-1 x y)`` when x sits in a higher column than y.

Terminal terms are loop letters sorted by column (free words inside each
column) followed by a T_w.  The last step need not terminate, so the engine
runs under a step budget.

For g = 1 the default is the exact normal form of the ``affine`` module on
the basis of commuting t_{1,j}, which always terminates.
"""

from __future__ import annotations

import itertools
import re

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..braid import Permutation
from ..conjrules import conj_top
from ..freewords import FreeWord, gen, reduce
from ..syntax import WordSyntaxError, scan
from ..wreath import WreathElement, multiply, project_pure
from . import affine
from .hn import S_INV_1, S_INV_S, _add, hn_lmul, reduced_word
from .laurent import ONE, Q, Laurent, parse_laurent

Item = tuple[int, int, int]
MixedWord = tuple[Item, ...]

SQ_S = Laurent({1: 1, 0: -1})  # s^2 = (q-1) s + q
SQ_1 = Laurent({1: 1})
ISQ_S = Laurent({-2: 1, -1: -1})  # s^-2 = (q^-2 - q^-1) s + (q^-2 - q^-1 + 1)
ISQ_1 = Laurent({-2: 1, -1: -1, 0: 1})

DEFAULT_BUDGET = 20000
STRATEGIES = ("right", "left")
_RANKS = {"right": (0, 1, 2, 3), "left": (1, 2, 0, 3)}


def free_reduce(items: Iterable[Item]) -> MixedWord:
    out: list[Item] = []
    for x in items:
        if out and out[-1] == (x[0], x[1], -x[2]):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def t_elem(i: int, j: int, g: int) -> MixedWord:
    """t_ij = s_{j-1} ... s_{g+1} t_i s_{g+1} ... s_{j-1}."""
    if not (1 <= i <= g and j >= g + 1):
        raise ValueError(f"t{i}.{j} needs 1 <= i <= g < j")
    up = tuple((0, k, 1) for k in range(j - 1, g, -1))
    return up + ((i, g + 1, 1),) + tuple(reversed(up))


def t_prime_elem(i: int, j: int, g: int) -> MixedWord:
    """t'_ij = s_{j-1} ... s_{g+1} t_i s_{g+1}^-1 ... s_{j-1}^-1, i.e. the letter a_ij."""
    if not (1 <= i <= g and j >= g + 1):
        raise ValueError(f"t'{i}.{j} needs 1 <= i <= g < j")
    up = tuple((0, k, 1) for k in range(j - 1, g, -1))
    down = tuple((0, k, -1) for k in range(g + 1, j))
    return up + ((i, g + 1, 1),) + down


@dataclass(frozen=True, order=True)
class SigmaWord:
    """``u_1 u_2 ... u_n * T_w`` stored as column-sorted loop letters plus w."""

    g: int
    n: int
    letters: tuple[Item, ...]
    tail: Permutation
    plain: bool = False  # letters are t_ij (True) or t'_ij = a_ij (False)

    def column(self, c: int) -> FreeWord:
        col = self.g + c
        return reduce((gen("t", i, j), e) for i, j, e in self.letters if j == col)

    @property
    def columns(self) -> tuple[FreeWord, ...]:
        return tuple(self.column(c) for c in range(1, self.n + 1))

    def word(self) -> str:
        mark = "t" if self.plain else "t'"
        parts = []
        for (i, j, e), run in itertools.groupby(self.letters):
            k = e * len(list(run))
            parts.append(f"{mark}{i}.{j}" + ("" if k == 1 else f"^{k}"))
        parts += [f"s{i + self.g}" for i in reduced_word(self.tail)]
        return " ".join(parts)

    def __str__(self) -> str:
        return f"[{self.word()}]"

    def to_wreath(self) -> WreathElement:
        # at q = 1 both t_ij and t'_ij map to b_ij
        h = project_pure(self.letters, self.g, self.n)
        return multiply(h, WreathElement(self.g, self.n, (FreeWord(),) * self.n, self.tail))


@dataclass
class HgnElement:
    g: int
    n: int
    terms: dict = field(default_factory=dict)  # SigmaWord -> Laurent

    def __eq__(self, other) -> bool:
        if not isinstance(other, HgnElement):
            return NotImplemented
        return (self.g, self.n, self.terms) == (other.g, other.n, other.terms)

    def __str__(self) -> str:
        return format_terms(self.terms)


def format_coef(c: Laurent) -> str:
    text = str(c)
    if text == "1":
        return ""
    if text == "-1":
        return "-"
    if len(c.terms) == 1 and not text.startswith("-"):
        return text + "*"
    return f"({text})*"


def format_terms(terms: Mapping) -> str:
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda s: (len(s.letters), s.tail.length(), s.letters, s.tail.images))
    out = ""
    for k in keys:
        c = terms[k]
        lead = c.terms[max(c.terms)] if c.terms else 0
        if out and len(c.terms) == 1 and lead < 0:
            out += " - " + format_coef(-c) + str(k)
        else:
            out += (" + " if out else "") + format_coef(c) + str(k)
    return out


@dataclass
class FailureReport:
    g: int
    n: int
    steps: int
    budget: int
    stuck: list  # [(coefficient, mixed word, tail)]
    partial: dict  # SigmaWord -> Laurent

    def __str__(self) -> str:
        return f"budget of {self.budget} steps exhausted with {len(self.stuck)} pending terms"


class _Engine:
    def __init__(self, g: int, n: int, strategy: str):
        if strategy not in STRATEGIES:
            raise ValueError("strategy must be 'left' or 'right'")
        self.g, self.n, self.m = g, n, g + n
        self.strategy = strategy

    def _actions(self, word: MixedWord):
        g = self.g
        L = len(word)
        for p, (i, j, e) in enumerate(word):
            nxt = word[p + 1] if p + 1 < L else None
            if i == 0:
                # s^-1 always expands; s waits behind lower-block letters
                if e == -1 or nxt is None or 0 < nxt[0] <= g:
                    yield p
            elif i > g:
                yield p
            elif nxt is not None and nxt[0] != 0 and nxt[0] <= g and j > nxt[1]:
                yield p

    def pick(self, word: MixedWord):
        """Choose the next redex.

        Redexes fall in four classes: s^-1, s, lower-block letter, column
        disorder.  ``right`` takes them in that order, rightmost first;
        ``left`` expands lower-block letters first, then s^-1, s, disorders,
        leftmost first.
        """
        g = self.g
        rank = _RANKS[self.strategy]
        sign = -1 if self.strategy == "right" else 1
        best, key = None, None
        for p in self._actions(word):
            i, _, e = word[p]
            cls = (0 if e == -1 else 1) if i == 0 else (2 if i > g else 3)
            k = (rank[cls], sign * p)
            if key is None or k < key:
                best, key = p, k
        return best

    def step(self, word: MixedWord, tail: Permutation) -> list[tuple[Laurent, MixedWord, Permutation]]:
        p = self.pick(word)
        if p is None:
            return []
        i, j, e = word[p]
        g, m = self.g, self.m
        head, rest = word[:p], word[p + 1:]
        if i == 0:
            if e == -1:
                # s^-1 = q^-1 s + (q^-1 - 1)
                return [
                    (S_INV_S, free_reduce(head + ((0, j, 1),) + rest), tail),
                    (S_INV_1, free_reduce(head + rest), tail),
                ]
            if not rest:
                return [(c, head, w) for w, c in hn_lmul(j - g, {tail: ONE}).items()]
            return self._push(head, j, rest[0], rest[1:], tail)
        if i > g:
            # a_ij = W s_i^2 W^-1 with W = s_{j-1} ... s_{i+1}
            up = tuple((0, k, 1) for k in range(j - 1, i, -1))
            down = tuple((0, k, -1) for k in range(i + 1, j))
            c1, c0 = (SQ_S, SQ_1) if e == 1 else (ISQ_S, ISQ_1)
            body = up + ((0, i, 1),) + down
            return [
                (c1, free_reduce(head + body + rest), tail),
                (c0, free_reduce(head + rest), tail),
            ]
        y = rest[0]
        swapped = (y,) + tuple(conj_top(word[p], y, m))
        return [(ONE, free_reduce(head + swapped + rest[1:]), tail)]

    def _push(self, head, k, x, rest, tail):
        """s_k t'_{a,b}^f for a loop letter x = (a, b, f)."""
        a, b, f = x
        s = (0, k, 1)
        if k == b:
            return [(ONE, free_reduce(head + ((a, b + 1, f), s) + rest), tail)]
        if k == b - 1:
            lo = (a, b - 1, f)
            return [
                (Q - 1, free_reduce(head + (x,) + rest), tail),
                (1 - Q, free_reduce(head + (lo,) + rest), tail),
                (ONE, free_reduce(head + (lo, s) + rest), tail),
            ]
        return [(ONE, free_reduce(head + (x, s) + rest), tail)]


ENGINES = ("auto", "affine", "rewrite")


def sigma_reduce(
    expr: Mapping[MixedWord, Laurent] | Sequence[tuple[Laurent, MixedWord]],
    g: int,
    n: int,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "right",
    engine: str = "auto",
) -> HgnElement | FailureReport:
    """Rewrite a combination of mixed words into the span of Sigma_{g,n}.

    With one handle the default is the exact ``affine`` normal form, whose
    letters are the commuting t_{1,j}.  Otherwise the ``rewrite`` engine runs
    until the terms are column sorted or the step budget is used up; its
    letters are the t'_{i,j}.
    """
    if engine not in ENGINES:
        raise ValueError(f"engine must be one of {ENGINES}")
    if strategy not in STRATEGIES:
        raise ValueError("strategy must be 'left' or 'right'")
    items = list(expr.items()) if isinstance(expr, Mapping) else [(w, c) for c, w in expr]
    for w, _ in items:
        _check_word(w, g, n)
    if engine == "affine" or (engine == "auto" and g == 1):
        if g != 1:
            raise ValueError("the affine engine needs g = 1")
        return _affine_reduce(items, n, strategy)
    return _rewrite_reduce(items, g, n, budget, strategy)


def _affine_word(word: MixedWord) -> list[tuple[str, int, int]]:
    out: list[tuple[str, int, int]] = []
    for i, j, e in word:
        if i == 0:
            out.append(("s", j - 1, e))
            continue
        lo = i + 1 if i > 1 else 2
        up = [("s", k - 1, 1) for k in range(j - 1, lo - 1, -1)]
        down = [("s", k - 1, -1) for k in range(lo, j)]
        if i == 1:
            mid = [("t", 1, e)]
        else:
            mid = [("s", i - 1, e), ("s", i - 1, e)]
        out.extend(up + mid + down)
    return out


def _affine_reduce(items, n: int, strategy: str) -> HgnElement:
    done: dict = {}
    for w, c in items:
        for (lam, perm), k in affine.reduce_word(_affine_word(w), n, strategy).items():
            letters = tuple(
                (1, 1 + col, 1 if p > 0 else -1)
                for col, p in enumerate(lam, start=1)
                for _ in range(abs(p))
            )
            _add(done, SigmaWord(1, n, letters, perm, plain=True), c * k)
    return HgnElement(1, n, done)


def _rewrite_reduce(items, g: int, n: int, budget: int, strategy: str) -> HgnElement | FailureReport:
    eng = _Engine(g, n, strategy)
    ident = Permutation.identity(n)
    pending: dict = {}
    for w, c in items:
        _add(pending, (free_reduce(w), ident), c)
    done: dict = {}
    steps = 0
    while pending:
        if steps >= budget:
            stuck = [(c, w, t) for (w, t), c in pending.items()]
            return FailureReport(g, n, steps, budget, stuck, done)
        (word, tail), c = next(iter(pending.items()))
        del pending[(word, tail)]
        out = eng.step(word, tail)
        steps += 1
        if not out:
            _add(done, SigmaWord(g, n, word, tail), c)
            continue
        for coef, w2, t2 in out:
            _add(pending, (w2, t2), c * coef)
    return HgnElement(g, n, done)


def _check_word(word: MixedWord, g: int, n: int) -> None:
    m = g + n
    for i, j, e in word:
        if e not in (1, -1):
            raise ValueError(f"bad exponent {e}")
        if i == 0:
            if not g + 1 <= j <= m - 1:
                raise ValueError(f"s{j} out of range for g={g}, n={n}")
        elif not (1 <= i < j <= m and j > g):
            raise ValueError(f"a{i}.{j} is not a letter of B_{{{g},{n}}}")


def push_rule(i: int, letter: Item, g: int, n: int, e: int = 1) -> HgnElement:
    """Normal form of ``s_i^e * t'_{a,b}^f`` for a loop letter (a, b, f)."""
    res = sigma_reduce([(ONE, ((0, i, e), letter))], g, n, engine="rewrite")
    if isinstance(res, FailureReport):
        raise RuntimeError(str(res))
    return res


# -- q = 1 ------------------------------------------------------------------------

def specialize_q1(x: HgnElement) -> dict[WreathElement, int]:
    out: dict = {}
    for s, c in x.terms.items():
        v = c.eval_q1()
        if v:
            key = s.to_wreath()
            out[key] = out.get(key, 0) + v
            if not out[key]:
                del out[key]
    return out


def wreath_of_word(word: MixedWord, g: int, n: int) -> WreathElement:
    out = WreathElement.identity(g, n)
    for i, j, e in word:
        if i == 0:
            out = multiply(out, WreathElement.swap(g, n, j - g))
        else:
            out = multiply(out, project_pure([(i, j, e)], g, n))
    return out


def wreath_eval(expr: Mapping[MixedWord, Laurent] | Sequence[tuple[Laurent, MixedWord]], g: int, n: int) -> dict[WreathElement, int]:
    """The q = 1 image of an expression in the group algebra of G_{g,n}."""
    items = expr.items() if isinstance(expr, Mapping) else ((w, c) for c, w in expr)
    out: dict = {}
    for w, c in items:
        v = c.eval_q1()
        if not v:
            continue
        key = wreath_of_word(w, g, n)
        out[key] = out.get(key, 0) + v
        if not out[key]:
            del out[key]
    return out


def column_shape_ok(s: SigmaWord) -> bool:
    """Columns ascend and each column is a reduced word in its own letters."""
    cols = [j for _, j, _ in s.letters]
    if cols != sorted(cols) or any(i > s.g for i, _, _ in s.letters):
        return False
    return free_reduce(s.letters) == s.letters


def g1_shape(s: SigmaWord) -> str | None:
    """Name of the one-handle basis whose shape s has, if any.

    Both bases are products of powers of loop letters in strictly increasing
    columns followed by T_w; ``Sigma_n`` uses the t_{1,j}, ``Sigma'_n`` the t'_{1,j}.
    """
    if s.g != 1 or not column_shape_ok(s):
        return None
    for c in range(1, s.n + 1):
        letters = [x for x in s.letters if x[1] == s.g + c]
        if len({e for _, _, e in letters}) > 1:
            return None
    return "Sigma_n" if s.plain else "Sigma'_n"


# -- expression parsing and printing ------------------------------------------------

def parse_mixed(text: str, g: int, n: int) -> MixedWord:
    """Tokens ``s<i>``, ``t<k>``, ``t<i>.<j>``, ``t'<i>.<j>`` and ``a<i>.<j>``, each with ``^<int>``.

    ``t<i>.<j>`` expands to s_{j-1} ... t_i ... s_{j-1}; ``t'<i>.<j>`` and
    ``a<i>.<j>`` are the single pure letter a_ij.
    """
    out: list[Item] = []
    for pos, kind, a, b, power in scan(text):
        if kind == "s" and b is None:
            body: MixedWord = ((0, a, 1),)
        elif kind == "t" and b is None:
            body = ((a, g + 1, 1),)
        elif kind == "t" and b is not None:
            if not (1 <= a <= g < b <= g + n):
                raise WordSyntaxError(text, pos, f"t{a}.{b} out of range")
            body = t_elem(a, b, g)
        elif kind in ("t'", "a") and b is not None:
            body = ((a, b, 1),)
        else:
            raise WordSyntaxError(text, pos, "bad letter")
        if power < 0:
            body = tuple((i, j, -e) for i, j, e in reversed(body))
        for _ in range(abs(power)):
            out.extend(body)
    word = free_reduce(out)
    _check_word(word, g, n)
    return word


def parse_expr(text: str, g: int, n: int) -> list[tuple[Laurent, MixedWord]]:
    """``(q-1)*[s3] + q*[] - [t1 s2]``; a bare word is taken with coefficient 1."""
    s = text.strip()
    if "[" not in s:
        return [(ONE, parse_mixed(s, g, n))]
    out = []
    pos = 0
    term = re.compile(r"\s*([+-]?)\s*(?:(\([^()]*\)|[^\[\]*()+-][^\[\]*]*?|)\s*\*?\s*)\[([^\[\]]*)\]")
    while pos < len(s):
        mm = term.match(s, pos)
        if not mm or (pos > 0 and not mm.group(1)):
            raise ValueError(f"syntax error at position {pos}: {s[pos:pos + 20]!r}")
        sign = -1 if mm.group(1) == "-" else 1
        coef = parse_laurent(mm.group(2)) if mm.group(2) else ONE
        out.append((coef * sign, parse_mixed(mm.group(3), g, n)))
        pos = mm.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return out
