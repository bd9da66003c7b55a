"""Conjugation rule tables for pure braid letters.

Every rule is a row of data: a name, the shape of the letter being conjugated,
the shape of the conjugator, a guard on the indices and a right-hand side
template.  Templates use a small language::

    a(i,j)            pure letter a_ij (index expressions: var, var+1, var-1)
    ( ... )^e         group raised to the rule sign eps (also ^-e, ^1, ^-1)
    [X, Y]            commutator X^-1 Y^-1 X Y

Three tables are provided:

* ``SIGMA_RULES``: ``s_k^-e a_ij s_k^e`` for both signs of ``e``.
* ``TOP_RULES``:   ``y^-1 a_kj y`` for a conjugator y below column j; output
  stays in column j.
* ``ROW_RULES``:   ``y^-1 a_ij y`` for a conjugator y in rows below i; output
  stays in row i (or the letter is fixed).

A conjugator with eps = +1 is the letter ``y = a^{+1}``, so the table computes
``a^-eps x a^eps`` exactly as the identities are written.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .braid import BraidWord, braid_eq, pure_letters_to_braid

PureLetter = tuple[int, int, int]  # (i, j, e) for a_ij^e


@dataclass(frozen=True)
class PureWord:
    strands: int
    letters: tuple[PureLetter, ...] = ()

    def __post_init__(self):
        letters = reduce_pure(self.letters)
        for i, j, _ in letters:
            if not 1 <= i < j <= self.strands:
                raise ValueError(f"a{i}.{j} out of range for P_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: PureWord) -> PureWord:
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")
        return PureWord(self.strands, self.letters + other.letters)

    def inverse(self) -> PureWord:
        return PureWord(self.strands, invert_pure(self.letters))

    def to_braid(self) -> BraidWord:
        return pure_letters_to_braid(self.letters, self.strands)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_pure(self.letters)


def reduce_pure(letters: Sequence[PureLetter]) -> tuple[PureLetter, ...]:
    stack: list[PureLetter] = []
    for i, j, e in letters:
        if stack and stack[-1] == (i, j, -e):
            stack.pop()
        else:
            stack.append((i, j, e))
    return tuple(stack)


def invert_pure(letters: Sequence[PureLetter]) -> tuple[PureLetter, ...]:
    return tuple((i, j, -e) for i, j, e in reversed(letters))


def format_pure(letters: Sequence[PureLetter]) -> str:
    if not letters:
        return "1"
    return " ".join(f"a{i}.{j}" if e == 1 else f"a{i}.{j}^-1" for i, j, e in letters)


# -- template language ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(a\(|\(|\)|\[|\]|,|\^-?[e1]|[a-z](?:[+-]\d+)?)")


class _Idx:
    __slots__ = ("var", "off")

    def __init__(self, text: str):
        self.var = text[0]
        self.off = int(text[1:]) if len(text) > 1 else 0

    def value(self, env: dict[str, int]) -> int:
        return env[self.var] + self.off

    def unify(self, value: int, env: dict[str, int]) -> bool:
        want = value - self.off
        if self.var in env:
            return env[self.var] == want
        env[self.var] = want
        return True


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad template at {pos}: {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class Template:
    """Compiled right-hand side; ``eval(env, eps)`` gives reduced pure letters."""

    def __init__(self, text: str):
        self.text = text
        self._toks = _tokenize(text)
        self._pos = 0
        self._tree = self._seq(stop=())
        if self._pos != len(self._toks):
            raise ValueError(f"trailing tokens in template {text!r}")

    def _peek(self):
        return self._toks[self._pos] if self._pos < len(self._toks) else None

    def _take(self, expect=None):
        tok = self._peek()
        if expect is not None and tok != expect:
            raise ValueError(f"expected {expect!r} in {self.text!r}, got {tok!r}")
        self._pos += 1
        return tok

    def _seq(self, stop):
        items = []
        while self._peek() is not None and self._peek() not in stop:
            items.append(self._item())
        return ("seq", items)

    def _item(self):
        tok = self._take()
        if tok == "a(":
            i = _Idx(self._take())
            self._take(",")
            j = _Idx(self._take())
            self._take(")")
            node = ("a", i, j)
        elif tok == "(":
            node = self._seq(stop=(")",))
            self._take(")")
        elif tok == "[":
            left = self._seq(stop=(",",))
            self._take(",")
            right = self._seq(stop=("]",))
            self._take("]")
            node = ("comm", left, right)
        else:
            raise ValueError(f"unexpected {tok!r} in {self.text!r}")
        if self._peek() and self._peek().startswith("^"):
            p = self._take()[1:]
            node = ("pow", node, p)
        return node

    def eval(self, env: dict[str, int], eps: int = 1) -> tuple[PureLetter, ...]:
        return reduce_pure(self._eval(self._tree, env, eps))

    def _eval(self, node, env, eps) -> list[PureLetter]:
        kind = node[0]
        if kind == "a":
            return [(node[1].value(env), node[2].value(env), 1)]
        if kind == "seq":
            return [x for child in node[1] for x in self._eval(child, env, eps)]
        if kind == "comm":
            a = self._eval(node[1], env, eps)
            b = self._eval(node[2], env, eps)
            return list(invert_pure(a)) + list(invert_pure(b)) + a + b
        body = self._eval(node[1], env, eps)
        p = node[2]
        sign = {"e": eps, "-e": -eps, "1": 1, "-1": -1}[p]
        return body if sign == 1 else list(invert_pure(body))


# -- rule tables --------------------------------------------------------------------

Guard = Callable[[dict[str, int], int], bool]


@dataclass(frozen=True)
class Rule:
    name: str
    kind: str  # "sigma", "top" or "row"
    target: tuple[str, str]  # index expressions of the conjugated letter
    by: tuple[str, ...]  # (k-expr,) for sigma rules, (p, q) for letter rules
    guard: Guard
    rhs: Template
    sign: int = 0  # sigma rules only: the e in s_k^-e x s_k^e

    def variables(self) -> list[str]:
        names = {t[0] for t in self.target + self.by}
        return sorted(names)

    def match(self, x: tuple[int, int], by: tuple[int, ...], m: int) -> dict[str, int] | None:
        env: dict[str, int] = {}
        for expr, value in zip(self.target + self.by, tuple(x) + tuple(by)):
            if not _Idx(expr).unify(value, env):
                return None
        return env if self.guard(env, m) else None


def _r(name, kind, target, by, guard, rhs, sign=0) -> Rule:
    return Rule(name, kind, tuple(target.split(",")), tuple(by.split(",")), guard, Template(rhs), sign)


SIGMA_RULES: tuple[Rule, ...] = (
    # s_k^-1 a_ij s_k
    _r("c1", "sigma", "i,j", "k", lambda v, m: v["k"] not in (v["i"] - 1, v["i"], v["j"] - 1, v["j"]), "a(i,j)", 1),
    _r("c2", "sigma", "i,j", "i", lambda v, m: v["j"] == v["i"] + 1, "a(i,j)", 1),
    _r("c3", "sigma", "i,j", "i-1", lambda v, m: True, "a(i-1,j)", 1),
    _r("c4", "sigma", "i,j", "i", lambda v, m: v["j"] != v["i"] + 1, "a(i+1,j) [a(i,i+1)^-1, a(i,j)^-1]", 1),
    _r("c5", "sigma", "i,j", "j-1", lambda v, m: v["j"] - 1 > v["i"], "a(i,j-1)", 1),
    _r("c6", "sigma", "i,j", "j", lambda v, m: True, "a(i,j) a(i,j+1) a(i,j)^-1", 1),
    # s_k a_ij s_k^-1, each obtained by solving one of the rules above for the other side
    _r("c1'", "sigma", "i,j", "k", lambda v, m: v["k"] not in (v["i"] - 1, v["i"], v["j"] - 1, v["j"]), "a(i,j)", -1),
    _r("c2'", "sigma", "i,j", "i", lambda v, m: v["j"] == v["i"] + 1, "a(i,j)", -1),
    _r("c3'", "sigma", "i,j", "i", lambda v, m: v["j"] != v["i"] + 1, "a(i+1,j)", -1),
    _r("c4'", "sigma", "i,j", "i-1", lambda v, m: True, "a(i-1,i) a(i-1,j) a(i-1,i)^-1", -1),
    _r("c5'", "sigma", "i,j", "j", lambda v, m: True, "a(i,j+1)", -1),
    _r("c6'", "sigma", "i,j", "j-1", lambda v, m: v["j"] - 1 > v["i"], "a(i,j)^-1 a(i,j-1) a(i,j)", -1),
)

TOP_RULES: tuple[Rule, ...] = (
    _r("co1", "top", "k,j", "i,k", lambda v, m: v["i"] < v["k"] < v["j"],
       "(a(i,j) a(k,j))^e a(k,j) (a(i,j) a(k,j))^-e"),
    _r("co2", "top", "k,j", "k,n", lambda v, m: v["k"] < v["n"] < v["j"],
       "(a(k,j) a(n,j))^e a(k,j) (a(k,j) a(n,j))^-e"),
    _r("co3", "top", "k,j", "i,n", lambda v, m: v["i"] < v["k"] < v["n"] < v["j"],
       "[a(i,j)^-e, a(n,j)^-e]^e a(k,j) [a(i,j)^-e, a(n,j)^-e]^-e"),
    _r("co4", "top", "k,j", "i,n",
       lambda v, m: (v["k"] < v["i"] < v["n"] < v["j"]) or (v["i"] < v["n"] < v["k"]), "a(k,j)"),
)

ROW_RULES: tuple[Rule, ...] = (
    _r("L1", "row", "i,k", "k,j", lambda v, m: v["i"] < v["k"] < v["j"],
       "(a(i,k) a(i,j))^e a(i,k) (a(i,k) a(i,j))^-e"),
    _r("L2", "row", "i,k", "j,k", lambda v, m: v["i"] < v["j"] < v["k"],
       "(a(i,j) a(i,k))^e a(i,k) (a(i,j) a(i,k))^-e"),
    _r("L3", "row", "i,j", "k,n", lambda v, m: v["i"] < v["k"] < v["j"] < v["n"],
       "[a(i,k)^-e, a(i,n)^-e]^e a(i,j) [a(i,k)^-e, a(i,n)^-e]^-e"),
    _r("L4", "row", "k,j", "i,n", lambda v, m: v["k"] < v["i"] < v["n"] < v["j"], "a(k,j)"),
    _r("L5", "row", "i,n", "k,j", lambda v, m: v["i"] < v["n"] < v["k"] < v["j"], "a(i,n)"),
)


class RuleError(ValueError):
    pass


def _valid_letter(i: int, j: int, m: int) -> bool:
    return 1 <= i < j <= m


def _lookup(table: Sequence[Rule], x: tuple[int, int], by: tuple[int, ...], m: int, sign: int = 0):
    for rule in table:
        if rule.sign != sign:
            continue
        env = rule.match(x, by, m)
        if env is not None:
            return rule, env
    return None, None


def conj_by_sigma(x: PureLetter, k: int, e: int, m: int) -> tuple[PureLetter, ...]:
    """Return ``s_k^-e x s_k^e`` as a reduced pure word."""
    i, j, xe = x
    if not _valid_letter(i, j, m) or not 1 <= k <= m - 1:
        raise RuleError(f"index out of range: a{i}.{j}, s{k}, m={m}")
    rule, env = _lookup(SIGMA_RULES, (i, j), (k,), m, sign=e)
    if rule is None:
        raise RuleError(f"no sigma rule for s{k}^{e} on a{i}.{j}")
    out = rule.rhs.eval(env)
    return out if xe == 1 else invert_pure(out)


def _conj_letter(table, kind, x: PureLetter, by: PureLetter, m: int) -> tuple[PureLetter, ...]:
    i, j, xe = x
    p, q, eps = by
    if not (_valid_letter(i, j, m) and _valid_letter(p, q, m)):
        raise RuleError(f"index out of range for m={m}")
    same = (q == j) if kind == "top" else (p == i)
    if same:
        # conjugator in the same free factor: plain conjugation
        out = reduce_pure([(p, q, -eps), (i, j, 1), (p, q, eps)])
    else:
        rule, env = _lookup(table, (i, j), (p, q), m)
        if rule is None:
            raise RuleError(f"no {kind} rule for a{i}.{j} conjugated by a{p}.{q}")
        out = rule.rhs.eval(env, eps)
    return out if xe == 1 else invert_pure(out)


def conj_top(x: PureLetter, by: PureLetter, m: int) -> tuple[PureLetter, ...]:
    """``by^-1 x by`` for x in column j and ``by`` below column j (or in it).

    ``by`` is a signed letter ``(p, q, eps)``, i.e. the conjugator a_pq^eps.
    """
    if by[1] > x[1]:
        raise RuleError("conjugator lies in a higher column")
    return _conj_letter(TOP_RULES, "top", x, by, m)


def conj_row(x: PureLetter, by: PureLetter, m: int) -> tuple[PureLetter, ...]:
    """``by^-1 x by`` for x in row i and ``by`` in a row >= i."""
    if by[0] < x[0]:
        raise RuleError("conjugator lies in a lower row")
    return _conj_letter(ROW_RULES, "row", x, by, m)


def conj_word_top(u: Sequence[PureLetter], by: PureLetter, m: int) -> tuple[PureLetter, ...]:
    return reduce_pure([z for x in u for z in conj_top(x, by, m)])


def conj_word_row(u: Sequence[PureLetter], by: PureLetter, m: int) -> tuple[PureLetter, ...]:
    return reduce_pure([z for x in u for z in conj_row(x, by, m)])


# -- exhaustive verification ------------------------------------------------------------

@dataclass(frozen=True)
class RuleInstance:
    rule: str
    env: tuple[tuple[str, int], ...]
    eps: int
    holds: bool


def _sigma(m: int, k: int, e: int) -> BraidWord:
    return BraidWord(m, ((k, e),))


def instances(rule: Rule, m: int) -> Iterator[tuple[dict[str, int], int]]:
    names = rule.variables()
    for values in itertools.product(range(1, m + 1), repeat=len(names)):
        env = dict(zip(names, values))
        ti, tj = (_Idx(t).value(env) for t in rule.target)
        if not _valid_letter(ti, tj, m):
            continue
        if rule.kind == "sigma":
            k = _Idx(rule.by[0]).value(env)
            if not 1 <= k <= m - 1:
                continue
        else:
            bp, bq = (_Idx(t).value(env) for t in rule.by)
            if not _valid_letter(bp, bq, m):
                continue
        try:
            ok = rule.guard(env, m)
            if ok:
                rule.rhs.eval(env)  # rhs letters must exist too
                for i, j, _ in rule.rhs.eval(env):
                    if not _valid_letter(i, j, m):
                        ok = False
        except KeyError:
            ok = False
        if not ok:
            continue
        for eps in ((rule.sign,) if rule.kind == "sigma" else (1, -1)):
            yield env, eps


def check_instance(rule: Rule, env: dict[str, int], eps: int, m: int) -> bool:
    ti, tj = (_Idx(t).value(env) for t in rule.target)
    x = pure_letters_to_braid([(ti, tj, 1)], m)
    rhs = pure_letters_to_braid(rule.rhs.eval(env, eps), m)
    if rule.kind == "sigma":
        k = _Idx(rule.by[0]).value(env)
        lhs = _sigma(m, k, -eps) * x * _sigma(m, k, eps)
    else:
        bp, bq = (_Idx(t).value(env) for t in rule.by)
        y = pure_letters_to_braid([(bp, bq, eps)], m)
        lhs = y.inverse() * x * y
    return braid_eq(lhs, rhs)


def verify_rules(m: int, tables: Sequence[Sequence[Rule]] = (SIGMA_RULES, TOP_RULES, ROW_RULES)) -> list[RuleInstance]:
    out = []
    for table in tables:
        for rule in table:
            for env, eps in instances(rule, m):
                out.append(RuleInstance(rule.name, tuple(sorted(env.items())), eps,
                                        check_instance(rule, env, eps, m)))
    return out


# -- defining relations of P_m ------------------------------------------------------------

def pure_relations(m: int) -> list[tuple[str, tuple[PureLetter, ...], tuple[PureLetter, ...]]]:
    """Defining relations of P_m as (family, lhs, rhs)."""
    def a(i, j, e=1):
        return (i, j, e)

    out = []
    for i, k, j in itertools.combinations(range(1, m + 1), 3):
        out.append(("re2", (a(i, k), a(i, j), a(k, j)), (a(k, j), a(i, k), a(i, j))))
    for k, n, j in itertools.combinations(range(1, m + 1), 3):
        out.append(("re3", (a(n, j), a(k, n), a(k, j)), (a(k, j), a(n, j), a(k, n))))
    for i, k, n, j in itertools.combinations(range(1, m + 1), 4):
        c = (a(k, n), a(k, j), a(k, n, -1))
        out.append(("re4", c + (a(i, n),), (a(i, n),) + c))
    for k, j in itertools.combinations(range(1, m + 1), 2):
        for i, n in itertools.combinations(range(1, m + 1), 2):
            if k < i < n < j or n < k:
                out.append(("re1", (a(k, j), a(i, n)), (a(i, n), a(k, j))))
    return out


def check_pure_relations(m: int) -> list[tuple[str, bool]]:
    return [
        (f"{fam}: {format_pure(lhs)} = {format_pure(rhs)}",
         braid_eq(pure_letters_to_braid(lhs, m), pure_letters_to_braid(rhs, m)))
        for fam, lhs, rhs in pure_relations(m)
    ]
