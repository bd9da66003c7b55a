"""Braid words, the Artin action on F_m, and the projection to S_m.

Artin convention (fixed for the whole package)::

    sigma_i :  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   x_k -> x_k

and ``artin_auto(u v) = compose(artin_auto(u), artin_auto(v))``, i.e. the
substitution of ``u`` is applied first.  The action is faithful, so two braid
words are equal in B_m exactly when their substitutions agree; this is the
ground-truth equality test used everywhere else in the package.

Permutations compose right-to-left: ``perm_of(u v) = perm_of(u) * perm_of(v)``
with ``(p * r)(x) = p(r(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .freewords import FreeWord, GenSym, Substitution, gen, reduce


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"sigma_{i} out of range for B_{self.strands}")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, m: int, *signed: int) -> BraidWord:
        """``BraidWord.of(3, 1, 2, -1)`` is sigma_1 sigma_2 sigma_1^-1."""
        return cls(m, tuple((abs(k), 1 if k > 0 else -1) for k in signed))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in self.letters)


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self.images[other.images[k] - 1] for k in range(self.size)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def length(self) -> int:
        """Number of inversions, i.e. Coxeter length."""
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def __str__(self) -> str:
        if self.is_identity():
            return "id"
        seen, cycles = set(), []
        for start in range(1, self.size + 1):
            if start in seen or self(start) == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(cycles)


# -- Artin action on signed-int words (x_k <-> k, x_k^-1 <-> -k) -------------

def _join(*parts: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for part in parts:
        for b in part:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return tuple(out)


def _inv(w: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-b for b in reversed(w))


def artin_images(w: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of x_1..x_m under ``artin_auto(w)`` as signed-int tuples.

    Letters are consumed right to left: prepending a letter ``l`` to ``v``
    gives ``artin_auto(l v)(x) = artin_auto(v)(artin_auto(l)(x))``, so each step
    only splices existing images into the short word ``artin_auto(l)(x_k)``.
    Intermediate sizes then stay close to the final ones.
    """
    images = [(k,) for k in range(1, w.strands + 1)]
    for k, e in reversed(w.letters):
        a, b = images[k - 1], images[k]
        if e == 1:
            images[k - 1], images[k] = _join(a, b, _inv(a)), a
        else:
            images[k - 1], images[k] = b, _join(_inv(b), a, b)
    return tuple(images)


@lru_cache(maxsize=None)
def _pure_letter_images(i: int, j: int, e: int, m: int) -> tuple[tuple[int, ...], ...]:
    w = BraidWord(m, _a_letters(i, j))
    return artin_images(w if e == 1 else w.inverse())


def pure_artin_images(letters: Sequence[tuple[int, int, int]], m: int) -> tuple[tuple[int, ...], ...]:
    """``artin_images`` of a word in the a_ij, one pure letter per step."""
    images = [(k,) for k in range(1, m + 1)]
    for i, j, e in reversed(letters):
        table = _pure_letter_images(i, j, e, m)
        changed = []
        for k in range(i, j + 1):
            img = table[k - 1]
            if img != (k,):
                changed.append((k, _join(*(images[b - 1] if b > 0 else _inv(images[-b - 1]) for b in img))))
        for k, new in changed:
            images[k - 1] = new
    return tuple(images)


def pure_eq(u: Sequence[tuple[int, int, int]], v: Sequence[tuple[int, int, int]], m: int) -> bool:
    """Equality of two pure-letter words in P_m."""
    return braid_eq(pure_letters_to_braid(u, m), pure_letters_to_braid(v, m))


def _ints_to_word(w: Sequence[int]) -> FreeWord:
    return reduce((gen("x", abs(a)), 1 if a > 0 else -1) for a in w)


def artin_auto(w: BraidWord) -> Substitution:
    dom = tuple(gen("x", k) for k in range(1, w.strands + 1))
    return Substitution(dom, tuple(_ints_to_word(img) for img in artin_images(w)))


# -- Garside left normal form ------------------------------------------------
#
# Free-group images can grow exponentially in the word length, so long words
# are compared through the left normal form  Delta^p s_1 ... s_k  instead.
# Simple elements are stored as 0-based permutation tuples.

def _delta(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _swap_pos(p, i):
    p = list(p)
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def _swap_val(p, i):
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


@lru_cache(maxsize=1 << 20)
def _left_weight(a, b):
    """Move letters from the front of ``b`` to the end of ``a`` until S(b) is in F(a)."""
    n = len(a)
    while True:
        binv = [0] * n
        for k, x in enumerate(b):
            binv[x] = k
        for i in range(n - 1):
            if binv[i] > binv[i + 1] and a[i] < a[i + 1]:
                a, b = _swap_pos(a, i), _swap_val(b, i)
                break
        else:
            return a, b


def _tau(p):
    n = len(p)
    return tuple(n - 1 - p[n - 1 - k] for k in range(n))


class _Garside:
    # factors are stored in a frame twisted by tau when ``twisted`` is set,
    # which keeps inverse letters O(1) instead of re-twisting every factor
    def __init__(self, n: int):
        self.n = n
        self.power = 0
        self.twisted = False
        self.factors: list[tuple[int, ...]] = []
        self.ident = tuple(range(n))
        self.delta = _delta(n)

    def mul_simple(self, y) -> None:
        fs = self.factors
        fs.append(_tau(y) if self.twisted else y)
        for k in range(len(fs) - 1, 0, -1):
            a, b = _left_weight(fs[k - 1], fs[k])
            if a == fs[k - 1]:
                break
            fs[k - 1], fs[k] = a, b
        while fs and fs[-1] == self.ident:
            fs.pop()
        lead = 0
        while lead < len(fs) and fs[lead] == self.delta:
            lead += 1
        if lead:
            self.power += lead
            del fs[:lead]

    def mul_letter(self, i: int, e: int) -> None:
        if e == 1:
            self.mul_simple(_swap_pos(self.ident, i - 1))
        else:
            # s_i^-1 = y Delta^-1 with Delta = s_i y, and X Delta^-1 = Delta^-1 tau(X)
            self.mul_simple(_swap_val(self.delta, i - 1))
            self.twisted = not self.twisted
            self.power -= 1

    def result(self):
        fs = [_tau(f) for f in self.factors] if self.twisted else self.factors
        return self.power, tuple(fs)


def garside_normal_form(w: BraidWord) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """``(p, factors)`` with ``w = Delta^p f_1 ... f_k`` left-weighted, as permutations."""
    state = _Garside(w.strands)
    for i, e in w.letters:
        state.mul_letter(i, e)
    return state.result()


ARTIN_MAX_LETTERS = 60


def braid_eq(u: BraidWord, v: BraidWord) -> bool:
    """Equality in B_m.

    Short words are compared through the Artin action; longer ones through the
    Garside left normal form, whose image sizes stay linear in the word length.
    """
    if u.strands != v.strands:
        raise ValueError("strand count mismatch")
    if len(u) + len(v) <= ARTIN_MAX_LETTERS:
        return artin_images(u) == artin_images(v)
    return garside_normal_form(u) == garside_normal_form(v)


def is_trivial(w: BraidWord) -> bool:
    if len(w) > ARTIN_MAX_LETTERS:
        return garside_normal_form(w) == (0, ())
    return all(img == (k,) for k, img in enumerate(artin_images(w), start=1))


def perm_of(w: BraidWord) -> Permutation:
    p = list(range(1, w.strands + 1))
    # p accumulates perm(prefix) * s_k, i.e. swap positions k, k+1
    for k, _ in w.letters:
        p[k - 1], p[k] = p[k], p[k - 1]
    return Permutation(tuple(p))


def is_pure(w: BraidWord) -> bool:
    return perm_of(w).is_identity()


@lru_cache(maxsize=None)
def _a_letters(i: int, j: int) -> tuple[tuple[int, int], ...]:
    up = tuple((k, 1) for k in range(j - 1, i, -1))
    down = tuple((k, -1) for k in range(i + 1, j))
    return up + ((i, 1), (i, 1)) + down


def a_gen(i: int, j: int, m: int) -> BraidWord:
    """a_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1."""
    if not 1 <= i < j <= m:
        raise ValueError(f"need 1 <= i < j <= m, got i={i}, j={j}, m={m}")
    return BraidWord(m, _a_letters(i, j))


def tau_gen(k: int, g: int, n: int) -> BraidWord:
    """The handle loop tau_k = a_{k,g+1}, as a braid on g+n strands."""
    if not 1 <= k <= g:
        raise ValueError(f"need 1 <= k <= g, got k={k}, g={g}")
    if n < 1:
        raise ValueError("n must be positive")
    return a_gen(k, g + 1, g + n)


def pure_letters_to_braid(letters: Iterable[tuple[int, int, int]], m: int) -> BraidWord:
    """Expand a sequence of ``(i, j, e)`` pure letters a_ij^e into sigma letters."""
    out: list[tuple[int, int]] = []
    for i, j, e in letters:
        if not 1 <= i < j <= m:
            raise ValueError(f"a{i}.{j} out of range for P_{m}")
        body = _a_letters(i, j)
        if e == 1:
            out.extend(body)
        else:
            out.extend((k, -f) for k, f in reversed(body))
    return BraidWord(m, tuple(out))


def gensym_to_pure(g: GenSym, e: int) -> tuple[int, int, int]:
    if g.family != "a":
        raise ValueError(f"{g} is not a pure braid generator")
    return (g.indices[0], g.indices[1], e)
