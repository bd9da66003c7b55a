"""Reduced words in free groups over indexed alphabets.

A letter is a pair ``(GenSym, exponent)`` with exponent +1 or -1.  Powers are
never stored run-length; ``x1^3`` is three letters.  Conjugation uses the
right-action convention ``x^y = y^-1 x y`` and the commutator is
``[a, b] = a^-1 b^-1 a b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple

FAMILIES = {"x": 1, "s": 1, "tau": 1, "a": 2, "b": 2, "t": 2}


class GenSym(NamedTuple):
    family: str
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return self.family + ".".join(str(i) for i in self.indices)


def gen(family: str, *indices: int) -> GenSym:
    """Build a validated generator symbol, e.g. ``gen("a", 1, 3)``."""
    arity = FAMILIES.get(family)
    if arity is None:
        raise ValueError(f"unknown generator family {family!r}")
    if len(indices) != arity:
        raise ValueError(f"family {family!r} takes {arity} index(es), got {indices}")
    if family == "a" and not indices[0] < indices[1]:
        raise ValueError(f"a-generator needs i < j, got {indices}")
    return GenSym(family, tuple(int(i) for i in indices))


Letter = tuple[GenSym, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {e}")
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True, order=True)
class FreeWord:
    """Freely reduced word; construct through :func:`reduce` or the operators."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def _trusted(cls, letters: tuple[Letter, ...]) -> FreeWord:
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return multiply(self, other)

    def __invert__(self) -> FreeWord:
        return invert(self)

    def __pow__(self, k: int) -> FreeWord:
        base = self if k >= 0 else invert(self)
        return FreeWord._trusted(_reduce(base.letters * abs(k)))

    def alphabet(self) -> frozenset[GenSym]:
        return frozenset(g for g, _ in self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"FreeWord({format_word(self)!r})"


def letter(g: GenSym, e: int = 1) -> FreeWord:
    return FreeWord._trusted(((g, e),))


def word(*items: GenSym | Letter) -> FreeWord:
    """Convenience constructor: ``word(x1, (x2, -1))``."""
    letters = [(it, 1) if isinstance(it, GenSym) else it for it in items]
    return reduce(letters)


def reduce(letters: Iterable[Letter]) -> FreeWord:
    return FreeWord._trusted(_reduce(letters))


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    # only the junction can cancel
    a, b = u.letters, v.letters
    i = 0
    n = min(len(a), len(b))
    while i < n and a[len(a) - 1 - i][0] == b[i][0] and a[len(a) - 1 - i][1] == -b[i][1]:
        i += 1
    return FreeWord._trusted(a[: len(a) - i] + b[i:])


def invert(u: FreeWord) -> FreeWord:
    return FreeWord._trusted(tuple((g, -e) for g, e in reversed(u.letters)))


def conjugate(u: FreeWord, y: FreeWord) -> FreeWord:
    """Return ``y^-1 u y``."""
    return multiply(multiply(invert(y), u), y)


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    return multiply(multiply(invert(a), invert(b)), multiply(a, b))


def format_word(u: FreeWord, empty: str = "1") -> str:
    if not u.letters:
        return empty
    return " ".join(str(g) if e == 1 else f"{g}^-1" for g, e in u.letters)


@dataclass(frozen=True)
class Substitution:
    """Endomorphism of a free group given by the images of its generators.

    ``domain`` lists the generators; any generator outside it is an error in
    :func:`apply`.  Images are stored in the order of ``domain``.
    """

    domain: tuple[GenSym, ...]
    images: tuple[FreeWord, ...] = field(default=())

    def __post_init__(self):
        if len(self.domain) != len(self.images):
            raise ValueError("every domain generator needs exactly one image")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError("duplicate generator in domain")

    @classmethod
    def from_mapping(cls, mapping: Mapping[GenSym, FreeWord]) -> Substitution:
        dom = tuple(mapping)
        return cls(dom, tuple(mapping[g] for g in dom))

    @classmethod
    def identity(cls, domain: Iterable[GenSym]) -> Substitution:
        dom = tuple(domain)
        return cls(dom, tuple(letter(g) for g in dom))

    def image(self, g: GenSym) -> FreeWord:
        try:
            return self.images[self.domain.index(g)]
        except ValueError:
            raise KeyError(f"no image for generator {g}") from None

    def as_dict(self) -> dict[GenSym, FreeWord]:
        return dict(zip(self.domain, self.images))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self) -> int:
        return hash(frozenset(self.as_dict().items()))


def apply(s: Substitution, u: FreeWord) -> FreeWord:
    table = s.as_dict()
    out: list[Letter] = []
    for g, e in u.letters:
        if g not in table:
            raise KeyError(f"no image for generator {g}")
        img = table[g] if e == 1 else invert(table[g])
        out.extend(img.letters)
    return reduce(out)


def compose(s1: Substitution, s2: Substitution) -> Substitution:
    """Substitution that applies ``s1`` first, then ``s2``: x -> s2(s1(x))."""
    return Substitution(s1.domain, tuple(apply(s2, img) for img in s1.images))
