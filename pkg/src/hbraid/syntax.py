"""Surface syntax for words typed on the command line.

Letters are whitespace separated and carry an optional ``^<int>`` power:
``s<i>`` crossings, ``t<k>`` loops, ``a<i>.<j>`` pure generators.  ``1``
stands for the empty word.  Errors name the offending token and its column.
"""

from __future__ import annotations

import re
from typing import Iterator

from .braid import BraidWord
from .conjrules import PureWord


class WordSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos}: {text[pos:pos + 12]!r}")
        self.pos = pos


_LETTER = re.compile(r"(?P<name>[a-z]'?)(?P<i>\d+)(?:\.(?P<j>\d+))?(?:\^(?P<p>-?\d+))?")


def scan(text: str) -> Iterator[tuple[int, str, int, int | None, int]]:
    """Yield (position, name, first index, second index or None, power)."""
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        if tok == "1":
            continue
        lm = _LETTER.fullmatch(tok)
        if not lm:
            raise WordSyntaxError(text, m.start(), "bad letter")
        power = int(lm.group("p")) if lm.group("p") is not None else 1
        if power == 0:
            raise WordSyntaxError(text, m.start(), "zero power")
        j = int(lm.group("j")) if lm.group("j") else None
        yield m.start(), lm.group("name"), int(lm.group("i")), j, power


def _expand(power: int, body):
    e = 1 if power > 0 else -1
    return [body(e)] * abs(power)


def parse_braid(text: str, m: int) -> BraidWord:
    """``s1 s2^-1 s1^2`` in B_m."""
    letters: list[tuple[int, int]] = []
    for pos, name, i, j, power in scan(text):
        if name != "s" or j is not None:
            raise WordSyntaxError(text, pos, "expected s<i>")
        if not 1 <= i <= m - 1:
            raise WordSyntaxError(text, pos, f"s{i} out of range for B_{m}")
        letters += _expand(power, lambda e: (i, e))
    return BraidWord(m, tuple(letters))


def parse_pure(text: str, m: int) -> PureWord:
    """``a1.2 a1.3^-1`` in P_m; the result is freely reduced."""
    letters: list[tuple[int, int, int]] = []
    for pos, name, i, j, power in scan(text):
        if name != "a" or j is None:
            raise WordSyntaxError(text, pos, "expected a<i>.<j>")
        if not 1 <= i < j <= m:
            raise WordSyntaxError(text, pos, f"a{i}.{j} out of range for P_{m}")
        letters += _expand(power, lambda e: (i, j, e))
    return PureWord(m, tuple(letters))
