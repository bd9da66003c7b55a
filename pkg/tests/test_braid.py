from hbraid.braid import (
    BraidWord, Permutation, a_gen, braid_eq, garside_normal_form, is_pure, is_trivial, perm_of,
)
from hbraid.syntax import WordSyntaxError, parse_braid

import pytest


def test_braid_relations_and_non_commutation():
    assert braid_eq(BraidWord.of(3, 1, 2, 1), BraidWord.of(3, 2, 1, 2))
    assert braid_eq(BraidWord.of(4, 1, 3), BraidWord.of(4, 3, 1))
    assert not braid_eq(BraidWord.of(3, 1, 2), BraidWord.of(3, 2, 1))


def test_perm_and_purity():
    assert perm_of(BraidWord.of(3, 1)) == Permutation.transposition(3, 1, 2)
    assert is_pure(a_gen(1, 3, 4))
    assert not is_pure(BraidWord.of(3, 1))


def test_long_words_use_garside():
    w = BraidWord.of(4, *([1, 2, 3, -1, -2] * 20))
    assert braid_eq(w * w.inverse(), BraidWord(4))
    assert is_trivial(w * w.inverse())
    p, factors = garside_normal_form(BraidWord.of(3, 1, 2, 1))
    assert (p, factors) == (1, ())


def test_parse_errors_have_positions():
    assert str(parse_braid("s1 s2^-2", 3)) == "s1 s2^-1 s2^-1"
    with pytest.raises(WordSyntaxError) as exc:
        parse_braid("s1 s4", 3)
    assert exc.value.pos == 3
