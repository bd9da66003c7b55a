import pytest

from hbraid.freewords import (
    FreeWord, Substitution, apply, commutator, compose, conjugate, format_word, gen, invert, letter, reduce, word,
)

x1, x2 = gen("x", 1), gen("x", 2)


def test_reduction_cancels_adjacent_inverses():
    assert reduce([(x1, 1), (x2, 1), (x2, -1), (x1, -1)]) == FreeWord()
    assert len(reduce([(x1, 1), (x2, 1), (x1, -1)])) == 3


def test_group_laws():
    u = word(x1, (x2, -1), x1)
    assert u * invert(u) == FreeWord()
    assert conjugate(letter(x1), letter(x2)) == word((x2, -1), x1, x2)
    assert commutator(letter(x1), letter(x1)) == FreeWord()


def test_gen_validation():
    with pytest.raises(ValueError):
        gen("a", 3, 1)
    with pytest.raises(ValueError):
        gen("q", 1)


def test_format():
    assert format_word(word(gen("a", 1, 2), (gen("a", 1, 3), -1))) == "a1.2 a1.3^-1"
    assert format_word(FreeWord()) == "1"


def test_substitution_compose():
    s = Substitution.from_mapping({x1: word(x1, x2), x2: letter(x2)})
    t = Substitution.from_mapping({x1: letter(x1), x2: word(x2, x2)})
    u = word(x1, (x2, -1))
    assert apply(compose(s, t), u) == apply(t, apply(s, u))
    with pytest.raises(KeyError):
        apply(s, letter(gen("x", 3)))
