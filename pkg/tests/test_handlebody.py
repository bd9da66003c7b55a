import pytest

from hbraid.braid import BraidWord, Permutation, braid_eq, is_trivial, perm_of
from hbraid.handlebody import (
    HandleWord, NotInRError, coset_rep, coset_table, embed, is_schreier, lemma2_check, parse_handle, phi,
    presentation_check, psi, q_closure_check, r1n_rank_witness, r_decompose, r_part, random_handle_word,
    recompose_r,
)
from hbraid.syntax import WordSyntaxError


def test_embed_examples():
    assert embed(parse_handle("t1", 1, 2)) == BraidWord.of(3, 1, 1)
    assert embed(parse_handle("s2", 1, 2)) == BraidWord.of(3, 2)
    assert braid_eq(embed(parse_handle("t1 s3", 2, 2)), BraidWord.of(4, 2, 1, 1, -2, 3))


def test_parse_and_print_roundtrip():
    w = parse_handle("t1 s2^-1 t1^2", 1, 2)
    assert len(w) == 4
    assert parse_handle(str(w), 1, 2) == w
    with pytest.raises(WordSyntaxError):
        parse_handle("t1 a1.2", 1, 2)
    with pytest.raises(ValueError):
        parse_handle("t2", 1, 2)


def test_presentation_examples():
    rep = presentation_check(1, 2)
    assert rep.all_hold and len(rep.instances) == 1
    fams = {r.family for r in presentation_check(2, 3).instances}
    assert fams == {"braid", "loop-far", "loop-self", "loop-pair"}
    assert presentation_check(2, 3).all_hold


def test_loop_pair_needs_inverse():
    # the variant with sigma on both sides is false in the group
    lhs = parse_handle("t1 s3 t2 s3", 2, 2)
    rhs = parse_handle("s3 t2 s3 t1", 2, 2)
    assert not braid_eq(embed(lhs), embed(rhs))


def test_phi_psi():
    assert phi(parse_handle("t1 s2", 1, 2)) == parse_handle("s2", 1, 2)
    assert phi(parse_handle("t1 t2^-1", 2, 2)) == HandleWord(2, 2)
    assert psi(parse_handle("t1", 1, 2)).is_identity()
    assert psi(parse_handle("s3", 2, 2)) == Permutation.transposition(2, 1, 2)
    p = psi(parse_handle("s2 s3", 1, 3))
    assert p.length() == 2 and all(p(k) != k for k in (1, 2, 3))


def test_psi_factors_through_phi(rng):
    for _ in range(30):
        w = random_handle_word(rng, 2, 3, 8)
        assert psi(w) == perm_of(BraidWord(3, tuple((i - 2, e) for _, i, e in phi(w).letters)))


def test_coset_representatives():
    assert coset_rep(Permutation.identity(3), 1).letters == ()
    assert coset_rep(Permutation.transposition(2, 1, 2), 1) == parse_handle("s2", 1, 2)
    assert len(coset_table(1, 4)) == 24
    assert is_schreier(1, 4) and is_schreier(0, 4)
    cyc = Permutation((2, 3, 1))
    assert psi(coset_rep(cyc, 1)) == cyc


def test_r_part_and_decompose():
    assert r_part(parse_handle("t1 s2", 1, 2)) == parse_handle("t1 s2 s2^-1", 1, 2)
    assert is_trivial(embed(phi(r_part(parse_handle("s2 t1 s2", 1, 2)))))
    d = r_decompose(parse_handle("t1", 1, 2))
    assert dict(d.columns)[2] == ((1, 2, 1),)
    d = r_decompose(parse_handle("s2 t1 s2^-1", 1, 2))
    assert braid_eq(recompose_r(d), embed(parse_handle("s2 t1 s2^-1", 1, 2)))
    assert d.alphabet("rows") == {(1, 3)}
    with pytest.raises(NotInRError):
        r_decompose(parse_handle("t1 s2", 1, 2))
    d = r_decompose(parse_handle("t1 s2", 1, 2), allow_tail=True)
    assert braid_eq(recompose_r(d), embed(parse_handle("t1 s2", 1, 2)))


def test_r_decompose_random(rng):
    for _ in range(25):
        g, n = rng.randint(1, 3), rng.randint(1, 3)
        w = r_part(random_handle_word(rng, g, n, rng.randint(0, 8)))
        d = r_decompose(w)
        assert all(d.certificates().values())
        assert braid_eq(recompose_r(d, "columns"), embed(w))
        assert braid_eq(recompose_r(d, "rows"), embed(w))


def test_structural_checks():
    assert all(ok for _, ok in q_closure_check(2, 2))
    assert all(ok for _, ok in lemma2_check(2, 2))
    rep = r1n_rank_witness(3, samples=10, seed=1)
    assert rep["ok"] and set(map(tuple, rep["seen"])) <= {(1, 2), (1, 3), (1, 4)}
