import itertools
import random

from hypothesis import given, settings, strategies as st

from hbraid.braid import Permutation
from hbraid.hecke import affine
from hbraid.hecke.hgn import (
    FailureReport, SigmaWord, column_shape_ok, free_reduce, g1_shape, parse_expr, parse_mixed, push_rule,
    sigma_reduce, specialize_q1, t_elem, t_prime_elem, wreath_eval,
)
from hbraid.hecke.hn import (
    basis, hn_lmul, hn_mul, hn_product, hn_reduce, reduced_word, s_basis_words, specialize_hn_q1, word_perm,
)
from hbraid.hecke.laurent import ONE, Q, Laurent, parse_laurent
from hbraid.hecke.probe import conjecture_probe

laurents = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=4).map(Laurent)


# -- Laurent ------------------------------------------------------------------------

def test_laurent_examples():
    assert (Q - 1) + 1 == Q
    assert (Q - 1) * (Q + 1) == Q * Q - 1
    assert (Q - 1).eval_q1() == 0
    assert str(Q - 1) == "q - 1"
    assert parse_laurent("q^-1 - 1") == Laurent({-1: 1, 0: -1})
    assert Q ** -2 * Q ** 2 == ONE


@settings(max_examples=60, deadline=None)
@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert parse_laurent(str(a)) == a


# -- H_n(q) -------------------------------------------------------------------------

def test_hn_examples():
    s1 = Permutation.transposition(3, 1, 2)
    assert hn_mul(basis(3, s1), 1) == {s1: Q - 1, Permutation.identity(3): Q}
    assert hn_mul(basis(3), 1) == {s1: ONE}
    assert hn_reduce([(1, -1)], 3) == {s1: Q ** -1, Permutation.identity(3): Q ** -1 - 1}
    assert hn_reduce([], 3) == basis(3)


def test_braid_relation_and_inverse():
    assert hn_reduce([(1, 1), (2, 1), (1, 1)], 3) == hn_reduce([(2, 1), (1, 1), (2, 1)], 3)
    assert hn_reduce([(2, 1), (2, -1)], 3) == basis(3)


def test_left_and_right_multiplication_agree():
    for w in itertools.permutations(range(1, 5)):
        p = Permutation(w)
        for i in range(1, 4):
            left = hn_lmul(i, basis(4, p))
            assert left == hn_product(basis(4, word_perm((i,), 4)), basis(4, p))


def test_s_basis():
    for n in range(1, 5):
        words = s_basis_words(n)
        perms = {word_perm(w, n) for w in words}
        assert len(perms) == len(words) == len(list(itertools.permutations(range(n))))
        assert all(len(reduced_word(word_perm(w, n))) == len(w) for w in words)


# -- H_{1,n}(q) ---------------------------------------------------------------------

def _rand_affine(rng, n, length):
    out = []
    for _ in range(length):
        if n > 1 and rng.random() < 0.5:
            out.append(("s", rng.randint(1, n - 1), rng.choice((1, -1))))
        else:
            out.append(("t", 1, rng.choice((1, -1))))
    return out


def test_affine_relations():
    for n in (2, 3):
        for strategy in ("right", "left"):
            r = lambda w: affine.reduce_word(w, n, strategy)  # noqa: E731
            t, s1 = ("t", 1, 1), ("s", 1, 1)
            assert r([t, s1, t, s1]) == r([s1, t, s1, t])
            assert r([t, ("t", 1, -1)]) == affine.identity(n)
            assert r([s1, s1]) == {k: v for k, v in {
                ((0,) * n, Permutation.transposition(n, 1, 2)): Q - 1,
                ((0,) * n, Permutation.identity(n)): Q,
            }.items()}
    assert affine.reduce_word([("t", 1, 1), ("s", 2, 1)], 3) == affine.reduce_word([("s", 2, 1), ("t", 1, 1)], 3)


def test_affine_strategies_agree(rng):
    for _ in range(60):
        n = rng.randint(1, 3)
        w = _rand_affine(rng, n, rng.randint(0, 7))
        assert affine.reduce_word(w, n, "right") == affine.reduce_word(w, n, "left")


# -- H_{g,n}(q) ---------------------------------------------------------------------

def test_elements():
    assert t_elem(1, 2, 1) == ((1, 2, 1),)
    assert t_elem(1, 3, 1) == ((0, 2, 1), (1, 2, 1), (0, 2, 1))
    assert t_prime_elem(1, 3, 1) == ((0, 2, 1), (1, 2, 1), (0, 2, -1))


def test_sigma_reduce_examples():
    r = sigma_reduce([(ONE, parse_mixed("t1", 1, 2))], 1, 2)
    assert str(r) == "[t1.2]"
    for g in (0, 1, 2):
        r = sigma_reduce(parse_expr(f"s{g + 1} s{g + 1}", g, 2), g, 2)
        assert len(r.terms) == 2
        coefs = {s.tail.is_identity(): c for s, c in r.terms.items()}
        assert coefs == {True: Q, False: Q - 1}
    expr = parse_expr("t1 s2 t1 s2", 1, 2)
    r = sigma_reduce(expr, 1, 2)
    assert specialize_q1(r) == wreath_eval(expr, 1, 2)
    assert str(r) == "[t1.2 t1.3]"


def test_push_rules_prime_convention():
    g, n = 1, 3
    # s_b t'_{a,b} = t'_{a,b+1} s_b
    r = push_rule(3, (1, 3, 1), g, n)
    assert str(r) == "[t'1.4 s3]"
    # s_{b-1} t'_{a,b} = (q-1) t'_{a,b} + (1-q) t'_{a,b-1} + t'_{a,b-1} s_{b-1}
    r = push_rule(2, (1, 3, 1), g, n)
    want = sigma_reduce(parse_expr("(q - 1)*[a1.3] + (1 - q)*[a1.2] + [a1.2 s2]", g, n), g, n, engine="rewrite")
    assert r == want
    assert str(push_rule(3, (1, 2, -1), g, n)) == "[t'1.2^-1 s3]"


def test_push_rules_at_q1():
    for g, n in [(1, 3), (2, 3)]:
        for i in range(g + 1, g + n):
            for a in range(1, g + 1):
                for b in range(g + 1, g + n + 1):
                    for f in (1, -1):
                        for e in (1, -1):
                            word = ((0, i, e), (a, b, f))
                            r = push_rule(i, (a, b, f), g, n, e)
                            assert specialize_q1(r) == wreath_eval([(ONE, word)], g, n)


def _rand_mixed(rng, g, n, length):
    w = []
    for _ in range(length):
        if n > 1 and (g == 0 or rng.random() < 0.5):
            w.append((0, rng.randint(g + 1, g + n - 1), rng.choice((1, -1))))
        else:
            w.append((rng.randint(1, g), g + 1, rng.choice((1, -1))))
    return free_reduce(w)


def test_rewrite_engine_matches_exact_g1():
    rng = random.Random(3)
    checked = 0
    for _ in range(60):
        n = rng.randint(1, 3)
        w = _rand_mixed(rng, 1, n, rng.randint(0, 6))
        exact = sigma_reduce([(ONE, w)], 1, n)
        r = sigma_reduce([(ONE, w)], 1, n, engine="rewrite", budget=3000)
        if isinstance(r, FailureReport):
            continue
        assert all(g1_shape(s) == "Sigma'_n" for s in r.terms)
        back = [(c, s.letters + tuple((0, i + 1, 1) for i in reduced_word(s.tail))) for s, c in r.terms.items()]
        assert sigma_reduce(back, 1, n) == exact
        checked += 1
    assert checked >= 50


def test_g1_shapes():
    r = sigma_reduce(parse_expr("t1.3^-1 t1.2 s2 t1.3^2", 1, 2), 1, 2)
    assert r.terms and all(g1_shape(s) == "Sigma_n" for s in r.terms)
    assert not column_shape_ok(SigmaWord(1, 2, ((1, 3, 1), (1, 2, 1)), Permutation.identity(2)))


def test_budget_failure_is_reported():
    r = sigma_reduce(parse_expr("a1.3 a1.2 a1.2", 1, 2), 1, 2, engine="rewrite", budget=100)
    assert isinstance(r, FailureReport) and r.steps == 100 and r.stuck


def test_parse_expr():
    terms = parse_expr("(q-1)*[s2] + q*[]", 1, 2)
    assert [c for c, _ in terms] == [Q - 1, Q]
    assert terms[1][1] == ()
    assert parse_mixed("t'1.3", 1, 2) == ((1, 3, 1),)
    assert parse_mixed("t1.3^-1", 1, 2) == ((0, 2, -1), (1, 2, -1), (0, 2, -1))


def test_printed_words_parse_back():
    r = sigma_reduce(parse_expr("t1 s2 t1^-1 s2 t1", 1, 2), 1, 2)
    for s, c in r.terms.items():
        again = sigma_reduce([(ONE, parse_mixed(s.word(), 1, 2))], 1, 2)
        assert again.terms == {s: ONE}


def test_probe_small():
    rep = conjecture_probe(1, 2, 4)
    assert rep.total == rep.reduced and rep.q1_mismatches == 0 and rep.collisions == 0
    rep = conjecture_probe(0, 3, 6)
    assert rep.failed == 0 and rep.basis_words == 6


def test_q1_specialization_n3():
    perms = [Permutation(p) for p in itertools.permutations((1, 2, 3))]
    for u in perms:
        for v in perms:
            assert specialize_hn_q1(hn_product(basis(3, u), basis(3, v))) == {u * v: 1}
