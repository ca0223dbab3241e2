import math

import pytest
from hypothesis import given, strategies as st

from modcong.permutation import (
    L,
    R,
    S,
    Permutation,
    Word,
    compose,
    cycles,
    evaluate_word,
    identity,
    inverse,
    is_transitive,
    order,
    power,
    quotient_by_involution,
)
from modcong.sl2zmod import gamma0, gamma1, gamma_full

from conftest import perm_pairs, permutations, words
from oracles import word_to_matrix

P = Permutation


def test_identity():
    assert identity(3) == P([0, 1, 2])
    assert identity(1) == P([0])
    with pytest.raises(ValueError):
        identity(0)


def test_constructor_rejects_non_bijections():
    with pytest.raises(ValueError):
        P([0, 0])
    with pytest.raises(ValueError):
        P([])
    with pytest.raises(AttributeError):
        P([0]).images = (0,)


def test_compose_is_left_to_right():
    assert compose(P([1, 0, 2]), P([0, 2, 1])) == P([2, 0, 1])
    with pytest.raises(ValueError):
        compose(P([0]), P([1, 0]))


def test_inverse_and_power_examples():
    assert inverse(P([1, 2, 0])) == P([2, 0, 1])
    assert inverse(identity(5)) == identity(5)
    assert power(P([1, 2, 0]), 3) == identity(3)
    assert power(P([1, 0]), 25) == P([1, 0])


def test_order_and_cycles():
    assert order(identity(6)) == 1
    assert order(P([1, 0, 3, 4, 2])) == 6
    assert cycles(P([1, 0, 2])) == [[0, 1], [2]]
    assert cycles(identity(3)) == [[0], [1], [2]]
    assert cycles(P([2, 3, 0, 1])) == [[0, 2], [1, 3]]


def test_is_transitive():
    assert not is_transitive([P([1, 0, 2])])
    assert is_transitive([P([1, 2, 0])])
    assert is_transitive([identity(1)])
    with pytest.raises(ValueError):
        is_transitive([P([0]), P([1, 0])])


def test_quotient_by_involution():
    assert quotient_by_involution(P([1, 0, 3, 2]), P([2, 3, 0, 1])) == P([1, 0])
    p = P([1, 2, 0])
    assert quotient_by_involution(p, identity(3)) == p
    with pytest.raises(ValueError):
        quotient_by_involution(P([1, 2, 0]), P([1, 0, 2]))  # does not commute
    with pytest.raises(ValueError):
        quotient_by_involution(identity(3), P([1, 2, 0]))  # not an involution


@given(permutations())
def test_inverse_laws(p):
    n = p.degree
    assert compose(p, inverse(p)) == identity(n) == compose(inverse(p), p)
    assert compose(identity(n), p) == p == compose(p, identity(n))
    assert inverse(inverse(p)) == p
    assert power(p, -1) == inverse(p)
    assert sorted(x for c in cycles(p) for x in c) == list(range(n))


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(*[permutations(n)] * 3)))
def test_compose_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(permutations(), st.integers(-50, 50), st.integers(-50, 50))
def test_power_additive(p, a, b):
    assert power(p, a + b) == compose(power(p, a), power(p, b))


@given(permutations())
def test_order_is_lcm_of_cycle_lengths(p):
    k = order(p)
    assert k == math.lcm(*(len(c) for c in cycles(p)))
    assert power(p, k).is_identity()
    assert all(not power(p, j).is_identity() for j in range(1, k))
    assert order(power(p, k)) == 1


@given(permutations(max_degree=10))
def test_quotient_degree_counts_two_cycles(p):
    iota = power(p, order(p) // 2) if order(p) % 2 == 0 else identity(p.degree)
    q = quotient_by_involution(p, iota)
    twos = sum(1 for c in cycles(iota) if len(c) == 2)
    assert q.degree == p.degree - twos


def test_word_canonical_form():
    w = Word([("L", 2), ("L", -2), ("R", 0), ("R", 3), ("R", 1)])
    assert w.factors == (("R", 4),)
    assert Word() == Word.parse("1") == Word.parse("")
    assert Word.parse("L R^-1 L") == S
    assert Word.parse("L^20 R^(-4)").factors == (("L", 20), ("R", -4))
    assert str(S) == "L R^-1 L"
    assert (S * S.inverse()) == Word()
    assert (R**-25).factors == (("R", -25),)
    with pytest.raises(ValueError):
        Word([("X", 1)])
    with pytest.raises(ValueError):
        Word.parse("L Q")


def test_reduced_exponents():
    assert Word.parse("L^7 R^-1").reduced(5) == Word.parse("L^2 R^4")
    assert Word.parse("L^3 L^2 R").reduced(5) == Word.parse("R")
    assert Word.parse("R^6").reduced(1) == Word()


@given(words(), words())
def test_words_factors_are_reduced(w1, w2):
    w = w1 * w2
    assert all(e != 0 for _, e in w)
    assert all(a[0] != b[0] for a, b in zip(w.factors, w.factors[1:]))
    assert (w.inverse()).inverse() == w


def test_evaluate_word_examples():
    sl, sr = P([1, 2, 0, 3]), P([0, 3, 2, 1])
    assert evaluate_word(L, sl, sr) == sl
    assert evaluate_word(Word(), sl, sr) == identity(4)
    p = P([2, 0, 1, 3])
    assert evaluate_word(L * R * L.inverse() * R.inverse(), p, p).is_identity()
    with pytest.raises(ValueError):
        evaluate_word(L, P([0]), P([1, 0]))


def test_s_has_order_four_as_a_matrix():
    # integer oracle: (L R^-1 L)^4 is the identity matrix, S^2 = -1
    assert word_to_matrix(S) == (0, -1, 1, 0)
    assert word_to_matrix(S**2) == (-1, 0, 0, -1)
    assert word_to_matrix(S**4) == (1, 0, 0, 1)


@pytest.mark.parametrize("g", [gamma0(4), gamma1(5), gamma_full(3), gamma0(7)], ids=repr)
def test_s_to_the_fourth_acts_trivially(g):
    assert evaluate_word(S**4, g.sigma_l, g.sigma_r).is_identity()


@given(perm_pairs(), words(), words())
def test_evaluate_word_is_multiplicative(pair, w1, w2):
    sl, sr = pair
    lhs = evaluate_word(w1 * w2, sl, sr)
    assert lhs == compose(evaluate_word(w1, sl, sr), evaluate_word(w2, sl, sr))
    assert evaluate_word(w1.inverse(), sl, sr) == inverse(evaluate_word(w1, sl, sr))
