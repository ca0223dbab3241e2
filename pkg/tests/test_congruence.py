import random

import pytest
from hypothesis import given, strategies as st

from modcong.congruence import (
    Case,
    crt_constants,
    exact_level,
    first_failure,
    is_congruence,
    mod_inverse,
    relation_set,
    split_even_odd,
)
from modcong.errors import NotInvertible
from modcong.gen import random_subgroup
from modcong.modgroup import conjugate_by_word, cusp_data, full_group, intersect, is_even
from modcong.permutation import L, R, S, Word, evaluate_word
from modcong.sl2zmod import gamma0, gamma1, gamma_full, oracle_factors_through, sl2_order

from oracles import word_to_matrix


def test_mod_inverse():
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(5, 8) == 5
    assert mod_inverse(2, 1) == 0
    with pytest.raises(NotInvertible):
        mod_inverse(2, 4)


def test_split_even_odd():
    assert split_even_odd(12) == (4, 3)
    assert split_even_odd(8) == (8, 1)
    assert split_even_odd(15) == (1, 15)


def test_crt_constants():
    assert crt_constants(4, 3) == (4, 9)
    assert crt_constants(2, 5) == (6, 5)
    with pytest.raises(ValueError):
        crt_constants(6, 5)
    with pytest.raises(ValueError):
        crt_constants(4, 1)


@given(st.integers(1, 8), st.integers(1, 60))
def test_crt_idempotents(k, half_m):
    e, m = 2**k, 2 * half_m + 1
    c1, c2 = crt_constants(e, m)
    assert (c1 % e, c1 % m, c2 % e, c2 % m) == (0, 1, 1, 0)
    assert (c1 + c2) % (e * m) == 1


def test_relation_set_odd():
    rs = relation_set(5)
    assert rs.case is Case.ODD and rs.names() == ["odd.1"]
    # 1/2 = 3 mod 5
    assert rs.relators[0][1] == ((R**2 * L**-3) ** 3).reduced(5)


def test_relation_set_power_of_two():
    rs = relation_set(8)
    assert rs.case is Case.POWER_OF_TWO
    assert rs.names() == ["pow2.1", "pow2.2", "pow2.3"]
    # 1/5 = 5 mod 8
    w = Word.parse("L^20 R^5 L^-4 R^-1")
    assert rs.relators[0][1] == (S.inverse() * w * S * w).reduced(8)
    assert rs.relators[1][1] == (w.inverse() * R * w * R**-25).reduced(8)
    assert rs.relators[2][1] == ((w * R**5 * S) ** 3 * S**-2).reduced(8)


def test_relation_set_mixed():
    rs = relation_set(12)
    assert rs.case is Case.MIXED
    assert rs.names() == [f"gen.{i}" for i in range(1, 8)]
    a, r = L**4, R**9
    assert rs.relators[0][1] == (a * r * a.inverse() * r.inverse()).reduced(12)


def test_relation_set_small_moduli():
    assert relation_set(1).relators[0][1] == R**6
    assert relation_set(2).case is Case.POWER_OF_TWO
    with pytest.raises(ValueError):
        relation_set(0)


def test_dispatch_totality():
    counts = {Case.ODD: 1, Case.POWER_OF_TWO: 3, Case.MIXED: 7}
    for n in range(1, 1001):
        rs = relation_set(n)
        assert len(rs.relators) == counts[rs.case]
        assert rs.n == n
        e, m = split_even_odd(n)
        expected = Case.ODD if e == 1 else Case.POWER_OF_TWO if m == 1 else Case.MIXED
        assert rs.case is expected


@pytest.mark.parametrize("n", [3, 5, 8, 12, 20, 24, 40])
def test_relators_are_trivial_mod_n(n):
    # integer oracle: each relator word reduces to +-1 mod n; exactly 1 for
    # the 2-power and mixed families, -1 for the unsigned odd relator
    for name, w in relation_set(n).relators:
        m = tuple(x % n for x in word_to_matrix(w))
        if name == "odd.1":
            assert m == (n - 1, 0, 0, n - 1)
        else:
            assert m == (1, 0, 0, 1), name
    for _, w in relation_set(n, signed_odd=True).relators:
        assert tuple(x % n for x in word_to_matrix(w)) == (1 % n, 0, 0, 1 % n)


def test_is_congruence_examples():
    v = is_congruence(full_group())
    assert v.congruence and v.candidate_level == 1 and v.exact_level == 1
    v = is_congruence(gamma0(4))
    assert (v.congruence, v.even, v.d, v.candidate_level, v.exact_level) == (True, True, 4, 4, 4)
    assert oracle_factors_through(gamma0(4), 4)
    v = is_congruence(gamma1(5))
    assert (v.congruence, v.even, v.d, v.candidate_level) == (True, False, 5, 10)
    assert relation_set(10).case is Case.MIXED
    assert oracle_factors_through(gamma1(5), 10)


def test_exact_level_examples():
    assert exact_level(gamma_full(5), 5, False) == 5
    assert oracle_factors_through(gamma_full(5), 5)
    assert exact_level(gamma0(4), 4, True) == 4
    assert exact_level(gamma1(4), 4, False) == 4
    assert oracle_factors_through(gamma1(4), 4)


def test_odd_relator_needs_sign_for_odd_subgroups():
    g = gamma1(3)
    assert first_failure(g, relation_set(3)) == "odd.1"
    assert first_failure(g, relation_set(3, signed_odd=True)) is None
    assert exact_level(g, 3, False) == 3


def test_noncongruence_has_named_witness():
    for seed in range(200):
        g = random_subgroup(20, seed)
        v = is_congruence(g)
        if not v.even and not v.congruence and sl2_order(v.candidate_level) <= 10**6:
            assert v.failed_relator is not None and v.exact_level is None
            assert not oracle_factors_through(g, v.candidate_level)
            return
    pytest.fail("no odd noncongruence subgroup among the samples")


@pytest.mark.parametrize("seed", range(80))
def test_hsu_form_agrees_on_even_subgroups(seed):
    g = random_subgroup(random.Random(seed).randint(1, 18), seed)
    v = is_congruence(g)
    if v.even:
        assert is_congruence(g, assume_even=True).congruence == v.congruence
        n = v.candidate_level
        # relator by relator only for pow2.3: in gen.7 the right-hand side
        # (l r^-1 l)^2 is -1 on the 2-part alone, not -1 itself
        if relation_set(n).case is Case.POWER_OF_TWO:
            full = relation_set(n).relators[-1][1]
            hsu = relation_set(n, assume_even=True).relators[-1][1]
            assert evaluate_word(full, g.sigma_l, g.sigma_r).is_identity() == \
                evaluate_word(hsu, g.sigma_l, g.sigma_r).is_identity()


@pytest.mark.parametrize("seed", range(60))
def test_conjugation_invariance(seed):
    rng = random.Random(seed)
    g = random_subgroup(rng.randint(1, 16), seed)
    w = Word((rng.choice("LR"), rng.randint(-4, 4)) for _ in range(rng.randint(0, 10)))
    a, b = is_congruence(g), is_congruence(conjugate_by_word(g, w))
    assert (a.congruence, a.candidate_level, a.exact_level) == (b.congruence, b.candidate_level, b.exact_level)


def test_intersection_closure():
    groups = [f(n) for n in range(1, 9) for f in (gamma0, gamma1, gamma_full) if f(n).degree <= 60]
    rng = random.Random(0)
    for _ in range(40):
        g1, g2 = rng.sample(groups, 2)
        v = is_congruence(intersect(g1, g2))
        assert v.congruence


LEVELED = [(f, m) for m in range(1, 9) for f in (gamma0, gamma1, gamma_full)]


@pytest.mark.parametrize("make,m", LEVELED, ids=lambda x: getattr(x, "__name__", x))
def test_relator_sanity(make, m):
    g = make(m)
    for n in range(m, 25, m):
        signed = relation_set(n, signed_odd=True)
        assert first_failure(g, signed) is None, n
        if is_even(g) or n % 2 == 0:
            assert first_failure(g, relation_set(n)) is None, n


def test_cusp_lcm_feeds_candidate():
    for g in (gamma0(6), gamma1(6), gamma_full(4)):
        c = cusp_data(g)
        v = is_congruence(g)
        assert v.candidate_level == (c.d if c.even else 2 * c.d)
