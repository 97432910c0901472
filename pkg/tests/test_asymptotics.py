from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powerlimits.arith import divisors, is_prime, is_prime_power, multiplicative_order
from powerlimits.asymptotics import (
    abelian_power_ratio,
    gl_order,
    gl_order_limit,
    is_surjective,
    limit_proportion,
    limit_proportion_residue,
    part_count_limit,
    subsequential_limits,
    u_order_limit,
)
from powerlimits.errors import ValidationError
from powerlimits.tori import GroupFamily, load_custom_tori, dump_custom_tori

F = Fraction
GL, SL, U = GroupFamily.gl, GroupFamily.sl, GroupFamily.u


@pytest.mark.parametrize("family, M, q, expected", [
    (GL(2), 2, 3, F(3, 8)),
    (GL(2), 2, 2, F(1)),
    (U(3), 3, 2, F(14, 81)),
    (SL(2), 2, 5, F(1, 2)),
    (GL(3), 2, 3, F(5, 16)),
])
def test_limit_at_q(family, M, q, expected):
    rep = limit_proportion(family, M, q)
    assert rep.value == expected
    assert sum(t.value for t in rep.terms) == rep.value


@pytest.mark.parametrize("family, M, r, expected", [
    (GL(3), 3, 1, F(14, 81)),
    (GL(2), 3, 2, F(2, 3)),
    (GL(2), 5, 0, F(1)),
    (GL(2), 3, 1, F(2, 9)),
])
def test_limit_residue(family, M, r, expected):
    assert limit_proportion_residue(family, M, r).value == expected


def test_limit_rejects_bad_q():
    with pytest.raises(ValidationError):
        limit_proportion(GL(2), 2, 6)
    with pytest.raises(ValidationError):
        limit_proportion(GL(2), 1, 3)
    with pytest.raises(ValidationError):
        limit_proportion_residue(GL(2), 3, 3)


def test_custom_factor_nonpositive():
    doc = '{"name": "t", "rank": 1, "tori": [{"weyl_order": 1, "factors": [[-5, 1]]}]}'
    fam = load_custom_tori(doc)
    with pytest.raises(ValidationError):
        limit_proportion(fam, 2, 4)
    assert limit_proportion(fam, 2, 7).value == F(1, 2)


def test_custom_path_matches_builtin():
    fam = load_custom_tori(dump_custom_tori(GL(2)))
    assert limit_proportion(fam, 2, 3).value == F(3, 8)


@pytest.mark.parametrize("family, M, values", [
    (GL(2), 3, {F(1), F(2, 9), F(2, 3)}),
    (GL(2), 2, {F(1), F(3, 8)}),
    (U(3), 3, {F(1), F(2, 3), F(14, 81)}),
])
def test_subsequential_limits(family, M, values):
    lim = subsequential_limits(family, M)
    assert set(lim.distinct_values) == values
    assert all(0 < v <= 1 for v in lim.distinct_values)
    assert {e.value for e in lim.entries} == set(lim.distinct_values)


def test_subsequential_gl2_m3_entries():
    lim = subsequential_limits(GL(2), 3)
    assert [(e.condition, e.value) for e in lim.entries] == [
        ("M|q", 1), ("ord(q mod M)=1", F(2, 9)), ("ord(q mod M)=2", F(2, 3))]


def test_subsequential_limits_errors():
    with pytest.raises(ValidationError):
        subsequential_limits(GL(2), 4)
    with pytest.raises(ValidationError):
        subsequential_limits(SL(2), 3)


def test_collision_reported_for_small_n():
    # a = 5 > n forces every pi to 0, giving the same value 1 as M | q
    lim = subsequential_limits(GL(2), 11)
    assert ("M|q", "ord(q mod M)=5") in lim.collisions


@pytest.mark.parametrize("n, q, M, expected", [
    (2, 7, 5, True), (2, 5, 5, False), (2, 3, 2, False), (3, 4, 3, False),
])
def test_is_surjective(n, q, M, expected):
    assert is_surjective(n, q, M) is expected


def test_surjective_example_cross_check():
    assert gl_order(2, 7) == 2016 and gcd(5, 2016) == 1
    assert multiplicative_order(7, 5) == 4


def test_abelian_ratio():
    assert abelian_power_ratio([6], 2) == F(1, 2)
    assert abelian_power_ratio([4, 6], 2) == F(1, 4)
    assert abelian_power_ratio([5], 2) == 1


def test_sl2_values():
    for M in (3, 5, 7, 11):
        assert limit_proportion_residue(SL(2), M, 1).value == F(M + 1, 2 * M)
        assert limit_proportion_residue(SL(2), M, M - 1).value == F(M + 1, 2 * M)
    assert limit_proportion_residue(SL(2), 5, 2).value == 1


def test_m2_gl_is_part_count_sum():
    for n in range(1, 9):
        assert limit_proportion_residue(GL(n), 2, 1).value == part_count_limit(n)


def test_u_m2_equals_gl():
    for n in range(1, 9):
        assert limit_proportion_residue(U(n), 2, 1).value == limit_proportion_residue(GL(n), 2, 1).value


def test_coprime_M_gives_one():
    # q = 2^k and M = 2: every torus factor q^i - 1 is odd
    for n in range(1, 7):
        assert limit_proportion(GL(n), 2, 8).value == 1


families = st.sampled_from(["GL", "SL", "U"]).flatmap(
    lambda k: st.integers(2 if k == "SL" else 1, 7).map(lambda n: GroupFamily(k, n)))


@given(families, st.integers(2, 12), st.integers(0, 200))
def test_bounds(family, M, r):
    v = limit_proportion_residue(family, M, r % M).value
    assert Fraction(1, M**family.rank) <= v <= 1


prime_powers = [q for q in range(2, 130) if is_prime_power(q)]


@given(families, st.integers(2, 9), st.sampled_from(prime_powers), st.sampled_from(prime_powers))
def test_residue_sufficiency(family, M, q1, q2):
    if q1 % M != q2 % M:
        return
    assert limit_proportion(family, M, q1).value == limit_proportion(family, M, q2).value


@given(st.sampled_from(prime_powers), st.integers(1, 6), st.integers(2, 10))
def test_q_path_equals_residue_path(q, n, M):
    for fam in (GL(n), U(n)):
        assert limit_proportion(fam, M, q).value == limit_proportion_residue(fam, M, q % M).value


@pytest.mark.parametrize("M", [p for p in range(3, 12) if is_prime(p)])
@pytest.mark.parametrize("n", range(1, 7))
def test_unitary_pi_prime_path(M, n):
    for r in range(1, M):
        a = multiplicative_order(r, M)
        assert limit_proportion_residue(U(n), M, r).value == u_order_limit(n, M, a)


@given(st.lists(st.integers(1, 100), min_size=1, max_size=4), st.integers(2, 30))
def test_abelian_ratio_divides(factors, M):
    ratio = abelian_power_ratio(factors, M)
    assert ratio.numerator == 1 and 0 < ratio <= 1


def test_gl_order_limit_matches_divisors():
    lim = subsequential_limits(GL(4), 5)
    assert [e.value for e in lim.entries[1:]] == [gl_order_limit(4, 5, a) for a in divisors(4)]


def test_surjective_rank_one_with_M_dividing_q():
    # GL(1, q) is cyclic of order q - 1, prime to M when M | q
    from powerlimits.asymptotics import surjectivity_report
    rep = surjectivity_report(1, 4, 2)
    assert rep.surjective and not rep.order_criterion
    assert not is_surjective(2, 4, 2)
