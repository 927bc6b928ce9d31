import pytest

from pathdepth.formulas import (
    IDENTITY_IDS,
    colon_identity_sides,
    depth_formula,
    dim_formula,
    dimension_split_sides,
    lemma23_check,
    lemma23_exhaustive,
    pd_formula,
    power_zero_threshold,
    split_recursion_sides,
    witness_monomial,
)
from pathdepth.graphs import path_power_ideal
from pathdepth.ring import contains, ideal_power


def test_depth_formula_values():
    assert [depth_formula(n) for n in (3, 8, 10)] == [2, 3, 4]
    with pytest.raises(ValueError):
        depth_formula(2)


def test_pd_formula_values():
    assert [pd_formula(n) for n in (7, 3, 14)] == [5, 1, 10]


def test_dim_formula_values():
    assert [dim_formula(n) for n in (3, 4, 6)] == [2, 2, 4]


def test_lemma23():
    assert lemma23_check(7) and lemma23_check(1)
    assert lemma23_exhaustive(100_000) is None


def test_negative_floors_round_down():
    # n = 1: ceil(0/7) + floor(-2/7) + 1 = 0 and ceil(1/7) + floor(-1/7) = 0
    from pathdepth.formulas import lemma23_lhs, lemma23_rhs

    assert (lemma23_lhs(1), lemma23_rhs(1)) == (0, 0)


def test_formula_consistency():
    for n in range(3, 10_001):
        d = depth_formula(n)
        assert d + pd_formula(n) == n
        if n > 3:
            assert d - depth_formula(n - 1) in (0, 1)
        assert dim_formula(n) >= d
        assert (dim_formula(n) == d) == (n in (3, 4))


def test_threshold_values():
    assert [power_zero_threshold(n) for n in (5, 8, 11)] == [2, 3, 4]
    with pytest.raises(ValueError):
        power_zero_threshold(4)


def test_witness_values():
    assert witness_monomial(5).support() == (1, 2, 3, 4, 5)
    assert witness_monomial(6).support() == (2, 3, 4, 5, 6)
    assert witness_monomial(7).support() == (3, 4, 5, 6, 7)


@pytest.mark.parametrize("n", range(5, 12))
def test_witness_is_a_socle_element(n):
    P = ideal_power(path_power_ideal(n), power_zero_threshold(n))
    a = witness_monomial(n)
    assert not contains(P, a)
    for j in range(1, n + 1):
        assert contains(P, a * P.ring.var(j))


@pytest.mark.parametrize("n", range(8, 15))
def test_colon_identities(n):
    sides = colon_identity_sides(n)
    assert tuple(cid for cid, _, _ in sides) == IDENTITY_IDS
    for cid, lhs, rhs in sides:
        assert lhs == rhs, cid


@pytest.mark.parametrize("n", range(8, 15))
def test_recursion_displays(n):
    for cid, lhs, rhs in split_recursion_sides(n):
        assert lhs == rhs, cid
    whole, split = dimension_split_sides(n)
    assert whole == split


def test_identities_need_n_at_least_8():
    with pytest.raises(ValueError, match="n-7 = 0"):
        colon_identity_sides(7)
