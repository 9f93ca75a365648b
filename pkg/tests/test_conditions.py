import pytest
from hypothesis import given, strategies as st

from nconj.conditions import (
    HURWITZ,
    ZI,
    ZZ,
    check_f,
    check_g1,
    check_g2,
    check_s1,
    check_s2,
    check_zero_sum,
    classify,
    get_ring,
    validate_f_set,
)
from nconj.gaussian import GaussianInt
from nconj.hurwitz import parse_hurwitz

nonzero_int = st.integers(-50, 50).filter(bool)
int_tuples = st.lists(nonzero_int, min_size=3, max_size=8)


@pytest.mark.parametrize(
    "t, in_a, in_u",
    [
        ((1, 8, -9), True, True),
        ((1, 2, -3), True, True),
        ((2, 4, -6), False, False),  # common factor 2
        ((1, 1, -1, -1), False, False),  # 1 + (-1) vanishes
        ((1, 2, 3, -6), True, False),  # 1 + 2 - 3 vanishes with signs
        ((1, 2, 3), False, False),  # not zero-sum
    ],
)
def test_classify_examples(t, in_a, in_u):
    p = classify(t)
    assert (p.in_A, p.in_U) == (in_a, in_u)


def test_failed_conditions_listing():
    p = classify((2, 4, -6))
    assert "G1" in p.failed_conditions and "Z" not in p.failed_conditions


def test_s_conditions_need_both_coefficients():
    # the full sum vanishes but has no 0 coefficient, so it does not count
    assert check_s1((1, 2, -3)) and check_s2((1, 2, -3))
    # 1 - 1 with a 0 elsewhere vanishes in S2 but not S1
    assert check_s1((1, 1, -2)) and not check_s2((1, 1, -2))


def test_zero_sum_requires_three_entries():
    with pytest.raises(ValueError):
        check_zero_sum((1, -1))


def test_classify_rejects_zero_entry():
    with pytest.raises(ValueError):
        classify((0, 1, -1))


@given(int_tuples)
def test_s2_implies_s1(t):
    assert not check_s2(t) or check_s1(t)


@given(int_tuples)
def test_g2_implies_g1(t):
    assert not check_g2(t) or check_g1(t)


@given(int_tuples, st.randoms(use_true_random=False))
def test_conditions_permutation_invariant(t, rnd):
    u = list(t)
    rnd.shuffle(u)
    assert classify(t).to_dict() == classify(u).to_dict()


def test_f_condition():
    assert check_f((1, 8, -9), ())
    assert not check_f((1, 8, -9), (3,))
    assert check_f((1, 8, -9), (5, 7))
    with pytest.raises(ValueError):
        validate_f_set((2,))
    assert classify((1, 8, -9), (3,)).in_U is False
    assert classify((1, 8, -9), (3,)).in_A is True


def test_gaussian_embedding_keeps_conditions():
    t = (1, 8, -9)
    p = classify([GaussianInt(v) for v in t], (), ZI)
    assert p.in_U


def test_hurwitz_triple_conditions():
    x = parse_hurwitz("1+24i-288k")
    p = classify((x, x.conj(), -2), (), HURWITZ)
    assert p.in_U


def test_hurwitz_gcd_side_matters():
    # i + k has norm 2, so (i+k, 2) share a factor on both sides
    a = parse_hurwitz("i+k")
    assert not check_g2((a, 2, -a - 2), HURWITZ)


def test_get_ring():
    assert get_ring("Z") is ZZ and get_ring("Zi") is ZI and get_ring("Hurwitz") is HURWITZ
    with pytest.raises(ValueError):
        get_ring("Q")
