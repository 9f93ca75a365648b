import pytest
from hypothesis import given, strategies as st

from nconj.gaussian import (
    ONE,
    UNITS,
    GaussianInt,
    I,
    format_gaussian,
    g_divides,
    g_divmod,
    g_factor,
    g_gcd,
    g_norm,
    g_normalize,
    parse_gaussian,
    split_prime,
)
from nconj.integer_core import Budget, is_prime

coord = st.integers(-10**6, 10**6)
gauss = st.builds(GaussianInt, coord, coord)
nonzero = gauss.filter(bool)


@given(gauss, gauss)
def test_norm_multiplicative(a, b):
    assert g_norm(a * b) == g_norm(a) * g_norm(b)


@given(gauss, nonzero)
def test_divmod_contract(a, b):
    q, r = g_divmod(a, b)
    assert a == q * b + r
    assert 2 * g_norm(r) <= g_norm(b)


def test_divmod_ties_round_down():
    # 1/2 + 1/2 i rounds to 0 under ties toward -inf
    q, r = g_divmod(GaussianInt(1, 1), GaussianInt(2))
    assert q == 0 and r == GaussianInt(1, 1)
    q, _ = g_divmod(GaussianInt(-1, -1), GaussianInt(2))
    assert q == GaussianInt(-1, -1)


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        g_divmod(ONE, GaussianInt(0))


@given(nonzero, nonzero)
def test_gcd_divides_and_is_normalized(a, b):
    g = g_gcd(a, b)
    assert g_divides(g, a) and g_divides(g, b)
    assert g.re > 0 and g.im >= 0


@given(nonzero, nonzero, nonzero)
def test_gcd_picks_up_common_factor(a, b, c):
    g = g_gcd(a * c, b * c)
    assert g_divides(c, g)
    assert g_norm(g) == g_norm(c) * g_norm(g_gcd(a, b))


@pytest.mark.parametrize("a, b, g", [((3, 4), (2, 1), (2, 1)), ((3, 4), (1, 2), (1, 0)), ((5, 0), (3, 0), (1, 0)), ((2, 0), (1, 1), (1, 1))])
def test_gcd_examples(a, b, g):
    assert g_gcd(GaussianInt(*a), GaussianInt(*b)) == GaussianInt(*g)


def test_gcd_zero_zero():
    with pytest.raises(ValueError):
        g_gcd(GaussianInt(0), GaussianInt(0))


@given(nonzero)
def test_normalize_is_associate(z):
    n = g_normalize(z)
    assert n.re > 0 and n.im >= 0
    assert any(u * z == n for u in UNITS)


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41, 1_000_033, 998_244_353])
def test_split_prime(p):
    pi = split_prime(p)
    assert g_norm(pi) == p


def test_split_prime_rejects_inert():
    with pytest.raises(ValueError):
        split_prime(7)


@given(nonzero.filter(lambda z: g_norm(z) > 1))
def test_factor_reconstructs(z):
    f = g_factor(z)
    assert f.complete
    assert f.value() == z
    for p, e in f.factors:
        n = g_norm(p)
        assert e >= 1
        assert is_prime(n) or (p.im == 0 and p.re % 4 == 3 and is_prime(p.re))


def test_factor_ramified_and_inert():
    f = g_factor(GaussianInt(2 * 9))
    assert dict((str(p), e) for p, e in f.factors) == {"1+1i": 2, "3": 2}
    assert f.unit * f.factors[0][0] ** 2 * GaussianInt(9) == 18


def test_factor_incomplete_keeps_rest():
    p = split_prime(998_244_353) * split_prime(1_000_033)
    f = g_factor(p, Budget(trial_bound=10, rho_iterations=1))
    assert not f.complete and f.value() == p


@given(gauss)
def test_format_parse_roundtrip(z):
    assert parse_gaussian(format_gaussian(z)) == z


@pytest.mark.parametrize(
    "text, z", [("3+4i", (3, 4)), ("3-4i", (3, -4)), ("-i", (0, -1)), ("i", (0, 1)), ("7", (7, 0)), ("-2i", (0, -2))]
)
def test_parse_examples(text, z):
    assert parse_gaussian(text) == GaussianInt(*z)


@pytest.mark.parametrize("text", ["", "3+", "i3", "abc", "1.5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_gaussian(text)


def test_int_equality_and_units():
    assert GaussianInt(5) == 5 and hash(GaussianInt(5)) == hash(5)
    assert I * I == -1
    assert {u * v for u in UNITS for v in UNITS} == set(UNITS)
