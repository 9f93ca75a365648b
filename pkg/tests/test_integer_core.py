import math

import pytest
from hypothesis import given, strategies as st

from nconj.integer_core import (
    Budget,
    Factorization,
    PellSolution,
    big_log,
    factorize,
    integer_root,
    is_prime,
    merge_factorizations,
    pell_stream,
    perfect_power_decompose,
    primes_up_to,
    radical,
    radical_of,
    small_primes,
    trial_division_radical,
)


def sieve_is_prime(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = [False] * len(flags[p * p :: p])
    return flags


def test_is_prime_matches_sieve():
    flags = sieve_is_prime(20000)
    assert [n for n in range(20001) if is_prime(n)] == [n for n, f in enumerate(flags) if f]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**89 - 1, True),
        (2**127 - 1, True),
        (3_317_044_064_679_887_385_961_981, False),  # strong pseudoprime to the first 12 prime bases
        (3825123056546413051, False),
        (561, False),
        (2**64 + 1, False),
        ((2**61 - 1) * (2**31 - 1), False),
    ],
)
def test_is_prime_known_values(n, expected):
    assert is_prime(n) is expected


def test_small_primes_and_primes_up_to_agree():
    assert list(small_primes(100)) == primes_up_to(100) == [p for p in range(101) if is_prime(p)]


@given(st.integers(0, 10**40), st.integers(1, 12))
def test_integer_root_is_floor(n, k):
    r = integer_root(n, k)
    assert r**k <= n < (r + 1) ** k


@given(st.integers(2, 10**6), st.integers(1, 9))
def test_perfect_power_decompose(base, k):
    b, e = perfect_power_decompose(base**k)
    assert b**e == base**k
    assert e % k == 0 or e >= k
    # maximal exponent: the base itself is not a perfect power
    assert perfect_power_decompose(b) == (b, 1)


@given(st.integers(1, 10**15))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert f.complete
    assert f.value() == n
    assert all(is_prime(p) for p, _ in f.factors)
    assert [p for p, _ in f.factors] == sorted({p for p, _ in f.factors})


@pytest.mark.parametrize("ell", [5, 10, 17, 23, 29, 30])
def test_factorize_fermat_like(ell):
    n = 2 ** (2 * ell) + 1
    f = factorize(n, Budget(rho_iterations=10**7))
    assert f.complete and f.value() == n


def test_factorize_semiprime_needs_rho():
    p, q = 1_000_003, 998_244_353
    f = factorize(p * q)
    assert f.factors == ((p, 1), (q, 1))


def test_tiny_budget_leaves_cofactor():
    n = 1_000_003 * 998_244_353
    f = factorize(n, Budget(trial_bound=10, rho_iterations=1))
    assert not f.complete
    assert f.value() == n
    rad, complete = radical_of(f)
    assert not complete and rad % (1_000_003 * 998_244_353) == 0


def test_perfect_power_cofactor_base_used():
    n = (1_000_003 * 998_244_353) ** 3
    rad, complete = radical_of(factorize(n, Budget(trial_bound=10, rho_iterations=1)))
    assert rad == 1_000_003 * 998_244_353 and not complete


@given(st.integers(1, 200000))
def test_radical_matches_trial_division(n):
    assert radical(n) == (trial_division_radical(n), True)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_radical_submultiplicative(m, n):
    assert radical(m * n)[0] <= radical(m)[0] * radical(n)[0]


def test_radical_rejects_nonpositive():
    with pytest.raises(ValueError):
        radical(0)


@given(st.lists(st.integers(1, 10**9), min_size=1, max_size=5))
def test_merge_is_factorization_of_product(ns):
    merged = merge_factorizations(factorize(n) for n in ns)
    assert radical_of(merged) == radical(math.prod(ns))


def test_merge_divides_cofactor_by_known_primes():
    big = 1_000_003 * 998_244_353
    tiny = Budget(trial_bound=10, rho_iterations=1)
    merged = merge_factorizations([factorize(big, tiny), Factorization(((1_000_003, 1),))])
    assert radical_of(merged) == (big, True)


@pytest.mark.parametrize(
    "D, fund, first",
    [(3, (2, 1), [(2, 1), (7, 4), (26, 15), (97, 56)]), (2, (3, 2), [(3, 2), (17, 12), (99, 70), (577, 408)])],
)
def test_pell_stream(D, fund, first):
    sols = pell_stream(D, fund, 4)
    assert [(s.u, s.v) for s in sols] == first
    assert all(s.u**2 - D * s.v**2 == 1 for s in pell_stream(D, fund, 40))


@pytest.mark.parametrize("D, fund", [(4, (3, 1)), (3, (2, 2)), (2, (1, 0))])
def test_pell_stream_rejects_bad_input(D, fund):
    with pytest.raises(ValueError):
        pell_stream(D, fund, 3)


def test_pell_solution_validates():
    with pytest.raises(ValueError):
        PellSolution(2, 2, 3)


@given(st.integers(1, 2**4000))
def test_big_log_error_bound(n):
    b = big_log(n)
    ref = math.log(n)
    assert abs(b.value - ref) <= b.abs_error_bound + 1e-12 * max(1.0, ref)


def test_random_budget_seed_is_deterministic():
    n = 1_000_003 * 998_244_353 * 1_000_033
    b = Budget(seed=7)
    assert factorize(n, b) == factorize(n, b)
