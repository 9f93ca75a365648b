"""Arbitrary-precision integer services.

Primality, factorization under an effort budget, radicals, perfect powers,
Pell solution streams and logarithms of big integers with error bounds.

Factorization runs in three stages: perfect-power reduction, trial division
by the primes below ``Budget.trial_bound``, then Pollard rho with Brent's
cycle detection limited to ``Budget.rho_iterations`` steps per cofactor.
Anything left over is reported as an unfactored cofactor rather than raised.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

# Miller-Rabin with the first 13 prime bases is deterministic below this bound
# (Sorenson & Webster 2015).
DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Extra seeded random bases above the deterministic range; a composite survives
# with probability at most 4**-EXTRA_MR_ROUNDS.
EXTRA_MR_ROUNDS = 24


@dataclass(frozen=True)
class Budget:
    """Effort limits for factorization."""

    trial_bound: int = 10**6
    rho_iterations: int = 10**7
    seed: int = 0

    def __post_init__(self):
        if self.trial_bound < 2 or self.rho_iterations < 1:
            raise ValueError("budget bounds must be positive (trial_bound >= 2)")


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Factorization:
    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


@dataclass(frozen=True)
class PellSolution:
    u: int
    v: int
    D: int

    def __post_init__(self):
        if self.u * self.u - self.D * self.v * self.v != 1:
            raise ValueError(f"({self.u}, {self.v}) does not solve u^2 - {self.D} v^2 = 1")


@dataclass(frozen=True)
class BigLog:
    value: float
    abs_error_bound: float = field(default=0.0)


@lru_cache(maxsize=8)
def small_primes(limit: int) -> tuple[int, ...]:
    """All primes ``<= limit`` by a bytearray sieve."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic below ``DETERMINISTIC_LIMIT`` (~3.3e24). Above it, the fixed
    bases are followed by ``EXTRA_MR_ROUNDS`` bases drawn from a generator seeded
    by ``n``, so the answer is reproducible and a composite is misreported with
    probability at most ``4**-EXTRA_MR_ROUNDS``.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES):
        return False
    if n < DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1), d, s) for _ in range(EXTRA_MR_ROUNDS))


def integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of ``n >= 0``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    bits = n.bit_length()
    if bits <= 52:
        r = int(round(n ** (1.0 / k)))
    else:
        # Newton from an overestimate
        r = 1 << -(-bits // k)
        while True:
            nxt = ((k - 1) * r + n // r ** (k - 1)) // k
            if nxt >= r:
                break
            r = nxt
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


_EXPONENT_PRIMES = small_primes(64)


def perfect_power_decompose(n: int) -> tuple[int, int]:
    """Write ``n = base**exponent`` with the exponent maximal.

    ``1`` decomposes as ``(1, 1)`` by convention.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n < 4:
        return n, 1
    base, exponent = n, 1
    changed = True
    while changed and base >= 4:
        changed = False
        max_k = base.bit_length()
        for k in _EXPONENT_PRIMES if max_k <= 64 else small_primes(max_k):
            if k > max_k:
                break
            r = integer_root(base, k)
            if r**k == base:
                base, exponent = r, exponent * k
                changed = True
                break
    return base, exponent


def _brent_rho(n: int, budget: int, rng: random.Random) -> tuple[int | None, int]:
    """One Pollard-rho/Brent attempt; returns (factor or None, iterations used)."""
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        used += r
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += min(r, k)
        r *= 2
        if used > budget and g == 1:
            return None, used
    if g == n:
        # backtrack one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    if g == n:
        return None, used
    return g, used


def _split(n: int, iterations: int, rng: random.Random) -> tuple[int | None, int]:
    remaining = iterations
    while remaining > 0:
        d, used = _brent_rho(n, remaining, rng)
        remaining -= used
        if d is not None:
            return d, remaining
    return None, 0


def factorize(n: int, budget: Budget = DEFAULT_BUDGET) -> Factorization:
    """Factor ``n`` within ``budget``; leftover composites land in ``cofactor``."""
    if n < 1:
        raise ValueError("n must be positive")
    counts: dict[int, int] = {}
    base, exponent = perfect_power_decompose(n)

    # trial division
    primes = small_primes(budget.trial_bound)
    rest = base
    for p in primes:
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            counts[p] = counts.get(p, 0) + e * exponent
    if 1 < rest:
        if rest <= budget.trial_bound or (primes and rest < primes[-1] ** 2) or is_prime(rest):
            counts[rest] = counts.get(rest, 0) + exponent
            rest = 1

    cofactors: list[tuple[int, int]] = []
    if rest > 1:
        rng = random.Random(budget.seed)
        stack = [(rest, exponent)]
        iterations = budget.rho_iterations
        while stack:
            m, e = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                counts[m] = counts.get(m, 0) + e
                continue
            b, k = perfect_power_decompose(m)
            if k > 1:
                stack.append((b, e * k))
                continue
            d = None
            if iterations > 0:
                d, iterations = _split(m, iterations, rng)
            if d is None:
                cofactors.append((m, e))
                continue
            g = math.gcd(d, m // d)
            if g > 1:
                # split into coprime-ish pieces; shared factor g handled separately
                stack.append((g, e))
                stack.append((m // g, e))
            else:
                stack.append((d, e))
                stack.append((m // d, e))

    cofactor = 1
    for m, e in cofactors:
        cofactor *= m**e
    return Factorization(tuple(sorted(counts.items())), cofactor)


def radical(n: int, budget: Budget = DEFAULT_BUDGET) -> tuple[int, bool]:
    """Return ``(rad, complete)``.

    When the factorization is incomplete the value is the product of the found
    primes times the distinct leftover cofactors, an upper bound on rad(n).
    """
    return radical_of(factorize(n, budget))


def radical_of(f: Factorization) -> tuple[int, bool]:
    value = math.prod(f.primes())
    if f.complete:
        return value, True
    # cofactor = prod m_i**e_i; rad(cofactor) <= prod m_i, take the perfect-power base
    return value * perfect_power_decompose(f.cofactor)[0], False


def pell_stream(D: int, fundamental: PellSolution | tuple[int, int], count: int) -> list[PellSolution]:
    """The first ``count`` Pell solutions starting at ``fundamental``.

    Successive solutions come from ``(u, v) -> (u u0 + D v v0, u v0 + v u0)``.
    """
    if D < 1 or math.isqrt(D) ** 2 == D:
        raise ValueError(f"D={D} must be a positive non-square")
    if not isinstance(fundamental, PellSolution):
        fundamental = PellSolution(fundamental[0], fundamental[1], D)
    if fundamental.D != D or fundamental.v < 1:
        raise ValueError("fundamental solution must have v >= 1 and match D")
    u0, v0 = fundamental.u, fundamental.v
    out = []
    u, v = u0, v0
    for _ in range(count):
        out.append(PellSolution(u, v, D))
        u, v = u * u0 + D * v * v0, u * v0 + v * u0
    return out


_LOG2 = math.log(2.0)
_EPS = 2.0**-52
_MANTISSA_BITS = 64


def big_log(n: int) -> BigLog:
    """Natural log of a positive integer from its bit length and top 64 bits.

    log n = log(m) + shift * log 2 where m holds the leading bits of n.
    Truncating to 64 bits costs at most 2**-63 relative in m; the float ops add
    a few ulps of each term.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return BigLog(0.0, 0.0)
    shift = max(0, n.bit_length() - _MANTISSA_BITS)
    m = n >> shift
    head = math.log(m)
    tail = shift * _LOG2
    value = head + tail
    err = 4 * _EPS * (abs(head) + abs(tail)) + 2.0**-62
    return BigLog(value, err)


def trial_division_radical(n: int) -> int:
    """Radical by plain trial division; slow, meant as a reference."""
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            out *= p
            while n % p == 0:
                n //= p
        p += 1
    return out * n if n > 1 else out


def merge_factorizations(parts: Iterable[Factorization]) -> Factorization:
    """Multiply factorizations together, refining cofactors against known primes."""
    counts: dict[int, int] = {}
    cofactor = 1
    for f in parts:
        for p, e in f.factors:
            counts[p] = counts.get(p, 0) + e
        cofactor *= f.cofactor
    if cofactor > 1:
        for p in list(counts):
            while cofactor % p == 0:
                cofactor //= p
                counts[p] += 1
        if cofactor > 1 and is_prime(cofactor):
            counts[cofactor] = counts.get(cofactor, 0) + 1
            cofactor = 1
    return Factorization(tuple(sorted(counts.items())), cofactor)


def primes_up_to(limit: int) -> list[int]:
    primes = small_primes(max(limit, 2))
    return list(primes[: bisect_right(primes, limit)])
