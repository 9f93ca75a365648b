"""Exact arithmetic in the Gaussian integers Z[i]."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .integer_core import DEFAULT_BUDGET, Budget, factorize


@dataclass(frozen=True, slots=True, eq=False)
class GaussianInt:
    re: int
    im: int = 0

    def __eq__(self, other):
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    @classmethod
    def coerce(cls, x) -> GaussianInt:
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        return NotImplemented

    def __add__(self, other):
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return g_norm(self)

    def __str__(self):
        return format_gaussian(self)


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, -ONE, -I)


def g_norm(z: GaussianInt) -> int:
    return z.re * z.re + z.im * z.im


def g_is_unit(z: GaussianInt) -> bool:
    return g_norm(z) == 1


def _round_half_down(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward negative infinity."""
    return -((den - 2 * num) // (2 * den))


def g_divmod(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division ``a = q*b + r`` with ``N(r) < N(b)``.

    ``q`` rounds a/b coordinatewise to the nearest integer, ties downward.
    """
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    n = g_norm(b)
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    num = a * b.conj()
    q = GaussianInt(_round_half_down(num.re, n), _round_half_down(num.im, n))
    return q, a - q * b


def g_divides(d: GaussianInt, a: GaussianInt) -> bool:
    if not d:
        return not a
    return not g_divmod(a, d)[1]


def g_normalize(z: GaussianInt) -> GaussianInt:
    """The associate of ``z`` with re > 0 and im >= 0 (zero maps to zero)."""
    if not z:
        return z
    for u in UNITS:
        w = u * z
        if w.re > 0 and w.im >= 0:
            return w
    raise AssertionError("unreachable")


def g_gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, g_divmod(a, b)[1]
    return g_normalize(a)


def _sqrt_minus_one(p: int) -> int:
    """A square root of -1 mod a prime p = 1 (mod 4), from the first non-residue."""
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    return pow(c, (p - 1) // 4, p)


def split_prime(p: int) -> GaussianInt:
    """A normalized Gaussian prime of norm ``p`` for ``p = 2`` or ``p = 1 mod 4``."""
    if p == 2:
        return GaussianInt(1, 1)
    if p % 4 != 1:
        raise ValueError(f"{p} is inert in Z[i]")
    t = _sqrt_minus_one(p)
    return g_gcd(GaussianInt(p), GaussianInt(t, 1))


@dataclass(frozen=True)
class GaussianFactorization:
    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]
    cofactor: int = 1  # unfactored part of N(z), 1 when complete
    rest: GaussianInt = ONE  # Gaussian part not resolved into primes

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> GaussianInt:
        out = self.unit * self.rest
        for p, e in self.factors:
            out = out * p**e
        return out


def _strip(z: GaussianInt, p: GaussianInt) -> tuple[GaussianInt, int]:
    e = 0
    while True:
        q, r = g_divmod(z, p)
        if r:
            return z, e
        z, e = q, e + 1


def g_factor(z: GaussianInt, budget: Budget = DEFAULT_BUDGET) -> GaussianFactorization:
    """Factor ``z`` into normalized Gaussian primes times a unit.

    Primes come from the factorization of N(z): 2 ramifies as (1+i), p = 3 mod 4
    stays inert, p = 1 mod 4 splits into gcd(p, t+i) and its conjugate where
    t^2 = -1 mod p. If N(z) cannot be fully factored within ``budget`` the
    leftover goes into ``rest`` and ``cofactor`` is its norm.
    """
    z = GaussianInt.coerce(z)
    if not z:
        raise ValueError("cannot factor zero")
    nf = factorize(g_norm(z), budget)
    factors: list[tuple[GaussianInt, int]] = []
    rest = z
    for p, _ in nf.factors:
        if p % 4 == 3:
            rest, e = _strip(rest, GaussianInt(p))
            factors.append((GaussianInt(p), e))
            continue
        pi = split_prime(p)
        candidates = [pi] if p == 2 else [pi, g_normalize(pi.conj())]
        for c in candidates:
            rest, e = _strip(rest, c)
            if e:
                factors.append((c, e))
    if g_is_unit(rest):
        return GaussianFactorization(rest, tuple(factors))
    return GaussianFactorization(ONE, tuple(factors), g_norm(rest), rest)


def format_gaussian(z: GaussianInt) -> str:
    if z.im == 0:
        return str(z.re)
    sign = "-" if z.im < 0 else "+"
    return f"{z.re}{sign}{abs(z.im)}i"


_GAUSS_RE = re.compile(r"^([+-]?\d+)?(?:([+-])(\d*)i)?$")


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``"a+bi"``, ``"a-bi"``, ``"a"``, ``"bi"`` or ``"-i"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian integer literal")
    if s.endswith("i") and s[0] not in "+-" and not re.match(r"^\d+[+-]", s):
        s = "+" + s
    m = _GAUSS_RE.match(s)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise ValueError(f"cannot parse Gaussian integer {text!r}")
    re_part = int(m.group(1)) if m.group(1) else 0
    im_part = 0
    if m.group(2):
        mag = int(m.group(3)) if m.group(3) else 1
        im_part = -mag if m.group(2) == "-" else mag
    return GaussianInt(re_part, im_part)
