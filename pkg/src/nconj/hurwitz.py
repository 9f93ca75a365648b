"""Exact arithmetic in the Hurwitz order.

Elements are stored in doubled coordinates: ``HurwitzInt(h0, h1, h2, h3)`` is
the quaternion ``(h0 + h1 i + h2 j + h3 k) / 2``. The four doubled coordinates
share a parity; all even gives the Lipschitz elements, all odd the
half-integer ones.

Side conventions. ``h_divmod_right(a, b)`` returns ``a = b*q + r`` and
``h_divmod_left(a, b)`` returns ``a = q*b + r``. A *right divisor* ``d`` of
``a`` satisfies ``a = x*d``; these are what ``h_gcd_right`` collects, using the
left-quotient division. Left divisors (``a = d*x``) and ``h_gcd_left`` mirror
this with ``h_divmod_right``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

Axis = Literal["i", "j", "k"]


def _qmul(a: tuple[int, int, int, int], b: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@dataclass(frozen=True, slots=True, eq=False)
class HurwitzInt:
    h0: int
    h1: int = 0
    h2: int = 0
    h3: int = 0

    def __eq__(self, other):
        other = HurwitzInt.coerce(other)
        if other is NotImplemented:
            return other
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __post_init__(self):
        p = self.h0 & 1
        if (self.h1 & 1) != p or (self.h2 & 1) != p or (self.h3 & 1) != p:
            raise ValueError(f"doubled coordinates {self.coords} must share a parity")

    @classmethod
    def from_parts(cls, q, r=0, s=0, t=0) -> HurwitzInt:
        """Build from ordinary coordinates (ints, or halves as Fraction/float)."""
        parts = [Fraction(x) * 2 for x in (q, r, s, t)]
        if any(p.denominator != 1 for p in parts):
            raise ValueError("coordinates must be integers or half-integers")
        return cls(*(int(p) for p in parts))

    @classmethod
    def coerce(cls, x) -> HurwitzInt:
        if isinstance(x, HurwitzInt):
            return x
        if isinstance(x, int):
            return cls(2 * x)
        return NotImplemented

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.h0, self.h1, self.h2, self.h3)

    def parts(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(h, 2) for h in self.coords)

    def __add__(self, other):
        other = HurwitzInt.coerce(other)
        if other is NotImplemented:
            return other
        return HurwitzInt(self.h0 + other.h0, self.h1 + other.h1, self.h2 + other.h2, self.h3 + other.h3)

    __radd__ = __add__

    def __neg__(self):
        return HurwitzInt(-self.h0, -self.h1, -self.h2, -self.h3)

    def __sub__(self, other):
        other = HurwitzInt.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = HurwitzInt.coerce(other)
        if other is NotImplemented:
            return other
        return h_mul(self, other)

    def __rmul__(self, other):
        other = HurwitzInt.coerce(other)
        if other is NotImplemented:
            return other
        return h_mul(other, self)

    def __pow__(self, e: int):
        return h_pow(self, e)

    def __bool__(self):
        return any(self.coords)

    def conj(self) -> HurwitzInt:
        return h_conj(self)

    def norm(self) -> int:
        return h_norm(self)

    def trace(self) -> int:
        return h_trace(self)

    def is_rational(self) -> bool:
        return self.h1 == self.h2 == self.h3 == 0 and self.h0 % 2 == 0

    def __str__(self):
        return format_hurwitz(self)


ZERO = HurwitzInt(0)
ONE = HurwitzInt(2)
I = HurwitzInt(0, 2, 0, 0)
J = HurwitzInt(0, 0, 2, 0)
K = HurwitzInt(0, 0, 0, 2)
_AXES = {"i": I, "j": J, "k": K}


def h_mul(z: HurwitzInt, w: HurwitzInt) -> HurwitzInt:
    # doubled(z*w) = qmul(doubled z, doubled w) / 2
    p = _qmul(z.coords, w.coords)
    return HurwitzInt(p[0] // 2, p[1] // 2, p[2] // 2, p[3] // 2)


def h_pow(z: HurwitzInt, e: int) -> HurwitzInt:
    if e < 0:
        raise ValueError("negative exponent")
    out, base = ONE, z
    while e:
        if e & 1:
            out = h_mul(out, base)
        base = h_mul(base, base)
        e >>= 1
    return out


def h_conj(z: HurwitzInt) -> HurwitzInt:
    return HurwitzInt(z.h0, -z.h1, -z.h2, -z.h3)


def h_norm(z: HurwitzInt) -> int:
    return (z.h0 * z.h0 + z.h1 * z.h1 + z.h2 * z.h2 + z.h3 * z.h3) // 4


def h_trace(z: HurwitzInt) -> int:
    return z.h0


def h_is_unit(z: HurwitzInt) -> bool:
    return h_norm(z) == 1


def h_embed_int(n: int) -> HurwitzInt:
    return HurwitzInt(2 * n)


@lru_cache(maxsize=1)
def h_units() -> tuple[HurwitzInt, ...]:
    """The 24 units: ±1, ±i, ±j, ±k and (±1 ±i ±j ±k)/2."""
    out = []
    for pos in range(4):
        for sign in (2, -2):
            c = [0, 0, 0, 0]
            c[pos] = sign
            out.append(HurwitzInt(*c))
    for s0 in (1, -1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    out.append(HurwitzInt(s0, s1, s2, s3))
    return tuple(out)


def h_inverse_unit(u: HurwitzInt) -> HurwitzInt:
    if not h_is_unit(u):
        raise ValueError(f"{u} is not a unit")
    return h_conj(u)


def h_square(z: HurwitzInt) -> HurwitzInt:
    """``z^2 = q^2 - r^2 - s^2 - t^2 + 2q(ri + sj + tk)`` in doubled coordinates."""
    h0, h1, h2, h3 = z.coords
    # doubled coordinates: (h0^2 - h1^2 - h2^2 - h3^2)/2 and h0*h_m
    return HurwitzInt((h0 * h0 - h1 * h1 - h2 * h2 - h3 * h3) // 2, h0 * h1, h0 * h2, h0 * h3)


def h_conjugate_by_unit(z: HurwitzInt, axis: Axis) -> HurwitzInt:
    """``-axis * z * axis``: keeps the real and ``axis`` parts, negates the others."""
    a = _AXES[axis]
    return -h_mul(h_mul(a, z), a)


def _nearest(num: tuple[int, int, int, int], den: int) -> HurwitzInt:
    """Hurwitz element nearest to the quaternion ``num/den`` (den > 0).

    Compares the nearest Lipschitz point with the nearest all-half-integer point;
    ties go to the lexicographically smaller doubled coordinates. Coordinate ties
    in the Lipschitz rounding go toward negative infinity.
    """
    lip = tuple(2 * (-((den - 2 * x) // (2 * den))) for x in num)
    half = tuple(2 * (x // den) + 1 for x in num)

    def dist(c):
        # proportional to |num/den - c/2|^2
        return sum((2 * x - ci * den) ** 2 for x, ci in zip(num, c))

    best = min((dist(lip), lip), (dist(half), half))
    return HurwitzInt(*best[1])


def _check_divisor(b: HurwitzInt) -> int:
    m = b.h0 * b.h0 + b.h1 * b.h1 + b.h2 * b.h2 + b.h3 * b.h3
    if m == 0:
        raise ZeroDivisionError("Hurwitz division by zero")
    return m


def h_divmod_right(a: HurwitzInt, b: HurwitzInt) -> tuple[HurwitzInt, HurwitzInt]:
    """``a = b*q + r`` with ``N(r) < N(b)``; q rounds ``b^-1 a``."""
    m = _check_divisor(b)
    # b^-1 a = conj(b) a / N(b); in doubled coords the exact quotient is P/m
    q = _nearest(_qmul(h_conj(b).coords, a.coords), m)
    return q, a - h_mul(b, q)


def h_divmod_left(a: HurwitzInt, b: HurwitzInt) -> tuple[HurwitzInt, HurwitzInt]:
    """``a = q*b + r`` with ``N(r) < N(b)``; q rounds ``a b^-1``."""
    m = _check_divisor(b)
    q = _nearest(_qmul(a.coords, h_conj(b).coords), m)
    return q, a - h_mul(q, b)


def h_right_divides(d: HurwitzInt, a: HurwitzInt) -> bool:
    """True when ``a = x*d`` for some Hurwitz x."""
    if not d:
        return not a
    return not h_divmod_left(a, d)[1]


def h_left_divides(d: HurwitzInt, a: HurwitzInt) -> bool:
    """True when ``a = d*x`` for some Hurwitz x."""
    if not d:
        return not a
    return not h_divmod_right(a, d)[1]


def _lex_key(z: HurwitzInt) -> tuple[int, ...]:
    # minimizing the negated coordinates prefers 1 among the units
    return tuple(-h for h in z.coords)


def h_gcd_right(a: HurwitzInt, b: HurwitzInt) -> HurwitzInt:
    """Greatest common right divisor ``d`` (``a = x*d``, ``b = y*d``).

    Unique up to a unit on the left; the representative ``u*d`` with the
    smallest ``_lex_key`` is returned, so coprime inputs give 1.
    """
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, h_divmod_left(a, b)[1]
    return min((h_mul(u, a) for u in h_units()), key=_lex_key)


def h_gcd_left(a: HurwitzInt, b: HurwitzInt) -> HurwitzInt:
    """Greatest common left divisor ``d`` (``a = d*x``, ``b = d*y``), normalized as ``d*u``."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, h_divmod_right(a, b)[1]
    return min((h_mul(a, u) for u in h_units()), key=_lex_key)


def _fmt_coeff(h: int) -> str:
    return str(h // 2) if h % 2 == 0 else f"{h}/2"


def format_hurwitz(z: HurwitzInt) -> str:
    """Canonical text such as ``1+24i-288k`` or ``1/2+1/2i-1/2j+1/2k``."""
    terms = []
    for h, sym in zip(z.coords, ("", "i", "j", "k")):
        if h == 0:
            continue
        c = _fmt_coeff(abs(h))
        if sym and c == "1":
            c = ""
        terms.append(("-" if h < 0 else "+") + c + sym)
    if not terms:
        return "0"
    s = "".join(terms)
    return s[1:] if s[0] == "+" else s


_TERM_RE = re.compile(r"([+-])(\d+(?:/\d+)?)?([ijk]?)")


def parse_hurwitz(text: str) -> HurwitzInt:
    """Parse the text produced by :func:`format_hurwitz` (integers accepted too)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Hurwitz literal")
    if s[0] not in "+-":
        s = "+" + s
    coeffs = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and not m.group(3)):
            raise ValueError(f"cannot parse Hurwitz integer {text!r}")
        val = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        coeffs[m.group(3)] += -val if m.group(1) == "-" else val
        pos = m.end()
    return HurwitzInt.from_parts(coeffs[""], coeffs["i"], coeffs["j"], coeffs["k"])
