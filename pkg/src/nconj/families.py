"""Explicit tuple families with large quality.

Every constructor re-checks its defining identities and raises
:class:`FamilyIdentityError` on a mismatch, so a returned tuple is known to
satisfy them exactly.

Families:

* ``elkies4``: Gaussian quadruples ``(a^5, b^5, i c^5, i d^5)`` indexed by
  solutions of ``(x-y)^2 - 3y^2 = 1``.
* ``hurwitz-power3``: Hurwitz triples ``(4^l, 1, -4^l - 1)``.
* ``hurwitz-pell3``: Hurwitz triples ``(x, conj(x), -2)`` with
  ``x = y^2 (-i) y^2 i`` and ``y = a + b i + b j``, ``a^2 - 2b^2 = 1``.
* ``hurwitz-n``: n-tuples ``(x^m, conj(x)^m, -c_0, -c_1 N(x), ...)`` with
  ``m = 2n - 5`` and the coefficients from :func:`coeff_table`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from . import hurwitz as H
from .conditions import HURWITZ, ZI, RingAdapter
from .gaussian import GaussianInt
from .gaussian import I as GI
from .hurwitz import HurwitzInt
from .integer_core import DEFAULT_BUDGET, Budget, PellSolution, big_log, pell_stream
from .quality import COMPARISON_MARGIN, QualityReport, quality

MAX_N = 12
FAMILY_IDS = ("elkies4", "hurwitz-power3", "hurwitz-pell3", "hurwitz-n")


class FamilyIdentityError(AssertionError):
    """A defining identity of a family failed to hold."""


class FamilyParameterError(ValueError):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyIdentityError(msg)


# --- Elkies quadruples over Z[i] -------------------------------------------------


@dataclass(frozen=True)
class ElkiesQuadruple:
    x: int
    y: int
    a: GaussianInt
    b: GaussianInt
    c: GaussianInt
    d: GaussianInt

    @property
    def tuple(self) -> tuple[GaussianInt, ...]:
        return (self.a**5, self.b**5, GI * self.c**5, GI * self.d**5)


def elkies_quadruple(x: int, y: int) -> ElkiesQuadruple:
    if y < 1 or x < 1:
        raise FamilyParameterError("x and y must be positive")
    if (x - y) ** 2 - 3 * y * y != 1:
        raise FamilyParameterError(f"(x, y) = ({x}, {y}) violates (x-y)^2 - 3y^2 = 1")
    if x % 2 == 0:
        raise FamilyParameterError(f"x = {x} must be odd")
    xy = x * y
    a = GaussianInt(x * x + 2 * xy - 2 * y * y)
    b = GaussianInt(-(x * x - 2 * xy - 2 * y * y))
    c = GaussianInt(-x * x - 2 * y * y, 2 * xy)
    d = GaussianInt(x * x + 2 * y * y, 2 * xy)
    q = ElkiesQuadruple(x, y, a, b, c, d)

    ah, bh, ch, dh = q.tuple
    _require(ah + bh + ch + dh == 0, "Elkies zero-sum identity failed")
    _require(b.norm() == 1, "N(b) != 1")
    _require(c.norm() == d.norm() <= a.norm(), "N(c) = N(d) <= N(a) failed")
    # with the signed b and d these are sums; the differences carry extra terms
    _require(a + b == 4 * xy, "a + b != 4xy")
    _require(c + d == GaussianInt(0, 4 * xy), "c + d != 4xy i")
    _require(a * b - c * d == 16 * xy * xy, "ab - cd != 16 x^2 y^2")
    s = 4 * xy * ((2 * x**4 - 6 * y**4) ** 2 + x**8 + 44 * y**8)
    _require(ah + bh == s and ch + dh == -s, "subsum identities for a^5 + b^5 failed")
    return q


def elkies_parameters(count: int) -> list[tuple[int, int]]:
    """(x, y) = (u + v, v) along the Pell stream u^2 - 3v^2 = 1 from (2, 1)."""
    out = []
    for sol in pell_stream(3, PellSolution(2, 1, 3), count):
        x, y = sol.u + sol.v, sol.v
        _require(x % 2 == 1, f"generated x = {x} is even")
        out.append((x, y))
    return out


def elkies_stream(count: int) -> list[ElkiesQuadruple]:
    if count < 1:
        raise FamilyParameterError("count must be positive")
    return [elkies_quadruple(x, y) for x, y in elkies_parameters(count)]


# --- Hurwitz triples ---------------------------------------------------------------


def hurwitz_power_triple(ell: int) -> tuple[HurwitzInt, HurwitzInt, HurwitzInt]:
    """``(4^l, 1, -4^l - 1)``; checks ``(2^l i + k)^2 = -4^l - 1``."""
    if ell < 0:
        raise FamilyParameterError("ell must be non-negative")
    p = 1 << (2 * ell)
    root = HurwitzInt(0, 2 << ell, 0, 2)
    _require(H.h_square(root) == H.h_embed_int(-p - 1), "(2^l i + k)^2 != -4^l - 1")
    return (H.h_embed_int(p), H.ONE, H.h_embed_int(-p - 1))


def _check_pell2(a: int, b: int) -> None:
    if a < 1 or b < 1 or a * a - 2 * b * b != 1:
        raise FamilyParameterError(f"(a, b) = ({a}, {b}) violates a^2 - 2b^2 = 1")


def hurwitz_pell_y(a: int, b: int) -> HurwitzInt:
    _check_pell2(a, b)
    return HurwitzInt(2 * a, 2 * b, 2 * b, 0)


def hurwitz_pell_x(a: int, b: int) -> HurwitzInt:
    """``x = y^2 * (-i) * y^2 * i`` for ``y = a + b i + b j``; equals ``1 + 4ab i - 8a^2b^2 k``."""
    y = hurwitz_pell_y(a, b)
    y2 = H.h_square(y)
    x = y2 * (-H.I) * y2 * H.I
    _require(x == HurwitzInt.from_parts(1, 4 * a * b, 0, -8 * a * a * b * b), "closed form of x failed")
    _require(H.h_conjugate_by_unit(y2, "i") == HurwitzInt.from_parts(1, 2 * a * b, -2 * a * b, 0), "-i y^2 i failed")
    _require(x.norm() == y.norm() ** 4, "N(x) != N(y)^4")
    _require(x.trace() == 2, "Tr(x) != 2")
    _require(H.h_conjugate_by_unit(x, "j") == x.conj(), "-j x j != conj(x)")
    return x


def hurwitz_triple(a: int, b: int) -> tuple[HurwitzInt, HurwitzInt, HurwitzInt]:
    x = hurwitz_pell_x(a, b)
    triple = (x, x.conj(), H.h_embed_int(-2))
    _require(sum(triple, H.ZERO) == H.ZERO, "x + conj(x) - 2 != 0")
    # x = 1 + 2z, so x and conj(x) share no factor with 2 or each other
    for u, v in ((0, 1), (0, 2), (1, 2)):
        _require(H.h_is_unit(H.h_gcd_right(triple[u], triple[v])), "entries are not pairwise coprime")
        _require(H.h_is_unit(H.h_gcd_left(triple[u], triple[v])), "entries are not pairwise coprime")
    return triple


def pell2_parameters(count: int) -> list[tuple[int, int]]:
    return [(s.u, s.v) for s in pell_stream(2, PellSolution(3, 2, 2), count)]


# --- coefficient tables for x^m + conj(x)^m with Tr(x) = 2 --------------------------


@dataclass(frozen=True)
class CoeffTable:
    m: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, norm: int) -> int:
        return sum(c * norm**i for i, c in enumerate(self.coefficients))


def coeff_rows(m_max: int) -> list[list[int]]:
    """Rows for m = 0..m_max of ``x^m + conj(x)^m`` as polynomials in N(x).

    Row m+2 = 2 * row(m+1) - N * row(m), from rows 0 and 1 both equal to [2].
    """
    rows = [[2], [2]]
    while len(rows) <= m_max:
        prev, cur = rows[-2], rows[-1]
        nxt = [0] * max(len(cur), len(prev) + 1)
        for i, c in enumerate(cur):
            nxt[i] += 2 * c
        for i, c in enumerate(prev):
            nxt[i + 1] -= c
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        rows.append(nxt)
    return rows[: m_max + 1]


def coeff_table(m: int) -> CoeffTable:
    if m < 1 or m % 2 == 0:
        raise FamilyParameterError(f"m = {m} must be an odd positive integer")
    row = coeff_rows(m)[m]
    _require(len(row) - 1 == (m - 1) // 2, "degree is not (m-1)/2")
    _require(row[0] == 2**m, "c_0 != 2^m")
    for i, c in enumerate(row):
        _require((c > 0) if i % 2 == 0 else (c < 0), f"sign of c_{i} does not alternate")
    return CoeffTable(m, tuple(row))


def ntuple_threshold(n: int) -> int:
    """Sum of |c_i| for m = 2n - 5; N(x) must exceed it."""
    return sum(abs(c) for c in coeff_table(2 * n - 5).coefficients)


def hurwitz_ntuple(n: int, a: int, b: int) -> tuple[HurwitzInt, ...]:
    if not 4 <= n <= MAX_N:
        raise FamilyParameterError(f"n = {n} must lie in [4, {MAX_N}]")
    x = hurwitz_pell_x(a, b)
    m = 2 * n - 5
    table = coeff_table(m)
    nx = x.norm()
    need = sum(abs(c) for c in table.coefficients)
    if nx <= need:
        raise FamilyParameterError(f"N(x) = {nx} must exceed {need} for n = {n}; choose a larger Pell solution")
    xm = x**m
    xbm = x.conj() ** m
    rest = [H.h_embed_int(-c * nx**i) for i, c in enumerate(table.coefficients)]
    _require(xm + xbm == H.h_embed_int(table.evaluate(nx)), "x^m + conj(x)^m != sum c_i N(x)^i")
    out = (xm, xbm, *rest)
    _require(len(out) == n, "tuple length mismatch")
    _require(sum(out, H.ZERO) == H.ZERO, "zero sum failed")
    return out


# --- bounds ------------------------------------------------------------------------


def elkies_bound() -> float:
    return 10 / 3


def power_triple_bound(ell: int) -> float:
    return 4 * ell / (2 * ell + 2)


def pell_triple_bound(a: int, b: int) -> float:
    ny = hurwitz_pell_y(a, b).norm()
    L = math.log(ny)
    return 4 * L / (L + math.log(2))


def ntuple_bound(n: int, a: int, b: int) -> float:
    ny = hurwitz_pell_y(a, b).norm()
    coeffs = coeff_table(2 * n - 5).coefficients
    L = math.log(ny)
    C = big_log(math.prod(abs(c) for c in coeffs)).value
    return 4 * (2 * n - 5) * L / (L + C)


def build(family_id: str, params: dict) -> tuple[RingAdapter, tuple]:
    """Construct a family member from its parameter dict."""
    if family_id == "elkies4":
        return ZI, elkies_quadruple(params["x"], params["y"]).tuple
    if family_id == "hurwitz-power3":
        return HURWITZ, hurwitz_power_triple(params["ell"])
    if family_id == "hurwitz-pell3":
        return HURWITZ, hurwitz_triple(params["a"], params["b"])
    if family_id == "hurwitz-n":
        return HURWITZ, hurwitz_ntuple(params["n"], params["a"], params["b"])
    raise FamilyParameterError(f"unknown family {family_id!r}; expected one of {FAMILY_IDS}")


def family_bound(family_id: str, params: dict) -> float:
    if family_id == "elkies4":
        return elkies_bound()
    if family_id == "hurwitz-power3":
        return power_triple_bound(params["ell"])
    if family_id == "hurwitz-pell3":
        return pell_triple_bound(params["a"], params["b"])
    if family_id == "hurwitz-n":
        return ntuple_bound(params["n"], params["a"], params["b"])
    raise FamilyParameterError(f"unknown family {family_id!r}; expected one of {FAMILY_IDS}")


def verify_quality_bound(
    family_id: str, params: dict, budget: Budget = DEFAULT_BUDGET
) -> tuple[bool, QualityReport, float]:
    """Return (q >= bound - margin, report, bound) for one family member."""
    ring, tup = build(family_id, params)
    report = quality(tup, ring, budget)
    bound = family_bound(family_id, params)
    return report.q >= bound - COMPARISON_MARGIN, report, bound


def family_params(family_id: str, index: int, *, n: int | None = None) -> dict:
    """Parameters of the ``index``-th member (0-based) in generation order."""
    if index < 0:
        raise FamilyParameterError("index must be non-negative")
    if family_id == "elkies4":
        x, y = elkies_parameters(index + 1)[index]
        return {"x": x, "y": y}
    if family_id == "hurwitz-power3":
        return {"ell": index + 1}
    if family_id == "hurwitz-pell3":
        a, b = pell2_parameters(index + 1)[index]
        return {"a": a, "b": b}
    if family_id == "hurwitz-n":
        if n is None:
            raise FamilyParameterError("hurwitz-n needs n")
        # skip Pell solutions below the magnitude threshold
        need = ntuple_threshold(n)
        k, found = 0, -1
        while True:
            k += 1
            a, b = pell2_parameters(k)[-1]
            if hurwitz_pell_x(a, b).norm() > need:
                found += 1
                if found == index:
                    return {"n": n, "a": a, "b": b}
    raise FamilyParameterError(f"unknown family {family_id!r}; expected one of {FAMILY_IDS}")


def iter_family(family_id: str, start: int = 0, *, n: int | None = None) -> Iterator[dict]:
    i = start
    while True:
        yield family_params(family_id, i, n=n)
        i += 1


def rad_le_a_cubed(q: ElkiesQuadruple, budget: Budget = DEFAULT_BUDGET) -> bool:
    """rad(N(a^5 b^5 c^5 d^5)) <= a^3 (a is a positive rational integer)."""
    report = quality(q.tuple, ZI, budget)
    return report.rad_complete and report.rad_value <= q.a.re**3
