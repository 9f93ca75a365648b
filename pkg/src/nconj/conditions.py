"""Tuple predicates (Z), (S1), (S2), (G1), (G2), (F) over Z, Z[i] and the Hurwitz order.

A :class:`RingAdapter` bundles what the predicates need from a ring. "gcd equals
1" is read as "gcd is a unit", since gcds in Z[i] and the Hurwitz order are
only defined up to units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Sequence

from . import gaussian as G
from . import hurwitz as H

MAX_SUBSUM_N = 24


@dataclass(frozen=True)
class RingAdapter:
    name: str
    zero: Any
    one: Any
    embed: Callable[[int], Any]
    norm: Callable[[Any], int]
    right_divides: Callable[[Any, Any], bool]
    left_divides: Callable[[Any, Any], bool]
    gcd_right: Callable[[Any, Any], Any]
    gcd_left: Callable[[Any, Any], Any]
    parse: Callable[[str], Any]
    format: Callable[[Any], str]
    commutative: bool = True

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return self.norm(a) == 1

    def coerce(self, x):
        return self.embed(x) if isinstance(x, int) else x


def _int_divides(d: int, a: int) -> bool:
    return a == 0 if d == 0 else a % d == 0


def _int_parse(s: str) -> int:
    return int(s.strip())


ZZ = RingAdapter(
    name="Z",
    zero=0,
    one=1,
    embed=int,
    norm=abs,
    right_divides=_int_divides,
    left_divides=_int_divides,
    gcd_right=math.gcd,
    gcd_left=math.gcd,
    parse=_int_parse,
    format=str,
)

ZI = RingAdapter(
    name="Zi",
    zero=G.ZERO,
    one=G.ONE,
    embed=lambda n: G.GaussianInt(n, 0),
    norm=G.g_norm,
    right_divides=G.g_divides,
    left_divides=G.g_divides,
    gcd_right=G.g_gcd,
    gcd_left=G.g_gcd,
    parse=G.parse_gaussian,
    format=G.format_gaussian,
)

HURWITZ = RingAdapter(
    name="Hurwitz",
    zero=H.ZERO,
    one=H.ONE,
    embed=H.h_embed_int,
    norm=H.h_norm,
    right_divides=H.h_right_divides,
    left_divides=H.h_left_divides,
    gcd_right=H.h_gcd_right,
    gcd_left=H.h_gcd_left,
    parse=H.parse_hurwitz,
    format=H.format_hurwitz,
    commutative=False,
)

RINGS = {r.name: r for r in (ZZ, ZI, HURWITZ)}


def get_ring(name: str) -> RingAdapter:
    try:
        return RINGS[name]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; expected one of {sorted(RINGS)}") from None


def _prepare(a: Sequence, ring: RingAdapter) -> list:
    return [ring.coerce(x) for x in a]


def check_zero_sum(a: Sequence, ring: RingAdapter = ZZ) -> bool:
    if len(a) < 3:
        raise ValueError("tuples must have at least 3 entries")
    a = _prepare(a, ring)
    return reduce(ring.add, a, ring.zero) == ring.zero


def _vanishing_subsum(a: list, ring: RingAdapter, alphabet: tuple[int, ...]) -> bool:
    """Is there b in alphabet^n with some b_i = 0, some b_j = 1 and sum b_k a_k = 0?

    Exhaustive over all coefficient vectors, with states (partial sum, has 0,
    has 1) merged when they coincide.
    """
    if len(a) > MAX_SUBSUM_N:
        raise ValueError(f"subsum enumeration is limited to n <= {MAX_SUBSUM_N}")
    states = {(ring.zero, False, False)}
    for x in a:
        nx = ring.neg(x)
        nxt = set()
        for s, h0, h1 in states:
            nxt.add((s, True, h1))
            nxt.add((ring.add(s, x), h0, True))
            if -1 in alphabet:
                nxt.add((ring.add(s, nx), h0, h1))
        states = nxt
    return (ring.zero, True, True) in states


def check_s1(a: Sequence, ring: RingAdapter = ZZ) -> bool:
    return not _vanishing_subsum(_prepare(a, ring), ring, (0, 1))


def check_s2(a: Sequence, ring: RingAdapter = ZZ) -> bool:
    return not _vanishing_subsum(_prepare(a, ring), ring, (-1, 0, 1))


def _gcd_all(a: list, gcd: Callable) -> Any:
    return reduce(gcd, a)


def check_g1(a: Sequence, ring: RingAdapter = ZZ) -> bool:
    """Both one-sided gcds of all entries are units."""
    a = _prepare(a, ring)
    if not ring.is_unit(_gcd_all(a, ring.gcd_right)):
        return False
    if ring.commutative:
        return True
    return ring.is_unit(_gcd_all(a, ring.gcd_left))


def check_g2(a: Sequence, ring: RingAdapter = ZZ) -> bool:
    """Every pair of entries has unit one-sided gcds on both sides."""
    a = _prepare(a, ring)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if not ring.is_unit(ring.gcd_right(a[i], a[j])):
                return False
            if not ring.commutative and not ring.is_unit(ring.gcd_left(a[i], a[j])):
                return False
    return True


def validate_f_set(f_set) -> frozenset[int]:
    f = frozenset(int(x) for x in f_set or ())
    if f and min(f) < 3:
        raise ValueError("F must be empty or have min F >= 3")
    return f


def check_f(a: Sequence, f_set=(), ring: RingAdapter = ZZ) -> bool:
    """No entry is a multiple of an element of F (tested on both sides)."""
    f = validate_f_set(f_set)
    a = _prepare(a, ring)
    for m in f:
        d = ring.embed(m)
        for x in a:
            if ring.right_divides(d, x) or ring.left_divides(d, x):
                return False
    return True


@dataclass(frozen=True)
class ConditionProfile:
    Z: bool
    S1: bool
    S2: bool
    G1: bool
    G2: bool
    F: bool
    F_set: frozenset[int] = field(default_factory=frozenset)

    @property
    def in_A(self) -> bool:
        return self.Z and self.S1 and self.G1

    @property
    def in_U(self) -> bool:
        return self.Z and self.S2 and self.G2 and self.F

    @property
    def failed_conditions(self) -> list[str]:
        return [name for name in ("Z", "S1", "S2", "G1", "G2", "F") if not getattr(self, name)]

    def to_dict(self) -> dict:
        return {
            "Z": self.Z,
            "S1": self.S1,
            "S2": self.S2,
            "G1": self.G1,
            "G2": self.G2,
            "F": self.F,
            "F_set": sorted(self.F_set),
            "in_A": self.in_A,
            "in_U": self.in_U,
        }


def classify(a: Sequence, f_set=(), ring: RingAdapter = ZZ) -> ConditionProfile:
    f = validate_f_set(f_set)
    a = _prepare(a, ring)
    if any(x == ring.zero for x in a):
        raise ValueError("tuple entries must be nonzero")
    return ConditionProfile(
        Z=check_zero_sum(a, ring),
        S1=check_s1(a, ring),
        S2=check_s2(a, ring),
        G1=check_g1(a, ring),
        G2=check_g2(a, ring),
        F=check_f(a, f, ring),
        F_set=f,
    )
