"""Quality of a tuple: log of the largest entry norm over log rad of the norm product.

The radical is assembled from per-entry factorizations of the norms (prime
union), never by factoring the whole product. An incomplete factorization
leaves a cofactor in the radical, which over-estimates it; the reported q is
then a certified lower bound on the true quality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .conditions import ZZ, RingAdapter
from .integer_core import DEFAULT_BUDGET, Budget, big_log, factorize, merge_factorizations, radical_of

COMPARISON_MARGIN = 1e-9


class UndefinedQualityError(ValueError):
    """Raised when the radical of the norm product is 1."""


@dataclass(frozen=True)
class QualityReport:
    max_norm: int
    norm_product: int
    rad_value: int
    rad_complete: bool
    q: float
    abs_error: float

    @property
    def q_is_lower_bound(self) -> bool:
        return not self.rad_complete

    def at_least(self, bound: float, margin: float = COMPARISON_MARGIN) -> bool:
        return self.q >= bound - margin


def quality_from_norms(norms: Sequence[int], budget: Budget = DEFAULT_BUDGET) -> QualityReport:
    if any(n <= 0 for n in norms):
        raise ValueError("zero entry: quality needs nonzero entries")
    merged = merge_factorizations(factorize(n, budget) for n in norms)
    rad, complete = radical_of(merged)
    if rad < 2:
        raise UndefinedQualityError("undefined quality: radical of the norm product is 1")
    max_norm = max(norms)
    num, den = big_log(max_norm), big_log(rad)
    q = num.value / den.value
    err = q * (num.abs_error_bound / max(num.value, 1e-300) + den.abs_error_bound / den.value)
    return QualityReport(
        max_norm=max_norm,
        norm_product=math.prod(norms),
        rad_value=rad,
        rad_complete=complete,
        q=q,
        abs_error=err,
    )


def quality(a: Sequence, ring: RingAdapter = ZZ, budget: Budget = DEFAULT_BUDGET) -> QualityReport:
    a = [ring.coerce(x) for x in a]
    if any(x == ring.zero for x in a):
        raise ValueError("zero entry: quality needs nonzero entries")
    return quality_from_norms([ring.norm(x) for x in a], budget)


@dataclass
class SequenceTracker:
    """Running maxima of q along a generated sequence of tuples."""

    window: int = 10
    count: int = 0
    best_q: float = float("-inf")
    recent_window_max: float = float("-inf")
    history: list[tuple[int, float]] = field(default_factory=list)

    def track(self, report: QualityReport) -> SequenceTracker:
        self.history.append((self.count, report.q))
        self.count += 1
        self.best_q = max(self.best_q, report.q)
        self.recent_window_max = max(q for _, q in self.history[-self.window :])
        return self


def track(tracker: SequenceTracker, report: QualityReport) -> SequenceTracker:
    return tracker.track(report)
