"""Qualities of zero-sum tuples over Z, the Gaussian integers and the Hurwitz quaternions."""

from .conditions import HURWITZ, ZI, ZZ, ConditionProfile, classify, get_ring
from .gaussian import GaussianInt
from .hurwitz import HurwitzInt
from .integer_core import Budget, factorize, radical
from .quality import QualityReport, SequenceTracker, UndefinedQualityError, quality

__all__ = [
    "Budget",
    "ConditionProfile",
    "GaussianInt",
    "HURWITZ",
    "HurwitzInt",
    "QualityReport",
    "SequenceTracker",
    "UndefinedQualityError",
    "ZI",
    "ZZ",
    "classify",
    "factorize",
    "get_ring",
    "quality",
    "radical",
]
__version__ = "0.1.0"
