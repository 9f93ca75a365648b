"""A handful of fast end-to-end checks, run by ``nconj selftest``."""

from __future__ import annotations

import math
import sys
from typing import Callable

from . import families
from .conditions import HURWITZ, ZI, ZZ, classify
from .gaussian import GaussianInt
from .hurwitz import parse_hurwitz
from .integer_core import radical, trial_division_radical
from .quality import quality


def _elkies_31() -> bool:
    q = families.elkies_quadruple(3, 1)
    r = quality(q.tuple, ZI)
    return r.rad_value == 2041 and abs(r.q - 3.3656) < 1e-4 and classify(q.tuple, (), ZI).in_U


def _power_triple() -> bool:
    ok, report, _ = families.verify_quality_bound("hurwitz-power3", {"ell": 10})
    return ok and classify(families.hurwitz_power_triple(10), (), HURWITZ).in_U


def _pell_triple() -> bool:
    x = families.hurwitz_pell_x(3, 2)
    return x.norm() == 83521 and x == parse_hurwitz("1+24i-288k")


def _radical() -> bool:
    return all(radical(n)[0] == trial_division_radical(n) for n in range(1, 2000))


def _doubling() -> bool:
    t = (1, 8, -9)
    qz = quality(t, ZZ).q
    return math.isclose(quality([GaussianInt(v) for v in t], ZI).q, 2 * qz, abs_tol=1e-9) and math.isclose(
        quality(t, HURWITZ).q, 2 * qz, abs_tol=1e-9
    )


def _coefficients() -> bool:
    return families.coeff_table(7).coefficients == (128, -224, 112, -14)


CHECKS: dict[str, Callable[[], bool]] = {
    "elkies (3,1)": _elkies_31,
    "power triple l=10": _power_triple,
    "pell triple (3,2)": _pell_triple,
    "radical n<2000": _radical,
    "doubling (1,8,-9)": _doubling,
    "coefficients m=7": _coefficients,
}


def run_selftest(out=None) -> bool:
    out = out or sys.stdout
    all_ok = True
    for name, fn in CHECKS.items():
        try:
            ok = bool(fn())
        except Exception as exc:  # report, keep going
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        all_ok &= ok
        print(f"{'ok  ' if ok else 'FAIL'} {name}", file=out)
    return all_ok
