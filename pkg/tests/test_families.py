import math

import pytest

from nconj import families as F
from nconj.conditions import HURWITZ, ZI, classify
from nconj.gaussian import GaussianInt
from nconj.hurwitz import HurwitzInt, h_embed_int, parse_hurwitz
from nconj.quality import quality


def test_elkies_first_member():
    e = F.elkies_quadruple(3, 1)
    assert (e.a, e.b) == (GaussianInt(13), GaussianInt(-1))
    assert (e.c, e.d) == (GaussianInt(-11, 6), GaussianInt(11, 6))
    assert [v.norm() for v in (e.a, e.b, e.c, e.d)] == [169, 1, 157, 157]
    assert sum(e.tuple, GaussianInt(0)) == 0


def test_elkies_parameters_follow_pell():
    assert F.elkies_parameters(4) == [(3, 1), (11, 4), (41, 15), (153, 56)]
    for x, y in F.elkies_parameters(8):
        assert (x - y) ** 2 - 3 * y**2 == 1


@pytest.mark.parametrize("x, y", F.elkies_parameters(6))
def test_elkies_sum_identities(x, y):
    e = F.elkies_quadruple(x, y)
    assert e.a + e.b == 4 * x * y
    assert e.c + e.d == GaussianInt(0, 4 * x * y)
    assert e.a * e.b - e.c * e.d == 16 * x * x * y * y


def test_elkies_rejects_non_solution():
    with pytest.raises(F.FamilyParameterError):
        F.elkies_quadruple(4, 1)


@pytest.mark.parametrize("ell", [1, 2, 5, 12])
def test_power_triple(ell):
    t = F.hurwitz_power_triple(ell)
    assert t[0] == h_embed_int(4**ell) and t[1] == 1 and t[2] == h_embed_int(-(4**ell) - 1)
    assert classify(t, (), HURWITZ).in_U


def test_power_triple_bound_increases_but_q_need_not():
    bounds = [F.power_triple_bound(ell) for ell in range(1, 31)]
    assert bounds == sorted(bounds) and len(set(bounds)) == 30
    qs = {ell: quality(F.hurwitz_power_triple(ell), HURWITZ).q for ell in (5, 6)}
    assert qs[5] > qs[6]  # 4^5 + 1 = 5^2 * 41


def test_pell_triple_reference():
    x = F.hurwitz_pell_x(3, 2)
    assert x == parse_hurwitz("1+24i-288k") and x.norm() == 83521
    assert F.hurwitz_pell_y(3, 2).norm() == 17
    t = F.hurwitz_triple(3, 2)
    assert t[2] == -2
    assert quality(t, HURWITZ).q == pytest.approx(F.pell_triple_bound(3, 2), abs=1e-9)


def test_pell_triple_rejects_non_solution():
    with pytest.raises((F.FamilyIdentityError, F.FamilyParameterError, ValueError)):
        F.hurwitz_triple(3, 1)


@pytest.mark.parametrize(
    "m, row", [(1, (2,)), (3, (8, -6)), (5, (32, -40, 10)), (7, (128, -224, 112, -14))]
)
def test_coeff_table(m, row):
    assert F.coeff_table(m).coefficients == row


def test_coeff_table_rejects_even():
    with pytest.raises(F.FamilyParameterError):
        F.coeff_table(4)


def test_coeff_rows_match_powers():
    x = HurwitzInt.from_parts(1, 3, -2, 5)
    rows = F.coeff_rows(12)
    for m, row in enumerate(rows):
        ev = sum(c * x.norm() ** i for i, c in enumerate(row))
        assert x**m + x.conj() ** m == h_embed_int(ev)


@pytest.mark.parametrize("n", range(4, 9))
def test_ntuple(n):
    t = F.hurwitz_ntuple(n, 3, 2)
    assert len(t) == n
    assert sum(t, HurwitzInt(0)) == 0
    p = classify(t, (), HURWITZ)
    assert p.in_A and not p.G2
    assert quality(t, HURWITZ).q >= F.ntuple_bound(n, 3, 2) - 1e-9


def test_ntuple_magnitude_gate():
    assert F.ntuple_threshold(9) > 83521
    with pytest.raises(F.FamilyParameterError, match="must exceed"):
        F.hurwitz_ntuple(9, 3, 2)
    with pytest.raises(F.FamilyParameterError):
        F.hurwitz_ntuple(13, 3, 2)


def test_family_params_and_build():
    assert F.family_params("hurwitz-power3", 0) == {"ell": 1}
    assert F.family_params("elkies4", 1) == {"x": 11, "y": 4}
    assert F.family_params("hurwitz-pell3", 0) == {"a": 3, "b": 2}
    assert F.family_params("hurwitz-n", 0, n=9) == {"n": 9, "a": 17, "b": 12}
    ring, t = F.build("elkies4", {"x": 3, "y": 1})
    assert ring is ZI and len(t) == 4
    with pytest.raises(F.FamilyParameterError):
        F.build("nope", {})


def test_verify_quality_bound_elkies():
    ok, report, bound = F.verify_quality_bound("elkies4", {"x": 3, "y": 1})
    assert ok and bound == pytest.approx(10 / 3)
    assert report.rad_value == 2041
    assert math.isclose(report.q, 3.3656, abs_tol=1e-4)
