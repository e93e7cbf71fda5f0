from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings

from cevian_lab.errors import DegenerateTriangle, PreconditionViolated, UnknownCheck
from cevian_lab.kernel import point
from cevian_lab.params import RatioParams
from cevian_lab.reports import DEGENERATE, FAILS, HOLDS
from cevian_lab.verifier import (CHECKS, check_claim_10, check_claim_15,
                                 check_corollary_2_2, check_moebius,
                                 check_oracle, check_rigby,
                                 check_schlomilch, check_theorem_2_1,
                                 check_theorem_2_4, check_zetel,
                                 resolve_checks, run_check, run_suite,
                                 symmedian_point)

from . import strategies as s_

G_COUNTEREXAMPLE = RatioParams(1, Fr(1, 1000), 1, Fr(1, 3), Fr(3, 40), 40)
H_COUNTEREXAMPLE = RatioParams(1, 1, 1, Fr(1, 100), 1, 20)


def test_theorem21_equality_witness():
    r = check_theorem_2_1(RatioParams(1, 1, 8, Fr(9, 8), Fr(4, 9), 2))
    assert r.verdict == HOLDS
    assert r.witness["area_ratio_rst_def"] == Fr(1, 7)
    assert r.witness["bound"].exact == Fr(1, 7)
    assert r.witness["equality"] and r.witness["equality_iff_balanced"]


def test_theorem21_all_ones():
    r = check_theorem_2_1(RatioParams(1, 1, 1))
    assert r.verdict == HOLDS and r.witness["area_ratio_rst_def"] == 0


def test_theorem21_irrational_bound():
    r = check_theorem_2_1(RatioParams(1, 2, 3, 1, 1, 1))
    assert r.verdict == HOLDS
    assert r.witness["bound"].exact is None
    assert not r.witness["equality"]


def test_corollary22():
    assert check_corollary_2_2(RatioParams(1, 1, 1)).verdict == HOLDS
    r = check_corollary_2_2(RatioParams(2, 3, Fr(1, 6), 5, Fr(1, 2), Fr(2, 5)))
    assert r.verdict == HOLDS
    assert r.witness["determinant_zero"] and r.witness["common_point_incident"]
    with pytest.raises(PreconditionViolated):
        check_corollary_2_2(RatioParams(2, 2, 2))


def test_zetel():
    assert check_zetel(RatioParams(1, 1, 1, 2, 3, Fr(1, 6))).verdict == HOLDS
    assert check_zetel(RatioParams(2, Fr(1, 2), 1, Fr(1, 2), 2, 1)).verdict == HOLDS
    with pytest.raises(PreconditionViolated):
        check_zetel(RatioParams(2, 2, 2))


def test_schlomilch_examples():
    r = check_schlomilch(point(0, 0), point(4, 0), point(1, 3))
    assert r.verdict == HOLDS
    assert r.witness["point"] == point(Fr(14, 11), Fr(12, 11))
    r = check_schlomilch(point(0, 0), point(1, 0), point(0, 1))
    assert r.verdict == HOLDS
    assert r.witness["point"] == point(Fr(1, 4), Fr(1, 4))
    for h in (1, 5, Fr(7, 3)):
        r = check_schlomilch(point(0, 0), point(2, 0), point(1, h))
        assert r.verdict == HOLDS and r.witness["point"].xy[0] == 1


def test_schlomilch_obtuse_and_degenerate():
    r = check_schlomilch(point(0, 0), point(10, 0), point(1, 1))
    assert r.witness["obtuse"] and r.verdict == HOLDS
    with pytest.raises(DegenerateTriangle):
        check_schlomilch(point(0, 0), point(1, 1), point(2, 2))


def test_symmedian_weights():
    # squared sides 18, 10, 16 for A(0,0), B(4,0), C(1,3)
    assert symmedian_point(point(0, 0), point(4, 0), point(1, 3)).xy == (Fr(14, 11), Fr(12, 11))


@given(s_.triangles)
@settings(max_examples=40)
def test_schlomilch_property(tri):
    assert check_schlomilch(*tri).verdict == HOLDS


def test_moebius():
    assert check_moebius(1, 1, 1).witness["rigby_lhs"] == 0
    r = check_moebius(2, 3, Fr(1, 6))
    assert r.verdict == HOLDS and r.witness["rigby_lhs"] == 0
    with pytest.raises(PreconditionViolated):
        check_moebius(2, 2, 2)


def test_rigby():
    r = check_rigby(1, 1, 1)
    assert r.verdict == HOLDS and r.witness["equality"]
    r = check_rigby(2, 2, 2)
    assert r.verdict == HOLDS and r.witness["rigby_lhs"] == Fr(49, 729)


def test_theorem24():
    assert check_theorem_2_4(1, 1, 1).verdict == HOLDS
    r = check_theorem_2_4(2, 2, 2)
    assert r.verdict == HOLDS and r.witness["factor"] == Fr(343, 81)
    tenth = check_theorem_2_4(Fr(1, 10), Fr(1, 10), Fr(1, 10))
    assert tenth.verdict == HOLDS
    assert 1 < tenth.witness["factor"] < r.witness["factor"]


@given(s_.positive_rationals, s_.positive_rationals, s_.positive_rationals)
def test_rigby_family_properties(l1, l2, l3):
    assert check_rigby(l1, l2, l3).verdict == HOLDS
    assert check_theorem_2_4(l1, l2, l3).verdict == HOLDS


def test_claim10():
    r = check_claim_10(RatioParams(2, 2, 2, 1, 2, Fr(1, 2)))
    assert r.verdict == HOLDS and r.witness["center_inside"]
    r = check_claim_10(G_COUNTEREXAMPLE)
    assert r.verdict == DEGENERATE
    assert not r.witness["center_inside"] and r.witness["exceeds_one"]
    assert abs(float(r.witness["area_ratio"]) - 1.079) < 1e-3
    with pytest.raises(PreconditionViolated):
        check_claim_10(RatioParams(1, 1, 1))


def test_claim15():
    r = check_claim_15(RatioParams(1, 1, 1, 2, 2, 2))
    assert r.verdict == HOLDS and r.witness["area_ratio"] == Fr(1, 4)
    r = check_claim_15(H_COUNTEREXAMPLE)
    assert r.verdict == DEGENERATE and r.witness["exceeds_one"]
    assert abs(float(r.witness["area_ratio"]) - 1.19) < 1e-2
    with pytest.raises(PreconditionViolated):
        check_claim_15(RatioParams(1, 1, 1, 2, Fr(1, 2), 1))


@given(s_.triangles, s_.ratio_params)
@settings(max_examples=30)
def test_oracle_check_property(tri, p):
    assert check_oracle(p, tri).verdict == HOLDS


def test_resolve_and_run_check():
    assert resolve_checks(["moebius", " rigby "]) == ["moebius", "rigby"]
    with pytest.raises(UnknownCheck):
        resolve_checks(["nosuch"])
    with pytest.raises(UnknownCheck):
        resolve_checks([])
    assert run_check("rigby", RatioParams(2, 2, 2)).witness["rigby_lhs"] == Fr(49, 729)
    with pytest.raises(PreconditionViolated):
        run_check("schlomilch", RatioParams(1, 1, 1))


def test_run_suite_examples():
    reports = run_suite(42, 10, ["moebius"])
    assert len(reports) == 10 and all(r.verdict == HOLDS for r in reports)
    again = run_suite(42, 10, ["moebius"])
    assert [r.to_json() for r in reports] == [r.to_json() for r in again]
    with pytest.raises(ValueError):
        run_suite(42, 0, ["moebius"])
    with pytest.raises(UnknownCheck):
        run_suite(42, 1, ["nosuch"])


def test_run_suite_all_checks_no_failures():
    reports = run_suite(3, 20, list(CHECKS))
    assert len(reports) == 20 * len(CHECKS)
    assert not [r.to_json() for r in reports if r.verdict == FAILS]
