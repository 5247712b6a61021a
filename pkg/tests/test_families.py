"""Family generators and the exact identity suite."""
from fractions import Fraction

import pytest

import twocubes.families as fam
from twocubes.decomp import rep_count
from twocubes.exact import CycNum, ParamPoly, ETA, IMAG
from twocubes.families import (
    EXCEPTIONAL_PARAMETER,
    cube_sum_difference,
    exceptional_parameter_determinant,
    f78_cleared,
    f_forms,
    flip_sums,
    hirschhorn_family,
    hirschhorn_quadruple,
    narayanan_quadruple,
    p1_sextic,
    p2_sextic,
    p3_sextic,
    q1_sextic,
    q2_sextic,
    ramanujan_quadruple,
    sandor_family,
    sextic_a,
    sextic_b,
    vieta_quartics,
    verify_identity_suite,
    young_family,
    young_quadruple,
)
from twocubes.forms import BinaryForm


# ---------------------------------------------------------------- suite

def test_suite_all_pass():
    report = verify_identity_suite()
    assert len(report) == 21
    assert [e["id"] for e in report] == [f"{k:02d}" for k in range(1, 22)]
    for entry in report:
        assert entry["pass"], f"identity group {entry['id']} ({entry['anchor']}) failed"
    methods = {e["id"]: e["method"] for e in report}
    assert methods["21"] == "sampled"
    assert all(m == "exact" for i, m in methods.items() if i != "21")


def test_suite_subset_keeps_order():
    report = verify_identity_suite(ids={"05", "01", "17"})
    assert [e["id"] for e in report] == ["01", "05", "17"]
    assert all(e["pass"] for e in report)


def test_suite_entry_shape():
    (entry,) = verify_identity_suite(ids={"12"})
    assert set(entry) == {"id", "anchor", "method", "pass"}
    assert isinstance(entry["anchor"], str) and entry["anchor"]


def test_perturbed_quadruple_reported_as_failure(monkeypatch):
    def perturbed():
        return (
            BinaryForm.exact(2, [7, -4, 4]),
            BinaryForm.exact(2, [3, 5, -5]),
            BinaryForm.exact(2, [4, -4, 6]),
            BinaryForm.exact(2, [5, -5, -3]),
        )

    monkeypatch.setattr(fam, "ramanujan_quadruple", perturbed)
    (entry,) = verify_identity_suite(ids={"01"})
    assert entry["id"] == "01"
    assert entry["pass"] is False


def test_raising_checker_reported_not_propagated(monkeypatch):
    def broken():
        raise RuntimeError("boom")

    monkeypatch.setattr(fam, "ramanujan_quadruple", broken)
    (entry,) = verify_identity_suite(ids={"01"})
    assert entry["pass"] is False


# ---------------------------------------------------------------- generators

def test_integer_quadruple_point_values():
    values = [f.evaluate(1, 0) for f in ramanujan_quadruple()]
    assert values == [6, 3, 4, 5]
    assert 6 ** 3 == 3 ** 3 + 4 ** 3 + 5 ** 3


def test_parametric_quadruple_specializes_to_integer_triple():
    for nf, rf in zip(narayanan_quadruple(Fraction(2)), ramanujan_quadruple()):
        assert (nf - rf.scale(Fraction(3))).is_zero()


def test_family_base_member_at_two():
    f1, f2 = f_forms(Fraction(2))[:2]
    assert f1.evaluate(1, 0) == 8
    assert f1.coeffs == (8, -1, 8)
    assert f2.coeffs == (-2, 16, -2)


def test_family_float_kernel_matches_exact():
    lam = Fraction(3, 4)
    for exact_f, float_f in zip(f_forms(lam), f_forms(0.75)):
        for ce, cf in zip(exact_f.coeffs, float_f.coeffs):
            ce = ce.to_complex() if isinstance(ce, CycNum) else complex(ce)
            assert abs(ce - cf) < 1e-12


def test_cleared_pair_denominator_consistency():
    lam = Fraction(1, 2)
    g7, g8, s = f78_cleared(lam)
    assert s == 1 - Fraction(1, 2) ** 6
    total = g7 ** 3 + g8 ** 3
    assert (total - p2_sextic(lam).scale(s ** 3)).is_zero()


def test_product_sextics_are_consistent_flips():
    lam = Fraction(2, 3)
    f1, f2, f3, f4, f5, f6 = f_forms(lam)
    assert (f1 ** 3 + f2 ** 3 - p1_sextic(lam)).is_zero()
    assert (f4 ** 3 - f5 ** 3 - p2_sextic(lam)).is_zero()
    assert (f4 ** 3 - f6 ** 3 - p3_sextic(lam)).is_zero()


def test_threefold_sum_coefficients_stay_low_degree():
    f1, f2 = f_forms()[:2]
    total = f1 ** 3 + f2 ** 3
    for coeff in total.coeffs:
        if isinstance(coeff, ParamPoly):
            assert coeff.degree() <= 18
    assert (total - p1_sextic()).is_zero()


def test_census_sextics():
    assert sextic_a(Fraction(3)).coeffs == (1, 0, 3, 0, 3, 0, 1)
    assert sextic_b(Fraction(-2)).coeffs == (1, 0, 0, -2, 0, 0, 1)
    assert q1_sextic().coeffs == (1, 0, 0, 0, 0, 0, 1)
    assert q2_sextic().evaluate(2, 1) == 2 * (16 - 1)


def test_cube_sum_difference_helper():
    r1, r2, r3, r4 = ramanujan_quadruple()
    assert cube_sum_difference([r2, r3, r4], [r1]).is_zero()
    assert not cube_sum_difference([r2, r3], [r1]).is_zero()


# ---------------------------------------------------------------- conditional families

def test_sandor_premise_violation_rejected():
    with pytest.raises(ValueError):
        sandor_family(1, 2, 3, 4)


def test_sandor_undefined_type_rejected():
    # 9^3 + 10^3 = 9^3 + 10^3 but w1 = w3 leaves the type ratio undefined
    with pytest.raises(ValueError):
        sandor_family(9, 10, 9, 10)


def test_sandor_type_values():
    *_, T = sandor_family(12, 1, 10, 9)
    assert T == Fraction(4)
    *_, T2 = sandor_family(10, -1, -9, 12)
    assert T2 == Fraction(13, 19)


def test_young_and_hirschhorn_integer_instances():
    y1, y2, y3, y4 = young_quadruple()
    assert cube_sum_difference([y1, y2, y3], [y4]).is_zero()
    h1, h2, h3, h4 = hirschhorn_quadruple()
    assert cube_sum_difference([h1, h2], [h3, h4]).is_zero()


def test_young_and_hirschhorn_square_families_at_a_point():
    n = Fraction(3)
    f1, f2, f3, f4 = young_family(n)
    assert cube_sum_difference([f1, f2], [f3, f4]).is_zero()
    assert ((f4 - f2) - (f1 - f3).scale(n ** 2)).is_zero()
    g1, g2, g3, g4 = hirschhorn_family(n)
    assert cube_sum_difference([g1, g2], [g3, g4]).is_zero()
    assert ((g1 - g3) - (g4 - g2).scale(n ** 2)).is_zero()


def test_vieta_quartics_equal_sums():
    v1, v2, v3, v4 = vieta_quartics()
    assert cube_sum_difference([v1, v2], [v3, v4]).is_zero()
    assert all(f.degree == 4 for f in (v1, v2, v3, v4))


# ---------------------------------------------------------------- exceptional parameters

def test_exceptional_determinant_factored_form():
    lam = ParamPoly.variable("lam")
    det = exceptional_parameter_determinant()
    target = (lam ** 2 - 1) * (lam ** 4 + 4 * lam ** 2 + 1)
    assert (det - target).is_zero()


def test_exceptional_parameter_is_a_determinant_root():
    det = exceptional_parameter_determinant(EXCEPTIONAL_PARAMETER)
    assert det.is_zero()
    # the exceptional sextic matches the midcube census family with t^2 = -50
    lam = EXCEPTIONAL_PARAMETER
    t = lam ** 3 + (lam ** 3).inverse()
    assert (t * t + CycNum.from_rational(50)).is_zero()


def test_exceptional_parameter_value():
    assert (EXCEPTIONAL_PARAMETER - IMAG * ETA).is_zero()
    approx = EXCEPTIONAL_PARAMETER.to_complex()
    assert abs(approx.real) < 1e-12
    assert abs(approx.imag - 1.9318516525781366) < 1e-12


# ---------------------------------------------------------------- representation counts

def test_generic_product_sextic_has_three_representations():
    lam = 0.9 + 0.3j
    assert rep_count(p1_sextic(lam)).N == 3
    assert rep_count(p2_sextic(lam)).N == 3


def test_skew_product_sextic_has_two_representations():
    assert rep_count(p3_sextic(0.9 + 0.3j)).N == 2


def test_exceptional_product_sextic_has_six_representations():
    lam = complex(EXCEPTIONAL_PARAMETER.to_complex())
    assert rep_count(p1_sextic(lam)).N == 6


def test_integer_flip_counts():
    first, second, third = flip_sums()
    assert rep_count(first).N == 3
    assert rep_count(second).N == 3
    assert rep_count(third).N == 2
