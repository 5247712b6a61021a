"""Cube-sum curve parameterization and chord addition."""
import random
from fractions import Fraction

import pytest

from twocubes.ecurve import (
    EBParams,
    RationalFunction,
    curve_add,
    curve_third_rep,
    eb_forward,
    eb_inverse,
)
from twocubes.exact import CycNum, IMAG, OMEGA, SQRT3, SQRTM3
from twocubes.families import f_forms, p1_sextic, q1_sextic
from twocubes.forms import BinaryForm

Q = Fraction


# ---------------------------------------------------------------- forward

def test_forward_integer_instance():
    quad = eb_forward(EBParams(Q(-3, 2), Q(1, 2), Q(1)))
    assert (quad.f1, quad.f2, quad.f3, quad.f4) == (10, -1, -9, 12)
    assert quad.p == 10 ** 3 + (-1) ** 3
    assert not quad.degenerate


def test_forward_second_instance_and_scale_sign():
    quad = eb_forward(EBParams(Q(10, 19), Q(7, 19), Q(361, 42)))
    assert (quad.f1, quad.f2, quad.f3, quad.f4) == (12, 1, 10, 9)
    negated = eb_forward(EBParams(Q(10, 19), Q(7, 19), Q(-361, 42)))
    assert (negated.f1, negated.f2, negated.f3, negated.f4) == (-12, -1, -10, -9)


def test_forward_degenerate_when_b_vanishes():
    quad = eb_forward(EBParams(Q(2), Q(0), Q(1)))
    assert quad.degenerate
    assert quad.p == 0
    assert quad.f2 == -quad.f1


def test_forward_complex_parameters():
    quad = eb_forward(EBParams(0.25 + 0.5j, -0.75j, 2.0))
    left = quad.f1 ** 3 + quad.f2 ** 3
    right = quad.f3 ** 3 + quad.f4 ** 3
    assert abs(left - right) <= 1e-9 * max(abs(left), 1.0)
    assert not quad.degenerate


# ---------------------------------------------------------------- inverse

def test_inverse_integer_instance():
    params = eb_inverse(10, -1, -9, 12)
    assert (params.a, params.b, params.mu) == (Q(-3, 2), Q(1, 2), 1)


def test_inverse_second_instance():
    params = eb_inverse(12, 1, 10, 9)
    assert (params.a, params.b, params.mu) == (Q(10, 19), Q(7, 19), Q(361, 42))


def test_inverse_rejects_shared_cubes():
    with pytest.raises(ValueError, match="honest"):
        eb_inverse(1, 2, 1, 2)


def test_inverse_rejects_vanishing_denominator():
    f1 = SQRTM3 - CycNum.one()
    f2 = SQRTM3 + CycNum.one()
    with pytest.raises(ValueError, match="denominator"):
        eb_inverse(f1, f2, CycNum.one(), CycNum.from_rational(2))


def test_inverse_roundtrip_exact_random():
    rng = random.Random(20240814)
    for _ in range(200):
        a = Q(rng.randint(-30, 30), rng.randint(1, 12))
        b = Q(rng.randint(1, 30), rng.randint(1, 12)) * rng.choice((1, -1))
        mu = Q(rng.randint(1, 20), rng.randint(1, 12)) * rng.choice((1, -1))
        quad = eb_forward(EBParams(a, b, mu))
        recovered = eb_inverse(quad.f1, quad.f2, quad.f3, quad.f4)
        assert (recovered.a, recovered.b, recovered.mu) == (a, b, mu)
        again = eb_forward(recovered)
        assert {again.f1 ** 3, again.f2 ** 3} == {quad.f1 ** 3, quad.f2 ** 3}
        assert {again.f3 ** 3, again.f4 ** 3} == {quad.f3 ** 3, quad.f4 ** 3}


def test_inverse_roundtrip_complex():
    rng = random.Random(5)
    for _ in range(10):
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        b = complex(rng.uniform(0.2, 2), rng.uniform(-2, 2))
        mu = complex(rng.uniform(0.2, 2), rng.uniform(-2, 2))
        quad = eb_forward(EBParams(a, b, mu))
        rec = eb_inverse(quad.f1, quad.f2, quad.f3, quad.f4)
        scale = max(abs(a), abs(b), abs(mu), 1.0)
        assert abs(rec.a - a) <= 1e-9 * scale
        assert abs(rec.b - b) <= 1e-9 * scale
        assert abs(rec.mu - mu) <= 1e-9 * scale


def test_inverse_form_quadruple_display():
    lam = Q(5, 7)
    f1, f2, f3, f4, f5, f6 = f_forms(lam)
    params = eb_inverse(f6, -f4, f3, -f5)
    xy = BinaryForm.exact(2, [0, Q(1), 0])
    sum_sq = BinaryForm.exact(2, [Q(1), 0, Q(1)])
    diff_sq = BinaryForm.exact(2, [Q(1), 0, Q(-1)])
    # a = -(x^2 + y^2) / (2 lam xy)
    assert (params.a * xy.scale(2 * lam) + sum_sq).is_zero()
    # b = -i (x^2 - y^2) / (2 sqrt(3) lam xy)
    assert (params.b * xy.scale(2 * lam) * SQRT3 + diff_sq.scale(IMAG)).is_zero()
    # mu = lam^4 xy, the cleared common denominator to the fourth power
    assert (params.mu - xy.scale(lam ** 4)).is_zero()
    quad = eb_forward(params)
    for got, want in zip((quad.f1, quad.f2, quad.f3, quad.f4), (f6, -f4, f3, -f5)):
        assert (got - RationalFunction(want)).is_zero()


def test_inverse_rejects_mixed_input():
    xy = BinaryForm.exact(2, [0, Q(1), 0])
    with pytest.raises(TypeError):
        eb_inverse(xy, Q(1), Q(2), Q(3))


# ---------------------------------------------------------------- third representation

def test_third_representation_integer_instance():
    h1, h2 = curve_third_rep(EBParams(Q(-3, 2), Q(1, 2), Q(1)))
    assert (h1, h2) == (-8, 6)
    assert h1 ** 3 - h2 ** 3 == 10 ** 3 - 12 ** 3 == -728


def test_third_representation_degenerate_b():
    h1, h2 = curve_third_rep(EBParams(Q(3), Q(0), Q(2)))
    quad = eb_forward(EBParams(Q(3), Q(0), Q(2)))
    assert h1 ** 3 - h2 ** 3 == quad.f1 ** 3 - quad.f4 ** 3


def test_third_representation_random_exact():
    rng = random.Random(11)
    for _ in range(25):
        a = Q(rng.randint(-9, 9), rng.randint(1, 5))
        b = Q(rng.randint(1, 9), rng.randint(1, 5))
        mu = Q(rng.randint(1, 9), rng.randint(1, 5))
        h1, h2 = curve_third_rep(EBParams(a, b, mu))
        quad = eb_forward(EBParams(a, b, mu))
        assert h1 ** 3 - h2 ** 3 == quad.f1 ** 3 - quad.f4 ** 3
        assert h1 ** 3 - h2 ** 3 == -(quad.f2 ** 3) + quad.f3 ** 3


# ---------------------------------------------------------------- chord addition

def test_chord_rational_instance():
    x3, y3 = curve_add((Q(1), Q(12)), (Q(9), Q(10)), Q(1729))
    assert (x3, y3) == (Q(-37, 3), Q(46, 3))
    assert x3 ** 3 + y3 ** 3 == 1729


def test_chord_is_symmetric():
    left = curve_add((Q(1), Q(12)), (Q(9), Q(10)), Q(1729))
    right = curve_add((Q(9), Q(10)), (Q(1), Q(12)), Q(1729))
    assert left == right


def test_chord_rejects_degenerate_pairs():
    with pytest.raises(ValueError, match="chord"):
        curve_add((Q(1), Q(0)), (Q(1), Q(0)), Q(1))
    # the swapped point is the group inverse; the chord through P and -P
    # has no third affine intersection
    with pytest.raises(ValueError, match="chord"):
        curve_add((Q(1), Q(2)), (Q(2), Q(1)), Q(9))


def test_chord_rejects_off_curve_points():
    with pytest.raises(ValueError, match="curve"):
        curve_add((Q(1), Q(1)), (Q(9), Q(10)), Q(1729))


def test_chord_complex_points():
    a = 2.0 + 1.0j
    p1 = (1.0 + 0j, (a - 1) ** (1 / 3.0))
    p2 = (2.0 + 0j, (a - 8) ** (1 / 3.0))
    x3, y3 = curve_add(p1, p2, a)
    assert abs(x3 ** 3 + y3 ** 3 - a) <= 1e-9 * max(abs(a), 1.0)


def test_chord_on_family_forms_cancels_denominators():
    rng = random.Random(7)
    seen = 0
    while seen < 20:
        lam = Q(rng.randint(-9, 9), rng.randint(1, 9))
        if lam == 0 or abs(lam) == 1:
            continue
        seen += 1
        f1, f2, f3, f4, f5, f6 = f_forms(lam)
        x3, y3 = curve_add((f1, f2), (f3, f4), p1_sextic(lam))
        assert isinstance(x3, BinaryForm) and isinstance(y3, BinaryForm)
        assert (x3 - f5).is_zero()
        assert (y3 - f6).is_zero()


def test_chord_form_result_reduces_through_rational_functions():
    x_sq = BinaryForm.exact(2, [CycNum.one(), 0, 0])
    y_sq = BinaryForm.exact(2, [0, 0, CycNum.one()])
    twisted = x_sq.scale(OMEGA)
    x3, y3 = curve_add((x_sq, y_sq), (twisted, y_sq), q1_sextic())
    assert (x3 - x_sq.scale(OMEGA ** 2)).is_zero()
    assert (y3 - y_sq).is_zero()


def test_chord_rejects_mixed_form_and_scalar():
    x_sq = BinaryForm.exact(2, [Q(1), 0, 0])
    with pytest.raises(TypeError):
        curve_add((x_sq, Q(1)), (Q(1), Q(2)), Q(9))


# ---------------------------------------------------------------- rational functions

def test_rational_function_reduces_common_factors():
    num = BinaryForm.exact(2, [Q(1), 0, Q(-1)])   # x^2 - y^2
    den = BinaryForm.exact(1, [Q(1), Q(1)])       # x + y
    rf = RationalFunction(num, den)
    assert rf.den.degree == 0
    assert rf.to_form().coeffs == (1, -1)


def test_rational_function_arithmetic_and_equality():
    x = BinaryForm.exact(1, [Q(1), 0])
    y = BinaryForm.exact(1, [0, Q(1)])
    r = RationalFunction(x, y)
    s = RationalFunction(y, x)
    prod = r * s
    assert prod.is_zero() is False
    assert prod.equals(1)
    total = r + s  # (x^2 + y^2) / (xy)
    assert total.equals(RationalFunction(x * x + y * y, x * y))
    assert (total - total).is_zero()
    assert (1 / r).equals(s)
    assert (r ** -2).equals(s * s)


def test_rational_function_rejects_zero_denominator():
    x = BinaryForm.exact(1, [Q(1), 0])
    with pytest.raises(ZeroDivisionError):
        RationalFunction(x, BinaryForm.exact(1, [0, 0]))


def test_rational_function_rejects_float_forms():
    x = BinaryForm.floating(1, [1.0, 0.0])
    with pytest.raises(TypeError):
        RationalFunction(x)


def test_rational_function_to_form_requires_cancellation():
    x = BinaryForm.exact(1, [Q(1), 0])
    y = BinaryForm.exact(1, [0, Q(1)])
    with pytest.raises(ValueError):
        RationalFunction(x, y).to_form()
