"""Cube-sum curve parameterization and chord addition.

Every equal sum f1^3 + f2^3 = f3^3 + f4^3 of scalars (or of binary forms,
after dividing by a common denominator) arises from three parameters
(a, b, mu): with q = a^2 + 3b^2,

    f1 = mu*(1 - (a - 3b)*q),    f3 = mu*((a + 3b) - q^2),
    f2 = mu*((a + 3b)*q - 1),    f4 = mu*(q^2 - (a - 3b)).

`eb_forward` builds the quadruple from the parameters, `eb_inverse` recovers
the parameters, `curve_third_rep` produces the extra representation
(mu*(1 + 2aq))^3 - (mu*(2a + q^2))^3 of the flipped sum, and `curve_add`
performs chord addition of two points on X^3 + Y^3 = A.

Scalar inputs may be exact (Fraction / cyclotomic) or complex; form inputs
use exact rational-function arithmetic (ratios of forms with gcd
cancellation), so the advertised cancellations are verified identities, not
floating coincidences.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction

from .exact import CycNum
from .forms import EXACT, BinaryForm, FloatKernel, form_gcd

FLOAT_TOL = 1e-9
_NEAR_ZERO = 1e-12


def _is_exact_scalar(v) -> bool:
    return isinstance(v, (int, Fraction, CycNum))


def _scalar_inverse(v):
    if isinstance(v, CycNum):
        return v.inverse()
    return 1 / Fraction(v)


def _scalar_is_zero(v) -> bool:
    if isinstance(v, CycNum):
        return v.is_zero()
    return v == 0


def _const_form(v) -> BinaryForm:
    return BinaryForm.exact(0, [v])


def _divide_forms(num: BinaryForm, den: BinaryForm) -> BinaryForm:
    """Exact quotient of homogeneous forms; raises if den does not divide."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if num.is_zero():
        return BinaryForm.zero(0) if num.degree < den.degree else BinaryForm.zero(num.degree - den.degree)
    qdeg = num.degree - den.degree
    if qdeg < 0:
        raise ValueError("form quotient is not polynomial")
    # dense division of the dehomogenized polynomials in t = y/x
    n = list(num.coeffs)
    d = list(den.coeffs)
    dtop = max(i for i, c in enumerate(d) if not _scalar_is_zero(c))
    lead_inv = _scalar_inverse(d[dtop])
    quot = [Fraction(0)] * (qdeg + 1)
    for i in range(len(n) - 1, dtop - 1, -1):
        if _scalar_is_zero(n[i]):
            continue
        k = i - dtop
        if k > qdeg:
            raise ValueError("form quotient is not polynomial")
        c = n[i] * lead_inv
        quot[k] = c
        for j, dj in enumerate(d):
            n[k + j] = n[k + j] - c * dj
    if any(not _scalar_is_zero(c) for c in n):
        raise ValueError("form quotient is not polynomial")
    return BinaryForm.exact(qdeg, quot)


class RationalFunction:
    """Reduced ratio of exact homogeneous forms, denominator made monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, BinaryForm):
            num = _const_form(num)
        if den is None:
            den = _const_form(Fraction(1))
        elif not isinstance(den, BinaryForm):
            den = _const_form(den)
        if isinstance(num.kernel, FloatKernel) or isinstance(den.kernel, FloatKernel):
            raise TypeError("rational-function arithmetic requires exact forms")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator form")
        if num.is_zero():
            num = BinaryForm.zero(0)
            den = _const_form(Fraction(1))
        else:
            g = form_gcd(num, den)
            if g.degree > 0:
                num = _divide_forms(num, g)
                den = _divide_forms(den, g)
            lead = next(c for c in den.coeffs if not _scalar_is_zero(c))
            if not (isinstance(lead, Fraction) and lead == 1):
                inv = _scalar_inverse(lead)
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    # -- helpers ---------------------------------------------------------

    @classmethod
    def _coerce(cls, v):
        if isinstance(v, cls):
            return v
        if isinstance(v, BinaryForm) or _is_exact_scalar(v):
            return cls(v)
        return NotImplemented

    @property
    def degree(self) -> int:
        return self.num.degree - self.den.degree

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def equals(self, other) -> bool:
        other = self._coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def to_form(self) -> BinaryForm:
        """The numerator, when reduction has cleared the denominator."""
        if self.den.degree != 0:
            raise ValueError("denominator did not cancel")
        return self.num

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)


# --------------------------------------------------------------------------
# parameterization
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class EBParams:
    """Parameters (a, b, mu) of an equal sum of two pairs of cubes.

    Entries are exact scalars, complex numbers, or RationalFunction values
    (forms are wrapped on use).  b = 0 parameterizes the degenerate sum 0.
    """

    a: object
    b: object
    mu: object


@dataclasses.dataclass(frozen=True)
class EBQuadruple:
    f1: object
    f2: object
    f3: object
    f4: object
    p: object
    degenerate: bool


def _lift_param(v):
    if isinstance(v, BinaryForm):
        return RationalFunction(v)
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return complex(v)
    return v


def _value_is_zero(v, scale=None) -> bool:
    if isinstance(v, RationalFunction):
        return v.is_zero()
    if isinstance(v, BinaryForm):
        return v.is_zero()
    if isinstance(v, CycNum):
        return v.is_zero()
    if isinstance(v, complex):
        return abs(v) <= _NEAR_ZERO * (scale if scale else 1.0)
    return v == 0


def eb_forward(params: EBParams) -> EBQuadruple:
    """Quadruple (f1..f4) with f1^3 + f2^3 = f3^3 + f4^3, and their sum p."""
    a, b, mu = (_lift_param(v) for v in (params.a, params.b, params.mu))
    q = a * a + 3 * (b * b)
    f1 = mu * (1 - (a - 3 * b) * q)
    f2 = mu * ((a + 3 * b) * q - 1)
    f3 = mu * ((a + 3 * b) - q * q)
    f4 = mu * (q * q - (a - 3 * b))
    left = f1 ** 3 + f2 ** 3
    right = f3 ** 3 + f4 ** 3
    diff = left - right
    if isinstance(diff, complex):
        scale = max(abs(f1), abs(f2), abs(f3), abs(f4), 1.0) ** 3
        assert abs(diff) <= FLOAT_TOL * scale
    else:
        assert _value_is_zero(diff)
    scale = None
    if isinstance(left, complex):
        scale = max(abs(f1), abs(f2), 1.0) ** 3
    return EBQuadruple(f1, f2, f3, f4, left, _value_is_zero(left, scale))


def _halves(f1, f2, f3, f4, forms: bool):
    half = Fraction(1, 2)
    if forms:
        return (
            (f1 + f2).scale(half),
            (f2 - f1).scale(half),
            (f3 + f4).scale(half),
            (f4 - f3).scale(half),
        )
    return ((f1 + f2) * half, (f2 - f1) * half, (f3 + f4) * half, (f4 - f3) * half)


def eb_inverse(f1, f2, f3, f4) -> EBParams:
    """Recover (a, b, mu) from an honest equal sum f1^3 + f2^3 = f3^3 + f4^3.

    Form inputs yield RationalFunction parameters (a common denominator for
    a and b; mu restores the cleared scale).  A quadruple whose two pairs
    share their cubes has no honest parameterization and raises ValueError,
    as does one with vanishing parameter denominator.
    """
    values = [f1, f2, f3, f4]
    forms = any(isinstance(v, BinaryForm) for v in values)
    if forms:
        if not all(isinstance(v, BinaryForm) for v in values):
            raise TypeError("mixed form and scalar quadruple")
        if any(isinstance(v.kernel, FloatKernel) for v in values):
            raise TypeError("inverse parameterization requires exact forms")
    else:
        values = [_lift_param(v) for v in values]
    floating = (not forms) and any(isinstance(v, complex) for v in values)
    if floating:
        values = [complex(v) for v in values]
    f1, f2, f3, f4 = values

    g1, g2, g3, g4 = _halves(f1, f2, f3, f4, forms)
    den = g1 * g1 + 3 * (g2 * g2) if not forms else g1 * g1 + (g2 * g2).scale(3)
    num_a = g1 * g3 + 3 * (g2 * g4) if not forms else g1 * g3 + (g2 * g4).scale(3)
    num_b = g1 * g4 - g3 * g2

    scale = None
    if floating:
        scale = max(abs(v) for v in (g1, g2, g3, g4)) ** 2 or 1.0
    if _value_is_zero(den, scale):
        raise ValueError("parameter denominator g1^2 + 3*g2^2 vanishes")

    if forms:
        a = RationalFunction(num_a, den)
        b = RationalFunction(num_b, den)
        g1 = RationalFunction(g1)
        g2 = RationalFunction(g2)
    elif floating:
        a = num_a / den
        b = num_b / den
    else:
        inv = _scalar_inverse(den)
        a = num_a * inv
        b = num_b * inv

    q = a * a + 3 * (b * b)
    c = a * q - 1
    d = 3 * (b * q)
    cscale = dscale = None
    if floating:
        cscale = max(abs(a), abs(b), 1.0) ** 3
        dscale = cscale
    c_zero = _value_is_zero(c, cscale)
    d_zero = _value_is_zero(d, dscale)
    if c_zero and d_zero:
        raise ValueError("quadruple is not honest: both pairs share their cubes")
    mu = g1 / d if not d_zero else g2 / c
    return EBParams(a, b, mu)


def curve_third_rep(params: EBParams):
    """The pair (h1, h2) with h1^3 - h2^3 = f1^3 - f4^3 for the quadruple.

    The flipped sum of the parameterized quadruple has this one extra
    representation; the identity is asserted exactly (or to 1e-9 relative
    in the complex case).
    """
    a, b, mu = (_lift_param(v) for v in (params.a, params.b, params.mu))
    q = a * a + 3 * (b * b)
    h1 = mu * (1 + 2 * (a * q))
    h2 = mu * (2 * a + q * q)
    quad = eb_forward(params)
    diff = (h1 ** 3 - h2 ** 3) - (quad.f1 ** 3 - quad.f4 ** 3)
    if isinstance(diff, complex):
        scale = max(abs(h1), abs(h2), abs(quad.f1), abs(quad.f4), 1.0) ** 3
        assert abs(diff) <= FLOAT_TOL * scale
    else:
        assert _value_is_zero(diff)
    return h1, h2


# --------------------------------------------------------------------------
# chord addition on X^3 + Y^3 = A
# --------------------------------------------------------------------------

def _on_curve_check(x, y, a, floating: bool, tol: float):
    lhs = x ** 3 + y ** 3
    diff = lhs - a
    if floating:
        scale = max(abs(lhs), abs(a), 1.0)
        if abs(diff) > tol * scale:
            raise ValueError("point is not on the curve")
    elif not _value_is_zero(diff):
        raise ValueError("point is not on the curve")


def curve_add(point1, point2, a, tol: float = FLOAT_TOL):
    """Chord addition: the third intersection of the line through two points
    of X^3 + Y^3 = A, in the coordinates that make it the curve's group law.

    Scalar points use field arithmetic; form points use exact
    rational-function arithmetic and return plain forms whenever the
    denominators cancel.  A vanishing chord denominator (equal or opposite
    points; no tangent rule is provided) raises ValueError.
    """
    x1, y1 = point1
    x2, y2 = point2
    entries = [x1, y1, x2, y2]
    forms = any(isinstance(v, BinaryForm) for v in entries)
    if forms:
        if not (all(isinstance(v, BinaryForm) for v in entries) and isinstance(a, BinaryForm)):
            raise TypeError("form points need form coordinates and a form right side")
        if any(isinstance(v.kernel, FloatKernel) for v in entries + [a]):
            raise TypeError("chord addition on forms requires the exact kernel")
        floating = False
    else:
        entries = [_lift_param(v) for v in entries]
        a = _lift_param(a)
        floating = any(isinstance(v, complex) for v in entries + [a])
        if floating:
            entries = [complex(v) for v in entries]
            a = complex(a)
        x1, y1, x2, y2 = entries

    _on_curve_check(x1, y1, a, floating, tol)
    _on_curve_check(x2, y2, a, floating, tol)

    den = (x1 * x1 * x2 + y1 * y1 * y2) - (x1 * x2 * x2 + y1 * y2 * y2)
    if floating:
        scale = max(abs(v) for v in entries) ** 3 or 1.0
        degenerate = abs(den) <= _NEAR_ZERO * scale
    else:
        degenerate = _value_is_zero(den)
    if degenerate:
        raise ValueError("chord degenerates (coincident or opposite points)")

    num_x = a * (x1 - x2) + y1 * y2 * (x2 * y1 - x1 * y2)
    num_y = a * (y1 - y2) + x1 * x2 * (x1 * y2 - x2 * y1)
    if forms:
        x3 = RationalFunction(num_x, den)
        y3 = RationalFunction(num_y, den)
        check_x, check_y, check_a = x3, y3, RationalFunction(a)
        diff = check_x ** 3 + check_y ** 3 - check_a
        assert diff.is_zero()
        if x3.den.degree == 0:
            x3 = x3.to_form()
        if y3.den.degree == 0:
            y3 = y3.to_form()
        return x3, y3
    if floating:
        x3 = num_x / den
        y3 = num_y / den
        _on_curve_check(x3, y3, a, True, tol)
        return x3, y3
    inv = _scalar_inverse(den)
    x3 = num_x * inv
    y3 = num_y * inv
    _on_curve_check(x3, y3, a, False, tol)
    return x3, y3
