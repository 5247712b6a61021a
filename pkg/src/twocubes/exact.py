"""Exact scalar arithmetic: rationals, the degree-8 cyclotomic field containing
every constant the identity suite needs, and univariate parameter polynomials.

The field is Q(z) with z a primitive 24th root of unity, reduced by the minimal
polynomial z^8 = z^4 - 1.  Elements are length-8 tuples of Fractions giving the
coordinates on 1, z, ..., z^7.  That one field houses omega, i, the 8th and 12th
roots of unity, sqrt2, sqrt3, sqrt(-3), sqrt6, sqrt(-6) and eta, so every exact
identity in the suite can be checked coefficient-wise without nested radicals.
"""
from __future__ import annotations

import cmath
import dataclasses
import math
from fractions import Fraction

Rational = Fraction

_DEG = 8


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational")


@dataclasses.dataclass(frozen=True)
class CycNum:
    """An exact element of the 24th cyclotomic field.

    >>> (CycNum.zeta() ** 24) == CycNum.one()
    True
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != _DEG:
            raise ValueError("CycNum needs exactly 8 coordinates")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(v) -> CycNum:
        c = [Fraction(0)] * _DEG
        c[0] = _as_fraction(v)
        return CycNum(tuple(c))

    @staticmethod
    def zero() -> CycNum:
        return CycNum.from_rational(0)

    @staticmethod
    def one() -> CycNum:
        return CycNum.from_rational(1)

    @staticmethod
    def zeta() -> CycNum:
        c = [Fraction(0)] * _DEG
        c[1] = Fraction(1)
        return CycNum(tuple(c))

    # -- ring structure ------------------------------------------------

    @staticmethod
    def _coerce(v) -> CycNum:
        if isinstance(v, CycNum):
            return v
        return CycNum.from_rational(v)

    def __add__(self, other):
        if isinstance(other, ParamPoly):
            return NotImplemented
        o = CycNum._coerce(other)
        return CycNum(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, ParamPoly):
            return NotImplemented
        return self + (-CycNum._coerce(other))

    def __rsub__(self, other):
        return CycNum._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, ParamPoly):
            return NotImplemented
        o = CycNum._coerce(other)
        prod = [Fraction(0)] * (2 * _DEG - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b != 0:
                    prod[i + j] += a * b
        # reduce by z^8 = z^4 - 1, highest power first
        for d in range(2 * _DEG - 2, _DEG - 1, -1):
            c = prod[d]
            if c != 0:
                prod[d] = Fraction(0)
                prod[d - 4] += c
                prod[d - 8] -= c
        return CycNum(tuple(prod[:_DEG]))

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Field inverse via the extended Euclidean algorithm mod x^8 - x^4 + 1."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the cyclotomic field")
        # polynomials as coefficient lists, low degree first
        modulus = [Fraction(1), 0, 0, 0, Fraction(-1), 0, 0, 0, Fraction(1)]
        modulus = [_as_fraction(v) for v in modulus]
        r0, r1 = modulus, [Fraction(v) for v in self.coeffs]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                inv += [Fraction(0)] * (_DEG - len(inv))
                return CycNum(tuple(inv[:_DEG]))
            q, rem = _polydivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))

    def __truediv__(self, other):
        return self * CycNum._coerce(other).inverse()

    def __rtruediv__(self, other):
        return CycNum._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycNum.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            o = CycNum._coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0]

    # -- conversions ----------------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(1j * math.pi / 12)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_strings(parts) -> CycNum:
        return CycNum(tuple(Fraction(p) for p in parts))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*z^{k}" if k > 1 else f"{c}*z")
        return "CycNum(" + (" + ".join(terms) if terms else "0") + ")"


def _polydivmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(1, len(a) - db)
    while len(a) - 1 >= db and a:
        d = len(a) - 1 - db
        c = a[-1] / lb
        q[d] = c
        for i in range(len(b)):
            a[d + i] -= c * b[i]
        while a and a[-1] == 0:
            a.pop()
    return q, (a if a else [Fraction(0)])


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def is_zero_scalar(v) -> bool:
    """Exact zero test across the scalar types this package mixes."""
    if isinstance(v, CycNum):
        return v.is_zero()
    if isinstance(v, ParamPoly):
        return v.is_zero()
    return v == 0


@dataclasses.dataclass(frozen=True)
class ParamPoly:
    """Dense univariate polynomial in a formal parameter over a duck-typed
    exact ring (Fraction, CycNum, or another ParamPoly for two-parameter work).

    Coefficients are stored low degree first.  No division: identities that
    would need it are verified in denominator-cleared form instead.
    """

    param: str
    coeffs: tuple

    @staticmethod
    def variable(name: str) -> ParamPoly:
        return ParamPoly(name, (Fraction(0), Fraction(1)))

    @staticmethod
    def constant(name: str, value) -> ParamPoly:
        return ParamPoly(name, (value,))

    def _coerce(self, v) -> ParamPoly:
        if isinstance(v, ParamPoly) and v.param == self.param:
            return v
        # foreign polynomials become scalar coefficients; _outranks has already
        # arranged that the lexicographically smaller parameter is the root
        return ParamPoly(self.param, (v,))

    def _outranks(self, other) -> bool:
        return isinstance(other, ParamPoly) and other.param < self.param

    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d >= 0 and is_zero_scalar(self.coeffs[d]):
            d -= 1
        return d

    def is_zero(self) -> bool:
        return all(is_zero_scalar(c) for c in self.coeffs)

    def __add__(self, other):
        if self._outranks(other):
            return other + self
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(o.coeffs) + [0] * (n - len(o.coeffs))
        return ParamPoly(self.param, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.param, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if self._outranks(other):
            return -(other - self)
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if self._outranks(other):
            return other * self
        o = self._coerce(other)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero_scalar(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return ParamPoly(self.param, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("ParamPoly has no negative powers; clear denominators first")
        out = ParamPoly(self.param, (Fraction(1),))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, (ParamPoly, int, Fraction, CycNum)):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.param, self.coeffs))

    def evaluate(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def reversed_coeffs(self, formal_degree: int) -> ParamPoly:
        """t^D * p(1/t): the coefficient reversal used by the 1/lambda symmetries."""
        if formal_degree < self.degree():
            raise ValueError("formal degree below actual degree")
        padded = list(self.coeffs) + [0] * (formal_degree + 1 - len(self.coeffs))
        return ParamPoly(self.param, tuple(reversed(padded)))

    def __repr__(self):
        return f"ParamPoly({self.param!r}, deg={self.degree()})"


# named constants of the field
ZETA24 = CycNum.zeta()
OMEGA = ZETA24**8          # primitive cube root of unity
IMAG = ZETA24**6           # i
ZETA8 = ZETA24**3
ZETA12 = ZETA24**2         # nu in the sextic representation displays
SQRT2 = ZETA24**3 + ZETA24**21
SQRT3 = ZETA24**2 + ZETA24**22
SQRTM3 = OMEGA - OMEGA**2  # sqrt(-3) = 2*omega + 1
SQRT6 = SQRT2 * SQRT3
SQRTM6 = IMAG * SQRT6
ETA = (SQRT6 + SQRT2) / CycNum.from_rational(2)
