"""Binary forms in (x, y) over a pluggable scalar kernel.

A form of degree d is the coefficient tuple (c0, ..., cd) of
sum_k c_k x^(d-k) y^k.  Two kernels are provided: an exact one whose scalars
are Fractions, CycNums or ParamPolys, and a complex floating one with
relative-tolerance equality.  Forms are immutable; all operations return new
values, so they are safe to share across threads.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from .exact import CycNum, ParamPoly, is_zero_scalar


class ExactKernel:
    name = "exact"

    def is_zero(self, value, scale=None) -> bool:
        return is_zero_scalar(value)

    def magnitude(self, value) -> float:
        if isinstance(value, CycNum):
            return abs(value.to_complex())
        if isinstance(value, ParamPoly):
            return 0.0 if value.is_zero() else 1.0
        return abs(float(value)) if not isinstance(value, complex) else abs(value)


class FloatKernel:
    name = "float"

    def __init__(self, tolerance: float = 1e-9):
        if tolerance <= 0:
            raise ValueError("tolerance must be positive")
        self.tolerance = tolerance

    def is_zero(self, value, scale=1.0) -> bool:
        return abs(value) <= self.tolerance * max(scale, 1e-300)

    def magnitude(self, value) -> float:
        return abs(value)


EXACT = ExactKernel()
FLOAT = FloatKernel()


def _to_complex(v) -> complex:
    if isinstance(v, CycNum):
        return v.to_complex()
    if isinstance(v, ParamPoly):
        raise TypeError("cannot promote a formal parameter to a complex number")
    if isinstance(v, Fraction):
        return complex(float(v))
    return complex(v)


@dataclasses.dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple
    kernel: object = EXACT

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def exact(degree: int, coeffs) -> BinaryForm:
        return BinaryForm(degree, tuple(coeffs), EXACT)

    @staticmethod
    def floating(degree: int, coeffs, kernel: FloatKernel | None = None) -> BinaryForm:
        k = kernel if kernel is not None else FLOAT
        return BinaryForm(degree, tuple(complex(c) for c in coeffs), k)

    @staticmethod
    def zero(degree: int, kernel=EXACT) -> BinaryForm:
        z = 0j if isinstance(kernel, FloatKernel) else Fraction(0)
        return BinaryForm(degree, tuple(z for _ in range(degree + 1)), kernel)

    def to_float(self, kernel: FloatKernel | None = None) -> BinaryForm:
        k = kernel if kernel is not None else FLOAT
        return BinaryForm(self.degree, tuple(_to_complex(c) for c in self.coeffs), k)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        scale = self.max_magnitude()
        if isinstance(self.kernel, FloatKernel):
            # the zero form is zero at its own scale; test absolutely
            return all(abs(c) == 0 for c in self.coeffs) or scale == 0.0
        return all(self.kernel.is_zero(c) for c in self.coeffs)

    def max_magnitude(self) -> float:
        mags = [self.kernel.magnitude(c) for c in self.coeffs]
        return max(mags) if mags else 0.0

    def equals(self, other: BinaryForm) -> bool:
        if self.degree != other.degree:
            return False
        if isinstance(self.kernel, FloatKernel):
            scale = max(self.max_magnitude(), other.max_magnitude())
            return all(self.kernel.is_zero(a - b, scale) for a, b in zip(self.coeffs, other.coeffs))
        return all(self.kernel.is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def proportional_to(self, other: BinaryForm, rel_tol: float = 1e-7) -> bool:
        """True when self and other span the same line of forms."""
        if self.degree != other.degree:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if isinstance(self.kernel, FloatKernel):
            cross_scale = self.max_magnitude() * other.max_magnitude()
            for i in range(self.degree + 1):
                for j in range(i + 1, self.degree + 1):
                    cr = self.coeffs[i] * other.coeffs[j] - self.coeffs[j] * other.coeffs[i]
                    if abs(cr) > rel_tol * max(cross_scale, 1e-300):
                        return False
            return True
        for i in range(self.degree + 1):
            for j in range(i + 1, self.degree + 1):
                cr = self.coeffs[i] * other.coeffs[j] - self.coeffs[j] * other.coeffs[i]
                if not is_zero_scalar(cr):
                    return False
        return True

    # -- arithmetic ---------------------------------------------------------

    def _require_same_degree(self, other: BinaryForm):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: BinaryForm) -> BinaryForm:
        self._require_same_degree(other)
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.kernel)

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        self._require_same_degree(other)
        return BinaryForm(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.kernel)

    def __neg__(self) -> BinaryForm:
        return BinaryForm(self.degree, tuple(-a for a in self.coeffs), self.kernel)

    def __mul__(self, other: BinaryForm) -> BinaryForm:
        d = self.degree + other.degree
        zero = 0j if isinstance(self.kernel, FloatKernel) else Fraction(0)
        out = [zero] * (d + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(d, tuple(out), self.kernel)

    def scale(self, s) -> BinaryForm:
        return BinaryForm(self.degree, tuple(s * a for a in self.coeffs), self.kernel)

    def __pow__(self, n: int) -> BinaryForm:
        if n < 0:
            raise ValueError("forms have no negative powers")
        one = 1.0 + 0j if isinstance(self.kernel, FloatKernel) else Fraction(1)
        out = BinaryForm(0, (one,), self.kernel)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, x, y):
        acc = None
        for k, c in enumerate(self.coeffs):
            term = c * x ** (self.degree - k) * y**k
            acc = term if acc is None else acc + term
        return acc

    def substituted(self, fx: BinaryForm, fy: BinaryForm) -> BinaryForm:
        """f(fx, fy) for two degree-1 forms; the workhorse behind compose."""
        if fx.degree != 1 or fy.degree != 1:
            raise ValueError("substitution needs two linear forms")
        out = BinaryForm.zero(self.degree, self.kernel)
        for k, c in enumerate(self.coeffs):
            skip = (c == 0) if isinstance(self.kernel, FloatKernel) else is_zero_scalar(c)
            if skip:
                continue
            term = (fx ** (self.degree - k)) * (fy**k)
            out = out + term.scale(c)
        return out


@dataclasses.dataclass(frozen=True)
class LinearChange:
    """(x, y) -> (alpha x + beta y, gamma x + delta y), invertible."""

    alpha: object
    beta: object
    gamma: object
    delta: object
    kernel: object = EXACT

    def det(self):
        return self.alpha * self.delta - self.beta * self.gamma

    def check_invertible(self):
        scale = None
        if isinstance(self.kernel, FloatKernel):
            scale = max(abs(self.alpha), abs(self.beta), abs(self.gamma), abs(self.delta)) ** 2
            if self.kernel.is_zero(self.det(), scale):
                raise ValueError("singular linear change")
        elif is_zero_scalar(self.det()):
            raise ValueError("singular linear change")

    def inverse(self) -> LinearChange:
        self.check_invertible()
        d = self.det()
        if isinstance(self.kernel, FloatKernel):
            return LinearChange(self.delta / d, -self.beta / d, -self.gamma / d, self.alpha / d, self.kernel)
        one_over = Fraction(1) / d if isinstance(d, (int, Fraction)) else d.inverse()
        return LinearChange(
            self.delta * one_over, -self.beta * one_over, -self.gamma * one_over, self.alpha * one_over, self.kernel
        )

    def then(self, other: LinearChange) -> LinearChange:
        """Matrix product: applying self after substituting with other.

        form_compose(f, self.then(other)) == form_compose(form_compose(f, self), other).
        """
        a = self.alpha * other.alpha + self.beta * other.gamma
        b = self.alpha * other.beta + self.beta * other.delta
        c = self.gamma * other.alpha + self.delta * other.gamma
        d = self.gamma * other.beta + self.delta * other.delta
        return LinearChange(a, b, c, d, self.kernel)

    def to_float(self, kernel: FloatKernel | None = None) -> LinearChange:
        k = kernel if kernel is not None else FLOAT
        return LinearChange(
            _to_complex(self.alpha), _to_complex(self.beta), _to_complex(self.gamma), _to_complex(self.delta), k
        )


def form_compose(f: BinaryForm, m: LinearChange) -> BinaryForm:
    m.check_invertible()
    fx = BinaryForm(1, (m.alpha, m.beta), f.kernel)
    fy = BinaryForm(1, (m.gamma, m.delta), f.kernel)
    return f.substituted(fx, fy)


def _y_multiplicity(f: BinaryForm) -> int:
    scale = f.max_magnitude()
    m = 0
    for c in f.coeffs:
        if isinstance(f.kernel, FloatKernel):
            if abs(c) <= 1e-12 * max(scale, 1e-300):
                m += 1
                continue
        elif is_zero_scalar(c):
            m += 1
            continue
        break
    return m


def _dehomogenize(f: BinaryForm):
    """Strip the y^m factor; return (m, coefficients of f(x,1) highest power first)."""
    m = _y_multiplicity(f)
    return m, list(f.coeffs[m:])


def _poly_trim(c, kernel, scale):
    c = list(c)
    while len(c) > 1:
        lead = c[0]
        if isinstance(kernel, FloatKernel):
            if abs(lead) <= 1e-12 * max(scale, 1e-300):
                c.pop(0)
                continue
        elif is_zero_scalar(lead):
            c.pop(0)
            continue
        break
    return c


def _poly_mod(a, b, kernel, scale):
    # univariate remainder, coefficients highest power first
    a = _poly_trim(list(a), kernel, scale)
    b = _poly_trim(list(b), kernel, scale)
    while len(a) >= len(b) and not _is_poly_zero(a, kernel, scale):
        q = a[0] / b[0] if isinstance(kernel, FloatKernel) else a[0] * _inv_scalar(b[0])
        for i in range(len(b)):
            a[i] = a[i] - q * b[i]
        a = _poly_trim(a[1:], kernel, scale)
    return a


def _is_poly_zero(a, kernel, scale):
    if isinstance(kernel, FloatKernel):
        return all(abs(c) <= 1e-12 * max(scale, 1e-300) for c in a)
    return all(is_zero_scalar(c) for c in a)


def _inv_scalar(v):
    if isinstance(v, CycNum):
        return v.inverse()
    return Fraction(1) / Fraction(v) if isinstance(v, int) else 1 / v


def form_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """A gcd up to scalar; the constant form 1 means relatively prime.

    The floating kernel truncates remainders below 1e-12 of the operand scale,
    which is the documented meaning of 'common factor' there.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero forms")
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    kernel = f.kernel
    scale = max(f.max_magnitude(), g.max_magnitude())
    my, a = _dehomogenize(f)
    ny, b = _dehomogenize(g)
    ycommon = min(my, ny)
    a = _poly_trim(a, kernel, scale)
    b = _poly_trim(b, kernel, scale)
    while not _is_poly_zero(b, kernel, scale):
        a, b = b, _poly_mod(a, b, kernel, scale)
        b = _poly_trim(b, kernel, scale)
        if _is_poly_zero(b, kernel, scale):
            break
    a = _poly_trim(a, kernel, scale)
    # re-homogenize: y^ycommon shifts the x-polynomial toward higher k indices
    deg = len(a) - 1 + ycommon
    zero = 0j if isinstance(kernel, FloatKernel) else Fraction(0)
    coeffs = [zero] * ycommon + list(a)
    return BinaryForm(deg, tuple(coeffs), kernel)


def form_derivative_x(f: BinaryForm) -> BinaryForm:
    if f.degree == 0:
        return BinaryForm.zero(0, f.kernel)
    out = []
    for k in range(f.degree):
        out.append(f.coeffs[k] * (f.degree - k))
    return BinaryForm(f.degree - 1, tuple(out), f.kernel)


def form_divexact(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Exact division f / g for forms known to divide; exact kernel only."""
    if isinstance(f.kernel, FloatKernel):
        raise TypeError("exact division requires the exact kernel")
    my, a = _dehomogenize(f)
    ny, b = _dehomogenize(g)
    if ny > my:
        raise ValueError("does not divide (y-multiplicity)")
    a = _poly_trim(a, f.kernel, 1.0)
    b = _poly_trim(b, f.kernel, 1.0)
    da, db = len(a) - 1, len(b) - 1
    if db > da:
        raise ValueError("does not divide (degree)")
    q = [Fraction(0)] * (da - db + 1)
    rem = list(a)
    binv = _inv_scalar(b[0])
    for i in range(da - db + 1):
        c = rem[i] * binv
        q[i] = c
        for j in range(db + 1):
            rem[i + j] = rem[i + j] - c * b[j]
    if not all(is_zero_scalar(r) for r in rem):
        raise ValueError("does not divide (remainder)")
    deg = f.degree - g.degree
    coeffs = [Fraction(0)] * (my - ny) + list(q)
    return BinaryForm(deg, tuple(coeffs), f.kernel)


def multiplicity_structure(p: BinaryForm) -> list[int]:
    """Sorted multiset of projective root multiplicities (root at infinity included)."""
    if p.is_zero():
        raise ValueError("zero form has no multiplicity structure")
    if isinstance(p.kernel, FloatKernel):
        from .roots import linear_factors

        _, roots = linear_factors(p)
        return sorted((r.multiplicity for r in roots), reverse=True)
    # exact square-free chain on f(x,1), y-multiplicity tracked separately
    ym, a = _dehomogenize(p)
    mults = [ym] if ym else []
    a = _poly_trim(a, p.kernel, 1.0)
    if len(a) > 1:
        fx = BinaryForm(len(a) - 1, tuple(a), p.kernel)
        mults += _exact_multiplicities(fx)
    return sorted(mults, reverse=True)


def _exact_multiplicities(f: BinaryForm) -> list[int]:
    # multiplicities of f's x-roots via the gcd chain f, gcd(f, f'), ...
    chain = [f]
    cur = f
    while cur.degree > 0:
        der = form_derivative_x(cur)
        if der.is_zero():
            break
        g = form_gcd(cur, der)
        if g.degree == 0:
            break
        chain.append(g)
        cur = g
    # chain[i] has each root of multiplicity >= i+1, with multiplicity reduced by i
    counts = []
    degrees = [c.degree for c in chain] + [0]
    # number of roots with multiplicity exactly k:
    #   (deg chain[k-1] - deg chain[k]) - (deg chain[k] - deg chain[k+1]) summed out
    distinct_at_least = [degrees[i] - degrees[i + 1] for i in range(len(chain))]
    for k in range(len(distinct_at_least), 0, -1):
        exactly = distinct_at_least[k - 1] - (distinct_at_least[k] if k < len(distinct_at_least) else 0)
        counts += [k] * exactly
    return counts


def form_to_json(f: BinaryForm) -> dict:
    if isinstance(f.kernel, FloatKernel):
        coeffs = [[c.real, c.imag] for c in (complex(c) for c in f.coeffs)]
    else:
        coeffs = []
        for c in f.coeffs:
            if isinstance(c, CycNum):
                coeffs.append(c.to_strings())
            else:
                coeffs.append(str(Fraction(c)))
    return {"degree": f.degree, "coeffs": coeffs}


def form_from_json(obj: dict, kernel=None) -> BinaryForm:
    degree = int(obj["degree"])
    raw = obj["coeffs"]
    parsed = []
    exact = True
    for item in raw:
        if isinstance(item, str):
            parsed.append(Fraction(item))
        elif isinstance(item, list) and len(item) == 8 and all(isinstance(s, str) for s in item):
            parsed.append(CycNum.from_strings(item))
        elif isinstance(item, list) and len(item) == 2:
            parsed.append(complex(float(item[0]), float(item[1])))
            exact = False
        elif isinstance(item, (int, float)):
            if isinstance(item, int):
                parsed.append(Fraction(item))
            else:
                parsed.append(complex(item))
                exact = False
        else:
            raise ValueError(f"unreadable coefficient {item!r}")
    if kernel is not None:
        if isinstance(kernel, FloatKernel):
            return BinaryForm(degree, tuple(_to_complex(c) for c in parsed), kernel)
        if not exact:
            raise ValueError("exact kernel requested for floating coefficients")
        return BinaryForm(degree, tuple(parsed), kernel)
    if exact:
        return BinaryForm(degree, tuple(parsed), EXACT)
    return BinaryForm(degree, tuple(_to_complex(c) for c in parsed), FLOAT)
