"""Projective factorization of binary forms over the complex floating kernel.

A degree-d form splits into d projective linear factors (t_j x - s_j y); the
root (s, t) = (1, 0) is the factor y coming from a deficient leading
coefficient.  Finite roots come from a simultaneous-iteration solve of the
dehomogenization p(x, 1), with restarts on stagnation, followed by clustering
into multiplicities.
"""
from __future__ import annotations

import cmath
import dataclasses
import math

from .forms import BinaryForm, FloatKernel

CLUSTER_REL = 1e-6          # base mutual-distance threshold for multiplicity grouping
RECONSTRUCT_TOL = 1e-8      # relative residual demanded of the refactored product
MAX_RESTARTS = 5
# Threshold multipliers tried tightest-first: an m-fold root scatters the solver
# output across a radius ~eps**(1/m), so coarser groupings must be available,
# but each proposed grouping has to pass the global reconstruction gate.
_CLUSTER_LADDER = (1.0, 10.0, 1e2, 1e3, 1e4)


@dataclasses.dataclass(frozen=True)
class ProjectiveRoot:
    """Unit-norm (s, t) with the first nonzero entry real-positive; the
    associated linear factor is t*x - s*y."""

    s: complex
    t: complex
    multiplicity: int = 1

    @staticmethod
    def normalized(s: complex, t: complex, multiplicity: int = 1) -> ProjectiveRoot:
        nrm = math.hypot(abs(s), abs(t))
        if nrm == 0:
            raise ValueError("(0, 0) is not a projective point")
        s, t = s / nrm, t / nrm
        lead = s if abs(s) > 1e-12 else t
        phase = lead / abs(lead)
        return ProjectiveRoot(s / phase, t / phase, multiplicity)

    def is_infinite(self) -> bool:
        return abs(self.t) <= 1e-12

    def affine(self) -> complex:
        if self.is_infinite():
            raise ValueError("root at infinity has no affine value")
        return self.s / self.t

    def factor_coeffs(self) -> tuple[complex, complex]:
        return (self.t, -self.s)


def _polyval(coeffs, z):
    acc = 0j
    for c in coeffs:
        acc = acc * z + c
    return acc


def _aberth_roots(coeffs, attempt: int) -> list[complex]:
    """All roots of a dense complex polynomial (leading coefficient first).

    Multiple roots stall the iteration at their rounding-noise scatter radius
    instead of meeting the step tolerance, so the final configuration is
    returned regardless; the caller validates it by reconstruction."""
    n = len(coeffs) - 1
    if n == 0:
        return []
    c0 = coeffs[0]
    radius = 1.0 + max(abs(c / c0) for c in coeffs[1:])
    # deterministic starts, rotated a little more on every retry
    offset = 0.35 + 0.17 * attempt
    zs = [
        0.5 * radius * cmath.exp(2j * math.pi * (k + offset) / n) * (1 + 0.05 * attempt)
        for k in range(n)
    ]
    deriv = [coeffs[i] * (n - i) for i in range(n)]
    for _ in range(260):
        moved = 0.0
        for i in range(n):
            p = _polyval(coeffs, zs[i])
            dp = _polyval(deriv, zs[i])
            if dp == 0:
                zs[i] += complex(1e-6, 1e-6)
                moved = math.inf
                continue
            newton = p / dp
            repulsion = 0j
            for j in range(n):
                if j == i:
                    continue
                gap = zs[i] - zs[j]
                if gap == 0:
                    gap = complex(1e-30)
                repulsion += 1.0 / gap
            denom = 1.0 - newton * repulsion
            if denom == 0:
                denom = complex(1e-30)
            step = newton / denom
            zs[i] -= step
            moved = max(moved, abs(step) / (1.0 + abs(zs[i])))
        if moved <= 1e-14:
            break
    return zs


def _cluster(points: list[complex], tol_scale: float = 1.0) -> list[tuple[complex, int]]:
    threshold = CLUSTER_REL * tol_scale
    used = [False] * len(points)
    out = []
    for i, z in enumerate(points):
        if used[i]:
            continue
        group = [z]
        used[i] = True
        for j in range(i + 1, len(points)):
            if used[j]:
                continue
            if abs(z - points[j]) <= threshold * (1.0 + abs(z)):
                group.append(points[j])
                used[j] = True
        center = sum(group) / len(group)
        out.append((center, len(group)))
    return out


def _derivative(coeffs: list[complex], order: int) -> list[complex]:
    out = list(coeffs)
    for _ in range(order):
        n = len(out) - 1
        out = [out[i] * (n - i) for i in range(n)]
    return out


def _polished_center(body: list[complex], center: complex, mult: int, move_cap: float) -> complex:
    """Newton-refine a multiplicity-m cluster center on the (m-1)-th derivative,
    where it sits as a simple root; the centroid alone carries the full scatter
    of the solver output, which does not cancel in the reconstructed product."""
    if mult <= 1:
        return center
    q = _derivative(body, mult - 1)
    dq = _derivative(q, 1)
    z = center
    for _ in range(60):
        dv = _polyval(dq, z)
        if dv == 0:
            break
        step = _polyval(q, z) / dv
        z -= step
        if abs(z - center) > move_cap:
            return center
        if abs(step) <= 1e-15 * (1.0 + abs(z)):
            break
    return z


def linear_factors(p: BinaryForm) -> tuple[complex, list[ProjectiveRoot]]:
    """p = scale * prod (t_j x - s_j y)^(m_j), residual-checked.

    Roots are ordered deterministically: infinity first, then by (Re, Im) of
    the affine value, so partition enumeration downstream is reproducible.
    """
    if not isinstance(p.kernel, FloatKernel):
        p = p.to_float()
    if p.is_zero():
        raise ValueError("cannot factor the zero form")
    coeffs = [complex(c) for c in p.coeffs]
    scale_mag = max(abs(c) for c in coeffs)
    inf_mult = 0
    while inf_mult < p.degree and abs(coeffs[inf_mult]) <= 1e-12 * scale_mag:
        inf_mult += 1
    body = coeffs[inf_mult:]
    zero_mult = 0
    while len(body) > 1 and abs(body[-1]) <= 1e-12 * scale_mag:
        body.pop()
        zero_mult += 1

    finite: list[tuple[complex, int]] = [(0j, zero_mult)] if zero_mult else []
    last_error: Exception | None = None
    for attempt in range(MAX_RESTARTS + 1):
        if len(body) <= 1:
            solved: list[complex] = []
        else:
            solved = _aberth_roots(body, attempt)
        for tol_scale in _CLUSTER_LADDER:
            clusters = []
            for z, m in _cluster(solved, tol_scale):
                cap = 10.0 * CLUSTER_REL * tol_scale * (1.0 + abs(z)) * max(m, 1)
                clusters.append((_polished_center(body, z, m, cap), m))
            roots = []
            if inf_mult:
                roots.append(ProjectiveRoot(1.0 + 0j, 0j, inf_mult))
            for z, m in finite + clusters:
                nrm = math.sqrt(1.0 + abs(z) ** 2)
                roots.append(ProjectiveRoot.normalized(z / nrm, 1.0 / nrm, m))
            roots = _ordered(roots)
            scale, residual = _reconstruction(p, roots)
            if residual <= RECONSTRUCT_TOL:
                return scale, roots
            last_error = ArithmeticError(
                f"reconstruction residual {residual:.2e} too large"
            )
    raise last_error if last_error else ArithmeticError("factorization failed")


def _ordered(roots: list[ProjectiveRoot]) -> list[ProjectiveRoot]:
    def key(r: ProjectiveRoot):
        if r.is_infinite():
            return (0, 0.0, 0.0)
        z = r.affine()
        return (1, round(z.real, 9), round(z.imag, 9))

    return sorted(roots, key=key)


def _reconstruction(p: BinaryForm, roots: list[ProjectiveRoot]) -> tuple[complex, float]:
    prod = [1.0 + 0j]
    for r in roots:
        t, ms = r.t, -r.s
        for _ in range(r.multiplicity):
            nxt = [0j] * (len(prod) + 1)
            for i, c in enumerate(prod):
                nxt[i] += c * t
                nxt[i + 1] += c * ms
            prod = nxt
    coeffs = [complex(c) for c in p.coeffs]
    k = max(range(len(coeffs)), key=lambda i: abs(coeffs[i]))
    if abs(prod[k]) == 0:
        return 0j, math.inf
    scale = coeffs[k] / prod[k]
    num = math.sqrt(sum(abs(scale * a - b) ** 2 for a, b in zip(prod, coeffs)))
    den = math.sqrt(sum(abs(b) ** 2 for b in coeffs))
    return scale, num / den


def expanded_root_slots(roots: list[ProjectiveRoot]) -> list[ProjectiveRoot]:
    """Multiplicities unrolled into repeated slots (six slots for a sextic)."""
    slots = []
    for r in roots:
        slots.extend([ProjectiveRoot(r.s, r.t, 1)] * r.multiplicity)
    return slots


def cross_ratio_multiset(roots: list[ProjectiveRoot]) -> list[complex]:
    """Cross-ratios of all ordered 4-tuples of distinct slots; a projective
    invariant used by the property tests."""
    slots = expanded_root_slots(roots)
    n = len(slots)
    out = []

    def d(a: ProjectiveRoot, b: ProjectiveRoot) -> complex:
        return a.s * b.t - b.s * a.t

    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if len({i, j, k, l}) == 4:
                        den = d(slots[j], slots[k]) * d(slots[i], slots[l])
                        if abs(den) < 1e-12:
                            continue
                        out.append(d(slots[i], slots[k]) * d(slots[j], slots[l]) / den)
    return out
