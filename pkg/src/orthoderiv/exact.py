"""Exact-rational oracle engine.

Everything here runs in arbitrary-precision rationals (fractions.Fraction):
polynomials in powers of (z - center), the explicit series for each family,
its symbolic parameter derivative (log-derivative of rising products), the
closed-form coefficient rows, and the coefficient-by-coefficient expansion
check. Parameters must be Fraction or int — floats are rejected so exactness
is never silently lost.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .families import FamilySpec, GEGENBAUER, JACOBI, LAGUERRE, _check_degree

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def _as_fraction(value, name):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(
        f"exact engine requires Fraction or int parameters, got {name}={value!r}")


def _rational_params(spec):
    if spec.kind == LAGUERRE:
        return (_as_fraction(spec.alpha, "alpha"),)
    if spec.kind == GEGENBAUER:
        return (_as_fraction(spec.lam, "lambda"),)
    return (_as_fraction(spec.alpha, "alpha"), _as_fraction(spec.beta, "beta"))


def _rising(x, m):
    # x (x+1) ... (x+m-1); empty product is 1
    prod = ONE
    for j in range(m):
        prod *= x + j
    return prod


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients in powers of (z - center)."""

    center: Fraction
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in self.coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def coefficient(self, power):
        return self.coeffs[power] if power <= self.degree else ZERO

    def evaluate(self, z):
        z = Fraction(z)
        w = z - self.center
        total = ZERO
        for c in reversed(self.coeffs):
            total = total * w + c
        return total

    def scale(self, factor):
        factor = Fraction(factor)
        return RationalPoly(self.center, tuple(c * factor for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if other.center != self.center:
            other = other.with_center(self.center)
        size = max(len(self.coeffs), len(other.coeffs))
        summed = [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        return RationalPoly(self.center, tuple(summed))

    def __sub__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self + other.scale(-1)

    def with_center(self, center):
        """Re-expand exactly around a new center via the binomial theorem."""
        center = Fraction(center)
        if center == self.center:
            return self
        t = center - self.center  # (z - old) = (z - new) + t
        out = [ZERO] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = ONE
            for m in range(k, -1, -1):
                out[m] += c * math.comb(k, k - m) * power
                power *= t
        return RationalPoly(center, tuple(out))


class ExpansionVerdict(NamedTuple):
    ok: bool
    first_mismatch: Optional[int]  # power of the first differing coefficient


def _family_center(spec):
    # Laguerre's series lives at z=0, the other two at z=1.
    return ZERO if spec.kind == LAGUERRE else ONE


def exact_poly(spec, n) -> RationalPoly:
    """P_n as an exact polynomial in powers of (z - center).

    Every gamma ratio of the explicit series reduces to a rising product, so
    each coefficient is an exact rational in the (rational) parameters.
    """
    _check_degree(n)
    if spec.kind == LAGUERRE:
        (lam,) = _rational_params(spec)
        coeffs = []
        for k in range(n + 1):
            c = Fraction((-1) ** k) * _rising(lam + k + 1, n - k)
            coeffs.append(c / (math.factorial(k) * math.factorial(n - k)))
        return RationalPoly(ZERO, tuple(coeffs))
    if spec.kind == GEGENBAUER:
        (lam,) = _rational_params(spec)
        coeffs = []
        for k in range(n + 1):
            num = _rising(2 * lam, n + k)
            den = _rising(lam + HALF, k) * math.factorial(k) * math.factorial(n - k) * 2 ** k
            coeffs.append(num / den)
        return RationalPoly(ONE, tuple(coeffs))
    alpha, beta = _rational_params(spec)
    coeffs = []
    for k in range(n + 1):
        num = _rising(alpha + k + 1, n - k) * _rising(n + alpha + beta + 1, k)
        coeffs.append(num / (math.factorial(k) * math.factorial(n - k) * 2 ** k))
    return RationalPoly(ONE, tuple(coeffs))


def exact_param_derivative(spec, n) -> RationalPoly:
    """d P_n / d(parameter) as an exact polynomial.

    Each series coefficient is a product of factors linear in the parameter,
    so its derivative is the coefficient times a finite sum of shifted
    reciprocals — exact at rational parameter values.
    """
    _check_degree(n)
    base = exact_poly(spec, n)
    if spec.kind == LAGUERRE:
        (lam,) = _rational_params(spec)
        out = []
        for k in range(n + 1):
            logderiv = sum((ONE / (lam + k + 1 + j) for j in range(n - k)), ZERO)
            out.append(base.coefficient(k) * logderiv)
        return RationalPoly(base.center, tuple(out))
    if spec.kind == GEGENBAUER:
        (lam,) = _rational_params(spec)
        out = []
        for k in range(n + 1):
            logderiv = sum((Fraction(2) / (2 * lam + j) for j in range(n + k)), ZERO)
            logderiv -= sum((ONE / (lam + HALF + j) for j in range(k)), ZERO)
            out.append(base.coefficient(k) * logderiv)
        return RationalPoly(base.center, tuple(out))
    alpha, beta = _rational_params(spec)
    out = []
    for k in range(n + 1):
        logderiv = sum((ONE / (n + alpha + beta + 1 + j) for j in range(k)), ZERO)
        if spec.wrt == "alpha":
            logderiv += sum((ONE / (alpha + k + 1 + j) for j in range(n - k)), ZERO)
        out.append(base.coefficient(k) * logderiv)
    return RationalPoly(base.center, tuple(out))


def exact_leading_coefficient(spec, n) -> Fraction:
    """Exact coefficient of (z - z0)^n in P_n (independent of z0)."""
    _check_degree(n)
    if spec.kind == LAGUERRE:
        return Fraction((-1) ** n, math.factorial(n))
    if spec.kind == GEGENBAUER:
        (lam,) = _rational_params(spec)
        return 2 ** n * _rising(lam, n) / math.factorial(n)
    alpha, beta = _rational_params(spec)
    return _rising(n + alpha + beta + 1, n) / (2 ** n * math.factorial(n))


def exact_coefficient_row(spec, n):
    """Exact rational row {a_n0, ..., a_nn} for the family and wrt choice."""
    _check_degree(n)
    if spec.kind == LAGUERRE:
        return [Fraction(1, n - k) for k in range(n)] + [ZERO]
    if spec.kind == GEGENBAUER:
        (lam,) = _rational_params(spec)
        row = []
        for k in range(n):
            if (n - k) % 2:
                row.append(ZERO)
            else:
                row.append(Fraction(4) * (k + lam) / ((n - k) * (k + n + 2 * lam)))
        row.append(sum((ONE / (lam + j) for j in range(n)), ZERO))
        return row
    alpha, beta = _rational_params(spec)
    if spec.wrt == "beta":
        swapped = exact_coefficient_row(
            FamilySpec(JACOBI, alpha=beta, beta=alpha, wrt="alpha"), n)
        return [c if (k + n) % 2 == 0 else -c for k, c in enumerate(swapped)]
    row = []
    for k in range(n):
        ratio = ONE
        for j in range(k, n):
            ratio *= (j + beta + 1) / (j + alpha + beta + 1)
        row.append((2 * k + alpha + beta + 1) * ratio / ((n - k) * (k + n + alpha + beta + 1)))
    row.append(sum((ONE / (n + alpha + beta + 1 + j) for j in range(n)), ZERO))
    return row


def verify_expansion_exact(spec, n, _polys=None) -> ExpansionVerdict:
    """Check sum_k a_nk P_k == dP_n/d(parameter) coefficient-by-coefficient.

    Exact equality in rational arithmetic; on failure reports the power of
    the first mismatching monomial coefficient. _polys may carry precomputed
    exact_poly values (index = degree) for sweep reuse.
    """
    _check_degree(n)
    row = exact_coefficient_row(spec, n)
    center = _family_center(spec)
    reconstructed = RationalPoly(center, (ZERO,))
    for k, a in enumerate(row):
        if a == 0:
            continue
        poly = _polys[k] if _polys is not None else exact_poly(spec, k)
        reconstructed = reconstructed + poly.scale(a)
    target = exact_param_derivative(spec, n)
    for power in range(max(reconstructed.degree, target.degree) + 1):
        if reconstructed.coefficient(power) != target.coefficient(power):
            return ExpansionVerdict(False, power)
    return ExpansionVerdict(True, None)
