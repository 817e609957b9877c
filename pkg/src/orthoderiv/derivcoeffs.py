"""Closed-form expansion rows for the parameter derivative of each family.

The derivative of P_n with respect to the family parameter expands in the
same-family basis; these routines produce the full coefficient row
{a_n0, ..., a_nn} and evaluate the expansion. Diagonal entries are always
finite reciprocal sums (digamma_diff), never differences of two digamma
calls, and gamma ratios ride rising products so rows stay accurate for
large n.
"""

from dataclasses import dataclass

from .families import (FamilySpec, GEGENBAUER, JACOBI, LAGUERRE, _check_degree,
                       eval_sequence, gegenbauer, jacobi, laguerre, z_derivative)
from .gammafn import digamma_diff


@dataclass(frozen=True)
class CoefficientVector:
    """Row of expansion coefficients for one degree: entry k multiplies P_k."""

    n: int
    family: FamilySpec
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"row for degree {self.n} must have {self.n + 1} entries")

    @property
    def diagonal(self):
        return self.coeffs[self.n]


def laguerre_coeffs(n, alpha=0.0) -> CoefficientVector:
    """Laguerre row: a_nk = 1/(n-k) below the diagonal, diagonal 0.

    Independent of alpha; the parameter only matters when the row is paired
    with polynomial values.
    """
    _check_degree(n)
    row = [1.0 / (n - k) for k in range(n)]
    row.append(0.0)
    return CoefficientVector(n, laguerre(alpha), tuple(row))


def gegenbauer_coeffs(n, lam) -> CoefficientVector:
    """Gegenbauer row: parity-masked 4(k+lam)/((n-k)(k+n+2 lam)) below the
    diagonal, diagonal sum of 1/(lam+j)."""
    spec = gegenbauer(lam)
    _check_degree(n)
    lam = float(lam)
    row = []
    for k in range(n):
        if (n - k) % 2:
            row.append(0.0)
        else:
            row.append(4.0 * (k + lam) / ((n - k) * (k + n + 2.0 * lam)))
    row.append(digamma_diff(lam, n))
    return CoefficientVector(n, spec, tuple(row))


def gegenbauer_coeffs_even_form(n, lam) -> CoefficientVector:
    """Same row via the int(n/2)-indexed reformulation (n-2k+lam)/(k(n-k+lam));
    must agree entry-wise with gegenbauer_coeffs."""
    spec = gegenbauer(lam)
    _check_degree(n)
    lam = float(lam)
    row = [0.0] * (n + 1)
    for k in range(1, n // 2 + 1):
        row[n - 2 * k] = (n - 2.0 * k + lam) / (k * (n - k + lam))
    row[n] = digamma_diff(lam, n)
    return CoefficientVector(n, spec, tuple(row))


def _jacobi_ratio(n, k, alpha, beta):
    # Gamma(n+beta+1) Gamma(k+alpha+beta+1) / (Gamma(k+beta+1) Gamma(n+alpha+beta+1))
    # as one pairwise product: keeps every intermediate near 1.
    ratio = 1.0
    for j in range(k, n):
        ratio *= (j + beta + 1.0) / (j + alpha + beta + 1.0)
    return ratio


def jacobi_alpha_coeffs(n, alpha, beta) -> CoefficientVector:
    """Jacobi row for the derivative with respect to alpha."""
    spec = jacobi(alpha, beta, wrt="alpha")
    _check_degree(n)
    a, b = float(alpha), float(beta)
    row = []
    for k in range(n):
        factor = (2.0 * k + a + b + 1.0) / ((n - k) * (k + n + a + b + 1.0))
        row.append(factor * _jacobi_ratio(n, k, a, b))
    row.append(digamma_diff(n + a + b + 1.0, n))
    return CoefficientVector(n, spec, tuple(row))


def jacobi_beta_coeffs(n, alpha, beta) -> CoefficientVector:
    """Jacobi row for the derivative with respect to beta: the alpha row with
    parameters exchanged and alternating signs (-1)^(k+n)."""
    spec = jacobi(alpha, beta, wrt="beta")
    swapped = jacobi_alpha_coeffs(n, beta, alpha)
    row = tuple(c if (k + n) % 2 == 0 else -c for k, c in enumerate(swapped.coeffs))
    return CoefficientVector(n, spec, row)


def coefficient_row(spec, n) -> CoefficientVector:
    """Dispatch to the family/wrt-appropriate row constructor."""
    if spec.kind == LAGUERRE:
        return laguerre_coeffs(n, spec.alpha)
    if spec.kind == GEGENBAUER:
        return gegenbauer_coeffs(n, spec.lam)
    if spec.wrt == "beta":
        return jacobi_beta_coeffs(n, spec.alpha, spec.beta)
    return jacobi_alpha_coeffs(n, spec.alpha, spec.beta)


def param_derivative_eval(spec, n, z):
    """dP_n/d(parameter) at z: the coefficient row dotted with [P_0..P_n](z)."""
    row = coefficient_row(spec, n)
    values = eval_sequence(spec, n, z)
    total = 0.0
    for a, v in zip(row.coeffs, values):
        total += a * v
    return total


def diagonal_via_lemma(spec, n):
    """Diagonal entry from the log-derivative of the leading coefficient.

    Laguerre's leading coefficient carries no parameter, so its diagonal is
    exactly zero; the other two reduce to finite reciprocal sums.
    """
    _check_degree(n)
    if spec.kind == LAGUERRE:
        return 0.0
    if spec.kind == GEGENBAUER:
        return digamma_diff(float(spec.lam), n)
    return digamma_diff(n + float(spec.alpha) + float(spec.beta) + 1.0, n)


def rhs_expansion(spec, n, z):
    """The differentiated-ODE inhomogeneity as its sub-diagonal expansion.

    Equals the direct expression built from the polynomial and its
    z-derivative: -dL_n/dz (Laguerre), 2z dC_n/dz - 2n C_n (Gegenbauer),
    (z+1) dP_n/dz - n P_n (Jacobi, alpha form for either wrt).
    """
    _check_degree(n)
    if n < 1:
        raise ValueError("the inhomogeneity expansion needs n >= 1")
    values = eval_sequence(spec, n - 1, z)
    if spec.kind == LAGUERRE:
        return sum(values)
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        total = 0.0
        for k in range(n):
            if (n - k) % 2 == 0:
                total += 4.0 * (k + lam) * values[k]
        return total
    a, b = float(spec.alpha), float(spec.beta)
    total = 0.0
    for k in range(n):
        total += (2.0 * k + a + b + 1.0) * _jacobi_ratio(n, k, a, b) * values[k]
    return total


def rhs_direct(spec, n, z):
    """The same inhomogeneity computed directly from P_n and dP_n/dz."""
    _check_degree(n)
    if n < 1:
        raise ValueError("the inhomogeneity needs n >= 1")
    z = float(z)
    pn = eval_sequence(spec, n, z)[n]
    dpn = z_derivative(spec, n, z)
    if spec.kind == LAGUERRE:
        return -dpn
    if spec.kind == GEGENBAUER:
        return 2.0 * z * dpn - 2.0 * n * pn
    return (z + 1.0) * dpn - n * pn
