"""The three classical families: evaluation engines, special values, derivative
relations, leading coefficients, ODE operators and Christoffel-Darboux sums.

The default evaluation engine is the three-term recurrence (stable on the
natural interval); the explicit power series is kept as a secondary engine
for cross-checks. All functions are pure; FamilySpec is immutable.
"""

import math
from dataclasses import dataclass, field

from .errors import DegenerateInputError, InvalidEndpointError
from .gammafn import gamma_ratio, ln_gamma_abs

LAGUERRE = "laguerre"
GEGENBAUER = "gegenbauer"
JACOBI = "jacobi"

_ENDPOINT_VALUES = {"zero": 0.0, "plus_one": 1.0, "minus_one": -1.0}

# Finite-difference step exponent: eps**(1/3) balances truncation and rounding
# for the first central difference.
_FD_STEP = (2.0 ** -52) ** (1.0 / 3.0)


@dataclass(frozen=True)
class FamilySpec:
    """One polynomial family with its parameter(s) and the derivative target.

    Parameters may be any real numbers (floats, ints or Fractions); the float
    engines coerce them on use, the exact engine requires rationals. Domain
    constraints are the classical orthogonality ones, enforced here so every
    denominator downstream is provably nonzero.
    """

    kind: str
    alpha: object = None
    beta: object = None
    lam: object = None
    wrt: str = field(default="")

    def __post_init__(self):
        if self.kind == LAGUERRE:
            self._need("alpha", self.alpha)
            if float(self.alpha) <= -1.0:
                raise ValueError(f"laguerre requires alpha > -1, got alpha={self.alpha}")
            object.__setattr__(self, "wrt", self.wrt or "alpha")
            if self.wrt != "alpha":
                raise ValueError("laguerre derivatives are taken with respect to alpha")
        elif self.kind == GEGENBAUER:
            self._need("lambda", self.lam)
            lam = float(self.lam)
            if lam <= -0.5 or lam == 0.0:
                raise ValueError(
                    f"gegenbauer requires lambda > -1/2 and lambda != 0, got lambda={self.lam}")
            object.__setattr__(self, "wrt", self.wrt or "lambda")
            if self.wrt != "lambda":
                raise ValueError("gegenbauer derivatives are taken with respect to lambda")
        elif self.kind == JACOBI:
            self._need("alpha", self.alpha)
            self._need("beta", self.beta)
            if float(self.alpha) <= -1.0:
                raise ValueError(f"jacobi requires alpha > -1, got alpha={self.alpha}")
            if float(self.beta) <= -1.0:
                raise ValueError(f"jacobi requires beta > -1, got beta={self.beta}")
            object.__setattr__(self, "wrt", self.wrt or "alpha")
            if self.wrt not in ("alpha", "beta"):
                raise ValueError(f"jacobi wrt must be 'alpha' or 'beta', got {self.wrt!r}")
        else:
            raise ValueError(f"unknown family {self.kind!r} (expected laguerre, gegenbauer or jacobi)")

    def _need(self, name, value):
        if value is None:
            raise ValueError(f"{self.kind} requires parameter {name}")
        if not math.isfinite(float(value)):
            raise ValueError(f"{self.kind} parameter {name} must be finite, got {value}")

    def parameters(self):
        """Name -> value map of the parameters this family actually carries."""
        if self.kind == LAGUERRE:
            return {"alpha": self.alpha}
        if self.kind == GEGENBAUER:
            return {"lambda": self.lam}
        return {"alpha": self.alpha, "beta": self.beta}


def laguerre(alpha) -> FamilySpec:
    return FamilySpec(LAGUERRE, alpha=alpha)


def gegenbauer(lam) -> FamilySpec:
    return FamilySpec(GEGENBAUER, lam=lam)


def jacobi(alpha, beta, wrt="alpha") -> FamilySpec:
    return FamilySpec(JACOBI, alpha=alpha, beta=beta, wrt=wrt)


def _check_degree(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")


def _first_poly_coeffs(spec):
    # P_1 = s*z + t for each family's standard normalization.
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        return -1.0, lam + 1.0
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        return 2.0 * lam, 0.0
    a, b = float(spec.alpha), float(spec.beta)
    return (a + b + 2.0) / 2.0, (a - b) / 2.0


def _recurrence_step(spec, k):
    # P_{k+1} = (a*z + b) P_k + c P_{k-1}, valid for k >= 1 on the enforced
    # domains (every denominator is positive there).
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        inv = 1.0 / (k + 1.0)
        return -inv, (2.0 * k + lam + 1.0) * inv, -(k + lam) * inv
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        inv = 1.0 / (k + 1.0)
        return 2.0 * (k + lam) * inv, 0.0, -(k + 2.0 * lam - 1.0) * inv
    a, b = float(spec.alpha), float(spec.beta)
    s = 2.0 * k + a + b
    denom = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s
    return ((2.0 * k + a + b + 1.0) * (s + 2.0) * s / denom,
            (2.0 * k + a + b + 1.0) * (a * a - b * b) / denom,
            -2.0 * (k + a) * (k + b) * (s + 2.0) / denom)


def eval_sequence(spec, n, z):
    """Values [P_0(z), ..., P_n(z)] by the three-term recurrence."""
    _check_degree(n)
    z = float(z)
    values = [1.0]
    if n == 0:
        return values
    s, t = _first_poly_coeffs(spec)
    values.append(s * z + t)
    for k in range(1, n):
        a, b, c = _recurrence_step(spec, k)
        values.append((a * z + b) * values[k] + c * values[k - 1])
    return values


def eval_sequence_with_derivs(spec, n, z):
    """(values, first derivatives, second derivatives), each a length-(n+1) list.

    Obtained by differentiating the recurrence itself once and twice, so it is
    stable everywhere including the interval endpoints.
    """
    _check_degree(n)
    z = float(z)
    p = [1.0]
    d1 = [0.0]
    d2 = [0.0]
    if n == 0:
        return p, d1, d2
    s, t = _first_poly_coeffs(spec)
    p.append(s * z + t)
    d1.append(s)
    d2.append(0.0)
    for k in range(1, n):
        a, b, c = _recurrence_step(spec, k)
        lin = a * z + b
        p.append(lin * p[k] + c * p[k - 1])
        d1.append(a * p[k] + lin * d1[k] + c * d1[k - 1])
        d2.append(2.0 * a * d1[k] + lin * d2[k] + c * d2[k - 1])
    return p, d1, d2


def eval_series(spec, n, z):
    """P_n(z) by direct term-wise summation of the explicit power series.

    Secondary engine, for cross-checks only: it develops cancellation for
    large n where the recurrence stays stable. For the interval families the
    series runs in powers of (z-1)/2, so negative z is summed on the
    reflected argument (alpha/beta exchanged for Jacobi, a parity sign for
    both) to keep the cancellation bounded.
    """
    _check_degree(n)
    z = float(z)
    if n == 0:
        return 1.0
    if spec.kind == GEGENBAUER and z < 0.0:
        sign = -1.0 if n % 2 else 1.0
        return sign * eval_series(spec, n, -z)
    if spec.kind == JACOBI and z < 0.0:
        sign = -1.0 if n % 2 else 1.0
        return sign * eval_series(jacobi(spec.beta, spec.alpha), n, -z)
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        term = 1.0
        for j in range(1, n + 1):  # (lam+1)_n / n!
            term *= (lam + j) / j
        total = term
        for k in range(n):
            term *= -(n - k) / ((k + 1.0) * (k + lam + 1.0)) * z
            total += term
        return total
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        w = (z - 1.0) / 2.0
        term = 1.0
        for j in range(n):  # (2 lam)_n / n!
            term *= (2.0 * lam + j) / (j + 1.0)
        total = term
        for k in range(n):
            term *= (2.0 * lam + n + k) * (n - k) / ((lam + 0.5 + k) * (k + 1.0)) * w
            total += term
        return total
    a, b = float(spec.alpha), float(spec.beta)
    w = (z - 1.0) / 2.0
    term = 1.0
    for j in range(n):  # (alpha+1)_n / n!
        term *= (a + 1.0 + j) / (j + 1.0)
    total = term
    for k in range(n):
        term *= (n + a + b + 1.0 + k) * (n - k) / ((k + 1.0) * (k + a + 1.0)) * w
        total += term
    return total


def special_value(spec, k, endpoint):
    """Closed-form P_k at the family's special point, via rising gamma ratios.

    Valid endpoints: 'zero' (Laguerre), 'plus_one'/'minus_one' (Gegenbauer),
    'plus_one' (Jacobi).
    """
    _check_degree(k)
    _check_endpoint(spec, endpoint)
    fact = math.factorial(k)
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        return gamma_ratio(k + lam + 1.0, lam + 1.0) / fact
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        sign = -1.0 if (endpoint == "minus_one" and k % 2) else 1.0
        return sign * gamma_ratio(k + 2.0 * lam, 2.0 * lam) / fact
    a = float(spec.alpha)
    return gamma_ratio(k + a + 1.0, a + 1.0) / fact


def _check_endpoint(spec, endpoint):
    valid = {
        LAGUERRE: ("zero",),
        GEGENBAUER: ("plus_one", "minus_one"),
        JACOBI: ("plus_one",),
    }[spec.kind]
    if endpoint not in valid:
        raise InvalidEndpointError(
            f"endpoint {endpoint!r} is not special for {spec.kind} (valid: {', '.join(valid)})")


def z_derivative(spec, n, z):
    """dP_n/dz at z, via the family's first-derivative relation.

    At the relation's removable singular points (z=0 for Laguerre, z=+-1 for
    Gegenbauer/Jacobi) falls back to the differentiated recurrence.
    """
    _check_degree(n)
    z = float(z)
    if n == 0:
        return 0.0
    if spec.kind == LAGUERRE:
        if z == 0.0:
            return eval_sequence_with_derivs(spec, n, z)[1][n]
        lam = float(spec.alpha)
        values = eval_sequence(spec, n, z)
        return (n * values[n] - (n + lam) * values[n - 1]) / z
    if spec.kind == GEGENBAUER:
        if z in (1.0, -1.0):
            return eval_sequence_with_derivs(spec, n, z)[1][n]
        lam = float(spec.lam)
        values = eval_sequence(spec, n, z)
        return (n * z * values[n] - (n + 2.0 * lam - 1.0) * values[n - 1]) / (z * z - 1.0)
    if z in (1.0, -1.0):
        return eval_sequence_with_derivs(spec, n, z)[1][n]
    a, b = float(spec.alpha), float(spec.beta)
    s = 2.0 * n + a + b
    values = eval_sequence(spec, n, z)
    return ((n * (b - a + s * z)) * values[n] - 2.0 * (n + a) * (n + b) * values[n - 1]) / (
        s * (z * z - 1.0))


def leading_coefficient(spec, n):
    """Coefficient of z^n (equivalently of (z - z0)^n, any z0) in P_n."""
    _check_degree(n)
    fact = math.factorial(n)
    if spec.kind == LAGUERRE:
        return (-1.0 if n % 2 else 1.0) / fact
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        return 2.0 ** n * gamma_ratio(n + lam, lam) / fact
    a, b = float(spec.alpha), float(spec.beta)
    return gamma_ratio(2.0 * n + a + b + 1.0, n + a + b + 1.0) / (2.0 ** n * fact)


def ode_residual(spec, n, f, z, df=None, d2f=None):
    """Apply the family's second-order operator to f at z.

    f is a scalar callable; its derivatives come from the optional df/d2f
    channels when supplied, otherwise from central differences with step
    h = eps**(1/3) * max(1, |z|). Returns the scalar residual (zero for
    f = P_n up to the derivative channels' accuracy).
    """
    _check_degree(n)
    z = float(z)
    f0 = f(z)
    if df is not None and d2f is not None:
        fp1 = df(z)
        fp2 = d2f(z)
    else:
        h = _FD_STEP * max(1.0, abs(z))
        up, down = f(z + h), f(z - h)
        fp1 = df(z) if df is not None else (up - down) / (2.0 * h)
        fp2 = d2f(z) if d2f is not None else (up - 2.0 * f0 + down) / (h * h)
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        return z * fp2 + (lam + 1.0 - z) * fp1 + n * f0
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        return (1.0 - z * z) * fp2 - (2.0 * lam + 1.0) * z * fp1 + n * (n + 2.0 * lam) * f0
    a, b = float(spec.alpha), float(spec.beta)
    return (1.0 - z * z) * fp2 + (b - a - (a + b + 2.0) * z) * fp1 + n * (n + a + b + 1.0) * f0


def _cd_weight(spec, k):
    # Weight of P_k(z) P_k(z') in the Christoffel-Darboux kernel sum.
    fact_log = math.lgamma(k + 1.0)
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        log_g, sign = ln_gamma_abs(k + lam + 1.0)
        return sign * math.exp(fact_log - log_g)
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        log_g, sign = ln_gamma_abs(k + 2.0 * lam)
        return (k + lam) * sign * math.exp(fact_log - log_g)
    a, b = float(spec.alpha), float(spec.beta)
    log_da = math.lgamma(k + a + 1.0)
    log_db = math.lgamma(k + b + 1.0)
    if k == 0:
        # (a+b+1) Gamma(a+b+1) = Gamma(a+b+2): finite even at a+b = -1.
        return math.exp(math.lgamma(a + b + 2.0) - log_da - log_db)
    return (2.0 * k + a + b + 1.0) * math.exp(
        fact_log + math.lgamma(k + a + b + 1.0) - log_da - log_db)


def _cd_prefactor(spec, n):
    # Constant multiplying the two-term ratio on the kernel identity's right side.
    fact_log = math.lgamma(n + 1.0)
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        log_g, sign = ln_gamma_abs(n + lam)
        return -sign * math.exp(fact_log - log_g)
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        log_g, sign = ln_gamma_abs(n + 2.0 * lam - 1.0)
        return 0.5 * sign * math.exp(fact_log - log_g)
    a, b = float(spec.alpha), float(spec.beta)
    # n >= 1 makes every argument here strictly positive on the domain.
    return 2.0 * math.exp(fact_log + math.lgamma(n + a + b + 1.0)
                          - math.lgamma(n + a) - math.lgamma(n + b)) / (2.0 * n + a + b)


def cd_kernel_lhs(spec, n, z, zp):
    """Brute-force weighted kernel sum over k < n at the pair (z, z')."""
    _check_degree(n)
    if n < 1:
        raise ValueError("the kernel sum needs n >= 1")
    pz = eval_sequence(spec, n - 1, z)
    pzp = eval_sequence(spec, n - 1, zp)
    return sum(_cd_weight(spec, k) * pz[k] * pzp[k] for k in range(n))


def cd_kernel_rhs(spec, n, z, zp):
    """Collapsed two-term ratio form of the kernel sum at the pair (z, z')."""
    _check_degree(n)
    if n < 1:
        raise ValueError("the kernel ratio needs n >= 1")
    z, zp = float(z), float(zp)
    if z == zp:
        raise DegenerateInputError("kernel ratio undefined at z == z'")
    pz = eval_sequence(spec, n, z)
    pzp = eval_sequence(spec, n, zp)
    cross = pz[n] * pzp[n - 1] - pz[n - 1] * pzp[n]
    return _cd_prefactor(spec, n) * cross / (z - zp)


def cd_endpoint_sum(spec, n, z, endpoint):
    """Kernel identity collapsed at the family's special point: the two-term
    ratio that must equal the explicit weighted sum of P_k(z), k < n."""
    _check_degree(n)
    if n < 1:
        raise ValueError("the endpoint collapse needs n >= 1")
    _check_endpoint(spec, endpoint)
    z = float(z)
    if z == _ENDPOINT_VALUES[endpoint]:
        raise DegenerateInputError(f"z={z} coincides with endpoint {endpoint}")
    values = eval_sequence(spec, n, z)
    if spec.kind == LAGUERRE:
        lam = float(spec.alpha)
        return -(n * values[n] - (n + lam) * values[n - 1]) / z
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        sign = 1.0 if endpoint == "plus_one" else (-1.0 if n % 2 else 1.0)
        pm = 1.0 if endpoint == "plus_one" else -1.0
        numer = pm * n * values[n] - (n + 2.0 * lam - 1.0) * values[n - 1]
        return sign * 0.5 * numer / (z - pm)
    a, b = float(spec.alpha), float(spec.beta)
    prefactor = 2.0 * gamma_ratio(n + a + b + 1.0, n + b) / (2.0 * n + a + b)
    return prefactor * (n * values[n] - (n + a) * values[n - 1]) / (z - 1.0)


def cd_endpoint_lhs(spec, n, z, endpoint):
    """Brute-force weighted sum of P_k(z), k < n, that the collapse must match."""
    _check_degree(n)
    if n < 1:
        raise ValueError("the endpoint sum needs n >= 1")
    _check_endpoint(spec, endpoint)
    values = eval_sequence(spec, n - 1, z)
    if spec.kind == LAGUERRE:
        return sum(values)
    if spec.kind == GEGENBAUER:
        lam = float(spec.lam)
        pm = 1.0 if endpoint == "plus_one" else -1.0
        return sum(pm ** k * (k + lam) * values[k] for k in range(n))
    a, b = float(spec.alpha), float(spec.beta)
    total = 0.0
    for k in range(n):
        log_num, s1 = ln_gamma_abs(k + a + b + 1.0)
        log_den, s2 = ln_gamma_abs(k + b + 1.0)
        total += (2.0 * k + a + b + 1.0) * s1 * s2 * math.exp(log_num - log_den) * values[k]
    return total


def gegenbauer_from_jacobi(lam, n, z):
    """Gegenbauer value routed through the equal-parameter Jacobi polynomial."""
    _check_degree(n)
    lam_f = float(lam)
    if lam_f <= -0.5 or lam_f == 0.0:
        raise ValueError(f"requires lambda > -1/2 and lambda != 0, got {lam}")
    prefactor = gamma_ratio(n + 2.0 * lam_f, 2.0 * lam_f) / gamma_ratio(
        n + lam_f + 0.5, lam_f + 0.5)
    return prefactor * eval_sequence(jacobi(lam_f - 0.5, lam_f - 0.5), n, z)[n]


def laguerre_limit_probe(alpha, n, z, beta):
    """Jacobi value at 1 - 2z/beta; approaches L_n(z) with O(1/beta) error."""
    _check_degree(n)
    return eval_sequence(jacobi(float(alpha), float(beta)), n, 1.0 - 2.0 * float(z) / float(beta))[n]
