"""Closed-form radial solutions and the quantization of lambda^2.

The radial equation

    R1'' + [ (m cosh r + B (cosh r - 1)) - (m - B (cosh r - 1))^2 ] / sinh^2 r  R1 + lambda^2 R1 = 0

is solved by

    R1 = (1 + cosh r)^A (1 - cosh r)^C F(alpha, beta; gamma; (1 + cosh r) / 2),
    alpha, beta = A + C +- sqrt(B^2 - lambda^2),   gamma = 2A + 1/2.

Two exponent pairings survive the boundary conditions:

* variant 3: C = m/2, A = -B - m/2, needs m > 0;
* variant 4: C = (1 - m)/2, A = -B - m/2, needs -2B < m <= 1.

Bound states require the series to terminate, alpha = -n, which fixes
lambda^2.  With k = n (variant 3) or k = n - m + 1/2 (variant 4),
lambda^2 = 2Bk - k^2 and the state is normalizable when k < B.

Phase convention: for r > 0 the base (1 - cosh r) is negative and C is a
quarter-integer, so the literal power is complex.  We evaluate
(cosh r - 1)^C instead, dropping a constant unimodular factor.  The
equations are linear, so nothing else changes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AxisDegeneracyError,
    ComplexRootError,
    DegenerateSeparationError,
    InadmissibleError,
    LevelOutsideWellError,
)
from .separation import check_m_range, half_integer, mu
from .special import (
    HypergeoArgs,
    gauss_2f1_polynomial,
    polynomial_derivative,
    require_terminating,
)

# snapping tolerance for alpha = -n when lambda^2 comes in as a float
_TERMINATION_ATOL = 1e-9


@dataclass(frozen=True)
class RadialSpec:
    variant: int
    A_exp: float
    C_exp: float
    hyper: HypergeoArgs
    m: float
    B: float
    lambda_sq: float

    @property
    def admissible(self) -> bool:
        return self.C_exp >= 0 and self.A_exp < 0 and self.A_exp + self.C_exp < 0


@dataclass(frozen=True)
class SpectralState:
    variant: int
    m: float
    n: int
    lambda_sq: float
    normalizable: bool = True
    flat_limit_lambda0_sq: float | None = None

    @property
    def lam(self) -> float:
        return math.sqrt(self.lambda_sq)


def radial_exponents(variant: int, m: float, B: float) -> tuple[float, float]:
    """(A, C) for the two admissible pairings."""
    A = -B - m / 2
    if variant == 3:
        return A, m / 2
    if variant == 4:
        return A, (1 - m) / 2
    raise InadmissibleError(f"radial variant must be 3 or 4, got {variant}")


def rejected_variant(variant: int, m: float, B: float) -> None:
    """Exponent pairings 1 and 2 (A = (2B + m + 1)/2): always inadmissible for B > 0.

    Raises :class:`InadmissibleError` naming the first inequality that fails.
    """
    A = (2 * B + m + 1) / 2
    C = m / 2 if variant == 1 else (1 - m) / 2 if variant == 2 else None
    if C is None:
        raise ValueError("only pairings 1 and 2 are rejected ones")
    if not C >= 0:
        raise InadmissibleError(f"inadmissible pairing {variant}: C = {C} violates C >= 0")
    if not A < 0:
        raise InadmissibleError(f"inadmissible pairing {variant}: A = {A} violates A < 0")
    if not A + C < 0:
        raise InadmissibleError(f"inadmissible pairing {variant}: A + C = {A + C} violates A + C < 0")
    raise InadmissibleError(f"pairing {variant} unexpectedly passed; B must be positive")


def radial_spec(variant: int, m, B: float, lambda_sq: float) -> RadialSpec:
    m = float(half_integer(m))
    check_m_range(variant, m, B)
    if lambda_sq > B * B:
        raise ComplexRootError(f"complex root: lambda^2={lambda_sq} > B^2={B * B}")
    A, C = radial_exponents(variant, m, B)
    root = math.sqrt(B * B - lambda_sq)
    alpha = A + C + root
    n = round(-alpha)
    if n >= 0 and abs(alpha + n) <= _TERMINATION_ATOL * max(1.0, abs(alpha)):
        alpha = float(-n)
    beta = 2 * (A + C) - alpha
    hyper = HypergeoArgs(alpha=alpha, beta=beta, gamma=2 * A + 0.5)
    return RadialSpec(variant, A, C, hyper, m, float(B), float(lambda_sq))


def level_index(variant: int, m: float, n: int) -> float:
    """k = n (variant 3) or n - m + 1/2 (variant 4)."""
    return n if variant == 3 else n - m + 0.5


def quantized_lambda_sq(variant: int, B: float, m, n: int) -> float:
    """lambda^2 = 2Bk - k^2, raising if the level is not below the well edge (k < B)."""
    m = float(half_integer(m))
    check_m_range(variant, m, B)
    k = level_index(variant, m, n)
    if not k > 0:
        raise LevelOutsideWellError(f"level outside well: k = {k} must be positive")
    if not B - k > 0:
        raise LevelOutsideWellError(f"level outside well: B - k = {B - k} must be positive")
    return float(2 * B * k - k * k)


def allowed_levels(variant: int, B: float, m) -> list[tuple[int, float]]:
    """All (n, lambda^2) with k > 0 and k < B.  n = 0 of variant 3 (lambda = 0) is excluded."""
    m = float(half_integer(m))
    check_m_range(variant, m, B)
    shift = 0.0 if variant == 3 else 0.5 - m
    n = max(0, math.floor(-shift) + 1)
    out = []
    while n + shift < B:
        out.append((n, quantized_lambda_sq(variant, B, m, n)))
        n += 1
    return out


def spectral_state(variant: int, B: float, m, n: int) -> SpectralState:
    m = float(half_integer(m))
    return SpectralState(variant, m, n, quantized_lambda_sq(variant, B, m, n))


def spec_for_state(state: SpectralState, B: float) -> RadialSpec:
    return radial_spec(state.variant, state.m, B, state.lambda_sq)


def _degree(spec: RadialSpec, n: int) -> int:
    deg = require_terminating(spec.hyper.alpha)
    if deg != n:
        raise InadmissibleError(f"spec terminates at degree {deg}, not n={n}")
    return deg


def _radius(r):
    ra = np.asarray(r, dtype=float)
    if np.any(ra < 0):
        raise AxisDegeneracyError("radius must be non-negative")
    return ra


def _log_prefactor(spec: RadialSpec, ra):
    # (1 + cosh r)^A (cosh r - 1)^C with cosh r - 1 = 2 sinh^2(r/2)
    with np.errstate(divide="ignore"):
        log_down = np.log(2.0 * np.sinh(ra / 2) ** 2)
    return spec.A_exp * np.log1p(np.cosh(ra)) + np.where(spec.C_exp == 0, 0.0, spec.C_exp * log_down)


def _out(a):
    return float(a) if np.ndim(a) == 0 else a


def eval_R1(spec: RadialSpec, n: int, r):
    """R1 at the quantized spec.  R1(0) = 0 for C > 0 and finite for C = 0."""
    deg = _degree(spec, n)
    ra = _radius(r)
    h = spec.hyper
    P = gauss_2f1_polynomial(deg, h.beta.real, h.gamma.real, (1.0 + np.cosh(ra)) / 2)
    return _out(np.exp(_log_prefactor(spec, ra)) * P)


def eval_R1_prime(spec: RadialSpec, n: int, r):
    """dR1/dr; needs r > 0 when C > 0."""
    deg = _degree(spec, n)
    ra = _radius(r)
    if spec.C_exp > 0 and np.any(ra == 0):
        raise AxisDegeneracyError("axis degeneracy: R1' is singular at r = 0 for C > 0")
    h = spec.hyper
    x = (1.0 + np.cosh(ra)) / 2
    P = gauss_2f1_polynomial(deg, h.beta.real, h.gamma.real, x)
    dP = polynomial_derivative(deg, h.beta.real, h.gamma.real, x)
    with np.errstate(divide="ignore", invalid="ignore"):
        dlog = spec.A_exp * np.tanh(ra / 2) + (spec.C_exp / np.tanh(ra / 2) if spec.C_exp else 0.0)
    pre = np.exp(_log_prefactor(spec, ra))
    return _out(pre * (dlog * P + dP * np.sinh(ra) / 2))


def eval_R2(spec: RadialSpec, n: int, lam: float, r):
    """R2 = (R1' - mu R1) / lambda, r > 0."""
    if lam == 0:
        raise DegenerateSeparationError("degenerate separation: lambda = 0")
    ra = _radius(r)
    if np.any(ra == 0):
        raise AxisDegeneracyError("axis degeneracy: R2 needs r > 0")
    return _out((eval_R1_prime(spec, n, ra) - mu(ra, spec.m, spec.B) * eval_R1(spec, n, ra)) / lam)


def count_nodes(values) -> int:
    """Sign changes of a sampled real function, ignoring exact zeros."""
    v = np.asarray(values, dtype=float)
    s = np.sign(v[v != 0])
    return int(np.count_nonzero(s[1:] != s[:-1]))
