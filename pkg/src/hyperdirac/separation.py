"""Reduction of the Dirac equation on H3 to two-component first-order systems.

With the substitution Psi = e^{-i eps t} e^{i m phi} f(r, z) / sqrt(sinh r cosh z)
and the linear restriction f3 = A f1, f4 = A f2, the four component
equations are consistent only for A M = eps +- p, p = sqrt(eps^2 - M^2).
Each branch separates as f1 = Z1(z) R1(r), f2 = Z2(z) R2(r) with a common
separating constant lambda.

Conventions:

* ``B`` stands for the product eB in curvature-radius units.
* ``m`` is half-integer; :class:`QuantumNumbers` stores ``twice_m``.
* ``p`` is the non-negative root; the branch sign carries the rest, and
  branch ``-1`` is obtained from branch ``+1`` by p -> -p.
* lambda = 0 is rejected: both first-order systems divide by it when the
  second component is rebuilt from the first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    AxisDegeneracyError,
    DegenerateSeparationError,
    InadmissibleError,
    SubluminalEnergyError,
)


def half_integer(value) -> Fraction:
    """Parse ``value`` as a half-integer m = +-1/2, +-3/2, ...

    Accepts numbers, :class:`~fractions.Fraction` and strings such as
    ``"3/2"``, ``"-1/2"`` or ``"2.5"``.
    """
    try:
        frac = Fraction(str(value).strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InadmissibleError(f"cannot parse {value!r} as a half-integer") from exc
    if frac.denominator != 2:
        raise InadmissibleError(
            f"m must be half-integer (m = +-1/2, +-3/2, ...), got {value!r}"
        )
    return frac


def twice(m) -> int:
    return int(2 * half_integer(m))


@dataclass(frozen=True)
class PhysicalParams:
    B: float
    M: float
    epsilon: float

    def __post_init__(self) -> None:
        if not self.B > 0:
            raise ValueError("field strength B must be positive")
        if not self.M > 0:
            raise ValueError("mass M must be positive")

    @property
    def p(self) -> float:
        if abs(self.epsilon) < self.M:
            raise SubluminalEnergyError(
                f"subluminal energy: |epsilon|={abs(self.epsilon)} < M={self.M}"
            )
        return math.sqrt((self.epsilon - self.M) * (self.epsilon + self.M))


@dataclass(frozen=True)
class SeparationConstants:
    p: float
    A_plus: float
    A_minus: float
    lam: float

    def A(self, branch: int) -> float:
        return self.A_plus if branch > 0 else self.A_minus


@dataclass(frozen=True)
class QuantumNumbers:
    twice_m: int
    n: int
    branch: int = 1
    axial_variant: int = 1
    radial_variant: int = 3

    def __post_init__(self) -> None:
        if self.twice_m % 2 == 0:
            raise InadmissibleError("m must be half-integer (2m odd)")
        if self.n < 0:
            raise InadmissibleError("n must be non-negative")
        if self.branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        if self.axial_variant not in (1, 2, 3, 4):
            raise InadmissibleError("axial variant must be 1..4")
        if self.radial_variant not in (3, 4):
            raise InadmissibleError("radial variant must be 3 or 4")

    @property
    def m(self) -> float:
        return self.twice_m / 2

    @classmethod
    def from_m(cls, m, n: int, **kw) -> "QuantumNumbers":
        return cls(twice_m=twice(m), n=n, **kw)

    def check_radial_range(self, B: float) -> None:
        check_m_range(self.radial_variant, self.m, B)


def check_m_range(variant: int, m: float, B: float) -> None:
    """Variant 3 needs m > 0; variant 4 needs -2B < m <= 1."""
    if variant == 3:
        if not m > 0:
            raise InadmissibleError(f"inadmissible m={m} for radial variant 3 (needs m > 0)")
    elif variant == 4:
        if not (-2 * B < m <= 1):
            raise InadmissibleError(f"inadmissible m={m} for radial variant 4 (needs -2B < m <= 1)")
    else:
        raise InadmissibleError(f"radial variant must be 3 or 4, got {variant}")


def separation_constants(params: PhysicalParams, lam: float) -> SeparationConstants:
    """Self-consistency roots A = (eps +- p)/M for the restriction f3 = A f1, f4 = A f2."""
    if lam == 0:
        raise DegenerateSeparationError("degenerate separation: lambda = 0")
    p, eps, M = params.p, params.epsilon, params.M
    # the smaller root cancels; take it from A_plus * A_minus = 1 instead
    if eps >= 0:
        A_plus = (eps + p) / M
        A_minus = M / (eps + p)
    else:
        A_minus = (eps - p) / M
        A_plus = M / (eps - p)
    return SeparationConstants(p=p, A_plus=A_plus, A_minus=A_minus, lam=float(lam))


def mu(r, m: float, B: float):
    """Effective radial coupling mu(r) = [m - B (cosh r - 1)] / sinh r."""
    ra = np.asarray(r, dtype=float)
    if np.any(ra <= 0):
        raise AxisDegeneracyError("axis degeneracy: mu(r) requires r > 0")
    out = (m - 2.0 * B * np.sinh(ra / 2) ** 2) / np.sinh(ra)
    return float(out) if out.ndim == 0 else out


def mu_prime(r, m: float, B: float):
    """d mu / dr = -[m cosh r + B (cosh r - 1)] / sinh^2 r."""
    ra = np.asarray(r, dtype=float)
    out = -(m * np.cosh(ra) + 2.0 * B * np.sinh(ra / 2) ** 2) / np.sinh(ra) ** 2
    return float(out) if out.ndim == 0 else out


def branch_sign_to_AM(branch: int, params: PhysicalParams) -> float:
    """A M = eps + p for branch +1 and eps - p for branch -1."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    if params.epsilon * branch >= 0:
        return params.epsilon + branch * params.p
    # eps - p for eps > 0 (or eps + p for eps < 0) cancels; use (eps + p)(eps - p) = M^2
    return params.M**2 / (params.epsilon - branch * params.p)


def signed_momentum(branch: int, params: PhysicalParams) -> float:
    """The axial momentum entering Z1, Z2: +p for branch +1, -p for branch -1."""
    return branch * params.p
