"""Four-component solutions, spectrum tables and the flat-space limit.

The transverse spectrum is the set of quantized lambda^2; the energy
epsilon stays a free continuous input that enters only through
p = sqrt(eps^2 - M^2) and the constant A = (eps +- p)/M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .axial import AxialSpec, axial_spec, eval_Z1, eval_Z2
from .errors import AxisDegeneracyError, InadmissibleError, LevelOutsideWellError
from .geometry import CylindricalPoint
from .radial import (
    SpectralState,
    allowed_levels,
    eval_R1,
    eval_R2,
    level_index,
    spec_for_state,
)
from .separation import PhysicalParams, branch_sign_to_AM, check_m_range, half_integer


@dataclass(frozen=True)
class SpinorSample:
    point: CylindricalPoint
    f1: complex
    f2: complex
    f3: complex
    f4: complex
    psi_scale: float

    def components(self) -> np.ndarray:
        return np.array([self.f1, self.f2, self.f3, self.f4])

    def psi(self, epsilon: float, m: float) -> np.ndarray:
        """Full spinor e^{-i eps t} e^{i m phi} f_a / sqrt(sinh r cosh z)."""
        phase = np.exp(-1j * epsilon * self.point.t + 1j * m * self.point.phi)
        return phase * self.psi_scale * self.components()


@dataclass(frozen=True)
class FlatLimitParams:
    rho: float
    B0: float
    lambda0_sq: float

    @property
    def B(self) -> float:
        return self.B0 * self.rho**2

    @property
    def lambda_sq(self) -> float:
        return self.lambda0_sq * self.rho**2


@dataclass(frozen=True)
class _Pieces:
    axial: AxialSpec
    radial: object
    n: int
    lam: float
    A: float


def _pieces(state: SpectralState, axial_variant: int, branch: int, params: PhysicalParams) -> _Pieces:
    lam = math.sqrt(state.lambda_sq)
    p = branch * params.p
    A = branch_sign_to_AM(branch, params) / params.M
    return _Pieces(axial_spec(axial_variant, p, lam), spec_for_state(state, params.B), state.n, lam, A)


def assemble_fields(state: SpectralState, axial_variant: int, branch: int,
                    params: PhysicalParams) -> tuple[Callable, Callable, Callable, Callable]:
    """f1..f4 as vectorized callables of (r, z)."""
    pc = _pieces(state, axial_variant, branch, params)

    def f1(r, z):
        return eval_Z1(pc.axial, z) * eval_R1(pc.radial, pc.n, r)

    def f2(r, z):
        return eval_Z2(pc.axial, z) * eval_R2(pc.radial, pc.n, pc.lam, r)

    def f3(r, z):
        return pc.A * f1(r, z)

    def f4(r, z):
        return pc.A * f2(r, z)

    return f1, f2, f3, f4


def assemble(state: SpectralState, axial_variant: int, branch: int, params: PhysicalParams,
             point: CylindricalPoint) -> SpinorSample:
    if point.r <= 0:
        raise AxisDegeneracyError("axis degeneracy: the spinor is assembled for r > 0 only")
    pc = _pieces(state, axial_variant, branch, params)
    z1, z2 = eval_Z1(pc.axial, point.z), eval_Z2(pc.axial, point.z)
    r1, r2 = eval_R1(pc.radial, pc.n, point.r), eval_R2(pc.radial, pc.n, pc.lam, point.r)
    f1, f2 = complex(z1 * r1), complex(z2 * r2)
    scale = 1.0 / math.sqrt(math.sinh(point.r) * math.cosh(point.z))
    return SpinorSample(point, f1, f2, pc.A * f1, pc.A * f2, scale)


def flat_target(variant: int, B: float, m: float, n: int) -> float:
    """Landau value 2 B k that lambda^2 approaches when B is large."""
    return 2 * B * level_index(variant, m, n)


def enumerate_states(B: float, m_values, params: PhysicalParams | None = None) -> list[SpectralState]:
    """Both channels for every admissible m, sorted by lambda^2.

    ``params`` is accepted for symmetry with the assembly functions; the
    transverse spectrum does not depend on the energy or the mass.
    """
    if not B > 0:
        raise ValueError("field strength B must be positive")
    seen = {}
    for m in m_values:
        m = float(half_integer(m))
        for variant in (3, 4):
            try:
                check_m_range(variant, m, B)
            except InadmissibleError:
                continue
            for n, lsq in allowed_levels(variant, B, m):
                seen[(variant, m, n)] = SpectralState(
                    variant, m, n, lsq, True, flat_target(variant, B, m, n))
    return sorted(seen.values(), key=lambda s: (s.lambda_sq, s.variant, s.m, s.n))


def flat_limit_check(B0: float, n: int, m, variant: int, rho: float) -> tuple[float, float, float]:
    """(curved lambda0^2, flat lambda0^2, relative error) with B = B0 rho^2.

    The curved value lambda^2(B0 rho^2, n) / rho^2 is formed in exact
    rational arithmetic from the float inputs, so the relative error is
    free of cancellation even when it is ~1e-7.
    """
    m = half_integer(m)
    check_m_range(variant, float(m), B0 * rho**2)
    b0, r2 = Fraction(B0), Fraction(rho) ** 2
    B = b0 * r2
    k = Fraction(n) if variant == 3 else n - m + Fraction(1, 2)
    if not (k > 0 and B - k > 0):
        raise LevelOutsideWellError(f"level outside well: k={k}, B={float(B)}")
    curved = (2 * B * k - k * k) / r2
    flat = 2 * b0 * k
    return float(curved), float(flat), float(abs(curved - flat) / flat)

