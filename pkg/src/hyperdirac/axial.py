"""Closed-form solutions of the axial (z) equation

    Z1'' + tanh z Z1' + (p^2 + i p tanh z - lambda^2 / cosh^2 z) Z1 = 0

in the hypergeometric form

    Z1 = (e^z / cosh z)^A (e^-z / cosh z)^B F(alpha, beta; gamma; y),
    y = e^z / (2 cosh z) = (1 + tanh z) / 2,

with alpha, beta = +-i lambda + A + B and gamma = 2A + 1/2.  The second
component follows from cosh z (Z1' + i p Z1) = lambda Z2.

``p`` is signed: pass ``-p`` for the branch A M = eps - p.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sc

from .errors import DegenerateSeparationError, InadmissibleError
from .special import HypergeoArgs, hyp2f1, hyp2f1_derivative


class AsymptoticClass(enum.Enum):
    DECAYS = "decays"
    PLANE_WAVE = "plane_wave"


@dataclass(frozen=True)
class AxialSpec:
    variant: int
    A_exp: complex
    B_exp: complex
    hyper: HypergeoArgs
    p: float
    lam: float


def axial_exponents(variant: int, p: float) -> tuple[complex, complex]:
    ip = 1j * p
    table = {
        1: ((1 + ip) / 2, (1 - ip) / 2),
        2: (-ip / 2, ip / 2),
        3: ((1 + ip) / 2, ip / 2),
        4: (-ip / 2, (1 - ip) / 2),
    }
    try:
        return table[variant]
    except KeyError:
        raise InadmissibleError(f"axial variant must be 1..4, got {variant}") from None


def axial_spec(variant: int, p: float, lam: float) -> AxialSpec:
    if lam == 0:
        raise DegenerateSeparationError("degenerate separation: lambda = 0")
    A, B = axial_exponents(variant, p)
    hyper = HypergeoArgs(alpha=1j * lam + A + B, beta=-1j * lam + A + B, gamma=2 * A + 0.5)
    return AxialSpec(variant=variant, A_exp=A, B_exp=B, hyper=hyper, p=float(p), lam=float(lam))


def axial_argument(z):
    """y = e^z / (2 cosh z), evaluated as the logistic function of 2z."""
    return sc.expit(2.0 * np.asarray(z, dtype=float))


def _prefactor(spec: AxialSpec, z):
    # log(e^z/cosh z) = log(2y), log(e^-z/cosh z) = log(2(1-y))
    z2 = 2.0 * z
    log_up = math.log(2.0) + sc.log_expit(z2)
    log_dn = math.log(2.0) + sc.log_expit(-z2)
    return np.exp(spec.A_exp * log_up + spec.B_exp * log_dn)


def _scalar_or_array(out):
    return complex(out) if np.ndim(out) == 0 else out


def eval_Z1(spec: AxialSpec, z):
    za = np.asarray(z, dtype=float)
    h = spec.hyper
    F = hyp2f1(h.alpha, h.beta, h.gamma, axial_argument(za), complement=axial_argument(-za))
    return _scalar_or_array(_prefactor(spec, za) * F)


def eval_Z1_prime(spec: AxialSpec, z):
    """dZ1/dz from the product rule and dF/dy = (alpha beta/gamma) F(alpha+1, beta+1; gamma+1; y)."""
    za = np.asarray(z, dtype=float)
    h = spec.hyper
    y = axial_argument(za)
    w = axial_argument(-za)
    pre = _prefactor(spec, za)
    th = np.tanh(za)
    dlog_pre = spec.A_exp * (1.0 - th) - spec.B_exp * (1.0 + th)
    F = hyp2f1(h.alpha, h.beta, h.gamma, y, complement=w)
    dF = hyp2f1_derivative(h.alpha, h.beta, h.gamma, y, complement=w)
    dy = 2.0 * y * w
    return _scalar_or_array(pre * (dlog_pre * F + dF * dy))


def eval_Z2(spec: AxialSpec, z):
    """Z2 = cosh z (Z1' + i p Z1) / lambda."""
    za = np.asarray(z, dtype=float)
    out = np.cosh(za) * (eval_Z1_prime(spec, za) + 1j * spec.p * eval_Z1(spec, za)) / spec.lam
    return _scalar_or_array(out)


# Paper-level reading: asymptotics of the prefactor (e^z/cosh z)^A (e^-z/cosh z)^B
# alone, i.e. with F replaced by its value at y -> 0 or y -> 1.
_PREFACTOR_TABLE = {
    (1, -1): AsymptoticClass.DECAYS,
    (1, 1): AsymptoticClass.DECAYS,
    (2, -1): AsymptoticClass.PLANE_WAVE,
    (2, 1): AsymptoticClass.PLANE_WAVE,
    (3, -1): AsymptoticClass.DECAYS,
    (3, 1): AsymptoticClass.PLANE_WAVE,
    (4, -1): AsymptoticClass.PLANE_WAVE,
    (4, 1): AsymptoticClass.DECAYS,
}


def axial_asymptote(variant: int, direction: int, *, prefactor_only: bool = False) -> AsymptoticClass:
    """Asymptotic class of Z1 as z -> direction * infinity.

    At z -> -infinity the argument y -> 0 and F -> 1, so the exponent A
    alone decides: Re A = 1/2 decays, Re A = 0 is a plane wave.

    At z -> +infinity the argument y -> 1, where F is singular whenever
    Re(gamma - alpha - beta) < 0 (variants 1 and 4).  The singular part
    (1 - y)^(gamma - alpha - beta) cancels the decaying prefactor exactly,
    and its coefficient Gamma(gamma) Gamma(alpha+beta-gamma) / (Gamma(alpha)
    Gamma(beta)) never vanishes for real lambda.  Every variant is
    therefore a plane wave at +infinity.

    ``prefactor_only=True`` returns the prefactor-only reading instead,
    which treats F as 1 at both ends.
    """
    if variant not in (1, 2, 3, 4):
        raise InadmissibleError(f"axial variant must be 1..4, got {variant}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if prefactor_only:
        return _PREFACTOR_TABLE[(variant, direction)]
    if direction == 1:
        return AsymptoticClass.PLANE_WAVE
    A, _ = axial_exponents(variant, 1.0)
    return AsymptoticClass.DECAYS if A.real > 0 else AsymptoticClass.PLANE_WAVE
