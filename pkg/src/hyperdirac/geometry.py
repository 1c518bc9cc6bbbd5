"""Cylindrical coordinates on the hyperbolic space H3 (curvature radius 1).

    dS^2 = dt^2 - cosh^2 z (dr^2 + sinh^2 r dphi^2) - dz^2

Coordinate index order everywhere is (t, r, phi, z) = (0, 1, 2, 3).
Christoffel arrays are indexed ``gamma[upper, lower, lower]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AxisDegeneracyError

T, R, PHI, Z = range(4)
MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class CylindricalPoint:
    t: float = 0.0
    r: float = 0.0
    phi: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        if not self.r >= 0.0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        object.__setattr__(self, "phi", math.fmod(self.phi, 2 * math.pi) % (2 * math.pi))


@dataclass(frozen=True)
class EmbeddingVector:
    u0: float
    u1: float
    u2: float
    u3: float

    def minkowski_norm(self) -> float:
        return self.u0**2 - self.u1**2 - self.u2**2 - self.u3**2


@dataclass(frozen=True)
class MetricComponents:
    g_tt: float
    g_rr: float
    g_phiphi: float
    g_zz: float

    def as_matrix(self) -> np.ndarray:
        return np.diag([self.g_tt, self.g_rr, self.g_phiphi, self.g_zz])


@dataclass(frozen=True)
class ConnectionData:
    christoffel: np.ndarray  # shape (4, 4, 4), [upper, lower, lower]
    gamma_122: float
    gamma_311: float
    gamma_322: float


def embed(point: CylindricalPoint) -> EmbeddingVector:
    """Point on the hyperboloid u0^2 - u1^2 - u2^2 - u3^2 = 1."""
    chz = math.cosh(point.z)
    shr = math.sinh(point.r)
    return EmbeddingVector(
        u0=chz * math.cosh(point.r),
        u1=chz * shr * math.cos(point.phi),
        u2=chz * shr * math.sin(point.phi),
        u3=math.sinh(point.z),
    )


def metric_at(point: CylindricalPoint) -> MetricComponents:
    ch2 = math.cosh(point.z) ** 2
    return MetricComponents(g_tt=1.0, g_rr=-ch2, g_phiphi=-ch2 * math.sinh(point.r) ** 2, g_zz=-1.0)


def tetrad_at(point: CylindricalPoint) -> np.ndarray:
    """Diagonal legs e_(a)^a for a = t, r, phi, z."""
    if point.r == 0.0:
        raise AxisDegeneracyError("axis degeneracy: phi leg 1/(cosh z sinh r) undefined at r = 0")
    chz = math.cosh(point.z)
    return np.array([1.0, 1.0 / chz, 1.0 / (chz * math.sinh(point.r)), 1.0])


def christoffel_at(point: CylindricalPoint) -> ConnectionData:
    if point.r == 0.0:
        raise AxisDegeneracyError("axis degeneracy: coth r undefined at r = 0")
    r, z = point.r, point.z
    shr, chr_ = math.sinh(r), math.cosh(r)
    shz, chz, thz = math.sinh(z), math.cosh(z), math.tanh(z)
    cthr = chr_ / shr

    g = np.zeros((4, 4, 4))
    g[R, R, Z] = g[R, Z, R] = thz
    g[R, PHI, PHI] = -shr * chr_
    g[PHI, R, PHI] = g[PHI, PHI, R] = cthr
    g[PHI, PHI, Z] = g[PHI, Z, PHI] = thz
    g[Z, R, R] = -chz * shz
    g[Z, PHI, PHI] = -shz * chz * shr**2
    return ConnectionData(christoffel=g, gamma_122=1.0 / (chz * math.tanh(r)), gamma_311=thz, gamma_322=thz)


def vector_potential(point: CylindricalPoint, B: float) -> float:
    """A_phi = -2 B sinh^2(r/2) = -B (cosh r - 1)."""
    return -2.0 * B * math.sinh(point.r / 2.0) ** 2


# ---------------------------------------------------------------------------
# numerical cross-checks (used by the verification suite)


def metric_matrix(t: float, r: float, phi: float, z: float) -> np.ndarray:
    return metric_at(CylindricalPoint(t, abs(r), phi, z)).as_matrix()


def christoffel_from_metric(point: CylindricalPoint, step: float = 1e-5) -> np.ndarray:
    """Gamma^a_bc = 1/2 g^ad (d_b g_dc + d_c g_db - d_d g_bc) by central differences."""
    x0 = np.array([point.t, point.r, point.phi, point.z])
    dg = np.zeros((4, 4, 4))  # dg[k] = d_k g
    for k in range(4):
        e = np.zeros(4)
        e[k] = step
        dg[k] = (metric_matrix(*(x0 + e)) - metric_matrix(*(x0 - e))) / (2 * step)
    ginv = np.linalg.inv(metric_matrix(*x0))
    lowered = 0.5 * (np.einsum("bdc->dbc", dg) + np.einsum("cdb->dbc", dg) - dg)
    return np.einsum("ad,dbc->abc", ginv, lowered)


def tetrad_gram(point: CylindricalPoint) -> np.ndarray:
    """e_(a)^mu e_(b)^nu g_mu_nu, which must equal diag(1, -1, -1, -1)."""
    e = np.diag(tetrad_at(point))
    return e @ metric_at(point).as_matrix() @ e.T


def ricci_rotation_from_tetrad(point: CylindricalPoint) -> np.ndarray:
    """gamma_abc = -e_(a)beta;alpha e_(b)^beta e_(c)^alpha from the tetrad and Christoffels."""
    g = metric_at(point).as_matrix()
    gam = christoffel_at(point).christoffel
    up = np.diag(tetrad_at(point))  # up[a, beta]
    low = up @ g  # e_(a) beta

    # d_alpha e_(a)beta; only e_(r) r = -cosh z and e_(phi) phi = -cosh z sinh r vary
    r, z = point.r, point.z
    d = np.zeros((4, 4, 4))  # d[a, beta, alpha]
    d[R, R, Z] = -math.sinh(z)
    d[PHI, PHI, R] = -math.cosh(z) * math.cosh(r)
    d[PHI, PHI, Z] = -math.sinh(z) * math.sinh(r)
    cov = d - np.einsum("sab,cs->cba", gam, low)  # e_(c)beta;alpha with [c, beta, alpha]
    return -np.einsum("aBA,bB,cA->abc", cov, up, up)
