"""Independent numerical checks: finite-difference residuals and a shooting eigenvalue solver.

Nothing here touches the hypergeometric machinery.  Residual functions
take plain callables (vectorized over numpy arrays) and physical
parameters; the shooting solver integrates the radial equation directly.

Residual normalization
----------------------
Closed-form solutions carry no normalization, so an absolute defect is
meaningless on its own (bound radial states are ~1e-30 at r = 8, axial
states reach ~1e5).  Every :class:`ResidualReport` therefore records the
absolute defect ``max_abs`` together with ``scale``, the grid maximum of
the summed magnitudes of the individual terms of the equation.
``relative = max_abs / scale`` is the quantity compared to tolerances.

Finite-difference step
----------------------
Fourth-order central stencils are used throughout.  Round-off in a
second-derivative stencil grows like eps / h^2, so at h = 1e-4 the noise
floor (~1e-7 of the scale, times the conditioning of the evaluated
function) sits on top of the 1e-6 tolerance.  The default step is
``DEFAULT_STEP = 1e-3``, where truncation (~h^4) and round-off are both
well below tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

DEFAULT_STEP = 1e-3


@dataclass(frozen=True)
class Grid1D:
    lo: float
    hi: float
    count: int

    def __post_init__(self) -> None:
        if self.count < 16:
            raise ValueError("grid needs at least 16 nodes")
        if not self.hi > self.lo:
            raise ValueError("grid needs hi > lo")

    @property
    def step(self) -> float:
        return (self.hi - self.lo) / (self.count - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)


@dataclass(frozen=True)
class ResidualReport:
    max_abs: float
    argmax_location: float | tuple[float, float]
    grid: Grid1D | tuple[Grid1D, Grid1D]
    scale: float = 1.0
    label: str = field(default="", compare=False)

    @property
    def relative(self) -> float:
        return self.max_abs / self.scale if self.scale > 0 else math.inf

    def passes(self, tol: float) -> bool:
        return self.relative < tol


def _stacked(f: Callable, x, shifts):
    # one vectorized call over all shifted copies of x
    x = np.asarray(x, dtype=float)
    vals = np.asarray(f(np.stack([x + s for s in shifts])))
    return [vals[i] for i in range(len(shifts))]


def d1(f: Callable, x, h: float):
    """Fourth-order central first derivative."""
    a, b, c, d = _stacked(f, x, (-2 * h, -h, h, 2 * h))
    return (a - 8 * b + 8 * c - d) / (12 * h)


def d2(f: Callable, x, h: float):
    """Fourth-order central second derivative."""
    a, b, c, d, e = _stacked(f, x, (-2 * h, -h, 0.0, h, 2 * h))
    return (-a + 16 * b - 30 * c + 16 * d - e) / (12 * h * h)


def _report(defect, terms, nodes, grid, label="") -> ResidualReport:
    defect = np.abs(defect)
    scale = np.max(sum(np.abs(t) for t in terms))
    i = int(np.argmax(defect))
    return ResidualReport(float(defect[i]), float(nodes[i]), grid, float(scale), label)


def residual_axial_ode(Z1: Callable, p: float, lam: float, grid: Grid1D, *,
                       step: float = DEFAULT_STEP) -> ResidualReport:
    """Z1'' + tanh z Z1' + (p^2 + i p tanh z - lambda^2/cosh^2 z) Z1."""
    z = grid.nodes()
    th = np.tanh(z)
    terms = (d2(Z1, z, step), th * d1(Z1, z, step),
             (p * p + 1j * p * th - lam * lam / np.cosh(z) ** 2) * Z1(z))
    return _report(sum(terms), terms, z, grid, "axial ode")


def radial_potential(r, m: float, B: float, lambda_sq: float):
    """[m cosh r + B(cosh r - 1) - (m - B(cosh r - 1))^2] / sinh^2 r + lambda^2."""
    ch, sh = np.cosh(r), np.sinh(r)
    s = 2.0 * np.sinh(r / 2) ** 2
    return (m * ch + B * s - (m - B * s) ** 2) / sh**2 + lambda_sq


def radial_potential_mu_form(r, m: float, B: float, lambda_sq: float):
    """-(d mu/dr + mu^2) + lambda^2 with mu = [m - B(cosh r - 1)] / sinh r, by direct differentiation."""
    sh, ch = np.sinh(r), np.cosh(r)
    num = m - B * (ch - 1)
    mu = num / sh
    dmu = (-B * sh * sh - num * ch) / sh**2
    return -(dmu + mu * mu) + lambda_sq


def residual_radial_ode(R1: Callable, m: float, B: float, lambda_sq: float, grid: Grid1D, *,
                        step: float = DEFAULT_STEP) -> ResidualReport:
    if grid.lo - 2 * step <= 0:
        raise ValueError("radial grid must stay off the axis (grid.lo > 2 * step)")
    r = grid.nodes()
    terms = (d2(R1, r, step), radial_potential(r, m, B, lambda_sq) * R1(r))
    return _report(sum(terms), terms, r, grid, "radial ode")


def _mu(r, m, B):
    return (m - B * (np.cosh(r) - 1)) / np.sinh(r)


def residual_first_order(f: Callable, g: Callable, relations: str, params: dict, grid: Grid1D, *,
                         step: float = DEFAULT_STEP) -> ResidualReport:
    """Both relations of a separated first-order pair.

    ``relations="axial"``, params ``p``, ``lam``:
        cosh z (f' + i p f) - lam g,   cosh z (g' - i p g) - lam f
    ``relations="radial"``, params ``m``, ``B``, ``lam``:
        (d/dr + mu) g + lam f,   (d/dr - mu) f - lam g
    """
    x = grid.nodes()
    lam = params["lam"]
    fx, gx, dfx, dgx = f(x), g(x), d1(f, x, step), d1(g, x, step)
    if relations == "axial":
        p, ch = params["p"], np.cosh(x)
        first = (ch * dfx, ch * 1j * p * fx, -lam * gx)
        second = (ch * dgx, -ch * 1j * p * gx, -lam * fx)
    elif relations == "radial":
        if grid.lo - 2 * step <= 0:
            raise ValueError("radial grid must stay off the axis")
        mu = _mu(x, params["m"], params["B"])
        first = (dgx, mu * gx, lam * fx)
        second = (dfx, -mu * fx, -lam * gx)
    else:
        raise ValueError(f"unknown relations {relations!r}")
    defect = np.maximum(np.abs(sum(first)), np.abs(sum(second)))
    return _report(defect, first + second, x, grid, f"{relations} first-order")


def residual_dirac_system(f: tuple[Callable, Callable, Callable, Callable], epsilon: float, M: float,
                          m: float, B: float, grid_r: Grid1D, grid_z: Grid1D, *,
                          step: float = DEFAULT_STEP) -> ResidualReport:
    """All four coupled first-order equations for f_a(r, z) on the (r, z) grid.

        (d_r + mu) f4 + ch z d_z f3 + i ch z (eps f3 - M f1) = 0
        (d_r - mu) f3 - ch z d_z f4 + i ch z (eps f4 - M f2) = 0
        (d_r + mu) f2 + ch z d_z f1 - i ch z (eps f1 - M f3) = 0
        (d_r - mu) f1 - ch z d_z f2 - i ch z (eps f2 - M f4) = 0
    """
    if grid_r.lo - 2 * step <= 0:
        raise ValueError("radial grid must stay off the axis")
    r, z = np.meshgrid(grid_r.nodes(), grid_z.nodes(), indexing="ij")
    ch = np.cosh(z)
    mu = _mu(r, m, B)
    val = [fa(r, z) for fa in f]
    dr = [d1(lambda t, fa=fa: fa(t, z), r, step) for fa in f]
    dz = [d1(lambda t, fa=fa: fa(r, t), z, step) for fa in f]
    f1, f2, f3, f4 = val
    eqs = (
        (dr[3], mu * f4, ch * dz[2], 1j * ch * epsilon * f3, -1j * ch * M * f1),
        (dr[2], -mu * f3, -ch * dz[3], 1j * ch * epsilon * f4, -1j * ch * M * f2),
        (dr[1], mu * f2, ch * dz[0], -1j * ch * epsilon * f1, 1j * ch * M * f3),
        (dr[0], -mu * f1, -ch * dz[1], -1j * ch * epsilon * f2, 1j * ch * M * f4),
    )
    defect = np.max([np.abs(sum(e)) for e in eqs], axis=0)
    scale = max(float(np.max(sum(np.abs(t) for t in e))) for e in eqs)
    i = np.unravel_index(int(np.argmax(defect)), defect.shape)
    return ResidualReport(float(defect[i]), (float(r[i]), float(z[i])), (grid_r, grid_z), scale, "dirac system")


# ---------------------------------------------------------------------------
# shooting
#
# The radial equation R'' + V(r) R = 0 is integrated in xi = ln(cosh r - 1),
# where it becomes
#     R_xixi - R_xi / (s + 2) + Q(s) R = 0,   s = e^xi = cosh r - 1,
#     Q(s) = lambda^2 s/(s+2) + [m(1+s) + B s - (m - B s)^2] / (s+2)^2,
# with bounded coefficients on the whole half-line: the axis is xi -> -inf
# and solutions behave there like e^{C xi}, C = m/2 or (1-m)/2.


def indicial_exponents(m: float) -> tuple[float, float]:
    return m / 2, (1 - m) / 2


def frobenius_start(C: float, m: float, B: float, lambda_sq: float, s: float, terms: int = 12):
    """R and dR/dxi at s = cosh r - 1 from the Frobenius series R = sum c_k s^(k+C)."""
    u0 = m - m * m
    u1 = 2 * lambda_sq + m + B + 2 * m * B
    u2 = lambda_sq - B * B
    lambda_sq = np.asarray(lambda_sq, dtype=float)
    c = [np.ones_like(lambda_sq)]
    for j in range(1, terms):
        e = j + C
        ind = 4 * e * (e - 1) + 2 * e + u0
        e1 = e - 1
        acc = (4 * e1 * (e1 - 1) + 3 * e1 + u1) * c[j - 1]
        if j >= 2:
            e2 = e - 2
            acc = acc + (e2 * (e2 - 1) + e2 + u2) * c[j - 2]
        c.append(-acc / ind)
    value = sum(ck * s ** (k + C) for k, ck in enumerate(c))
    slope = sum(ck * (k + C) * s ** (k + C) for k, ck in enumerate(c))
    return value, slope


def _xi(r):
    return np.log(2.0 * np.sinh(np.asarray(r, dtype=float) / 2) ** 2)


def shooting_mismatch(lambda_sq, B: float, m: float, grid: Grid1D, *, C: float | None = None):
    """Boundary mismatch R'(r_hi) + kappa R(r_hi), kappa = sqrt(B^2 - lambda^2), per lambda^2.

    ``grid`` spans r in [lo, hi]; ``count`` nodes are laid out uniformly in
    xi and integrated with classical RK4.  The solution is renormalized by
    positive factors along the way, so only the sign of the result (and its
    zeros) is meaningful.
    """
    lam2 = np.atleast_1d(np.asarray(lambda_sq, dtype=float))
    if C is None:
        C = max(indicial_exponents(m))
    xi = np.linspace(_xi(grid.lo), _xi(grid.hi), grid.count)
    h = xi[1] - xi[0]

    def coeffs(x):
        s = np.exp(x)
        w = s / (s + 2)
        q0 = (m * (1 + s) + B * s - (m - B * s) ** 2) / (s + 2) ** 2
        return 1.0 / (s + 2), w, q0

    # coefficients at nodes and midpoints, shared by every lambda^2
    k_node = coeffs(xi)
    k_mid = coeffs(xi[:-1] + h / 2)

    y, dy = frobenius_start(C, m, B, lam2, math.exp(xi[0]))
    norm = np.maximum(np.abs(y), np.abs(dy))
    y, dy = y / norm, dy / norm

    def rhs(y, dy, a, w, q0):
        return dy, a * dy - (lam2 * w + q0) * y

    for i in range(grid.count - 1):
        a0, w0, q00 = k_node[0][i], k_node[1][i], k_node[2][i]
        am, wm, q0m = k_mid[0][i], k_mid[1][i], k_mid[2][i]
        a1, w1, q01 = k_node[0][i + 1], k_node[1][i + 1], k_node[2][i + 1]
        k1y, k1d = rhs(y, dy, a0, w0, q00)
        k2y, k2d = rhs(y + h / 2 * k1y, dy + h / 2 * k1d, am, wm, q0m)
        k3y, k3d = rhs(y + h / 2 * k2y, dy + h / 2 * k2d, am, wm, q0m)
        k4y, k4d = rhs(y + h * k3y, dy + h * k3d, a1, w1, q01)
        y = y + h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y)
        dy = dy + h / 6 * (k1d + 2 * k2d + 2 * k3d + k4d)
        if i % 16 == 15:
            norm = np.maximum(np.abs(y), np.abs(dy))
            y, dy = y / norm, dy / norm

    r_hi = grid.hi
    dxi_dr = 1.0 / math.tanh(r_hi / 2)
    kappa = np.sqrt(np.maximum(B * B - lam2, 0.0))
    return dy * dxi_dr + kappa * y


def shoot_radial_eigenvalues(B: float, m: float, lambda_sq_ceiling: float,
                             grid: Grid1D = Grid1D(0.02, 20.0, 4001), *,
                             C: float | None = None, scan_step: float | None = None,
                             tol: float = 1e-9, sections: int = 16) -> list[float]:
    """Bound-state values of lambda^2 in (0, min(ceiling, B^2)) by shooting.

    The start at the axis uses the indicial exponent ``C`` (default: the
    regular one, max(m/2, (1-m)/2)).  lambda^2 is scanned in steps of
    ``scan_step`` (default min(0.25, B/20)); every sign change of the
    mismatch is refined by multisection, i.e. bisection generalized to
    ``sections`` equal sub-intervals per sweep, until the bracket is
    narrower than ``tol``.  lambda^2 = 0 is excluded from the scan.
    """
    if not 0 < grid.lo <= 0.05:
        raise ValueError("shooting grid must start in (0, 0.05]")
    if grid.hi < 12:
        raise ValueError("shooting grid must reach r >= 12")
    top = min(lambda_sq_ceiling, B * B)
    if scan_step is None:
        scan_step = min(0.25, B / 20)
    if top <= scan_step:
        return []
    # Stay clear of the continuum edge, where kappa -> 0 and the mismatch loses its sign information.
    upper = top - min(scan_step, 1e-3 * top) if top == B * B else top
    scan = np.arange(scan_step, upper, scan_step)
    if scan.size < 2:
        return []
    vals = shooting_mismatch(scan, B, m, grid, C=C)
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    lo, hi = scan[idx], scan[idx + 1]
    flo = vals[idx]
    while lo.size and np.max(hi - lo) > tol:
        frac = np.linspace(0, 1, sections + 1)[1:-1]
        pts = lo[:, None] + (hi - lo)[:, None] * frac[None, :]
        fp = shooting_mismatch(pts.ravel(), B, m, grid, C=C).reshape(pts.shape)
        allp = np.concatenate([lo[:, None], pts, hi[:, None]], axis=1)
        allf = np.concatenate([flo[:, None], fp], axis=1)
        # first sub-interval where the sign flips; the last one is implied
        flips = np.sign(allf[:, :-1]) * np.sign(allf[:, 1:]) <= 0
        j = np.where(flips.any(axis=1), flips.argmax(axis=1), sections - 1)
        rows = np.arange(lo.size)
        lo, hi = allp[rows, j], allp[rows, j + 1]
        flo = allf[rows, j]
    return [float(v) for v in 0.5 * (lo + hi)]
