"""Verification suites: closed forms against the independent oracles.

Each suite returns a list of :class:`Check` rows.  A check passes when
its value is strictly below its tolerance; residual values are the
relative defects of :class:`~hyperdirac.oracle.ResidualReport`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import axial, geometry, oracle, radial, spectrum
from .errors import InadmissibleError
from .separation import PhysicalParams, half_integer

TOLERANCES = {
    "hyperboloid": 1e-12,
    "tetrad": 1e-12,
    "christoffel": 1e-6,
    "axial_ode": 1e-6,
    "axial_closure": 1e-8,
    "radial_ode": 1e-6,
    "radial_closure": 1e-8,
    "dirac": 1e-6,
    "shooting": 1e-6,
}

SUITES = ("geometry", "axial", "radial", "dirac", "shooting")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    value: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.value < self.tol


@dataclass(frozen=True)
class VerifyConfig:
    B: float = 5.0
    m_values: tuple = ("1/2",)
    tol: float | None = None  # overrides every tolerance when set
    seed: int = 0
    geometry_points: int = 200
    axial_pairs: int = 5
    epsilon: float = 5.0
    M: float = 3.0
    dirac_states: int = 6
    shooting_rows: list = field(default_factory=list, compare=False)

    def tolerance(self, key: str) -> float:
        return self.tol if self.tol is not None else TOLERANCES[key]


def geometry_suite(cfg: VerifyConfig) -> list[Check]:
    rng = np.random.default_rng(cfg.seed)
    norm = gram = chris = 0.0
    for _ in range(cfg.geometry_points):
        pt = geometry.CylindricalPoint(
            rng.uniform(-3, 3), rng.uniform(0.05, 2), rng.uniform(0, 2 * math.pi), rng.uniform(-2, 2))
        norm = max(norm, abs(geometry.embed(pt).minkowski_norm() - 1.0))
        gram = max(gram, float(np.max(np.abs(geometry.tetrad_gram(pt) - geometry.MINKOWSKI))))
        fd = geometry.christoffel_from_metric(pt)
        chris = max(chris, float(np.max(np.abs(fd - geometry.christoffel_at(pt).christoffel))))
    return [
        Check("geometry", "hyperboloid constraint", norm, cfg.tolerance("hyperboloid")),
        Check("geometry", "tetrad reproduces metric", gram, cfg.tolerance("tetrad")),
        Check("geometry", "christoffel vs finite differences", chris, cfg.tolerance("christoffel")),
    ]


def axial_suite(cfg: VerifyConfig, grid: oracle.Grid1D = oracle.Grid1D(-5.0, 5.0, 201)) -> list[Check]:
    rng = np.random.default_rng(cfg.seed)
    pairs = rng.uniform(0.5, 5.0, size=(cfg.axial_pairs, 2))
    out = []
    for variant in (1, 2, 3, 4):
        ode = closure = 0.0
        for p, lam in pairs:
            spec = axial.axial_spec(variant, p, lam)
            z1 = lambda z, s=spec: axial.eval_Z1(s, z)
            z2 = lambda z, s=spec: axial.eval_Z2(s, z)
            ode = max(ode, oracle.residual_axial_ode(z1, p, lam, grid).relative)
            rep = oracle.residual_first_order(z1, z2, "axial", {"p": p, "lam": lam}, grid)
            closure = max(closure, rep.relative)
        out.append(Check("axial", f"variant {variant} ode", ode, cfg.tolerance("axial_ode")))
        out.append(Check("axial", f"variant {variant} closure", closure, cfg.tolerance("axial_closure")))
    return out


def radial_suite(cfg: VerifyConfig, grid: oracle.Grid1D = oracle.Grid1D(0.1, 8.0, 400)) -> list[Check]:
    out = []
    for st in spectrum.enumerate_states(cfg.B, cfg.m_values):
        spec = radial.spec_for_state(st, cfg.B)
        r1 = lambda r, s=spec, n=st.n: radial.eval_R1(s, n, r)
        r2 = lambda r, s=spec, n=st.n, lam=st.lam: radial.eval_R2(s, n, lam, r)
        label = f"variant {st.variant} m={st.m:g} n={st.n}"
        ode = oracle.residual_radial_ode(r1, st.m, cfg.B, st.lambda_sq, grid)
        clo = oracle.residual_first_order(r1, r2, "radial", {"m": st.m, "B": cfg.B, "lam": st.lam}, grid)
        out.append(Check("radial", f"{label} ode", ode.relative, cfg.tolerance("radial_ode")))
        out.append(Check("radial", f"{label} closure", clo.relative, cfg.tolerance("radial_closure")))
    return out


def dirac_suite(cfg: VerifyConfig) -> list[Check]:
    params = PhysicalParams(cfg.B, cfg.M, cfg.epsilon)
    gr, gz = oracle.Grid1D(0.2, 6.0, 40), oracle.Grid1D(-4.0, 4.0, 40)
    states = spectrum.enumerate_states(cfg.B, cfg.m_values)[: cfg.dirac_states]
    out = []
    for i, st in enumerate(states):
        variant, branch = 1 + i % 4, 1 if i % 2 == 0 else -1
        fields = spectrum.assemble_fields(st, variant, branch, params)
        rep = oracle.residual_dirac_system(fields, cfg.epsilon, cfg.M, st.m, cfg.B, gr, gz)
        name = f"radial {st.variant} m={st.m:g} n={st.n} axial {variant} branch {branch:+d}"
        out.append(Check("dirac", name, rep.relative, cfg.tolerance("dirac")))
    return out


def shooting_comparison(B: float, m) -> list[tuple[int, float, float | None]]:
    """Rows (variant, formula lambda^2, shooting lambda^2 or None) for every admissible channel."""
    m = float(half_integer(m))
    rows = []
    for variant in (3, 4):
        try:
            levels = radial.allowed_levels(variant, B, m)
        except InadmissibleError:
            continue
        C = m / 2 if variant == 3 else (1 - m) / 2
        shot = oracle.shoot_radial_eigenvalues(B, m, B * B, C=C)
        for i in range(max(len(levels), len(shot))):
            formula = levels[i][1] if i < len(levels) else math.nan
            rows.append((variant, formula, shot[i] if i < len(shot) else None))
    return rows


def shooting_suite(cfg: VerifyConfig) -> list[Check]:
    out = []
    for m in cfg.m_values:
        rows = shooting_comparison(cfg.B, m)
        cfg.shooting_rows.extend((float(half_integer(m)),) + row for row in rows)
        for variant in sorted({r[0] for r in rows}):
            worst = 0.0
            for _, formula, shot in (r for r in rows if r[0] == variant):
                if shot is None or math.isnan(formula):
                    worst = math.inf  # count mismatch
                else:
                    worst = max(worst, abs(shot - formula) / formula)
            name = f"variant {variant} m={float(half_integer(m)):g} eigenvalues"
            out.append(Check("shooting", name, worst, cfg.tolerance("shooting")))
    return out


_RUNNERS = {
    "geometry": geometry_suite,
    "axial": axial_suite,
    "radial": radial_suite,
    "dirac": dirac_suite,
    "shooting": shooting_suite,
}


def run(suite: str, cfg: VerifyConfig) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    checks = []
    for name in names:
        checks.extend(_RUNNERS[name](cfg))
    return checks
