import math

import numpy as np
import pytest

from hyperdirac.axial import axial_spec, eval_Z1, eval_Z2
from hyperdirac.oracle import (
    Grid1D,
    d1,
    d2,
    radial_potential,
    radial_potential_mu_form,
    residual_axial_ode,
    residual_dirac_system,
    residual_first_order,
    residual_radial_ode,
    shoot_radial_eigenvalues,
)
from hyperdirac.radial import eval_R1, eval_R2, radial_spec
from hyperdirac.separation import PhysicalParams
from hyperdirac.spectrum import assemble_fields
from hyperdirac.radial import spectral_state


def test_grid():
    g = Grid1D(0.0, 1.5, 16)
    assert g.step == pytest.approx(0.1) and g.nodes()[-1] == 1.5
    with pytest.raises(ValueError):
        Grid1D(0.0, 1.0, 15)
    with pytest.raises(ValueError):
        Grid1D(1.0, 1.0, 20)


def test_stencils_are_fourth_order():
    f, df, ddf = np.sin, np.cos, lambda x: -np.sin(x)
    x = np.linspace(0, 3, 31)
    e1 = [np.max(np.abs(d1(f, x, h) - df(x))) for h in (0.1, 0.05)]
    e2 = [np.max(np.abs(d2(f, x, h) - ddf(x))) for h in (0.1, 0.05)]
    assert math.log2(e1[0] / e1[1]) == pytest.approx(4, abs=0.3)
    assert math.log2(e2[0] / e2[1]) == pytest.approx(4, abs=0.3)


def test_constant_is_not_a_solution():
    rep = residual_axial_ode(lambda z: np.ones_like(z, dtype=complex), 1.0, 0.0, Grid1D(-1e-3, 1e-3, 17))
    assert rep.max_abs == pytest.approx(1.0, abs=1e-6)


def test_residual_convergence_order():
    s = axial_spec(2, 1.5, 2.0)
    z1 = lambda z: eval_Z1(s, z)
    grid = Grid1D(-2, 2, 41)
    steps = (0.1, 0.05, 0.025)
    errs = [residual_axial_ode(z1, 1.5, 2.0, grid, step=h).max_abs for h in steps]
    slopes = [math.log2(a / b) for a, b in zip(errs, errs[1:])]
    assert all(abs(sl - 4) < 0.3 for sl in slopes)


def test_zero_second_component():
    p, lam = 1.2, 0.8
    s = axial_spec(1, p, lam)
    z1 = lambda z: eval_Z1(s, z)
    grid = Grid1D(-3, 3, 61)
    rep = residual_first_order(z1, lambda z: np.zeros_like(z, dtype=complex), "axial", {"p": p, "lam": lam}, grid)
    z = grid.nodes()
    expected = np.max(np.maximum(np.abs(lam * eval_Z2(s, z)), np.abs(lam * eval_Z1(s, z))))
    assert rep.max_abs == pytest.approx(expected, rel=1e-6)


def test_linearity_of_defect():
    s = axial_spec(3, 1.0, 1.5)
    bad = lambda z: eval_Z1(s, z) * (1 + 0.1 * np.sin(z))
    grid = Grid1D(-3, 3, 61)
    a = residual_first_order(bad, lambda z: eval_Z2(s, z), "axial", {"p": 1.0, "lam": 1.5}, grid)
    b = residual_first_order(lambda z: 3 * bad(z), lambda z: 3 * eval_Z2(s, z), "axial", {"p": 1.0, "lam": 1.5}, grid)
    assert b.max_abs == pytest.approx(3 * a.max_abs, rel=1e-12)
    assert b.relative == pytest.approx(a.relative, rel=1e-12)


def test_two_forms_of_radial_potential_agree():
    r = np.linspace(0.1, 8, 200)
    for m, B, lsq in ((0.5, 5.0, 9.0), (-1.5, 2.0, 1.0), (2.5, 10.0, 30.0)):
        a, b = radial_potential(r, m, B, lsq), radial_potential_mu_form(r, m, B, lsq)
        assert np.max(np.abs(a - b)) < 1e-12 * max(1.0, np.max(np.abs(a)))


def test_radial_grid_must_avoid_axis():
    spec = radial_spec(3, "1/2", 5, 9)
    with pytest.raises(ValueError):
        residual_radial_ode(lambda r: eval_R1(spec, 1, r), 0.5, 5, 9, Grid1D(0.0, 1.0, 20))


def test_dirac_residual_detects_wrong_constant():
    params = PhysicalParams(5.0, 3.0, 5.0)
    state = spectral_state(3, 5.0, "1/2", 1)
    f1, f2, f3, f4 = assemble_fields(state, 1, 1, params)
    gr, gz = Grid1D(0.2, 6, 20), Grid1D(-4, 4, 20)
    good = residual_dirac_system((f1, f2, f3, f4), 5.0, 3.0, 0.5, 5.0, gr, gz)
    assert good.relative < 1e-6
    wrong = (f1, f2, lambda r, z: 2.0 * f1(r, z), lambda r, z: 2.0 * f2(r, z))  # A = 2 is not (5 +- 4)/3
    assert residual_dirac_system(wrong, 5.0, 3.0, 0.5, 5.0, gr, gz).relative > 1e-2


@pytest.mark.xfail(strict=True, reason="with M = 0 the restriction f3 = f1 forces eps = 0 (README: known deviations)")
def test_massless_unit_constant():
    eps, B, lam = 2.0, 5.0, 3.0
    ax, rad = axial_spec(1, eps, lam), radial_spec(3, "1/2", B, 9.0)
    f1 = lambda r, z: eval_Z1(ax, z) * eval_R1(rad, 1, r)
    f2 = lambda r, z: eval_Z2(ax, z) * eval_R2(rad, 1, lam, r)
    rep = residual_dirac_system((f1, f2, f1, f2), eps, 0.0, 0.5, B, Grid1D(0.2, 6, 20), Grid1D(-4, 4, 20))
    assert rep.relative < 1e-6


def test_shooting_reference_set():
    values = shoot_radial_eigenvalues(5.0, 0.5, 25.0)
    assert len(values) == 4
    np.testing.assert_allclose(values, [9, 16, 21, 24], rtol=1e-6)


def test_shooting_empty_spectrum():
    assert shoot_radial_eigenvalues(0.5, 0.5, 0.25) == []


def test_shooting_grid_convergence():
    coarse = shoot_radial_eigenvalues(3.0, -0.5, 9.0, Grid1D(0.02, 20.0, 4001), C=0.75)
    fine = shoot_radial_eigenvalues(3.0, -0.5, 9.0, Grid1D(0.02, 20.0, 8001), C=0.75)
    assert len(coarse) == len(fine) == 2
    np.testing.assert_allclose(coarse, fine, rtol=1e-7)


def test_shooting_grid_validation():
    with pytest.raises(ValueError):
        shoot_radial_eigenvalues(5.0, 0.5, 25.0, Grid1D(0.1, 20.0, 100))
    with pytest.raises(ValueError):
        shoot_radial_eigenvalues(5.0, 0.5, 25.0, Grid1D(0.02, 10.0, 100))
