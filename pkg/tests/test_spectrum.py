import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdirac.axial import axial_spec, eval_Z1
from hyperdirac.errors import AxisDegeneracyError, LevelOutsideWellError
from hyperdirac.geometry import CylindricalPoint
from hyperdirac.oracle import Grid1D, residual_dirac_system
from hyperdirac.radial import spectral_state
from hyperdirac.separation import PhysicalParams
from hyperdirac.spectrum import FlatLimitParams, assemble, assemble_fields, enumerate_states, flat_limit_check

PARAMS = PhysicalParams(5.0, 3.0, 5.0)


def test_assemble_ratio_and_scale():
    state = spectral_state(3, 5.0, "1/2", 1)
    for r, z in ((0.3, -1.0), (1.2, 0.4), (3.0, 2.5)):
        pt = CylindricalPoint(0.0, r, 0.7, z)
        for branch, A in ((1, 3.0), (-1, 1 / 3)):
            s = assemble(state, 1, branch, PARAMS, pt)
            assert s.f3 / s.f1 == pytest.approx(A, rel=1e-14)
            assert s.f4 / s.f2 == pytest.approx(A, rel=1e-14)
        assert s.psi_scale == pytest.approx(1 / math.sqrt(math.sinh(r) * math.cosh(z)))
    with pytest.raises(AxisDegeneracyError):
        assemble(state, 1, 1, PARAMS, CylindricalPoint(r=0.0))


def test_branch_minus_is_p_negated():
    state = spectral_state(3, 5.0, "1/2", 2)
    z = np.linspace(-3, 3, 25)
    f1_minus = assemble_fields(state, 3, -1, PARAMS)[0]
    direct = eval_Z1(axial_spec(3, -PARAMS.p, state.lam), z)
    ratio = f1_minus(1.0, z) / direct
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-12)


def test_psi_phase():
    state = spectral_state(3, 5.0, "1/2", 1)
    s = assemble(state, 1, 1, PARAMS, CylindricalPoint(0.3, 1.0, 0.5, 0.2))
    psi = s.psi(PARAMS.epsilon, 0.5)
    np.testing.assert_allclose(np.abs(psi), np.abs(s.components()) * s.psi_scale, rtol=1e-14)


def test_end_to_end_reference_case():
    state = spectral_state(3, 5.0, "1/2", 1)
    rep = residual_dirac_system(assemble_fields(state, 1, 1, PARAMS), 5.0, 3.0, 0.5, 5.0,
                                Grid1D(0.2, 6, 40), Grid1D(-4, 4, 40))
    assert rep.relative < 1e-6


def test_enumeration_reference():
    states = enumerate_states(5.0, ["1/2"])
    by_channel = {v: sorted(s.lambda_sq for s in states if s.variant == v) for v in (3, 4)}
    assert by_channel == {3: [9, 16, 21, 24], 4: [9, 16, 21, 24]}
    assert enumerate_states(0.4, ["1/2", "-1/2", "3/2"]) == []


@given(B=st.floats(0.5, 20), ms=st.lists(st.sampled_from(["-3/2", "-1/2", "1/2", "3/2", "5/2"]), min_size=1))
def test_enumeration_properties(B, ms):
    states = enumerate_states(B, ms)
    assert all(0 < s.lambda_sq <= B * B for s in states)
    keys = [(s.variant, s.m, s.n) for s in states]
    assert len(keys) == len(set(keys))
    assert [s.lambda_sq for s in states] == sorted(s.lambda_sq for s in states)


def test_flat_limit_examples():
    assert flat_limit_check(1.0, 2, "1/2", 3, 10.0) == (pytest.approx(3.96), 4.0, pytest.approx(0.01))
    assert flat_limit_check(1.0, 2, "1/2", 3, 100.0)[2] == pytest.approx(1e-4, rel=1e-12)
    curved, flat, _ = flat_limit_check(1.0, 1, "1/2", 4, 10.0)
    assert (curved, flat) == (pytest.approx(1.99), 2.0)
    with pytest.raises(LevelOutsideWellError):
        flat_limit_check(0.01, 2, "1/2", 3, 10.0)


@given(B0=st.floats(0.5, 4), n=st.integers(1, 5), rho=st.floats(10, 1e4))
def test_flat_limit_law(B0, n, rho):
    _, _, err = flat_limit_check(B0, n, "1/2", 3, rho)
    expected = float(Fraction(n) / (2 * Fraction(B0) * Fraction(rho) ** 2))
    assert err == pytest.approx(expected, rel=1e-12)


def test_flat_limit_params():
    fl = FlatLimitParams(rho=10.0, B0=1.0, lambda0_sq=3.96)
    assert fl.B == 100.0 and fl.lambda_sq == pytest.approx(396.0)
