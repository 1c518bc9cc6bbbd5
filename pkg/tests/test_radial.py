import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdirac.errors import (
    ComplexRootError,
    DegenerateSeparationError,
    GammaPoleError,
    InadmissibleError,
    LevelOutsideWellError,
    NonTerminatingError,
)
from hyperdirac.oracle import Grid1D, residual_first_order, residual_radial_ode
from hyperdirac.radial import (
    allowed_levels,
    count_nodes,
    eval_R1,
    eval_R2,
    quantized_lambda_sq,
    radial_spec,
    rejected_variant,
    spectral_state,
)

# R1 from mpmath (40 digits) on the defining formula with (cosh r - 1)^C
FROZEN = [
    ((3, "1/2", 5, 2), 0.5, 2.3461526813266109e-5),
    ((3, "1/2", 5, 2), 2.0, 0.00025583320311833768),
    ((3, "1/2", 5, 2), 6.0, 1.8157532604187276e-8),
    ((4, "-1/2", 3, 1), 0.5, 0.00968512933218788),
    ((4, "-1/2", 3, 1), 2.0, -0.012562688138001326),
    ((4, "-1/2", 3, 1), 6.0, -0.0014447870272889771),
    ((3, "3/2", 10, 3), 0.5, -2.2552713439570144e-8),
    ((3, "3/2", 10, 3), 2.0, -7.4188682038824255e-8),
    ((3, "3/2", 10, 3), 6.0, -4.3424973573686841e-18),
]

GRID = Grid1D(0.1, 8.0, 400)


def test_spec_parameters():
    h = radial_spec(3, "1/2", 5, 9).hyper
    assert (h.alpha, h.beta, h.gamma) == (-1, -9, -10)
    h = radial_spec(4, "1/2", 5, 9).hyper
    assert (h.alpha, h.beta, h.gamma) == (-1, -9, -10)
    s = radial_spec(4, "-1/2", 3, 5)
    assert (s.C_exp, s.A_exp) == (0.75, -2.75) and s.admissible


def test_gamma_pole_off_quantization():
    # gamma = -10 at B = 5, m = 1/2: only terminating alpha are well defined
    with pytest.raises(GammaPoleError, match="gamma pole"):
        radial_spec(3, "1/2", 5, 9.5)


def test_spec_errors():
    with pytest.raises(InadmissibleError, match="inadmissible m"):
        radial_spec(3, "-1/2", 5, 9)
    with pytest.raises(InadmissibleError, match="inadmissible m"):
        radial_spec(4, "3/2", 5, 9)
    with pytest.raises(ComplexRootError, match="complex root"):
        radial_spec(3, "1/2", 2, 5)


def test_quantized_values():
    assert quantized_lambda_sq(3, 5, "1/2", 1) == 9
    assert quantized_lambda_sq(3, 5, "1/2", 4) == 24
    with pytest.raises(LevelOutsideWellError, match="outside well"):
        quantized_lambda_sq(3, 5, "1/2", 5)
    assert quantized_lambda_sq(4, 5, "1/2", 2) == 16


def test_allowed_levels():
    assert allowed_levels(3, 5, "1/2") == [(1, 9), (2, 16), (3, 21), (4, 24)]
    assert allowed_levels(3, 0.5, "1/2") == []
    assert allowed_levels(4, 3, "1/2") == [(1, 5), (2, 8)]
    # variant 4 with m = -1/2 admits n = 0 (k = 1)
    assert allowed_levels(4, 3, "-1/2") == [(0, 5), (1, 8)]
    with pytest.raises(InadmissibleError):
        allowed_levels(3, 5, "-3/2")


@given(B=st.floats(0.3, 30), twice_m=st.sampled_from([-5, -3, -1, 1, 3, 5]), variant=st.sampled_from([3, 4]))
def test_spectrum_positive_bounded_increasing(B, twice_m, variant):
    m = twice_m / 2
    try:
        levels = allowed_levels(variant, B, m)
    except InadmissibleError:
        return
    values = [lsq for _, lsq in levels]
    assert all(0 < v <= B * B for v in values)
    assert all(b > a for a, b in zip(values, values[1:]))


@given(B=st.floats(1.0, 30), n=st.integers(1, 20))
def test_variant_equivalence_at_half(B, n):
    if n >= B:
        return
    assert quantized_lambda_sq(4, B, "1/2", n) == quantized_lambda_sq(3, B, "1/2", n)


def test_rejected_pairings_name_the_inequality():
    with pytest.raises(InadmissibleError, match="A = .* violates A < 0"):
        rejected_variant(1, 0.5, 2.0)
    with pytest.raises(InadmissibleError, match="C = .* violates C >= 0"):
        rejected_variant(2, 1.5, 2.0)
    with pytest.raises(InadmissibleError, match="A < 0"):
        rejected_variant(2, 0.5, 2.0)


@pytest.mark.parametrize("args, r, expected", FROZEN)
def test_frozen_values(args, r, expected):
    variant, m, B, n = args
    spec = radial_spec(variant, m, B, quantized_lambda_sq(variant, B, m, n))
    assert eval_R1(spec, n, r) == pytest.approx(expected, rel=1e-13)


def test_axis_and_infinity():
    spec = radial_spec(3, "1/2", 5, 9)
    r = np.array([1e-8, 1e-6, 1e-4])
    assert eval_R1(spec, 1, 0.0) == 0.0
    assert np.all(np.diff(np.abs(eval_R1(spec, 1, r))) > 0)
    grid = np.linspace(0.1, 12, 400)
    values = np.abs(eval_R1(spec, 1, grid))
    assert values[-1] < 1e-4 * values.max()


def test_non_terminating_rejected():
    spec = radial_spec(3, "1/2", 5.3, 9.5)
    with pytest.raises(NonTerminatingError, match="non-terminating"):
        eval_R1(spec, 1, 1.0)


@pytest.mark.parametrize("B, m, variant", [(3, "1/2", 3), (5, "1/2", 3), (10, "3/2", 3), (5, "-1/2", 4), (3, "1/2", 4)])
def test_closed_forms_against_oracle(B, m, variant):
    for n, lsq in allowed_levels(variant, B, m):
        spec = radial_spec(variant, m, B, lsq)
        lam = math.sqrt(lsq)
        r1 = lambda r: eval_R1(spec, n, r)
        r2 = lambda r: eval_R2(spec, n, lam, r)
        assert residual_radial_ode(r1, spec.m, B, lsq, GRID).relative < 1e-6
        rep = residual_first_order(r1, r2, "radial", {"m": spec.m, "B": B, "lam": lam}, GRID)
        assert rep.relative < 1e-8


def test_detuned_residual_is_macroscopic():
    spec = radial_spec(3, "1/2", 5, 9)
    rep = residual_radial_ode(lambda r: eval_R1(spec, 1, r), 0.5, 5, 9.1, GRID)
    assert rep.relative > 1e-3


def test_second_component():
    spec = radial_spec(3, "1/2", 5, 9)
    r = np.linspace(0.1, 12, 200)
    R2 = eval_R2(spec, 1, 3.0, r)
    assert np.all(np.isfinite(R2)) and abs(R2[-1]) < 1e-4 * np.abs(R2).max()
    np.testing.assert_array_equal(eval_R2(spec, 1, -3.0, r), -R2)
    with pytest.raises(DegenerateSeparationError):
        eval_R2(spec, 1, 0.0, r)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_node_count(n):
    # the level with quantum number n has n interior nodes (n = 0 is the nodeless lambda = 0 mode)
    st_ = spectral_state(3, 5, "1/2", n)
    spec = radial_spec(3, "1/2", 5, st_.lambda_sq)
    assert count_nodes(eval_R1(spec, n, np.linspace(0.01, 12, 4000))) == n


@pytest.mark.xfail(strict=True, reason="n-th level carries n nodes, not n - 1 (README: known deviations)")
def test_node_count_as_stated():
    st_ = spectral_state(3, 5, "1/2", 1)
    spec = radial_spec(3, "1/2", 5, st_.lambda_sq)
    assert count_nodes(eval_R1(spec, 1, np.linspace(0.01, 12, 4000))) == 0
