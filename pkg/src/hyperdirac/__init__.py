"""Exact Dirac solutions in a homogeneous magnetic field on hyperbolic space H3.

Modules, bottom up: ``special`` (Gauss 2F1), ``geometry``, ``separation``,
``axial`` and ``radial`` (closed-form factors), ``spectrum`` (assembly,
enumeration, flat limit), ``oracle`` (independent numerical checks),
``verify`` and ``cli``.
"""

from .axial import AxialSpec, axial_asymptote, axial_spec, eval_Z1, eval_Z2
from .errors import HyperDiracError
from .geometry import CylindricalPoint
from .oracle import Grid1D, ResidualReport, shoot_radial_eigenvalues
from .radial import RadialSpec, SpectralState, allowed_levels, quantized_lambda_sq, radial_spec
from .separation import PhysicalParams, QuantumNumbers, separation_constants
from .special import gauss_2f1_polynomial, gauss_2f1_series, hyp2f1
from .spectrum import SpinorSample, assemble, enumerate_states, flat_limit_check

__version__ = "0.1.0"

__all__ = [
    "AxialSpec", "CylindricalPoint", "Grid1D", "HyperDiracError", "PhysicalParams", "QuantumNumbers",
    "RadialSpec", "ResidualReport", "SpectralState", "SpinorSample", "allowed_levels", "assemble",
    "axial_asymptote", "axial_spec", "enumerate_states", "eval_Z1", "eval_Z2", "flat_limit_check",
    "gauss_2f1_polynomial", "gauss_2f1_series", "hyp2f1", "quantized_lambda_sq", "radial_spec",
    "separation_constants", "shoot_radial_eigenvalues",
]
