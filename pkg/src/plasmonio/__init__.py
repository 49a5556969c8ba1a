"""Superradiant multisubband plasmons coupled to free space.

Microscopic chain (``wellbands`` -> ``plasmons``) from a quantum-well
profile to the bright plasmon and its radiative rate, and the open-system
description (``coupling``, ``scattering``, ``thermal``, ``eigenstates``)
of that plasmon in contact with photon and electron baths.
"""

__version__ = "0.1.0"

from .coupling import CouplingParams, critical_angle, gamma_theta
from .errors import (
    AngleOutOfRange,
    GridTooCoarse,
    HalfMaxNotBracketed,
    LightConePoint,
    NoBoundState,
    NonPositiveSpectrum,
    PhysicsError,
    QuadratureNotConverged,
)
from .plasmons import bright_gamma0, plasmon_modes
from .scattering import ModelVariant, build_U, optical_coefficients
from .thermal import ThermalScenario, bose_occupancy, emitted_spectrum, integrated_power
from .wellbands import WellProfile, solve_subbands, well_transitions
from .eigenstates import dispersion_map, f_weight, plasmon_hopfield_weight, z_function

__all__ = [
    "AngleOutOfRange", "CouplingParams", "GridTooCoarse", "HalfMaxNotBracketed",
    "LightConePoint", "ModelVariant", "NoBoundState", "NonPositiveSpectrum", "PhysicsError",
    "QuadratureNotConverged", "ThermalScenario", "WellProfile", "bose_occupancy",
    "bright_gamma0", "build_U", "critical_angle", "dispersion_map", "emitted_spectrum",
    "f_weight", "gamma_theta", "integrated_power", "optical_coefficients",
    "plasmon_hopfield_weight", "plasmon_modes", "solve_subbands", "well_transitions",
    "z_function",
]
