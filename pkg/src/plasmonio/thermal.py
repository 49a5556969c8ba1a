"""Thermal emission of the bright plasmon from the input-output matrix.

Each input port carries an uncorrelated thermal occupancy: the two photonic
ports at T_ph and the electronic port at T_el. The outgoing occupancy of a
port is the |U|^2-weighted sum of the incoming ones, so Kirchhoff's law is a
consequence of unitarity rather than an input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import constants as const
from .coupling import CouplingParams
from .scattering import ModelVariant, _u_stack, alpha_closed_form, default_grid


def bose_occupancy(omega, T):
    """n_B = 1 / (exp(hbar omega / k_B T) - 1) with omega in meV and T in K; zero at T = 0."""
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0):
        raise ValueError("omega must be > 0")
    if T < 0:
        raise ValueError("temperature must be >= 0")
    if T == 0:
        out = np.zeros(omega.shape)
    else:
        with np.errstate(over="ignore"):
            out = 1.0 / np.expm1(omega / (const.KB_MEV * T))
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class ThermalScenario:
    """Bath temperatures (K), angle and plasmon parameters; ``omega`` in meV."""

    params: CouplingParams
    T_el: float
    T_ph: float = 0.0
    theta_deg: float = 45.0
    variant: ModelVariant = ModelVariant.FULL
    omega: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if self.T_el < 0 or self.T_ph < 0:
            raise ValueError("temperatures must be >= 0")
        object.__setattr__(self, "variant", ModelVariant.parse(self.variant))
        if self.variant not in (ModelVariant.FULL, ModelVariant.MIRROR):
            raise ValueError("thermal emission needs the full or mirror variant")
        grid = default_grid(self.params.omega0) if self.omega is None else self.omega
        grid = np.asarray(grid, dtype=float)
        if grid.ndim != 1 or np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
            raise ValueError("omega grid must be positive and strictly increasing")
        object.__setattr__(self, "omega", grid)

    def port_temperatures(self) -> list[float]:
        if self.variant is ModelVariant.MIRROR:
            return [self.T_ph, self.T_el]
        return [self.T_ph, self.T_ph, self.T_el]


@dataclass(frozen=True)
class EmissionSpectrum:
    """Outgoing occupancies per port, shape (n_ports, n_omega).

    ``photons_out`` is the emission through the first photonic port;
    ``power_density`` is hbar omega times it (meV per unit bandwidth).
    """

    omega: np.ndarray
    port_occupancies: np.ndarray
    input_occupancies: np.ndarray
    emission_coefficient: np.ndarray
    alpha_used: np.ndarray
    planck_el: np.ndarray
    planck_ph: np.ndarray

    @property
    def photons_out(self) -> np.ndarray:
        return self.port_occupancies[0]

    @property
    def power_density(self) -> np.ndarray:
        return self.omega * self.photons_out


def emitted_spectrum(s: ThermalScenario) -> EmissionSpectrum:
    u = _u_stack(s.params, s.omega, s.variant, theta_deg=s.theta_deg)
    n_in = np.array([bose_occupancy(s.omega, T) for T in s.port_temperatures()])
    weights = np.abs(u) ** 2
    # out_i = sum_j |U_ij|^2 in_j
    n_out = np.einsum("wij,jw->iw", weights, n_in)
    return EmissionSpectrum(
        omega=s.omega,
        port_occupancies=n_out,
        input_occupancies=n_in,
        emission_coefficient=weights[:, 0, -1],
        alpha_used=alpha_closed_form(s.params, s.theta_deg, s.omega, s.variant),
        planck_el=n_in[-1],
        planck_ph=n_in[0],
    )


def integrated_power(s: ThermalScenario, band=None) -> float:
    """Net emitted power, trapezoid of hbar omega (n_out - n_B(T_ph)) over ``band``.

    The result is in meV^2 (energy per mode times bandwidth); absolute
    radiometric units are not attempted. ``band`` defaults to the whole grid.
    """
    emission = emitted_spectrum(s)
    w = emission.omega
    mask = np.ones(w.shape, bool) if band is None else (w >= band[0]) & (w <= band[1])
    if mask.sum() < 2:
        raise ValueError("band contains fewer than two grid points")
    excess = w[mask] * (emission.photons_out[mask] - emission.planck_ph[mask])
    return float(np.trapezoid(excess, w[mask]))
