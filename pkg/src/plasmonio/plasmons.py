"""Multisubband plasmons: dipole-dipole coupling and Bogoliubov diagonalization.

With B_a the intersubband bosons of frequency w_a, the plasmon Hamiltonian is

    H / hbar = sum_a w_a B_a^+ B_a + sum_ab Xi_ab (B_a + B_a^+)(B_b + B_b^+).

In the (B, B^+) basis the Heisenberg equations give the 2N x 2N dynamical
matrix [[W + 2 Xi, -2 Xi], [2 Xi, -W - 2 Xi]] whose positive eigenvalues are
the plasmon frequencies. It is solved through the equivalent symmetric
problem W^1/2 (W + 4 Xi) W^1/2 u = omega^2 u, from which the Bogoliubov
coefficients X = (omega + w) u / (2 sqrt(omega w)) and
Y = (omega - w) u / (2 sqrt(omega w)) follow with X^2 - Y^2 normalized to 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import constants as const
from .errors import NonPositiveSpectrum
from .wellbands import TransitionSet


@dataclass(frozen=True)
class CouplingMatrix:
    bare_frequencies: np.ndarray  # meV
    xi: np.ndarray  # meV


@dataclass(frozen=True)
class PlasmonModeSet:
    """Eigenmodes of the plasmon Hamiltonian.

    ``mode_currents`` are J_n(z) sqrt(S) (A/m) on ``z_grid`` (nm); ``x`` and
    ``y`` hold the Bogoliubov coefficients, P_n = sum_a x[n, a] B_a + y[n, a] B_a^+.
    """

    z_grid: np.ndarray
    frequencies: np.ndarray
    mode_currents: np.ndarray
    weights: np.ndarray
    bright_index: int
    x: np.ndarray
    y: np.ndarray
    eps_s: float

    @property
    def omega0(self) -> float:
        return float(self.frequencies[self.bright_index])

    @property
    def integrated_currents(self) -> np.ndarray:
        return np.trapezoid(self.mode_currents, const.nm_to_m(self.z_grid), axis=-1)

    def symplectic_norms(self) -> np.ndarray:
        return np.sum(self.x**2 - self.y**2, axis=1)


def build_coupling_matrix(transitions: TransitionSet, eps_s: float | None = None) -> CouplingMatrix:
    """Xi_ab = S int j_a j_b dz / (2 hbar eps0 eps_s w_a w_b), returned in meV."""
    if len(transitions) == 0:
        raise ValueError("need at least one transition")
    eps = transitions.eps_s if eps_s is None else eps_s
    z_m = const.nm_to_m(transitions.z_grid)
    j = transitions.currents
    overlap = np.trapezoid(j[:, None, :] * j[None, :, :], z_m, axis=-1)
    w = const.mev_to_rad_s(transitions.frequencies)
    xi_joule = overlap / (2.0 * const.EPS0 * eps * np.outer(w, w))
    xi = const.joule_to_mev(xi_joule)
    xi = 0.5 * (xi + xi.T)
    return CouplingMatrix(transitions.frequencies.copy(), xi)


def dynamical_matrix(cm: CouplingMatrix) -> np.ndarray:
    """2N x 2N matrix acting on (X, Y) with eigenvalues +-omega_n."""
    w = np.diag(cm.bare_frequencies)
    two_xi = 2.0 * cm.xi
    return np.block([[w + two_xi, -two_xi], [two_xi, -w - two_xi]])


def diagonalize_bogoliubov(cm: CouplingMatrix, transitions: TransitionSet) -> PlasmonModeSet:
    """Plasmon modes from the bare transitions and their dipole-dipole coupling.

    Raises:
        NonPositiveSpectrum: some squared eigenfrequency is <= 0.
    """
    w = cm.bare_frequencies
    sw = np.sqrt(w)
    m = sw[:, None] * (np.diag(w) + 4.0 * cm.xi) * sw[None, :]
    omega2, u = np.linalg.eigh(m)
    if np.any(omega2 <= 0):
        raise NonPositiveSpectrum(f"squared frequency {omega2.min():.4g} meV^2 <= 0")
    omega = np.sqrt(omega2)

    # J_n = sum_a j_a u_an sqrt(omega_n / w_a)
    coeff = u * np.sqrt(omega[None, :] / w[:, None])
    currents = coeff.T @ transitions.currents
    integ = np.trapezoid(currents, const.nm_to_m(transitions.z_grid), axis=-1)

    # sign convention: positive integrated current, else positive leading component
    for n in range(len(omega)):
        ref = integ[n]
        if abs(ref) <= 1e-12 * np.abs(integ).max(initial=0.0):
            ref = u[np.argmax(np.abs(u[:, n])), n]
        if ref < 0:
            u[:, n] *= -1
            currents[n] *= -1
            integ[n] *= -1

    denom = 2.0 * np.sqrt(omega[:, None] * w[None, :])
    x = (omega[:, None] + w[None, :]) * u.T / denom
    y = (omega[:, None] - w[None, :]) * u.T / denom

    strength = integ**2 / omega
    weights = strength / strength.sum()
    # argmax returns the first maximum, i.e. the lowest frequency on ties
    bright = int(np.argmax(weights))
    return PlasmonModeSet(transitions.z_grid, omega, currents, weights, bright, x, y,
                          transitions.eps_s)


def plasmon_modes(transitions: TransitionSet, eps_s: float | None = None) -> PlasmonModeSet:
    cm = build_coupling_matrix(transitions, eps_s)
    return diagonalize_bogoliubov(cm, transitions)


def mode_gamma0(modes: PlasmonModeSet, eps_s: float | None = None) -> np.ndarray:
    """hbar Gamma_0 (meV) of every mode, S |int J_n|^2 / (eps0 sqrt(eps_s) c omega_n)."""
    eps = modes.eps_s if eps_s is None else eps_s
    i_n = modes.integrated_currents
    w = const.mev_to_rad_s(modes.frequencies)
    return const.joule_to_mev(i_n**2 / (const.EPS0 * np.sqrt(eps) * const.C_LIGHT * w))


def bright_gamma0(modes: PlasmonModeSet, eps_s: float | None = None) -> float:
    """hbar Gamma_0 (meV) of the bright mode."""
    return float(mode_gamma0(modes, eps_s)[modes.bright_index])


def oscillator_strengths(source) -> tuple[np.ndarray, np.ndarray]:
    """(frequencies, |int j dz|^2 / w) for a TransitionSet or a PlasmonModeSet."""
    integ = source.integrated_currents
    return source.frequencies, integ**2 / source.frequencies


def lorentzian(omega, center, hwhm):
    """Unit-area Lorentzian."""
    return (hwhm / np.pi) / ((omega - center) ** 2 + hwhm**2)


def absorption_spectrum(source, gamma: float, omega: np.ndarray,
                        reference: TransitionSet | None = None) -> np.ndarray:
    """Absorption A(omega) as a sum of Lorentzians of FWHM ``gamma`` (meV).

    Each line is weighted by |int J dz|^2 / omega. Weights are divided by the
    total single-particle strength of ``reference`` (default: ``source``
    itself), so the single-particle spectrum has unit area and an MSP
    spectrum built from the same transitions has unit area too.
    """
    if gamma <= 0:
        raise ValueError("gamma must be > 0")
    centers, strength = oscillator_strengths(source)
    ref = source if reference is None else reference
    norm = oscillator_strengths(ref)[1].sum()
    omega = np.asarray(omega, dtype=float)
    return np.sum((strength / norm)[:, None]
                  * lorentzian(omega[None, :], centers[:, None], 0.5 * gamma), axis=0)
