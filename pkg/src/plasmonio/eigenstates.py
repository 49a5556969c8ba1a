"""Eigenstates of the bright plasmon coupled to the photon and electron continua.

Every eigenstate at in-plane wavevector k and frequency Omega contains the
plasmon with amplitude f(Omega). Frequencies share the unit of
``p.omega0``; wavevectors are normalized so the light cone is Omega = k omega0.
Above the cone the radiative rate Gamma_k is finite and the shift G vanishes;
below it Gamma_k = 0 and G < 0 produces the non-radiative (ENZ) branch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .coupling import CouplingParams, electronic_gamma, gamma_k, lamb_shift_G, light_cone
from .errors import LightConePoint

CONE_RTOL = 1e-12


def _kernels(p: CouplingParams, k, omega):
    k, omega = np.broadcast_arrays(np.asarray(k, dtype=float), np.asarray(omega, dtype=float))
    if np.any(omega <= 0):
        raise ValueError("Omega must be > 0")
    wk = light_cone(p, k)
    if np.any(np.abs(omega - wk) <= CONE_RTOL * p.omega0):
        raise LightConePoint("Omega lies on the light cone")
    return k, omega, gamma_k(p, k, omega), lamb_shift_G(p, k, omega), electronic_gamma(p, omega)


def _out(x):
    return x if np.ndim(x) else float(x)


def z_function(p: CouplingParams, k, omega):
    """z = (Omega^2 - omega0^2 - omega0 G) / (omega0 (Gamma_k + gamma))."""
    k, omega, big, shift, small = _kernels(p, k, omega)
    w0 = p.omega0
    return _out((omega**2 - w0**2 - w0 * shift) / (w0 * (big + small)))


def resonance_denominator(p: CouplingParams, k, omega):
    """[Omega - omega0 - omega0 G/(omega0 + Omega)]^2 + (omega0/(omega0 + Omega))^2 (gamma + Gamma)^2."""
    k, omega, big, shift, small = _kernels(p, k, omega)
    w0 = p.omega0
    x = w0 / (w0 + omega)
    return _out((omega - w0 - x * shift) ** 2 + x**2 * (small + big) ** 2)


def f_weight(p: CouplingParams, k, omega):
    """|f(Omega)|^2 in units of 1/frequency."""
    k, omega, big, shift, small = _kernels(p, k, omega)
    return _out((small + big) / (2 * np.pi) / resonance_denominator(p, k, omega))


def antiresonant_ratio(p: CouplingParams, omega):
    """f~/f = (Omega - omega0) / (Omega + omega0)."""
    omega = np.asarray(omega, dtype=float)
    return _out((omega - p.omega0) / (omega + p.omega0))


def bath_antiresonant_ratio(omega_bath, omega):
    """g~/g = (Omega' - Omega) / (Omega' + Omega) for a bath mode at Omega'."""
    omega_bath = np.asarray(omega_bath, dtype=float)
    return _out((omega_bath - omega) / (omega_bath + omega))


def plasmon_hopfield_weight(p: CouplingParams, k, omega):
    """Plasmon content |f|^2 - |f~|^2 = |f|^2 [1 - ((Omega - omega0)/(Omega + omega0))^2]."""
    f2 = np.asarray(f_weight(p, k, omega))
    return _out(f2 * (1.0 - np.asarray(antiresonant_ratio(p, omega)) ** 2))


def normalization_residual(p: CouplingParams, k, omega):
    """|f|^2 2 pi omega0^2 / (Omega + omega0)^2 (gamma + Gamma) (1 + z^2) - 1."""
    k, omega, big, shift, small = _kernels(p, k, omega)
    f2 = np.asarray(f_weight(p, k, omega))
    z = np.asarray(z_function(p, k, omega))
    w0 = p.omega0
    return _out(f2 * 2 * np.pi * w0**2 / (omega + w0) ** 2 * (small + big) * (1 + z**2) - 1.0)


@dataclass(frozen=True)
class EigenstateSample:
    k: float
    Omega: float  # Omega / omega0
    z: float
    f2: float  # |f|^2 in units of 1/omega0
    plasmon_weight: float


def sample(p: CouplingParams, k: float, omega: float) -> EigenstateSample:
    w0 = p.omega0
    return EigenstateSample(float(k), float(omega) / w0, float(z_function(p, k, omega)),
                            float(f_weight(p, k, omega)) * w0,
                            float(plasmon_hopfield_weight(p, k, omega)) * w0)


def enz_frequency(p: CouplingParams, k: float, rtol: float = 1e-14) -> float:
    """Below-cone root of Omega^2 = omega0^2 + omega0 G_k(Omega), by bisection.

    The left side minus the right is increasing on (0, k omega0) and diverges
    at the cone, so a root exists iff Gamma0 k < omega0 and is then unique.
    """
    w0 = p.omega0
    wk = float(light_cone(p, k))
    if wk <= 0:
        raise ValueError("k must be > 0")

    def h(om):
        return om**2 - w0**2 - w0 * lamb_shift_G(p, k, om)

    lo, hi = 0.0, wk
    if h(lo) >= 0:
        raise ValueError(f"no ENZ root below the light cone at k={k}")
    while hi - lo > rtol * wk:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if h(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def enz_residual(p: CouplingParams, k: float, omega: float) -> float:
    return float(omega**2 - p.omega0**2 - p.omega0 * lamb_shift_G(p, k, omega))


def detuning(p: CouplingParams, k, omega):
    """Omega - omega0 - omega0 G/(omega0 + Omega), the Lorentzian coordinate of |f|^2."""
    k, omega, big, shift, small = _kernels(p, k, omega)
    return _out(omega - p.omega0 - p.omega0 * shift / (p.omega0 + omega))


@dataclass(frozen=True)
class DispersionMap:
    """Plasmon weight on a (Omega, k) grid, rows indexed by Omega.

    ``weight`` is in units of 1/omega0; ``cone_mask`` marks cells crossed by
    the light cone.
    """

    k_grid: np.ndarray
    omega_grid: np.ndarray  # Omega / omega0
    weight: np.ndarray
    cone_mask: np.ndarray

    def normalized(self) -> np.ndarray:
        return self.weight / self.weight.max()

    def above_cone(self) -> np.ndarray:
        return self.omega_grid[:, None] > self.k_grid[None, :]


def default_axes(n: int = 512, k_max: float = 2.0, omega_max: float = 2.0):
    """Cell-offset grids; k_i = (i + 1/3) dk and Omega_j = (j + 2/3) dOmega never coincide."""
    k = (np.arange(n) + 1.0 / 3.0) * k_max / n
    om = (np.arange(n) + 2.0 / 3.0) * omega_max / n
    return k, om


def dispersion_map(p: CouplingParams, k_grid=None, omega_grid=None) -> DispersionMap:
    """Plasmon Hopfield weight over normalized wavevector and frequency grids."""
    if k_grid is None or omega_grid is None:
        k_def, om_def = default_axes()
        k_grid = k_def if k_grid is None else k_grid
        omega_grid = om_def if omega_grid is None else omega_grid
    k_grid = np.asarray(k_grid, dtype=float)
    omega_grid = np.asarray(omega_grid, dtype=float)
    kk, oo = np.meshgrid(k_grid, omega_grid)
    weight = np.asarray(plasmon_hopfield_weight(p, kk, oo * p.omega0)) * p.omega0
    dk = np.gradient(k_grid) if k_grid.size > 1 else np.ones(1)
    do = np.gradient(omega_grid) if omega_grid.size > 1 else np.ones(1)
    half = 0.5 * np.maximum(dk[None, :], do[:, None])
    mask = np.abs(oo - kk) <= half
    return DispersionMap(k_grid, omega_grid, weight, mask)


def count_ridges(m: DispersionMap, threshold: float = 0.05) -> tuple[int, np.ndarray]:
    """Connected regions above ``threshold`` of the maximum.

    The two sides of the light cone are labelled separately (8-connectivity
    within each side), since a branch cannot cross the cone.
    """
    w = m.normalized()
    hot = (w > threshold) & ~m.cone_mask
    above = m.above_cone()
    eight = np.ones((3, 3), dtype=int)
    lab_a, n_a = ndimage.label(hot & above, structure=eight)
    lab_b, n_b = ndimage.label(hot & ~above, structure=eight)
    labels = np.where(lab_b > 0, lab_b + n_a, lab_a)
    return n_a + n_b, labels


def radiative_ridge_fwhm(p: CouplingParams, k: float, n: int = 20001, span: float = 20.0) -> float:
    """FWHM (units of omega0) of the above-cone plasmon weight at fixed k.

    Raises:
        ValueError: the weight does not fall to half maximum on both sides
        within the sampled window above the cone.
    """
    wk = float(light_cone(p, k))
    lo = wk * (1 + 1e-9) if wk > 0 else p.omega0 * 1e-6
    om = np.linspace(lo, span * p.omega0, n)
    w = np.asarray(plasmon_hopfield_weight(p, k, om))
    i = int(np.argmax(w))
    half = 0.5 * w[i]
    left = np.flatnonzero(w[:i] < half)
    right = np.flatnonzero(w[i:] < half)
    if left.size == 0 or right.size == 0:
        raise ValueError(f"radiative ridge at k={k} is not bracketed above the cone")
    a = left[-1]
    b = i + right[0]
    x_lo = np.interp(half, [w[a], w[a + 1]], [om[a], om[a + 1]])
    x_hi = np.interp(half, [w[b], w[b - 1]], [om[b], om[b - 1]])
    return float(x_hi - x_lo) / p.omega0


def enz_fwhm_detuning(p: CouplingParams, k: float, n: int = 40001) -> tuple[float, float]:
    """ENZ line width measured in the detuning coordinate, and its expected value.

    Returns (measured, 2 gamma omega0 / (omega0 + Omega_c)) with Omega_c the
    ENZ center.
    """
    center = enz_frequency(p, k)
    wk = float(light_cone(p, k))
    width = 40 * p.gamma_nr
    om = np.linspace(max(center - width, 1e-9 * wk), min(center + width, wk * (1 - 1e-9)), n)
    f2 = np.asarray(f_weight(p, k, om))
    d = np.asarray(detuning(p, k, om))
    i = int(np.argmax(f2))
    half = 0.5 * f2[i]
    left = np.flatnonzero(f2[:i] < half)
    right = np.flatnonzero(f2[i:] < half)
    if left.size == 0 or right.size == 0:
        raise ValueError("ENZ line not bracketed below the cone")
    a, b = left[-1], i + right[0]
    d_lo = np.interp(half, [f2[a], f2[a + 1]], [d[a], d[a + 1]])
    d_hi = np.interp(half, [f2[b], f2[b - 1]], [d[b], d[b - 1]])
    expected = 2 * p.gamma_nr * p.omega0 / (p.omega0 + center)
    return float(d_hi - d_lo), float(expected)
