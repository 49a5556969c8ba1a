"""Radiative and electronic damping kernels of the bright plasmon.

Frequencies and rates share one energy unit (meV in practice, or anything
else as long as ``omega0``, ``gamma0`` and ``gamma_nr`` agree). In-plane
wavevectors are normalized, ``k = c k_phys / (sqrt(eps_s) omega0)``, so the
light cone sits at ``omega = k * omega0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import constants as const
from .errors import AngleOutOfRange, QuadratureNotConverged


@dataclass(frozen=True)
class CouplingParams:
    """Bright-plasmon frequency with its radiative and non-radiative rates.

    Attributes:
        omega0: plasmon energy hbar omega_0.
        gamma0: hbar Gamma_0, the golden-rule radiative prefactor.
        gamma_nr: hbar gamma, the non-radiative (electronic) damping.
        eps_s: background dielectric constant.
    """

    omega0: float
    gamma0: float
    gamma_nr: float
    eps_s: float = 12.9

    def __post_init__(self):
        if not self.omega0 > 0:
            raise ValueError("omega0 must be > 0")
        if self.gamma0 < 0:
            raise ValueError("gamma0 must be >= 0")
        if not self.gamma_nr > 0:
            raise ValueError("gamma_nr must be > 0")

    @property
    def Q(self) -> float:
        return self.omega0 / self.gamma_nr

    def g(self, theta_deg) -> float:
        """Damping ratio Gamma(theta, omega0) / gamma."""
        return gamma_theta(self, theta_deg, self.omega0) / self.gamma_nr

    @classmethod
    def from_gQ(cls, g: float, Q: float, theta_deg: float = 45.0, omega0: float = 1.0,
                eps_s: float = 12.9) -> "CouplingParams":
        """Parameters reproducing damping ratio ``g`` and quality factor ``Q`` at ``theta_deg``."""
        _check_angle(theta_deg)
        if not 0 < theta_deg:
            raise AngleOutOfRange("theta must be > 0 to realize a finite g")
        gamma = omega0 / Q
        th = np.radians(theta_deg)
        gamma0 = g * gamma * np.cos(th) / np.sin(th) ** 2
        return cls(omega0, gamma0, gamma, eps_s)


def _check_angle(theta_deg):
    th = np.asarray(theta_deg, dtype=float)
    if np.any(th < 0) or np.any(th >= 90):
        raise AngleOutOfRange(f"theta must lie in [0, 90) degrees, got {theta_deg}")


def angle_factor(theta_deg):
    """sin^2(theta) / cos(theta)."""
    _check_angle(theta_deg)
    th = np.radians(theta_deg)
    return np.sin(th) ** 2 / np.cos(th)


def gamma_theta(p: CouplingParams, theta_deg, omega):
    """Radiative rate at fixed angle, Gamma0 (omega/omega0) sin^2/cos."""
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0):
        raise ValueError("omega must be >= 0")
    return p.gamma0 * (omega / p.omega0) * angle_factor(theta_deg)


def light_cone(p: CouplingParams, k):
    """Light-cone frequency c k / sqrt(eps_s) for normalized ``k``."""
    return np.asarray(k, dtype=float) * p.omega0


def normalized_wavevector(p: CouplingParams, k_per_m):
    """Convert a physical in-plane wavevector (1/m) to the normalized one."""
    omega0 = const.mev_to_rad_s(p.omega0)
    return const.C_LIGHT * np.asarray(k_per_m) / (np.sqrt(p.eps_s) * omega0)


def angle_of(p: CouplingParams, k, omega):
    """Propagation angle (deg) with sin(theta) = c k / (sqrt(eps_s) omega)."""
    return np.degrees(np.arcsin(light_cone(p, k) / np.asarray(omega, dtype=float)))


def gamma_k(p: CouplingParams, k, omega):
    """Re of the radiative kernel at fixed wavevector.

    Gamma0 wk^2 / (omega0 sqrt(omega^2 - wk^2)) above the light cone
    (wk = light_cone(k)), zero below it and +inf exactly on it.
    """
    wk = light_cone(p, k)
    omega = np.asarray(omega, dtype=float)
    wk, omega = np.broadcast_arrays(wk, omega)
    out = np.zeros(omega.shape)
    above = omega > wk
    out[above] = p.gamma0 * wk[above] ** 2 / (p.omega0 * np.sqrt(omega[above] ** 2 - wk[above] ** 2))
    out[(omega == wk) & (wk > 0)] = np.inf
    return out if out.ndim else float(out)


def lamb_shift_G(p: CouplingParams, k, omega):
    """Frequency shift G = Im[Gamma(omega) - Gamma*(-omega)].

    Exactly zero above the light cone, -Gamma0 wk^2 / (omega0 sqrt(wk^2 - omega^2))
    below it and -inf on it.
    """
    wk = light_cone(p, k)
    omega = np.abs(np.asarray(omega, dtype=float))
    wk, omega = np.broadcast_arrays(wk, omega)
    out = np.zeros(omega.shape)
    below = omega < wk
    out[below] = -p.gamma0 * wk[below] ** 2 / (p.omega0 * np.sqrt(wk[below] ** 2 - omega[below] ** 2))
    out[(omega == wk) & (wk > 0)] = -np.inf
    return out if out.ndim else float(out)


def im_gamma_analytic(p: CouplingParams, k, omega: float) -> float:
    """Closed-form Im of the radiative kernel on its three branches."""
    wk = float(light_cone(p, k))
    pref = p.gamma0 * wk**2 / (np.pi * p.omega0)
    if omega > wk:
        s = np.sqrt(omega**2 - wk**2)
        return 2 * pref / s * np.log(np.sqrt((omega + wk) / (2 * wk)) + np.sqrt((omega - wk) / (2 * wk)))
    if omega < -wk:
        a = abs(omega)
        s = np.sqrt(a**2 - wk**2)
        return 2 * pref / s * np.log(np.sqrt((a + wk) / (2 * wk)) - np.sqrt((a - wk) / (2 * wk)))
    if abs(omega) < wk:
        return -pref / np.sqrt(wk**2 - omega**2) * (0.5 * np.pi + np.arcsin(omega / wk))
    raise ValueError("omega lies on the light cone")


def _tail(omega, wk, cutoff):
    """int_cutoff^inf dw' / ((omega - w') sqrt(w'^2 - wk^2)), asymptotic series."""
    c2 = omega**2 + 0.5 * wk**2
    c3 = omega**3 + 0.5 * omega * wk**2
    c4 = omega**4 + 0.5 * omega**2 * wk**2 + 0.375 * wk**4
    return -(1 / cutoff + omega / (2 * cutoff**2) + c2 / (3 * cutoff**3)
             + c3 / (4 * cutoff**4) + c4 / (5 * cutoff**5))


def _pv_integral(omega, wk, cutoff, epsrel):
    """P int_wk^cutoff dw' / ((omega - w') sqrt(w'^2 - wk^2)).

    Substituting w' = wk cosh(t) removes the square-root edge; the pole at
    w' = omega becomes a Cauchy weight in t.
    """
    t_max = np.arccosh(cutoff / wk)
    opts = dict(epsabs=0.0, epsrel=epsrel, limit=500)
    if omega <= wk:
        val, _ = integrate.quad(lambda t: 1.0 / (omega - wk * np.cosh(t)), 0.0, t_max, **opts)
        return val
    t0 = np.arccosh(omega / wk)

    def smooth(t):
        # (t - t0) / (omega - wk cosh t), regular at t0
        d = omega - wk * np.cosh(t)
        if abs(t - t0) < 1e-7:
            return -1.0 / (wk * np.sinh(t0))
        return (t - t0) / d

    val, _ = integrate.quad(smooth, 0.0, t_max, weight="cauchy", wvar=t0, **opts)
    return val


def kk_oracle_im_gamma(p: CouplingParams, k, omega: float, tol: float = 1e-8) -> float:
    """Im of the radiative kernel by principal-value quadrature of Kramers-Kronig.

    Re Gamma is integrated up to a cutoff of 50 max(omega0, |omega|, wk); the
    remainder uses the large-frequency series of the integrand. The result is
    accepted only if two quadrature tolerances agree within ``tol``.

    Raises:
        QuadratureNotConverged: the two refinement levels disagree.
    """
    wk = float(light_cone(p, k))
    if wk <= 0:
        return 0.0
    if abs(abs(omega) - wk) <= 1e-12 * wk:
        raise ValueError("omega lies on the light cone")
    cutoff = 50.0 * max(p.omega0, abs(omega), wk)
    coarse = _pv_integral(omega, wk, cutoff, epsrel=max(tol, 1e-13))
    fine = _pv_integral(omega, wk, cutoff, epsrel=max(tol * 1e-2, 1e-13))
    if abs(fine - coarse) > tol * max(abs(fine), 1e-300):
        raise QuadratureNotConverged(f"refinement changed the integral by {abs(fine - coarse):.3g}")
    total = fine + _tail(omega, wk, cutoff)
    return p.gamma0 * wk**2 / (np.pi * p.omega0) * total


def electronic_gamma(p: CouplingParams, omega):
    """gamma Theta(omega): constant electronic damping, zero at omega <= 0."""
    omega = np.asarray(omega, dtype=float)
    out = np.where(omega > 0, p.gamma_nr, 0.0)
    return out if out.ndim else float(out)


def critical_angle(p: CouplingParams, tol_deg: float = 1e-6) -> float:
    """Angle (deg) where Gamma(theta, omega0) = gamma, by bisection."""
    if not p.gamma0 > 0:
        raise ValueError("critical angle needs gamma0 > 0")
    target = p.gamma_nr / p.gamma0
    lo, hi = 0.0, 90.0
    while hi - lo > tol_deg:
        mid = 0.5 * (lo + hi)
        th = np.radians(mid)
        if np.sin(th) ** 2 / np.cos(th) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
