"""Input-output matrix of the bright plasmon and the optical coefficients.

Ports are ordered (photon up, photon down, electron). With port rates
kappa = (Gamma/2, Gamma/2, gamma), anti-resonant factor
x = 2 omega0 / (omega0 + omega) and D = i(omega - omega0) - x (gamma + Gamma)/2,

    U_ij = delta_ij + x sqrt(kappa_i kappa_j) / D,

which is unitary and symmetric for every real omega. Model variants:

* FULL     x = 2 omega0/(omega0 + omega), Gamma = Gamma(theta, omega)
* RWA      x = 1,                          Gamma = Gamma(theta, omega)
* MARKOV   x = 1,                          Gamma = Gamma(theta, omega0)
* MIRROR   as FULL, but a single photon port of rate Gamma(theta, omega)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .coupling import CouplingParams, angle_factor, electronic_gamma, gamma_k, gamma_theta
from .errors import HalfMaxNotBracketed


class ModelVariant(enum.Enum):
    FULL = "full"
    RWA = "rwa"
    MARKOV = "markov"
    MIRROR = "mirror"

    @classmethod
    def parse(cls, value) -> "ModelVariant":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown variant {value!r}; expected one of "
                             f"{[v.value for v in cls]}") from None


@dataclass(frozen=True)
class ScatteringMatrix:
    u: np.ndarray
    variant: ModelVariant

    @property
    def t(self) -> complex:
        return 0j if self.variant is ModelVariant.MIRROR else complex(self.u[0, 0])

    @property
    def r(self) -> complex:
        if self.variant is ModelVariant.MIRROR:
            return complex(self.u[0, 0])
        return complex(self.u[1, 0])


@dataclass(frozen=True)
class SpectralTable:
    omega_over_omega0: np.ndarray
    t: np.ndarray
    r: np.ndarray
    alpha: np.ndarray
    variant: ModelVariant
    g: float
    Q: float
    theta_deg: float

    @property
    def reflectivity(self):
        return np.abs(self.r) ** 2

    @property
    def transmissivity(self):
        return np.abs(self.t) ** 2


def _rates(p: CouplingParams, omega, variant, theta_deg=None, k=None):
    """Anti-resonant factor x, radiative rate Gamma and electronic rate gamma."""
    omega = np.asarray(omega, dtype=float)
    if variant is ModelVariant.MARKOV:
        if k is not None:
            raise ValueError("the Markov variant is defined at fixed angle only")
        big = np.broadcast_to(gamma_theta(p, theta_deg, p.omega0), omega.shape)
    elif k is not None:
        big = gamma_k(p, k, omega)
    else:
        big = gamma_theta(p, theta_deg, omega)
    if variant in (ModelVariant.FULL, ModelVariant.MIRROR):
        x = 2.0 * p.omega0 / (p.omega0 + omega)
    else:
        x = np.ones_like(omega)
    return x, np.asarray(big, dtype=float), electronic_gamma(p, omega)


def denominator(p: CouplingParams, omega, theta_deg=None, variant=ModelVariant.FULL, k=None):
    """D = i(omega - omega0) - x (gamma + Gamma) / 2."""
    variant = ModelVariant.parse(variant)
    x, big, small = _rates(p, omega, variant, theta_deg, k)
    return 1j * (np.asarray(omega) - p.omega0) - 0.5 * x * (small + big)


def _u_stack(p, omega, variant, theta_deg=None, k=None):
    """U for every frequency, shape (n_omega, n_ports, n_ports)."""
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    if np.any(omega <= 0):
        raise ValueError("omega must be > 0")
    x, big, small = _rates(p, omega, variant, theta_deg, k)
    d = 1j * (omega - p.omega0) - 0.5 * x * (small + big)
    if variant is ModelVariant.MIRROR:
        kappa = np.stack([big, small], axis=-1)
    else:
        kappa = np.stack([0.5 * big, 0.5 * big, small], axis=-1)
    root = np.sqrt(kappa)
    n = kappa.shape[-1]
    return np.eye(n) + (x / d)[:, None, None] * root[:, :, None] * root[:, None, :]


def build_U(p: CouplingParams, theta_deg: float, omega: float,
            variant=ModelVariant.FULL) -> ScatteringMatrix:
    """Input-output matrix at angle ``theta_deg`` and frequency ``omega``."""
    variant = ModelVariant.parse(variant)
    angle_factor(theta_deg)
    return ScatteringMatrix(_u_stack(p, omega, variant, theta_deg=theta_deg)[0], variant)


def build_U_k(p: CouplingParams, k: float, omega: float,
              variant=ModelVariant.FULL) -> ScatteringMatrix:
    """Input-output matrix at normalized in-plane wavevector ``k``."""
    variant = ModelVariant.parse(variant)
    return ScatteringMatrix(_u_stack(p, omega, variant, k=k)[0], variant)


def alpha_closed_form(p: CouplingParams, theta_deg, omega, variant=ModelVariant.FULL):
    """x^2 gamma kappa_ph / |D|^2, the absorptivity without forming U."""
    variant = ModelVariant.parse(variant)
    omega = np.asarray(omega, dtype=float)
    x, big, small = _rates(p, omega, variant, theta_deg)
    d2 = (omega - p.omega0) ** 2 + 0.25 * x**2 * (small + big) ** 2
    port = big if variant is ModelVariant.MIRROR else 0.5 * big
    return x**2 * small * port / d2


def optical_coefficients(p: CouplingParams, theta_deg: float, omega,
                         variant=ModelVariant.FULL, check_tol: float = 1e-10) -> SpectralTable:
    """t, r and alpha on a frequency grid.

    alpha is the closed form; it is checked against 1 - |t|^2 - |r|^2.
    The mirror variant has no transmitted port, so t = 0 there.
    """
    variant = ModelVariant.parse(variant)
    omega = np.asarray(omega, dtype=float)
    if omega.ndim != 1 or np.any(np.diff(omega) <= 0) or np.any(omega <= 0):
        raise ValueError("omega grid must be positive and strictly increasing")
    u = _u_stack(p, omega, variant, theta_deg=theta_deg)
    if variant is ModelVariant.MIRROR:
        t = np.zeros(omega.shape, dtype=complex)
        r = u[:, 0, 0]
    else:
        t = u[:, 0, 0]
        r = u[:, 1, 0]
    alpha = alpha_closed_form(p, theta_deg, omega, variant)
    resid = np.abs(1.0 - np.abs(t) ** 2 - np.abs(r) ** 2 - alpha)
    if resid.max(initial=0.0) > check_tol:
        raise AssertionError(f"energy balance violated by {resid.max():.3g}")
    return SpectralTable(omega / p.omega0, t, r, alpha, variant, p.g(theta_deg), p.Q, theta_deg)


def default_grid(omega0: float = 1.0, n: int = 4001, span: float = 50.0) -> np.ndarray:
    """Log-symmetric grid over [omega0/span, span omega0] with omega0 at its center."""
    return omega0 * np.geomspace(1.0 / span, span, n)


def perturbative_peaks(g):
    """Weak-coupling peak absorptivity 2g and reflectivity g^2."""
    g = np.asarray(g, dtype=float)
    return 2.0 * g, g**2


def peak_curves(g_grid, Q: float = 15.0, theta_deg: float = 45.0, omega=None,
                variant=ModelVariant.FULL) -> dict[str, np.ndarray]:
    """Peak absorptivity and reflectivity over ``omega`` for each damping ratio."""
    g_grid = np.asarray(g_grid, dtype=float)
    grid = default_grid() if omega is None else np.asarray(omega, dtype=float)
    peak_a = np.empty_like(g_grid)
    peak_r = np.empty_like(g_grid)
    for i, g in enumerate(g_grid):
        p = CouplingParams.from_gQ(g, Q, theta_deg)
        tab = optical_coefficients(p, theta_deg, grid * p.omega0, variant)
        peak_a[i] = tab.alpha.max()
        peak_r[i] = tab.reflectivity.max()
    pa, pr = perturbative_peaks(g_grid)
    return {"g": g_grid, "peak_alpha": peak_a, "peak_r2": peak_r,
            "perturbative_alpha": pa, "perturbative_r2": pr}


def _quantity(p, theta_deg, omega, variant, which):
    if which == "alpha":
        return alpha_closed_form(p, theta_deg, omega, variant)
    if which == "r":
        u = _u_stack(p, omega, variant, theta_deg=theta_deg)
        return np.abs(u[:, 0, 0] if variant is ModelVariant.MIRROR else u[:, 1, 0]) ** 2
    raise ValueError("which must be 'alpha' or 'r'")


def _bisect(f, lo, hi, tol):
    flo = f(lo)
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if np.sign(fm) == np.sign(flo):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def half_max_points(p: CouplingParams, theta_deg: float, variant=ModelVariant.FULL,
                    which: str = "alpha", omega=None, tol: float = 1e-8) -> tuple[float, float]:
    """Frequencies (in units of omega0) where the spectrum falls to half its peak.

    Raises:
        HalfMaxNotBracketed: one side never drops below half maximum on the grid.
        ValueError: the sampled spectrum is not unimodal.
    """
    variant = ModelVariant.parse(variant)
    grid = (default_grid(p.omega0, 20001, 1e3) if omega is None
            else np.asarray(omega, dtype=float))
    vals = _quantity(p, theta_deg, grid, variant, which)
    i = int(np.argmax(vals))
    d = np.diff(vals)
    if np.any(d[:i] < -1e-15 * vals[i]) or np.any(d[i:] > 1e-15 * vals[i]):
        raise ValueError("spectrum is not unimodal on the grid")

    # refine the peak on a fine local grid before taking half of it
    lo_i, hi_i = max(i - 1, 0), min(i + 1, grid.size - 1)
    fine = np.linspace(grid[lo_i], grid[hi_i], 2001)
    peak = max(vals[i], _quantity(p, theta_deg, fine, variant, which).max())
    half = 0.5 * peak

    def f(w):
        return float(_quantity(p, theta_deg, np.array([w]), variant, which)[0]) - half

    below = np.flatnonzero(vals[:i] < half)
    above = np.flatnonzero(vals[i:] < half)
    if below.size == 0:
        raise HalfMaxNotBracketed(f"{which} never falls to half maximum below the peak")
    if above.size == 0:
        raise HalfMaxNotBracketed(f"{which} never falls to half maximum above the peak")
    j_lo = below[-1]
    j_hi = i + above[0]
    w_minus = _bisect(f, grid[j_lo], grid[j_lo + 1], tol)
    w_plus = _bisect(f, grid[j_hi - 1], grid[j_hi], tol)
    return w_minus / p.omega0, w_plus / p.omega0


def markov_half_max(ratio, Q: float):
    """Markov reference lines 1 -+ (gamma + Gamma(theta, omega0)) / (2 omega0)."""
    half_width = 0.5 * (1.0 / Q + np.asarray(ratio, dtype=float))
    return 1.0 - half_width, 1.0 + half_width


def half_max_frequencies(ratios, Q: float = 15.0, variant=ModelVariant.FULL,
                         which: str = "alpha", theta_deg: float = 45.0,
                         strict: bool = True) -> dict[str, np.ndarray]:
    """Half-maximum frequencies versus Gamma(theta, omega0)/omega0 at fixed Q.

    With ``strict=False`` a side that is never bracketed is reported as NaN
    instead of raising.
    """
    variant = ModelVariant.parse(variant)
    ratios = np.asarray(ratios, dtype=float)
    lo = np.full(ratios.shape, np.nan)
    hi = np.full(ratios.shape, np.nan)
    for n, ratio in enumerate(ratios):
        p = CouplingParams.from_gQ(ratio * Q, Q, theta_deg)
        try:
            lo[n], hi[n] = half_max_points(p, theta_deg, variant, which)
        except HalfMaxNotBracketed:
            if strict:
                raise
    m_lo, m_hi = markov_half_max(ratios, Q)
    return {"ratio": ratios, "omega_minus": lo, "omega_plus": hi,
            "markov_minus": m_lo, "markov_plus": m_hi}


def markov_deviation(table: dict[str, np.ndarray]) -> np.ndarray:
    """Largest shift of omega_-+ from the Markov lines, relative to the Markov half-width."""
    half_width = table["markov_plus"] - 1.0
    dev_lo = np.abs(table["omega_minus"] - table["markov_minus"])
    dev_hi = np.abs(table["omega_plus"] - table["markov_plus"])
    return np.maximum(dev_lo, dev_hi) / half_width
