"""Subbands and intersubband transitions of a doped quantum well.

The envelope-function problem

    -(hbar^2/2) d/dz [1/m(z) d psi/dz] + V(z) psi = E psi

is discretized with second-order finite differences on a uniform grid
(BenDaniel-Duke ordering, inverse mass averaged onto half nodes) with
psi = 0 at both grid ends. The tridiagonal eigenproblem is handed to
LAPACK through :func:`scipy.linalg.eigh_tridiagonal`.

Conventions: energies in meV, positions in nm, wavefunctions in nm^-1/2,
sheet densities in cm^-2. Intersubband currents are stored multiplied by
sqrt(S), the sample area, so that they are area independent (A/m).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import constants as const
from .errors import GridTooCoarse, NoBoundState

# GaInAs / AlInAs defaults; only used to build profiles, never inside solvers.
GAINAS_MASS = 0.043
ALINAS_OFFSET_MEV = 520.0
GAINAS_EPS = 12.9

RICHARDSON_TOL_MEV = 0.1


@dataclass(frozen=True)
class WellProfile:
    """Microscopic input: a 1D conduction-band profile and its doping.

    Attributes:
        z_grid: uniform positions (nm).
        potential: conduction band edge V(z) (meV).
        eff_mass: effective mass in units of m_e, scalar or one value per node.
        eps_s: static dielectric constant.
        sheet_density: N_s (cm^-2).
        temperature: electronic temperature used for Fermi filling (K).
    """

    z_grid: np.ndarray
    potential: np.ndarray
    eff_mass: float | np.ndarray = GAINAS_MASS
    eps_s: float = GAINAS_EPS
    sheet_density: float = 0.0
    temperature: float = 0.0

    def __post_init__(self):
        z = np.asarray(self.z_grid, dtype=float)
        v = np.asarray(self.potential, dtype=float)
        m = np.broadcast_to(np.asarray(self.eff_mass, dtype=float), z.shape)
        if z.ndim != 1 or z.size < 3:
            raise ValueError("z_grid needs at least 3 points")
        if v.shape != z.shape:
            raise ValueError("potential must be sampled on z_grid")
        dz = np.diff(z)
        if np.any(dz <= 0):
            raise ValueError("z_grid must be strictly increasing")
        if np.max(np.abs(dz - dz.mean())) > 1e-9 * dz.mean():
            raise ValueError("z_grid must be uniform")
        if not np.all(np.isfinite(v)):
            raise ValueError("potential must be finite")
        if np.any(m <= 0):
            raise ValueError("eff_mass must be positive")
        if self.eps_s < 1:
            raise ValueError("eps_s must be >= 1")
        if self.sheet_density < 0 or self.temperature < 0:
            raise ValueError("sheet_density and temperature must be >= 0")
        object.__setattr__(self, "z_grid", z)
        object.__setattr__(self, "potential", v)

    @property
    def spacing(self) -> float:
        return float(self.z_grid[1] - self.z_grid[0])

    @property
    def mass_profile(self) -> np.ndarray:
        return np.broadcast_to(np.asarray(self.eff_mass, dtype=float), self.z_grid.shape)

    @property
    def well_mass(self) -> float:
        """Mass used for the 2D density of states (value at the band minimum)."""
        return float(self.mass_profile[np.argmin(self.potential)])

    @classmethod
    def square_well(cls, well_nm, barrier_meV=ALINAS_OFFSET_MEV, eff_mass=GAINAS_MASS,
                    eps_s=GAINAS_EPS, Ns_cm2=0.0, grid_points=1024, barrier_pad_nm=20.0,
                    temperature=0.0):
        """Symmetric square well of width ``well_nm`` between two barriers."""
        total = well_nm + 2.0 * barrier_pad_nm
        z = np.linspace(0.0, total, int(grid_points))
        h = z[1] - z[0]
        # barrier fraction of each node's cell, so the interfaces need not sit on nodes
        inside = np.clip(0.5 * well_nm - (np.abs(z - 0.5 * total) - 0.5 * h), 0.0, h) / h
        v = float(barrier_meV) * (1.0 - inside)
        return cls(z, v, eff_mass, eps_s, Ns_cm2, temperature)


@dataclass(frozen=True)
class SubbandSet:
    """Bound states of a profile, optionally filled with electrons.

    ``populations`` are zero and ``fermi_level`` equals the ground state
    until :func:`fill_subbands` has been applied.
    """

    z_grid: np.ndarray
    energies: np.ndarray
    wavefunctions: np.ndarray  # shape (n_states, n_z)
    fermi_level: float
    populations: np.ndarray
    eff_mass: float | np.ndarray = GAINAS_MASS

    @property
    def n_states(self) -> int:
        return len(self.energies)

    def overlap_matrix(self) -> np.ndarray:
        """Trapezoid-rule overlaps <psi_i|psi_j> on the stored grid."""
        psi = self.wavefunctions
        return np.trapezoid(psi[:, None, :] * psi[None, :, :], self.z_grid, axis=-1)


@dataclass(frozen=True)
class TransitionSet:
    """Optically active intersubband transitions.

    ``currents[a]`` is j_a(z) * sqrt(S) in A/m sampled on ``z_grid`` (nm).
    """

    z_grid: np.ndarray
    pairs: list[tuple[int, int]]
    frequencies: np.ndarray  # hbar w_a in meV
    delta_pop: np.ndarray  # cm^-2
    currents: np.ndarray
    eff_mass: float | np.ndarray = GAINAS_MASS
    eps_s: float = GAINAS_EPS

    def __len__(self):
        return len(self.pairs)

    @property
    def integrated_currents(self) -> np.ndarray:
        """int j_a sqrt(S) dz in A."""
        return np.trapezoid(self.currents, const.nm_to_m(self.z_grid), axis=-1)

    def scaled(self, factor: float) -> "TransitionSet":
        """Same wavefunctions, every population difference multiplied by ``factor``."""
        return replace(self, delta_pop=self.delta_pop * factor,
                       currents=self.currents * np.sqrt(factor))


def _hamiltonian_bands(z, potential, mass):
    """Diagonal and off-diagonal of the interior finite-difference Hamiltonian."""
    h = z[1] - z[0]
    inv_m = 1.0 / np.asarray(mass, dtype=float)
    inv_m_half = 0.5 * (inv_m[1:] + inv_m[:-1])
    t = const.HBAR2_2M0 * inv_m_half / h**2
    diag = potential[1:-1] + t[:-1] + t[1:]
    off = -t[1:-1]
    return diag, off


def _lowest_states(z, potential, mass, n):
    diag, off = _hamiltonian_bands(z, potential, mass)
    n = min(n, diag.size)
    energies, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, n - 1))
    return energies, vecs


def _refined(profile: WellProfile):
    z = profile.z_grid
    zf = np.linspace(z[0], z[-1], 2 * z.size - 1)
    vf = np.interp(zf, z, profile.potential)
    mf = np.interp(zf, z, profile.mass_profile)
    return zf, vf, mf


def ground_state_error(profile: WellProfile) -> float:
    """Richardson estimate (meV) of the discretization error of E_1."""
    e_h, _ = _lowest_states(profile.z_grid, profile.potential, profile.mass_profile, 1)
    e_h2, _ = _lowest_states(*_refined(profile), 1)
    return abs(e_h[0] - e_h2[0]) * 4.0 / 3.0


def solve_subbands(profile: WellProfile, n_states: int = 10,
                   check_grid: bool = True) -> SubbandSet:
    """Lowest bound states of ``profile``.

    States at or above the lower of the two edge potentials are not bound
    and are dropped, so fewer than ``n_states`` may come back.

    Raises:
        NoBoundState: nothing lies below the barrier top.
        GridTooCoarse: the Richardson estimate of the E_1 error exceeds 0.1 meV.
    """
    if n_states < 1:
        raise ValueError("n_states must be >= 1")
    z, v, m = profile.z_grid, profile.potential, profile.mass_profile
    energies, vecs = _lowest_states(z, v, m, n_states)
    barrier_top = min(v[0], v[-1])
    bound = energies < barrier_top
    if not np.any(bound):
        raise NoBoundState(f"no state below the barrier top ({barrier_top:g} meV)")
    if check_grid:
        err = ground_state_error(profile)
        if err > RICHARDSON_TOL_MEV:
            raise GridTooCoarse(f"estimated E1 error {err:.3g} meV exceeds "
                                f"{RICHARDSON_TOL_MEV} meV; refine z_grid")
    energies, vecs = energies[bound], vecs[:, bound]

    h = profile.spacing
    psi = np.zeros((energies.size, z.size))
    psi[:, 1:-1] = vecs.T / np.sqrt(h)
    # deterministic sign: first lobe positive
    for row in psi:
        lead = np.flatnonzero(np.abs(row) > 1e-3 * np.abs(row).max())[0]
        if row[lead] < 0:
            row *= -1.0
    return SubbandSet(z, energies, psi, float(energies[0]), np.zeros(energies.size),
                      profile.eff_mass)


def dos_2d(eff_mass: float) -> float:
    """Spin-degenerate 2D density of states m*/(pi hbar^2) in cm^-2 meV^-1."""
    dos_si = eff_mass * const.M_E / (np.pi * const.HBAR**2)  # J^-1 m^-2
    return dos_si * const.MEV * const.CM2


def _degenerate_fermi_level(energies, Ns, dos):
    for n in range(1, energies.size + 1):
        ef = (Ns / dos + energies[:n].sum()) / n
        if n == energies.size or ef <= energies[n]:
            return ef
    raise AssertionError("unreachable")


def _thermal_density(ef, energies, dos, kT):
    return dos * kT * np.logaddexp(0.0, (ef - energies) / kT).sum()


def fill_subbands(subbands: SubbandSet, Ns: float, eff_mass: float,
                  temperature: float = 0.0) -> SubbandSet:
    """Fill the bound subbands with ``Ns`` electrons per cm^2.

    At T = 0 the piecewise-linear filling law is inverted exactly. At
    T > 0, E_F is bisected until the total density matches to 1e-10.
    """
    if Ns < 0:
        raise ValueError("Ns must be >= 0")
    energies = subbands.energies
    if Ns == 0:
        return replace(subbands, fermi_level=float(energies[0]),
                       populations=np.zeros_like(energies))
    dos = dos_2d(eff_mass)
    ef = _degenerate_fermi_level(energies, Ns, dos)
    if temperature == 0:
        pops = dos * np.clip(ef - energies, 0.0, None)
    else:
        kT = const.KB_MEV * temperature
        hi = ef
        lo = ef - 1.0
        while _thermal_density(lo, energies, dos, kT) > Ns:
            lo -= 2.0 * (hi - lo)
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            n_mid = _thermal_density(mid, energies, dos, kT)
            if abs(n_mid - Ns) <= 1e-12 * Ns:
                break
            if n_mid > Ns:
                hi = mid
            else:
                lo = mid
        ef = mid
        pops = dos * kT * np.logaddexp(0.0, (ef - energies) / kT)
    return replace(subbands, fermi_level=float(ef), populations=pops)


def build_transitions(subbands: SubbandSet, eff_mass=None,
                      eps_s: float = GAINAS_EPS) -> TransitionSet:
    """Intersubband transitions with a positive population difference.

    For each pair i < f the current density (times sqrt(S)) is

        j(z) = (e hbar / 2 m*) sqrt(dN) [psi_i psi_f' - psi_f psi_i'],

    and transitions are ordered by energy, ties by ascending int j^2 dz.
    """
    if not np.any(subbands.populations > 0):
        raise ValueError("at least one subband must be occupied")
    mass = subbands.eff_mass if eff_mass is None else eff_mass
    z = subbands.z_grid
    z_m = const.nm_to_m(z)
    mass_si = np.asarray(mass, dtype=float) * const.M_E
    psi = subbands.wavefunctions / np.sqrt(const.NM)  # m^-1/2
    dpsi = np.gradient(psi, z_m, axis=-1)
    pops = subbands.populations

    rows = []
    for i in range(subbands.n_states):
        for f in range(i + 1, subbands.n_states):
            dn = pops[i] - pops[f]
            if dn <= 0:
                continue
            xi = psi[i] * dpsi[f] - psi[f] * dpsi[i]
            j = const.E_CHARGE * const.HBAR / (2.0 * mass_si) * np.sqrt(
                const.per_cm2_to_per_m2(dn)) * xi
            w = subbands.energies[f] - subbands.energies[i]
            rows.append((w, np.trapezoid(j**2, z_m), (i, f), dn, j))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    if not rows:
        return TransitionSet(z, [], np.zeros(0), np.zeros(0), np.zeros((0, z.size)),
                             mass, eps_s)
    return TransitionSet(
        z_grid=z,
        pairs=[r[2] for r in rows],
        frequencies=np.array([r[0] for r in rows]),
        delta_pop=np.array([r[3] for r in rows]),
        currents=np.array([r[4] for r in rows]),
        eff_mass=mass,
        eps_s=eps_s,
    )


def plasma_frequency_sq(transitions: TransitionSet, eps_s: float | None = None) -> np.ndarray:
    """(hbar omega_P)^2 in meV^2 of each transition taken in isolation.

    omega_P^2 = 2 S int j^2 dz / (hbar eps0 eps_s w).
    """
    eps = transitions.eps_s if eps_s is None else eps_s
    w = const.mev_to_rad_s(transitions.frequencies)
    jj = np.trapezoid(transitions.currents**2, const.nm_to_m(transitions.z_grid), axis=-1)
    omega_p2 = 2.0 * jj / (const.HBAR * const.EPS0 * eps * w)
    return const.rad_s_to_mev(np.sqrt(omega_p2)) ** 2


def well_transitions(profile: WellProfile, n_states: int = 40) -> TransitionSet:
    """Full microscopic chain: solve, fill at the profile's density, build transitions."""
    bands = solve_subbands(profile, n_states)
    bands = fill_subbands(bands, profile.sheet_density, profile.well_mass,
                          profile.temperature)
    return build_transitions(bands, eps_s=profile.eps_s)
