"""Physical constants and the unit boundary.

All constants are CODATA values taken from :mod:`scipy.constants`. The public
API speaks meV, nm, K, cm^-2 and degrees; physics kernels that need SI go
through the converters below and nowhere else.
"""

from scipy import constants as _c

HBAR = _c.hbar
E_CHARGE = _c.e
M_E = _c.m_e
EPS0 = _c.epsilon_0
C_LIGHT = _c.c
K_B = _c.k

MEV = 1e-3 * _c.e  # J per meV
NM = 1e-9
CM2 = 1e-4  # m^2 per cm^2

# hbar^2 / (2 m_e) in meV nm^2
HBAR2_2M0 = HBAR**2 / (2.0 * M_E) / (MEV * NM**2)

# k_B in meV / K
KB_MEV = K_B / MEV


def mev_to_rad_s(energy_mev):
    """Angular frequency (rad/s) of a photon energy given in meV."""
    return energy_mev * MEV / HBAR


def rad_s_to_mev(omega):
    return omega * HBAR / MEV


def joule_to_mev(energy):
    return energy / MEV


def per_cm2_to_per_m2(density):
    return density / CM2


def nm_to_m(length):
    return length * NM
