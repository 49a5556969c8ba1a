# %% [markdown]
# # Weak, strong and ultra-strong radiative coupling
#
# With Q = 15 the damping ratio g sets the shape of the absorption and
# reflection spectra. Critical coupling (g = 1) gives 50% absorption; a mirror
# behind the well turns it into total absorption. Once Gamma(theta, omega0)
# approaches omega0 the antiresonant terms matter and the rotating-wave
# approximation fails.

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from plasmonio import scattering as sc
from plasmonio.coupling import CouplingParams

grid = sc.default_grid()
fig, (ax_a, ax_r) = plt.subplots(1, 2, figsize=(10, 4))
for g in (0.1, 1.0, 10.0):
    tab = sc.optical_coefficients(CouplingParams.from_gQ(g, 15.0), 45.0, grid)
    ax_a.semilogx(grid, tab.alpha, label=f"g = {g}")
    ax_r.semilogx(grid, tab.reflectivity, label=f"g = {g}")
ax_a.set_xlim(0.2, 5)
ax_r.set_xlim(0.2, 5)
ax_a.set_ylabel("absorptivity")
ax_r.set_ylabel("reflectivity")
ax_a.legend()
fig.savefig("coupling_regimes.png", dpi=120)

# %%
peaks = sc.peak_curves(np.geomspace(1e-2, 1e2, 9))
for g, a, r in zip(peaks["g"], peaks["peak_alpha"], peaks["peak_r2"]):
    print(f"g = {g:8.3f}: peak alpha = {a:.4f}, peak |r|^2 = {r:.4f}")

mirror = sc.optical_coefficients(CouplingParams.from_gQ(1.0, 15.0), 45.0, np.array([1.0]), "mirror")
print("mirror, g = 1: alpha(omega0) =", mirror.alpha[0])

# %% [markdown]
# Half-maximum frequencies against the Markov prediction: below
# Gamma/omega0 ~ 0.2 the two agree within a few percent of the half-width,
# beyond ~0.3 they separate and omega_- stays positive.

# %%
ratios = np.array([0.1, 0.2, 0.3, 0.5, 1.0, 2.0])
hm = sc.half_max_frequencies(ratios, 15.0, "full")
for r, dev, lo in zip(ratios, sc.markov_deviation(hm), hm["omega_minus"]):
    print(f"Gamma/omega0 = {r:4.2f}: deviation {100 * dev:5.1f}%, omega_-/omega0 = {lo:.3f}")

rwa = sc.optical_coefficients(CouplingParams.from_gQ(15.0, 15.0), 45.0, np.array([1e7]), "rwa",
                              check_tol=1e-6)
print("RWA reflectivity far above resonance:", rwa.reflectivity[0])
