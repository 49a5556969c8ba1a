# %% [markdown]
# # Plasmon content of the eigenstates
#
# Above the light cone the plasmon dissolves into the photon continuum and
# its ridge broadens with k; below the cone the negative frequency shift G
# leaves a narrow non-radiative branch of width gamma.

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from plasmonio import eigenstates as es
from plasmonio.coupling import CouplingParams

fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
for ax, g0, label in zip(axes, (1 / 30, 1 / 6), ("Gamma0 = omega0/30", "Gamma0 = omega0/6")):
    p = CouplingParams(1.0, g0, 1 / 15)
    m = es.dispersion_map(p)
    ax.pcolormesh(m.k_grid, m.omega_grid, m.normalized(), shading="nearest", cmap="magma")
    ax.plot([0, 2], [0, 2], "w--", lw=1)
    ax.set_title(label)
    ax.set_xlabel("c k / (sqrt(eps_s) omega0)")
    n, _ = es.count_ridges(m)
    widths = [round(es.radiative_ridge_fwhm(p, k), 3) for k in (0.1, 0.5, 0.9)]
    print(f"{label}: {n} ridges, radiative widths at k = 0.1, 0.5, 0.9: {widths}")
    for k in (0.5, 1.0, 1.5):
        print(f"   ENZ branch at k = {k}: Omega/omega0 = {es.enz_frequency(p, k):.4f}")
axes[0].set_ylabel("Omega / omega0")
fig.savefig("dispersion_map.png", dpi=120)
