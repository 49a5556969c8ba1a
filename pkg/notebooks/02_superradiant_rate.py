# %% [markdown]
# # Superradiant decay rate and the critical angle
#
# The radiative rate of the bright plasmon grows linearly with the electron
# density. For a 100 nm well the rate at 1e14 cm^-2 is large enough for the
# radiative damping to beat a 10 meV non-radiative damping well before grazing
# incidence.

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from plasmonio import plasmons, wellbands
from plasmonio.coupling import CouplingParams, critical_angle

densities = np.geomspace(1e12, 1e14, 5)
rates, angles = [], []
for ns in densities:
    profile = wellbands.WellProfile.square_well(100.0, Ns_cm2=ns, grid_points=2048)
    modes = plasmons.plasmon_modes(wellbands.well_transitions(profile, 60))
    p = CouplingParams(modes.omega0, plasmons.bright_gamma0(modes), 10.0)
    rates.append(p.gamma0)
    angles.append(critical_angle(p))
    print(f"Ns = {ns:.1e}: omega0 = {p.omega0:6.1f} meV, hbar Gamma0 = {p.gamma0:6.2f} meV, "
          f"critical angle = {angles[-1]:5.1f} deg")

slope = np.polyfit(np.log(densities), np.log(rates), 1)[0]
print("log-log slope of Gamma0 vs Ns:", round(slope, 3))

# %%
fig, ax = plt.subplots()
ax.loglog(densities, rates, "o-")
ax.set_xlabel("N_s (cm^-2)")
ax.set_ylabel("hbar Gamma0 (meV)")
fig.savefig("superradiant_rate.png", dpi=120)
