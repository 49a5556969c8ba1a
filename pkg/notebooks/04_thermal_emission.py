# %% [markdown]
# # Incandescent emission
#
# Hot electrons (T_el) and a cold photon bath (T_ph = 0) feed the output
# port through the input-output matrix. The emitted occupancy is the
# absorptivity times the electronic Bose factor; with a mirror at critical
# coupling it reaches the blackbody value at omega0.

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from plasmonio import constants as const
from plasmonio import thermal as th
from plasmonio.coupling import CouplingParams
from plasmonio.scattering import default_grid

w0 = 100.0
t_el = w0 / const.KB_MEV
grid = default_grid(w0, 20001)

fig, ax = plt.subplots()
for big in (w0 / 40, w0 / 20, w0 / 10):
    p = CouplingParams.from_gQ(big / (w0 / 200), 200.0, omega0=w0)
    s = th.ThermalScenario(p, t_el, 0.0, 45.0, "full", grid)
    emission = th.emitted_spectrum(s)
    power = th.integrated_power(s, (w0 / 50, 50 * w0))
    print(f"Gamma = {big:5.2f} meV: integrated power {power:.3f} meV^2")
    ax.plot(grid, emission.power_density, label=f"Gamma = {big:g} meV")
ax.set_xlim(60, 140)
ax.set_xlabel("energy (meV)")
ax.set_ylabel("hbar omega n_out (meV)")
ax.legend()
fig.savefig("thermal_emission.png", dpi=120)

# %%
p = CouplingParams.from_gQ(1.0, 15.0, omega0=w0)
mirror = th.emitted_spectrum(th.ThermalScenario(p, 600.0, 0.0, 45.0, "mirror", np.array([w0])))
print("mirror peak occupancy:", mirror.photons_out[0], "Bose factor:", th.bose_occupancy(w0, 600.0))
