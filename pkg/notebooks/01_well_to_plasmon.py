# %% [markdown]
# # From a doped quantum well to its bright plasmon
#
# Solve the envelope problem of a 15 nm GaInAs/AlInAs well, fill it with
# 1.5e13 electrons per cm^2, couple every intersubband transition through the
# dipole-dipole interaction and look at how the oscillator strength gathers
# into a single mode.

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from plasmonio import plasmons, wellbands

profile = wellbands.WellProfile.square_well(15.0, Ns_cm2=1.5e13)
bands = wellbands.solve_subbands(profile, 40)
bands = wellbands.fill_subbands(bands, profile.sheet_density, profile.well_mass)
print("bound subbands (meV):", np.round(bands.energies, 1))
print("Fermi level (meV):", round(bands.fermi_level, 1))

# %%
transitions = wellbands.build_transitions(bands, eps_s=profile.eps_s)
modes = plasmons.plasmon_modes(transitions)
for (i, f), w in zip(transitions.pairs, transitions.frequencies):
    print(f"transition {i + 1}->{f + 1}: {w:7.1f} meV")
print("plasmon energies (meV):", np.round(modes.frequencies, 1))
print("weights:", np.round(modes.weights, 3))
print(f"bright mode at {modes.omega0:.1f} meV, hbar Gamma0 = {plasmons.bright_gamma0(modes):.2f} meV")

# %% [markdown]
# The single-particle spectrum has several lines; after diagonalization almost
# all the weight sits in one blue-shifted peak. Both spectra have unit area.

# %%
omega = np.linspace(0.0, 450.0, 2000)
fig, ax = plt.subplots()
ax.plot(omega, plasmons.absorption_spectrum(transitions, 10.0, omega), label="single particle")
ax.plot(omega, plasmons.absorption_spectrum(modes, 10.0, omega, reference=transitions), label="plasmons")
ax.set_xlabel("energy (meV)")
ax.set_ylabel("absorption (1/meV)")
ax.legend()
fig.savefig("well_to_plasmon.png", dpi=120)
