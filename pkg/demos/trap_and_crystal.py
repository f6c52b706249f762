# %% [markdown]
# # Trap frequencies and a small two-species crystal
#
# The pseudopotential gives each species its own secular frequencies:
# the radial confinement scales with 1/m, so the light HD+ ions feel a
# much stiffer radial trap than Be+ and collect on the axis.

# %%
import warnings

import numpy as np

from lambdicke.md import ClusterSpec, ThermostatConfig, equilibrate, kinetic_temperature
from lambdicke.trap import BE_PLUS, HD_PLUS, default_trap, secular_frequencies

trap = default_trap()
for sp in (HD_PLUS, BE_PLUS):
    fx, fy, fz = secular_frequencies(sp, trap)
    print(f"{sp.name:4s} f_x = {fx / 1e3:7.1f} kHz  f_y = {fy / 1e3:7.1f} kHz  f_z = {fz / 1e3:5.1f} kHz")

# %% [markdown]
# Laser cooling acts on Be+ only. The Langevin bath (friction 1e5 /s)
# brings the crystal to about 13 mK; the HD+ ions are cooled through
# the Coulomb coupling alone.

# %%
spec = ClusterSpec((HD_PLUS, BE_PLUS), (10, 100), label="small")
bath = ThermostatConfig(BE_PLUS, 0.013, 1e5, 0.0, rng_seed=2)
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    state = equilibrate(spec, trap, bath, 0.5e-3)

for sp in (HD_PLUS, BE_PLUS):
    print(f"T({sp.name}) = {kinetic_temperature(state, sp) * 1e3:.1f} mK")

# %% [markdown]
# Distance from the trap axis: the HD+ ions sit inside the Be+ shell.

# %%
rho = np.hypot(state.positions[:, 0], state.positions[:, 1])
for k, sp in enumerate(state.species):
    r = rho[state.species_index == k] * 1e6
    print(f"{sp.name:4s} rho: median {np.median(r):5.1f} um, max {r.max():5.1f} um")
