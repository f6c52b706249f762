# %% [markdown]
# # How the axial confinement shapes the molecular-ion core
#
# The radial trap frequency is fixed, but the axial one sets the length
# of the crystal and therefore how wide the HD+ core is. This script
# holds the effective radial frequency at 0.81 MHz, varies the axial
# frequency, and looks at two things: whether the small cluster keeps
# its HD+ on a string, and the transverse excursion in the large one.
# Each setting takes roughly 20 minutes on one core.
#
#     python demos/axial_sensitivity.py 80e3 160e3

# %%
import dataclasses
import math
import sys
import warnings

import numpy as np

from lambdicke.md import C1, C2, ThermostatConfig, equilibrate, run
from lambdicke.trap import BE_PLUS, default_trap

warnings.simplefilter("ignore")
base = default_trap()
axial = [float(a) for a in sys.argv[1:]] or [80e3, 160e3]

# %%
for fz in axial:
    rf = math.sqrt(0.81e6**2 + fz**2 / 2)  # keep the effective radial frequency
    trap = dataclasses.replace(base, radial_secular_frequency_rf=rf, axial_secular_frequency=fz)

    small = equilibrate(C2, trap, ThermostatConfig(BE_PLUS, 0.013, 1e5, 0.0, rng_seed=1), 0.5e-3)
    hd = small.species_index == 0
    rho = np.hypot(small.positions[hd, 0], small.positions[hd, 1])

    th = ThermostatConfig(BE_PLUS, 0.012, 1e5, 0.0, rng_seed=12)
    big = run(C1, trap, th, 1e-3, 2e-7, equilibration=0.5e-3, record=["HD+"]).select("HD+")
    tube = np.median(np.hypot(big[..., 0], big[..., 1]).mean(axis=0))

    print(f"f_z = {fz / 1e3:.0f} kHz")
    print(f"  small cluster: HD+ distance from axis, median {np.median(rho) * 1e6:.1f} um,"
          f" max {rho.max() * 1e6:.1f} um")
    print(f"  large cluster: dx = {big[:, :, 0].std(axis=0).mean() * 1e6:.2f} um,"
          f" tube radius {tube * 1e6:.1f} um, core length {np.ptp(big[0, :, 2]) * 1e3:.2f} mm")
