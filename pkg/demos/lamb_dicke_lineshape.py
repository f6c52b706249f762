# %% [markdown]
# # Line shape of a rotational transition in the crystal
#
# For an ion moving along the probe axis the spectrum is the power
# spectrum of exp(i k x(t)). The weight left at zero detuning, L(0), is
# the Lamb-Dicke peak. When the motion is small compared with the
# wavelength nearly all the weight stays in that carrier.

# %%
import warnings

import numpy as np

from lambdicke.lineshape import (
    gaussian_peak_estimate,
    lamb_dicke_peak,
    lineshape,
    single_ion_peak_estimate,
)
from lambdicke.md import C2, ThermostatConfig, run
from lambdicke.motion import coordinate_rms_variation
from lambdicke.trap import BE_PLUS, default_trap

bath = ThermostatConfig(BE_PLUS, 0.013, 1e5, 0.0, rng_seed=1)
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    traj = run(C2, default_trap(), bath, 1e-3, 1e-7, equilibration=0.5e-3, record=["HD+"])
dx = coordinate_rms_variation(traj, "HD+", "x").value
print(f"dx = {dx * 1e6:.2f} um")

# %% [markdown]
# Exact peak against two closed forms: a Gaussian distribution of
# positions, and a single harmonic oscillation with the same r.m.s.
# amplitude.

# %%
print(" lambda    L(0)    L_g     L_sp")
for lam in (10e-6, 50e-6, 228e-6, 1e-3):
    L0 = lamb_dicke_peak(traj, lam, species="HD+")
    print(f"{lam * 1e6:6.0f}  {L0:.4f}  {gaussian_peak_estimate(dx, lam):.4f}"
          f"  {single_ion_peak_estimate(dx, lam):.4f}")

# %% [markdown]
# The full line shape at 10 um: a carrier at zero detuning with motional
# sidebands near the secular frequencies. The weights add up to one.

# %%
ls = lineshape(traj, 10e-6, species="HD+")
order = np.argsort(ls.weights)[::-1][:6]
print(f"sum of weights {ls.weights.sum():.12f}")
for i in order:
    print(f"  {ls.detuning[i] / 1e3:9.1f} kHz  {ls.weights[i]:.4f}")
