# %% [markdown]
# # Motion of the molecular ions in a 550-ion crystal
#
# 50 HD+ and 500 Be+ at three bath temperatures, 1 ms each. We look at
# the r.m.s. excursion of each HD+ ion along the spectroscopy axis and
# at the spectrum of that motion, which is dominated by the radial
# secular frequency.

# %%
import warnings
from pathlib import Path

import numpy as np

from lambdicke.md import C2, ThermostatConfig, run
from lambdicke.motion import coordinate_rms_variation, linear_spectral_density, transverse_histogram
from lambdicke.trajectory import save_trajectory
from lambdicke.trap import BE_PLUS, HD_PLUS, default_trap, secular_frequencies

trap = default_trap()
out = Path(__file__).resolve().parent.parent / "out"
out.mkdir(exist_ok=True)
runs = {}
for T in (0.013, 0.033, 0.067):
    bath = ThermostatConfig(BE_PLUS, T, 1e5, 0.0, rng_seed=1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        runs[T] = run(C2, trap, bath, 1e-3, 1e-7, equilibration=0.5e-3, record=["HD+"])
    save_trajectory(runs[T], out / f"c2_{T * 1e3:g}mK.ldtraj")

# %%
for T, traj in runs.items():
    dx = coordinate_rms_variation(traj, "HD+", "x").value
    dz = coordinate_rms_variation(traj, "HD+", "z").value
    print(f"{T * 1e3:4.0f} mK  T(HD+) = {traj.temperatures['HD+'] * 1e3:5.1f} mK"
          f"  dx = {dx * 1e6:.2f} um  dz = {dz * 1e6:.2f} um"
          f"  ({traj.metadata['wall_time_s']:.0f} s)")

# %% [markdown]
# The spectral density of x: the strongest feature sits near the HD+
# radial frequency, shifted by the Coulomb coupling to the Be+ shell.

# %%
f_r = secular_frequencies(HD_PLUS, trap)[0]
sd = linear_spectral_density(runs[0.033], "x", "HD+")
band = (sd.frequency > 0.3e6) & (sd.frequency < 1.5e6)
peak = sd.frequency[band][np.argmax(sd.density[band])]
print(f"radial secular frequency {f_r / 1e6:.3f} MHz, spectral peak {peak / 1e6:.3f} MHz")
print(f"integrated variance {sd.integrated_variance():.3e} m^2")

# %% [markdown]
# Transverse occupation of the coldest run. The counts are normalised
# to one; the HD+ string shows up as a compact spot on the axis.

# %%
h = transverse_histogram(runs[0.013], "HD+", bins=32)
inner = h.counts[12:20, 12:20].sum()
print(f"fraction of HD+ samples in the central quarter of the grid width: {inner:.2f}")
