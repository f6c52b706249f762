# %% [markdown]
# # Simulated spectra, line fits and the error budget
#
# Dissociation spectra at three probe powers, using the experiment
# preset. At high power the line is power broadened to about 12 kHz; at
# the lowest power it narrows to about 1.3 kHz.

# %%
import math

import numpy as np

from lambdicke.config import RunConfig, load_preset
from lambdicke.hyperfine import zeeman_pair_stats
from lambdicke.spectro import doppler_fwhm, fit_lorentzian, power_broadened_fwhm, rabi_frequency, rempd_spectrum
from lambdicke.systematics import systematics_budget
from lambdicke.trap import HD_PLUS

cfg = RunConfig(load_preset("EXPERIMENT"), "EXPERIMENT")
sp, model = cfg.spectroscopy, cfg.transition_model
B = sp["magnetic_field"]

# %% [markdown]
# For comparison: a free ion at 10 mK would show a Doppler width of
# tens of kHz, far above the widths seen here. The fitted widths come
# out above the bare power-broadened value because the dissociation
# signal saturates near line centre and the two Zeeman components add.

# %%
print(f"Doppler FWHM at 10 mK: {doppler_fwhm(model.f_spin_avg, 0.010, HD_PLUS.mass) / 1e3:.1f} kHz")

for k, power in enumerate(sp["powers"]):
    beam = cfg.beam(power)
    width = power_broadened_fwhm(rabi_frequency(beam))
    det = np.linspace(-1, 1, sp["n_points"]) * sp["detuning_span"] * width
    signal = rempd_spectrum(beam, model, B, det, sp["dissociation_rate"], sp["detection_time"],
                            noise_seed=cfg.noise_seed + k, noise_sigma=sp["noise_sigma"],
                            weight_plus=sp["weight_plus"])
    fit = fit_lorentzian(det, signal)
    print(f"P = {power * 1e9:5.2f} nW  power-broadened {width / 1e3:6.2f} kHz"
          f"  fitted {fit.params.fwhm / 1e3:6.2f} +- {fit.uncertainties.fwhm / 1e3:.2f} kHz"
          f"  centre {fit.params.center:+7.1f} Hz")

# %% [markdown]
# The Zeeman pair is unresolved, so its half-splitting enters the
# budget as an uncertainty rather than a correction.

# %%
pair = zeeman_pair_stats(model, B)
budget = systematics_budget(B, model)
print(f"pair splitting {pair.splitting:.0f} Hz")
for e in budget.entries:
    print(f"{e.name:12s} correction {e.correction:+7.1f} Hz  uncertainty {e.uncertainty:6.1f} Hz")
print(f"total: correction {budget.total_correction:+.1f} Hz, uncertainty {budget.total_uncertainty:.1f} Hz")
print(f"with the frequency reference: {math.hypot(budget.total_uncertainty, model.f_spin_avg_uncertainty, model.hyperfine_shift_uncertainty):.1f} Hz")
