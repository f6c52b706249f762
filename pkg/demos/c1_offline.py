# %% [markdown]
# # The full cluster at 12 mK (offline run)
#
# 200 HD+ in 2000 Be+ for 5 ms after a 0.5 ms equilibration. On a single
# core this takes about an hour, so it is not part of the test suite.
# The summary it writes, ``tests/data/c1_offline.json``, is what the
# acceptance tests check against.
#
#     python demos/c1_offline.py                      # simulate, then summarise
#     python demos/c1_offline.py --from out/c1.ldtraj  # summarise an existing run

# %%
import argparse
import json
import logging
import warnings
from pathlib import Path

from lambdicke.lineshape import gaussian_peak_estimate, lamb_dicke_peak, single_ion_peak_estimate
from lambdicke.md import C1, ThermostatConfig, run
from lambdicke.motion import coordinate_rms_variation
from lambdicke.trajectory import load_trajectory, save_trajectory
from lambdicke.trap import BE_PLUS, default_trap

ROOT = Path(__file__).resolve().parent.parent
WAVELENGTHS = (10e-6, 50e-6, 228e-6)

parser = argparse.ArgumentParser(description="Offline run of the full cluster")
parser.add_argument("--from", dest="source", type=Path, help="existing trajectory file")
parser.add_argument("--temperature", type=float, default=0.012)
parser.add_argument("--seed", type=int, default=12)
parser.add_argument("--save", type=Path, default=ROOT / "out" / "c1_12mK.ldtraj")
parser.add_argument("--json", type=Path, default=ROOT / "tests" / "data" / "c1_offline.json")
args = parser.parse_args()
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

# %% [markdown]
# Only the HD+ positions are recorded; 2000 Be+ over 25 000 frames would
# need more than a gigabyte.

# %%
if args.source is None:
    th = ThermostatConfig(BE_PLUS, args.temperature, 1e5, 0.0, rng_seed=args.seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        traj = run(C1, default_trap(), th, 5e-3, 2e-7, equilibration=0.5e-3, record=["HD+"])
    args.save.parent.mkdir(parents=True, exist_ok=True)
    save_trajectory(traj, args.save)
    wall = traj.metadata.get("wall_time_s")
else:
    traj = load_trajectory(args.source)
    wall = None

# %% [markdown]
# Amplitude of the HD+ motion along the spectroscopy axis and the
# resulting Lamb-Dicke peak, next to the two closed-form estimates.

# %%
dx = coordinate_rms_variation(traj, "HD+", "x").value
dy = coordinate_rms_variation(traj, "HD+", "y").value
summary = {
    "temperature_target_K": args.temperature,
    "temperature_hd_K": traj.temperatures["HD+"],
    "temperature_be_K": traj.temperatures.get("Be+"),
    "duration_s": traj.duration,
    "sample_interval_s": traj.sample_interval,
    "seed": args.seed,
    "wall_time_s": wall,
    "delta_x_m": dx,
    "delta_y_m": dy,
    "L0": {f"{lam:.2e}": lamb_dicke_peak(traj, lam, species="HD+") for lam in WAVELENGTHS},
    "L_g": {f"{lam:.2e}": float(gaussian_peak_estimate(dx, lam)) for lam in WAVELENGTHS},
    "L_sp": {f"{lam:.2e}": float(single_ion_peak_estimate(dx, lam)) for lam in WAVELENGTHS},
}
print(f"T(HD+) = {summary['temperature_hd_K'] * 1e3:.1f} mK, dx = {dx * 1e6:.2f} um, dy = {dy * 1e6:.2f} um")
for lam in WAVELENGTHS:
    key = f"{lam:.2e}"
    print(f"  {lam * 1e6:5.0f} um  L(0) = {summary['L0'][key]:.4f}"
          f"  L_g = {summary['L_g'][key]:.4f}  L_sp = {summary['L_sp'][key]:.4f}")

args.json.parent.mkdir(parents=True, exist_ok=True)
args.json.write_text(json.dumps(summary, indent=2) + "\n")
