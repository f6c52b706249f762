# %% [markdown]
# # Hyperfine structure and Zeeman shift of the probed transition
#
# The spin-free rotational frequency plus the hyperfine shift of the
# stretched states gives the line at zero field. In a magnetic field the
# two stretched-state components move in opposite directions, so their
# mean is field-free to first order.

# %%
from decimal import Decimal

from lambdicke.hyperfine import (
    GAUSS,
    TransitionModel,
    hdplus_coefficients,
    hyperfine_shift,
    transition_frequency,
    zeeman_pair_stats,
)

sets = hdplus_coefficients()
model = TransitionModel(1314925.752627e6, sets[(0, 0)], sets[(0, 1)])
print(f"hyperfine shift from the coefficients: {hyperfine_shift(model) / 1e6:.4f} MHz")

# %% [markdown]
# The composition is done in decimal arithmetic so nothing is lost to
# binary rounding. The reference hyperfine shift can be pinned in the
# model when it should override the coefficient evaluation.

# %%
total = Decimal("1314925.752627") + Decimal("10.0747")
print(f"f(B=0) = {total.quantize(Decimal('0.0001'))} MHz")
pinned = TransitionModel(1314925.752627e6, sets[(0, 0)], sets[(0, 1)], hyperfine_shift_reference=10.0747e6)
print(f"model, pinned: {transition_frequency(pinned, 'T+', 0.0) / 1e6:.4f} MHz")

# %%
f0 = transition_frequency(model, "T+", 0.0)
for branch in ("T+", "T-"):
    slope = transition_frequency(model, branch, GAUSS) - f0
    print(f"{branch}: {slope / 1e3:+.3f} kHz/G")
for B in (0.1, 0.4, 1.0):
    pair = zeeman_pair_stats(model, B * GAUSS)
    print(f"B = {B:.1f} G  splitting {pair.splitting / 1e3:.3f} kHz  mean - f0 {pair.residual:.2e} Hz")
