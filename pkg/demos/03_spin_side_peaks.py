# %% [markdown]
# # Spin side peaks
#
# With a spin-orbit field, each arm rotates the spin differently. For
# unpolarized electrons the transmission is T = (1 + c cos phi) / 2, where
# c = tr(U_upper^dagger U_lower) / 2 is the overlap of the two arm rotations.
# As B grows the Zeeman precession advances, c oscillates, and the h/e line
# acquires sidebands.

# %%
import numpy as np

from spinab import shipped_config
from spinab.interference import arm_propagators
from spinab.pipeline import check_side_peaks, side_peak_recipe

result = side_peak_recipe()
ring, sweep = result.ring, result.sweep
print(open(shipped_config("side_peaks")).read())

# %%
b = np.linspace(sweep.b_min, sweep.b_max, 7)
u_up, u_lo = arm_propagators(b, ring)
overlap = 0.5 * np.trace(np.swapaxes(u_up.conj(), -1, -2) @ u_lo, axis1=-2, axis2=-1).real
for bi, ci in zip(b, overlap):
    print(f"B = {bi:.2f} T   c = {ci:+.3f}")

# %% [markdown]
# Peaks of the background-subtracted, Hann-windowed resistance spectrum.

# %%
for p in result.peaks:
    print(f"{p.kind:9s} f = {p.freq:8.2f} 1/T   flux ratio = {p.flux_ratio:.4f}   power = {p.power:.3g}")
ok, msg = check_side_peaks(result)
print("PASS" if ok else "FAIL", msg)
