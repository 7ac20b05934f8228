# %% [markdown]
# # When does the spin follow the field?
#
# The adiabatic picture (spin pinned to the field direction) holds only when
# the Larmor rate far exceeds the orbital rate v/r. For a GaAs-like g factor
# the ratio is about 0.1, far from adiabatic. Scaling g up shows the exact
# time-ordered propagator approaching the adiabatic one.

# %%
import math

import numpy as np

from spinab import LOWER, RingConfig, propagate_adiabatic, propagate_exact, validate
from spinab.spin import branch_phases

b = 0.5
so = b * math.tan(math.radians(60))
for g in (0.44, 5.0, 50.0, 500.0):
    ring = validate(RingConfig(g_factor=g, so_field=so))
    res = propagate_adiabatic(LOWER, b, ring)
    exact = propagate_exact(LOWER, b, ring, n_steps=2**14)
    gap = np.angle(np.exp(1j * (branch_phases(exact, res) - branch_phases(res.propagator, res))))
    fidelity = abs(np.trace(res.propagator.conj().T @ exact)) / 2
    print(f"g = {g:6.2f}  adiabaticity = {res.adiabaticity:8.2f}  "
          f"branch phase gap = {np.abs(gap).max():.4f} rad  |tr(U_ad^+ U)|/2 = {fidelity:.4f}")
