# %% [markdown]
# # The h/e fundamental
#
# Sweep the field through a 1 um ring with the spin evolution frozen and no
# spin-orbit field. The transmission is then exactly cos^2(pi Phi e / h), and
# its spectrum has a single line at the flux-quantum frequency area * e / h.

# %%
import numpy as np

from spinab import RingConfig, SweepConfig, trace_sweep, trace_spectrum, find_peaks, validate
from spinab.model import CONSTANTS

ring = validate(RingConfig(so_field=0.0, mode="flux_only"))
sweep = SweepConfig(0.0, 0.3, 4096)
trace = trace_sweep(sweep, ring)

period = CONSTANTS.flux_quantum / ring.area
print(f"AB period in B: {period * 1e3:.4f} mT  ->  {sweep.b_max / period:.1f} oscillations over the sweep")
print("first transmission samples:", np.round(trace["transmission"][:6], 4))

# %% [markdown]
# Remove a linear background and take a rectangular-window periodogram.

# %%
spec = trace_spectrum(trace.b, trace["transmission"], detrend_order=1, window_name="rect")
report = find_peaks(spec, config=ring)
print(f"bin width {spec.resolution:.3f} 1/T")
for p in report:
    print(f"{p.kind:9s} f = {p.freq:8.3f} 1/T   flux ratio = {p.flux_ratio:.4f}")

# %% [markdown]
# The resistance column R0/T is not used here: at exact half-flux-quanta T
# drops to zero and R saturates at the clamp, so R becomes a spike train whose
# harmonics all carry similar power.
