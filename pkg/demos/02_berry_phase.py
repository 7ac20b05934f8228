# %% [markdown]
# # Solid angles and Berry phases of the field direction
#
# On each arm the effective field keeps a fixed tilt from z while its in-plane
# part rotates through half a turn. The two arms start from opposite in-plane
# directions, so each traces its own semicircle on the sphere of directions.

# %%
import math

from spinab import (
    LOWER,
    UPPER,
    RingConfig,
    berry_average,
    berry_phase,
    field_curve,
    geodesic_close,
    latitude_curve,
    propagate_adiabatic,
    solid_angle,
    validate,
)

tilt = math.radians(60)

# %% [markdown]
# A full latitude loop encloses 2 pi (1 - cos tilt) = pi: the branch phases are
# -+ pi/2 and the unpolarized average cos(Omega/2) vanishes.

# %%
loop = latitude_curve(tilt, 2 * math.pi, 10_000, closed=True)
omega = solid_angle(loop).omega
print(f"full loop: Omega = {omega:.8f}, phases {berry_phase(omega, 1):+.6f} / {berry_phase(omega, -1):+.6f}, "
      f"average {berry_average(omega):.2e}")

# %% [markdown]
# An open semicircle is closed by the great-circle arc between its endpoints.

# %%
half = geodesic_close(latitude_curve(tilt, math.pi, 4097))
print(f"semicircle + geodesic: Omega = {solid_angle(half).omega:.8f} (half cap = {math.pi / 2:.8f}), "
      f"closing arc {half.closure_arc_length:.4f} rad")

# %% [markdown]
# The same construction on the actual ring field, compared with the
# geometric phase picked up by the parallel-transported spin branches.

# %%
b = 0.2
ring = validate(RingConfig(so_field=b * math.tan(tilt)))
for path in (UPPER, LOWER):
    omega = solid_angle(geodesic_close(field_curve(path, b, ring, 4097))).omega
    res = propagate_adiabatic(path, b, ring, n_points=4097)
    print(f"{path.arm:5s}: Omega = {omega:+.6f}, -Omega/2 = {-omega / 2:+.6f}, "
          f"parallel-transported branch = {res.geometric_phase_plus:+.6f}")
