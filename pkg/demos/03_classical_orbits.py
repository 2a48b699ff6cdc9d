# %% [markdown]
# # Classical cyclotron orbits and the four classical OAMs
#
# Case A: orbit centered on the origin. Case B: guiding center at (3, 4).

# %%
import numpy as np

from landau_oam import DEFAULT_CONFIG, OamAxis, OamKind, OamSpec
from landau_oam.classical import (
    InitialConditions,
    classical_oam,
    closed_form_trajectory,
    guiding_center,
    integrate_rk4,
    period,
    time_average_oam,
)

config = DEFAULT_CONFIG
specs = [OamSpec(k, a) for a in OamAxis for k in (OamKind.MECHANICAL, OamKind.PSEUDO)]
T = period(config)
t = np.linspace(0, T, 9)

# %%
cases = {
    "A": InitialConditions(x0=0.0, y0=-1.0, vx0=1.0, vy0=0.0),
    "B": InitialConditions.from_guiding_center(3.0, 4.0, v0=1.0, alpha=0.0, config=config),
}
for name, ic in cases.items():
    traj = closed_form_trajectory(ic, config, t)
    print(f"case {name}: guiding center {guiding_center(ic, config)}, r_c = {ic.cyclotron_radius(config)}")
    for s in specs:
        values = np.broadcast_to(classical_oam(traj, ic, config, s), t.shape)
        avg = time_average_oam(ic, config, s, samples=64)
        print(f"  {s.label:14s} min {values.min():9.4f} max {values.max():9.4f} one-period mean {avg:9.4f}")

# %% [markdown]
# In case B the mechanical OAM about the origin oscillates, yet its period
# average equals the cyclotron value r_c m_e v0 = 1. The pseudo OAM about the
# origin is constant at 1/2 - (eB/2)(X^2 + Y^2) = -12.

# %%
ic = cases["B"]
rk4 = integrate_rk4(ic, config, T / 1000, 1000)
ref = closed_form_trajectory(ic, config, rk4.t)
print("RK4 vs closed form over one period:", max(np.max(np.abs(rk4.x - ref.x)), np.max(np.abs(rk4.y - ref.y))))
