# %% [markdown]
# # Landau energy = 2D oscillator + Larmor term
#
# In the symmetric gauge H = H_osc + omega_L L_can, with
# <H_osc> = (2n - m + 1) omega_L and <omega_L L_can> = m omega_L.
# The kinetic part is integrated in gradient form on Gauss-Laguerre nodes.

# %%
from landau_oam import DEFAULT_CONFIG, LandauQuantumNumbers
from landau_oam.wavefunction import energy_parts, expectation_r2

config = DEFAULT_CONFIG
w_L = config.omega_L

print("  n   m     <H_osc>   expected    Larmor      <H>     <r^2>")
for n, m in [(0, 0), (1, 1), (1, -2), (2, 1), (3, -4), (5, 5)]:
    qn = LandauQuantumNumbers(n, m)
    h_osc, larmor = energy_parts(qn, config)
    print(f"{n:3d} {m:3d} {h_osc:11.8f} {(2 * n - m + 1) * w_L:10.4f} {larmor:9.4f} "
          f"{h_osc + larmor:8.4f} {expectation_r2(qn, config):9.4f}")
