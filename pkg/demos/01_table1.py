# %% [markdown]
# # Six orbital angular momenta of a Landau state
#
# Every symmetric-gauge eigenstate |n, m> carries three OAMs about the
# coordinate origin and three about the quantum guiding center. Here both
# quantum routes compute them: quadrature over the wavefunction and the
# diagonal of truncated Fock-space matrices.

# %%
from landau_oam import ALL_OAM_SPECS, DEFAULT_CONFIG, state_grid, table1_value
from landau_oam.fock import build_operator_set, expectation_fock
from landau_oam.wavefunction import expectation_oam

config = DEFAULT_CONFIG  # B = e = m_e = 1, so omega = l_B = 1
ops = build_operator_set(config, cutoff=20)

# %%
header = "  n   m " + "".join(f"{s.label:>15}" for s in ALL_OAM_SPECS)
print(header)
for qn in state_grid(n_max=3, m_min=-3):
    quad = [expectation_oam(qn, config, s) for s in ALL_OAM_SPECS]
    print(f"{qn.n:3d} {qn.m:3d} " + "".join(f"{v:15.10f}" for v in quad))

# %% [markdown]
# About the origin the canonical and pseudo OAM both give m; about the
# guiding center everything depends on n alone.

# %%
worst = 0.0
for qn in state_grid(5, -5):
    for s in ALL_OAM_SPECS:
        q = expectation_oam(qn, config, s)
        f = expectation_fock(qn, ops, s)
        worst = max(worst, abs(q - table1_value(qn, s)), abs(f - table1_value(qn, s)))
print(f"largest deviation from the closed forms over n <= 5, -5 <= m <= n: {worst:.2e}")
