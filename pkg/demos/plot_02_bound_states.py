"""
No bound states in V+-, at least one in -V+-
============================================

Two-sided Numerov shooting with a sign-change scan in E. The partner
potentials are wells with barriers yet hold nothing below E = 0; flipping
their sign traps a state.
"""
from susy_hbs import build_pair, find_bound_states, make_ansatz, scale

for A in (0.5, 1.0, -2.0):
    pair = build_pair(make_ansatz("gaussian", A))
    line = [f"A={A:+.1f}"]
    for side, s in (("minus", "-"), ("plus", "+")):
        spec = find_bound_states(pair.potential(side))
        line.append(f"V{s}: {len(spec)} states")
    for side, s in (("minus", "-"), ("plus", "+")):
        spec = find_bound_states(-pair.potential(side))
        line.append(f"-V{s}: E0={spec.ground:.5f}")
    print("  ".join(line))

# %%
# A 10% deeper V+ binds a very shallow state. Its decay length 1/kappa ~ 40
# is far beyond the default window, so the solver widens the domain.
pair = build_pair(make_ansatz("gaussian", 0.5))
for side, s in (("minus", "-"), ("plus", "+")):
    spec = find_bound_states(scale(pair, side, 1.1))
    d = spec.diagnostics[0]
    print(f"1.1 V{s}: E0={spec.ground:.6f}  window={d.domain_used:.0f}  "
          f"mismatch={d.mismatch_residual:.1e}")
