"""
Enclosed area and binding
=========================

A well with negative area always binds. Positive area guarantees nothing:
scaling V+ by 1.1 keeps the area positive but pulls a state below zero.
"""
from susy_hbs import build_pair, find_bound_states, make_ansatz, scale
from susy_hbs.area import simon_classify, w2_identity

for A in (0.5, 1.0, -2.0):
    ans = make_ansatz("gaussian", A)
    ident = w2_identity(ans)
    print(f"A={A:+.1f}  int V- = {ident.lhs_minus:.5f}  int V+ = {ident.lhs_plus:.5f}  "
          f"int W^2 = {ident.rhs:.5f}")

# %%
pair = build_pair(make_ansatz("gaussian", 0.5))
for label, pot in (("-V-", -pair.potential("minus")), ("V+", pair.potential("plus")),
                   ("1.1 V+", scale(pair, "plus", 1.1))):
    rep = simon_classify(pot)
    spec = find_bound_states(pot)
    e0 = f"{spec.ground:.5f}" if not spec.empty else "none"
    print(f"{label:7s} I={rep.I:+.5f}  {rep.prediction.value:28s}  E0={e0}")
