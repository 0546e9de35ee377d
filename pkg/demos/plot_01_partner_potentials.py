"""
Partner potentials from a nodeless zero-energy state
=====================================================

A seed psi* = A + F(x) that never crosses zero defines W = -psi*'/psi* and
the pair V- = W^2 - W', V+ = W^2 + W'. psi* solves V- at E = 0 by
construction.
"""
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from susy_hbs import build_pair, make_ansatz, validate_nodeless
from susy_hbs.partner import zero_energy_residual

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

# A Gaussian bump on a constant background. Offsets 1/2, 1, -2 all stay
# clear of zero.
fig, axes = plt.subplots(1, 3, figsize=(12, 3.5), sharey=True)
for ax, A in zip(axes, (0.5, 1.0, -2.0)):
    ans = make_ansatz("gaussian", A)
    print(f"A={A:+.1f}  nodes={validate_nodeless(ans).node_count}", end="  ")
    pair = build_pair(ans)
    print(f"V-(0)={pair.v_minus[2400]:+.4f}  V+(0)={pair.v_plus[2400]:+.4f}  "
          f"residual={zero_energy_residual(pair):.1e}")
    ax.plot(pair.x, pair.v_minus, label="V-")
    ax.plot(pair.x, pair.v_plus, label="V+")
    ax.set_xlim(-4, 4)
    ax.set_title(f"A = {A:g}")
axes[0].legend()

# %%
# An offset of zero would let psi* vanish at infinity; it is refused.
try:
    make_ansatz("gaussian", 0.0)
except ValueError as exc:
    print("rejected:", exc)

# %%
# Asymmetric seeds. For tanh the two partners are mirror images about
# g = log((A-1)/(A+1))/2.
from susy_hbs.partner import mirror_point, mirror_residual

pair = build_pair(make_ansatz("tanh", 2.0))
g = mirror_point(2.0)
print(f"tanh A=2: g={g:.6f}, max |V+(g-x) - V-(x)| = {mirror_residual(pair, g):.1e}")

fig.tight_layout()
fig.savefig(os.path.join(OUT, "partners.png"), dpi=110)
