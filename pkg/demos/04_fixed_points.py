# %% [markdown]
# # Fixed points of Hilbert schemes of points
#
# A torus-fixed point of S^[d] is a staircase at each toric point, d cells in
# total.  Counting positive tangent weights against a generic direction gives
# the Betti numbers.

# %%
from hilbchow import betti_bb, build_surface, enumerate_fixed_points, euler_class, tangent_representation

S = build_surface("P2")
for d in range(1, 5):
    print(f"(P2)^[{d}]: {len(enumerate_fixed_points(S, d))} fixed points, Betti {betti_bb(S, d)}")

# %%
for P in enumerate_fixed_points(S, 2):
    rep = tangent_representation(S, P)
    print(f"{P.label:20s} weights {[tuple(w) for w in rep.weights]}  euler {euler_class(rep)}")
