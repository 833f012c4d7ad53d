# %% [markdown]
# # Assembling the equivariant Chow ring
#
# For each relevant subtorus the fixed locus splits into components that are
# products of graded Hilbert schemes and projective spaces.  Their images in
# R^fixed-points are intersected.

# %%
import time

from hilbchow import (Character, Subtorus, build_surface, component_decomposition, equivariant_chow,
                      relevant_subtori)

S = build_surface("P2")
print("relevant subtori for d = 3:", [str(T) for T in relevant_subtori(S, 3)])

# %%
for comp in component_decomposition(S, 3, Subtorus(Character(1, -1))):
    shape = " x ".join(comp.factor_shapes(6)) or "point"
    print(f"dim {comp.dimension(6)}  {shape:10s} {sorted(comp.points)}")

# %%
for d in (1, 2, 3):
    start = time.time()
    M = equivariant_chow(S, d)
    print(f"d={d}: piece dims {M.dims()}, Betti {M.quotient_betti()} ({time.time() - start:.1f}s)")
