# %% [markdown]
# # Graded Hilbert schemes
#
# Ideals homogeneous for deg x = a, deg y = b with a fixed Hilbert function
# form a smooth projective variety inside a product of Grassmannians.  Its
# equivariant Chow module is generated by Chern classes of the tautological
# quotients.

# %%
from hilbchow import Character, WeightedHilbertFunction, chern_generator, graded_hilbert_model, module_M

chart = (Character(1, 0), Character(0, 1))
for weights, values in [((1, 1), [1, 1]), ((1, 1), [1, 2, 1]), ((1, 1), [1, 2, 3, 2]), ((1, 2), [1, 1, 2, 1])]:
    model = graded_hilbert_model(WeightedHilbertFunction.make(weights, values))
    M = module_M(model, chart, 5)
    print(f"{model}: {len(model.fixed_points)} fixed points, Betti {M.quotient_betti()}")

# %% [markdown]
# H = (1, 2, 3, 2) is the Grassmannian of planes in the cubics; c1 of its
# quotient bundle at the six fixed points:

# %%
model = graded_hilbert_model(WeightedHilbertFunction.make((1, 1), [1, 2, 3, 2]))
c1 = chern_generator(model, 3, 1, chart)
for E in model.fixed_points:
    print(f"  {str(E):10s} {c1[E]}")
