# %% [markdown]
# # Exact algebra over R = Q[t1, t2]
#
# Polynomials keep rational coefficients exactly.  A graded submodule of
# R^points stores one reduced row-echelon basis per degree.

# %%
from hilbchow import GradedSubmodule, GradedVector, Polynomial, linear_valuation, quotient_betti

f = Polynomial.parse("t1^2 - t2^2")
print("f =", f)
print("f is divisible by (t1 - t2) to order", linear_valuation(f, (1, -1), 3))

# %% [markdown]
# The projective line with two fixed points: the module generated by (1, 1)
# and (0, t1).  Its quotient by (t1, t2) has one class in degree 0 and one in degree 1.

# %%
points = ("0", "inf")
M = GradedSubmodule.generated_by(
    [GradedVector.constant(points), GradedVector({"inf": Polynomial.parse("t1")}, 1)], points, 4)
print("piece dimensions:", M.dims())
print("Betti numbers:", quotient_betti(M))
print("(t1, 0) in M:", M.contains(GradedVector({"0": Polynomial.parse("t1")}, 1)))
print("(0, t2) in M:", M.contains(GradedVector({"inf": Polynomial.parse("t2")}, 1)))
