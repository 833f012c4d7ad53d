# %% [markdown]
# # Staircases
#
# A monomial ideal of k[x, y] of colength n is a partition of n.  We look at
# its minimal generators, its tangent characters, and two combinatorial tools
# for comparing Schubert cells: reverse plane partitions and complements.

# %%
from hilbchow import (Character, Staircase, cleft_couples, clefts, complement_in_box, enumerate_staircases,
                      incidence_necessary, linkage, tangent_characters)

for n in range(7):
    print(n, "cells:", len(enumerate_staircases(n)), "staircases")

# %%
E = Staircase.parse("[2,1]")
print("clefts of", E, "->", clefts(E))
print("cleft couples:", len(cleft_couples(E)))
X, Y = Character(1, 0), Character(0, 1)
print("tangent characters:", sorted(tuple(w) for w in tangent_characters(E, X, Y)))

# %% [markdown]
# The row {1, x, x^2} and the column {1, y, y^2} share the Hilbert function
# (1, 1, 1); a reverse plane partition records how one slides onto the other.

# %%
row, col = Staircase.parse("[1,1,1]"), Staircase.parse("[3]")
print(linkage(row, col))
print("incidence row -> column:", incidence_necessary(row, col))
print("incidence column -> row:", incidence_necessary(col, row))
print("complement of [2,1] in a 3x3 box:", complement_in_box(E, 3))
