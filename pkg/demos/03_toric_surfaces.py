# %% [markdown]
# # Toric surfaces and their subtori
#
# A smooth complete toric surface is given by its rays.  Each one-dimensional
# subtorus ker(chi) fixes some toric points and possibly whole toric lines.

# %%
from hilbchow import Character, Subtorus, build_surface, fixed_locus

for name in ["P2", "P1xP1", "F1"]:
    S = build_surface(name)
    print(S.name, "rays", S.rays)
    for p in S.fixed_points:
        print("   ", p.name, "chart characters", tuple(p.chi_x), tuple(p.chi_y))

# %%
S = build_surface("P2")
for chi in [(1, -1), (2, -1), (0, 1)]:
    loc = fixed_locus(S, Subtorus(Character(*chi)))
    print(f"ker{chi}: isolated {loc.isolated_points}, lines {loc.fixed_lines}")
