# %% [markdown]
# # Congruences for (P2)^[3]
#
# The shipped relation list is checked, with all of its S3 translates, on the
# computed module, and the submodule it cuts out is compared with the module.

# %%
from hilbchow import LabelMap, build_surface, equivariant_chow, load_relations, verify_relations

labels = LabelMap.load()
for name, label in labels.table().items():
    if len(name) == 1:
        print(f"{name} = {label}")

# %%
M = equivariant_chow(build_surface("P2"), 3)
report = verify_relations(M, load_relations(), labels)
for r in report.results:
    tag = f" ({r.relation.reading})" if r.relation.reading else ""
    print(f"{'pass' if r.passed else 'FAIL'}  {r.relation.name}{tag}: {r.relation}")
print("relations cut out the module:", report.complete)
