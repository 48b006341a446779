# %% [markdown]
# Optimal radio labeling of the Petersen graph times a star
#
# Build the closed-form ordering for P(5,2) x K_{1,n}, label it greedily
# and print the label grid for n = 6.

# %%
from radiolab.construction import construct_optimal, table_grid, target_span
from radiolab.graphs import build_petersen_explicit, star
from radiolab.labeling import lower_bound

n = 6
lab = construct_optimal(n)
print("valid:", lab.valid, "span:", lab.span, "target:", target_span(n))
print("lower bound:", lower_bound(build_petersen_explicit(), star(n)))

# %%
# rows x1..x10, columns y0..yn; each cell is (position in ordering, label)
for i, row in enumerate(table_grid(lab, n), start=1):
    print(f"x{i:<3}", " ".join(f"{z:>2}:{f:<3}" for z, f in row))

# %%
# span grows by 10 per extra leaf
for n in range(3, 16):
    lab = construct_optimal(n)
    print(n, lab.span, lab.origin)
