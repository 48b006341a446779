# %% [markdown]
# Exact and heuristic radio numbers for small graphs

# %%
from radiolab.graphs import (
    all_pairs_distances,
    build_generalized_petersen,
    build_petersen_explicit,
    cycle_graph,
    path_tree,
    star,
)
from radiolab.search import SearchBudget, exact_radio_number, heuristic_search

graphs = {
    "Petersen": build_petersen_explicit(),
    "prism P(3,1)": build_generalized_petersen(3, 1),
    "C8": cycle_graph(8),
    "P8": path_tree(8),
    "K_1,7": star(7),
}
for name, g in graphs.items():
    res = exact_radio_number(g, all_pairs_distances(g))
    print(f"{name:14} rn={res.span:3d} proven={res.proven_optimal} nodes={res.nodes_explored}")

# %%
# annealing on a graph too big for the exact solver
g = build_generalized_petersen(8, 3)
res = heuristic_search(g, all_pairs_distances(g), SearchBudget(max_nodes=50000, rng_seed=0))
print("P(8,3) heuristic span:", res.span, "valid:", res.best.valid)
