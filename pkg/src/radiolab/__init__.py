"""Radio labelings of Cartesian products of generalized Petersen graphs and trees."""
from .construction import alpha, beta, build_ordering, construct_optimal, tau
from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_generalized_petersen,
    build_petersen_explicit,
    build_tree,
    cartesian_product,
    product_distance,
    star,
)
from .labeling import (
    ProductInstance,
    RadioLabeling,
    VertexOrdering,
    canonical_labeling,
    check_equality_conditions,
    check_main_conditions,
    check_sufficient_conditions,
    e_value,
    greedy_min_labeling,
    lower_bound,
    validate,
)
from .search import SearchBudget, exact_radio_number, heuristic_search
from .trees import branch_relation, compute_metrics, delta, phi, vertex_weight

__version__ = "0.1.0"
