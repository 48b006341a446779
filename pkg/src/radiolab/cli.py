"""Command-line entry point ``radiolab``.

Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from . import construction, documents
from .graphs import (
    GraphError,
    all_pairs_distances,
    build_generalized_petersen,
    build_petersen_explicit,
    cartesian_product,
    format_edge_list,
    read_graph,
    read_tree,
    to_dot,
)
from .labeling import (
    LabelingError,
    ProductInstance,
    VertexOrdering,
    check_equality_conditions,
    check_main_conditions,
    check_sufficient_conditions,
    lower_bound_report,
    validate,
)
from .search import SearchBudget, exact_radio_number, heuristic_search
from .trees import compute_metrics

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _petersen(args):
    if getattr(args, "explicit", False):
        return build_petersen_explicit()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = build_generalized_petersen(args.m, args.k)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return g


def _add_petersen_args(p):
    p.add_argument("--m", type=int, default=5, help="outer cycle length (default 5)")
    p.add_argument("--k", type=int, default=2, help="inner chord step (default 2)")
    p.add_argument("--explicit", action="store_true",
                   help="use the x_1..x_10 Petersen graph instead of P(m,k)")


def _add_budget_args(p):
    p.add_argument("--max-nodes", type=int, help="node / move budget (env RADIOLAB_MAX_NODES)")
    p.add_argument("--time-limit", type=float, help="seconds (env RADIOLAB_TIME_LIMIT)")
    p.add_argument("--seed", type=int, help="RNG seed (env RADIOLAB_SEED)")


def _budget(args, target=None) -> SearchBudget:
    return SearchBudget.from_env(max_nodes=args.max_nodes, time_limit=args.time_limit,
                                 rng_seed=args.seed, target_span=target)


def _emit(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_petersen(args):
    g = _petersen(args)
    if args.format == "dot":
        _emit(to_dot(g), args.out)
    elif args.format == "edges":
        _emit(format_edge_list(g), args.out)
    else:
        d = all_pairs_distances(g)
        degrees = sorted({g.degree(u) for u in range(g.n)})
        _emit(f"{g!r}\nvertices {g.n}\nedges {g.edge_count}\ndegrees {degrees}\ndiameter {d.diameter}\n",
              args.out)
    return EXIT_OK


def cmd_tree_metrics(args):
    m = compute_metrics(read_tree(args.tree))
    print(f"vertices {m.n}")
    print(f"diameter {m.diameter}")
    print(f"weight_centers {list(m.weight_centers)}")
    print(f"epsilon {m.epsilon}")
    print(f"total_level {m.total_level}")
    print("levels " + " ".join(str(int(v)) for v in m.level))
    print("branches " + " ".join(str(int(v)) for v in m.branch))
    return EXIT_OK


def cmd_product(args):
    g = cartesian_product(_petersen(args), read_tree(args.tree))
    if args.format == "dot":
        _emit(to_dot(g), args.out)
    else:
        d = all_pairs_distances(g)
        _emit(f"vertices {g.n}\nedges {g.edge_count}\ndiameter {d.diameter}\n", args.out)
    return EXIT_OK


def cmd_lower_bound(args):
    rep = lower_bound_report(_petersen(args), read_tree(args.tree))
    print(rep.value)
    print(rep)
    return EXIT_OK


def cmd_construct(args):
    n = args.n
    if n < 3:
        raise UsageError("n must be at least 3")
    try:
        lab = construction.construct_optimal(n, _budget(args))
    except construction.ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FALSE
    if args.out:
        documents.write_labeling(args.out, lab)
    if args.emit_table:
        _emit(construction.table_csv(lab, n), None if args.emit_table == "-" else args.emit_table)
    print(f"span={lab.span} target={construction.target_span(n)} via={lab.origin}", file=sys.stderr)
    return EXIT_OK


def cmd_table(args):
    if args.n < 3:
        raise UsageError("n must be at least 3")
    lab = construction.construct_optimal(args.n, _budget(args))
    _emit(construction.table_csv(lab, args.n), args.out)
    return EXIT_OK


def cmd_verify(args):
    doc = documents.read_document(args.file)
    g = doc.graph
    checked = validate(g, all_pairs_distances(g), documents.labels_array(doc))
    if checked.valid:
        print(f"VALID span={checked.span}")
        return EXIT_OK
    print(f"INVALID {checked.violation}")
    return EXIT_FALSE


def _product_instance(doc) -> ProductInstance:
    g = doc.graph
    if g.kind != "product" or g.factors is None:
        raise UsageError("ordering document must describe a Petersen x tree product")
    left, right = g.factors
    if left.kind != "generalized_petersen" or right.kind != "tree":
        raise UsageError("ordering document must describe a Petersen x tree product")
    return ProductInstance.build(left, right)


def cmd_check(args):
    doc = documents.read_document(args.file)
    if doc.order is None:
        raise UsageError("document has no 'order'")
    inst = _product_instance(doc)
    ordering = VertexOrdering.from_flat(doc.order, inst)
    if args.theorem == "3.1":
        report = check_equality_conditions(ordering, inst)
    elif args.theorem == "3.2":
        report = check_main_conditions(ordering, inst)
    else:
        report = check_sufficient_conditions(ordering, inst, tuple(args.which))
    print(report.render())
    return EXIT_OK if report.holds else EXIT_FALSE


def cmd_search(args):
    if args.graph:
        g = read_graph(args.graph)
        lb = None
    elif args.tree:
        petersen = _petersen(args)
        tree = read_tree(args.tree)
        g = cartesian_product(petersen, tree)
        lb = lower_bound_report(petersen, tree).value
    else:
        raise UsageError("give --graph FILE or --tree FILE")
    d = all_pairs_distances(g)
    initial = None
    if args.start_from:
        start = documents.read_document(args.start_from)
        if start.order is None or start.graph.n != g.n:
            raise UsageError("--start-from document does not match the graph")
        initial = start.order
    budget = _budget(args, args.target)
    if args.exact:
        res = exact_radio_number(g, d, budget)
    else:
        res = heuristic_search(g, d, budget, initial=initial, lower_bound=lb)
    print(f"span={res.span} proven_optimal={res.proven_optimal} nodes={res.nodes_explored}")
    if args.out:
        documents.write_labeling(args.out, res.best)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radiolab", description="Radio labelings of Petersen x tree products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("petersen", help="build a generalized Petersen graph")
    _add_petersen_args(p)
    p.add_argument("--format", choices=("summary", "dot", "edges"), default="summary")
    p.add_argument("--out")
    p.set_defaults(func=cmd_petersen)

    p = sub.add_parser("tree-metrics", help="weight centers, levels and branches of a tree")
    p.add_argument("tree")
    p.set_defaults(func=cmd_tree_metrics)

    p = sub.add_parser("product", help="Cartesian product of P(m,k) with a tree")
    _add_petersen_args(p)
    p.add_argument("tree")
    p.add_argument("--format", choices=("summary", "dot"), default="summary")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("lower-bound", help="radio number lower bound for P(m,k) x T")
    _add_petersen_args(p)
    p.add_argument("tree")
    p.set_defaults(func=cmd_lower_bound)

    p = sub.add_parser("construct", help="optimal labeling of Petersen x K_{1,n}")
    p.add_argument("n", type=int)
    p.add_argument("--out", help="write the labeling document here")
    p.add_argument("--emit-table", metavar="PATH", help="write the CSV grid ('-' for stdout)")
    _add_budget_args(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="print the CSV grid for Petersen x K_{1,n}")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    _add_budget_args(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check a labeling document")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="evaluate optimality conditions for an ordering document")
    p.add_argument("file")
    p.add_argument("--theorem", choices=("3.1", "3.2", "3.3"), default="3.2",
                   help="3.1 equality conditions, 3.2 exact characterisation, 3.3 sufficient conditions")
    p.add_argument("--which", default="def", help="for 3.3: which of d, e, f to try (default all)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exact or annealing search for a small radio labeling")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", help="edge-list file of a connected graph")
    src.add_argument("--tree", help="tree file; searches P(m,k) x tree")
    _add_petersen_args(p)
    p.add_argument("--exact", action="store_true", help="branch and bound (tiny graphs only)")
    p.add_argument("--target", type=int, help="stop once this span is reached")
    p.add_argument("--start-from", help="labeling document whose order seeds the annealer")
    p.add_argument("--out")
    _add_budget_args(p)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, LabelingError, documents.DocumentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
