import numpy as np
import pytest

from oracles import weight_centers_brute
from radiolab.graphs import build_tree, path_tree, random_tree, star
from radiolab.trees import (
    ROOT_BRANCH,
    BranchRelation,
    branch_relation,
    compute_metrics,
    delta,
    phi,
    vertex_weight,
)


def test_vertex_weight_star_and_path():
    s = star(6)
    assert vertex_weight(s, 0) == 6
    assert vertex_weight(s, 3) == 11
    assert vertex_weight(path_tree(4), 0) == 6


def test_metrics_star():
    m = compute_metrics(star(6))
    assert m.weight_centers == (0,)
    assert m.epsilon == 1
    assert m.total_level == 6
    assert m.diameter == 2
    assert m.branch[0] == ROOT_BRANCH


def test_metrics_path4():
    m = compute_metrics(path_tree(4))
    assert m.weight_centers == (1, 2)
    assert m.epsilon == 0
    assert list(m.level) == [1, 0, 0, 1]
    assert m.total_level == 2
    assert m.side[0] != m.side[3]


def test_metrics_single_vertex():
    m = compute_metrics(build_tree([], 1))
    assert m.weight_centers == (0,) and m.epsilon == 1 and m.total_level == 0


def spider():
    # center 0 with three legs 0-a-b
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    return compute_metrics(build_tree(edges, 7))


def test_phi_examples():
    s = compute_metrics(star(6))
    assert phi(s, 1, 2) == 0
    sp = spider()
    assert phi(sp, 1, 2) == 1
    assert phi(sp, 2, 4) == 0
    for x in range(7):
        assert phi(sp, x, x) == sp.level[x]


def test_delta_examples():
    s = compute_metrics(star(6))
    assert all(delta(s, x, y) == 0 for x in range(7) for y in range(7))
    p = compute_metrics(path_tree(4))
    assert delta(p, 0, 3) == 1
    assert delta(p, 0, 1) == 0
    assert delta(p, 1, 2) == 1


def test_branch_relation_examples():
    s = compute_metrics(star(6))
    assert branch_relation(s, 1, 2) is BranchRelation.DIFFERENT
    assert branch_relation(s, 0, 4) is BranchRelation.DIFFERENT
    p = compute_metrics(path_tree(4))
    assert branch_relation(p, 0, 3) is BranchRelation.OPPOSITE
    sp = spider()
    assert branch_relation(sp, 1, 2) is BranchRelation.SAME
    with pytest.raises(ValueError):
        branch_relation(sp, 1, 1)


def test_phi_table_matches_phi():
    rng = np.random.default_rng(5)
    for _ in range(10):
        m = compute_metrics(random_tree(int(rng.integers(1, 25)), rng))
        for x in range(m.n):
            for y in range(m.n):
                assert m.phi_table[x, y] == phi(m, x, y)


def test_metrics_match_brute_force_centers():
    rng = np.random.default_rng(9)
    for _ in range(30):
        t = random_tree(int(rng.integers(1, 30)), rng)
        centers, d = weight_centers_brute(t.n, t.edges())
        m = compute_metrics(t)
        assert list(m.weight_centers) == centers
        assert list(m.level) == list(d[centers].min(axis=0))


def test_phi_bounds_and_branch_equivalence():
    rng = np.random.default_rng(13)
    for _ in range(25):
        m = compute_metrics(random_tree(int(rng.integers(2, 30)), rng))
        top = m.max_level
        for x in range(m.n):
            for y in range(m.n):
                if x == y:
                    continue
                p = phi(m, x, y)
                assert 0 <= p < top
                rel = branch_relation(m, x, y)
                assert (p == 0) == (rel in (BranchRelation.DIFFERENT, BranchRelation.OPPOSITE))


def test_two_equal_halves_joined_have_two_centers():
    # two copies of the same rooted tree joined at their roots
    half = [(0, 1), (0, 2), (2, 3)]
    edges = half + [(a + 4, b + 4) for a, b in half] + [(0, 4)]
    m = compute_metrics(build_tree(edges, 8))
    assert m.weight_centers == (0, 4)
    # unequal halves: one center
    edges = half + [(4, 5), (0, 4)]
    assert len(compute_metrics(build_tree(edges, 6)).weight_centers) == 1
