"""Weight centers, levels and branch structure of a tree.

With one weight center the tree is rooted there.  With two adjacent centers
``w, w'`` each side of the edge ``ww'`` is rooted at its own center, so a
vertex never has the other side's center as an ancestor.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graphs import DistanceMatrix, Graph, all_pairs_distances

ROOT_BRANCH = -1


class BranchRelation(enum.Enum):
    SAME = "same"
    DIFFERENT = "different"
    OPPOSITE = "opposite"


def vertex_weight(tree: Graph, u: int, dist: DistanceMatrix | None = None) -> int:
    """Sum of distances from ``u`` to every vertex."""
    if dist is None:
        dist = all_pairs_distances(tree)
    return int(dist.dist[u].sum())


@dataclass(frozen=True, eq=False)
class TreeMetrics:
    tree: Graph
    dist: DistanceMatrix
    weight_centers: tuple[int, ...]
    epsilon: int
    level: np.ndarray
    parent: np.ndarray
    branch: np.ndarray
    side: np.ndarray
    total_level: int

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def diameter(self) -> int:
        return self.dist.diameter

    @property
    def max_level(self) -> int:
        return int(self.level.max())

    def is_center(self, v: int) -> bool:
        return v in self.weight_centers

    @cached_property
    def phi_table(self) -> np.ndarray:
        """``phi`` for every pair, as an ``n x n`` array."""
        n = self.n
        table = np.zeros((n, n), dtype=np.int64)
        anc = [self._ancestors(v) for v in range(n)]
        for x in range(n):
            ax = anc[x]
            for y in range(x, n):
                if self.side[x] != self.side[y]:
                    continue
                common = ax & anc[y]
                table[x, y] = table[y, x] = max(int(self.level[z]) for z in common)
        table.setflags(write=False)
        return table

    def _ancestors(self, v: int) -> set[int]:
        out = {v}
        while self.parent[v] >= 0:
            v = int(self.parent[v])
            out.add(v)
        return out


def compute_metrics(tree: Graph) -> TreeMetrics:
    if tree.kind != "tree":
        raise ValueError(f"expected a tree, got {tree.kind}")
    dist = all_pairs_distances(tree)
    weights = dist.dist.sum(axis=1)
    centers = tuple(int(c) for c in np.flatnonzero(weights == weights.min()))
    # a tree has one or two weight centers, the latter adjacent
    assert len(centers) <= 2, f"tree has {len(centers)} weight centers"
    if len(centers) == 2:
        assert tree.has_edge(*centers), "two weight centers must be adjacent"

    n = tree.n
    level = dist.dist[list(centers)].min(axis=0).astype(np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    branch = np.full(n, ROOT_BRANCH, dtype=np.int64)
    side = np.zeros(n, dtype=np.int64)

    seen = np.zeros(n, dtype=bool)
    queue = deque()
    for s, c in enumerate(centers):
        seen[c] = True
        side[c] = s
        queue.append(c)
    while queue:
        u = queue.popleft()
        for v in tree.adj[u]:
            if seen[v]:
                continue
            seen[v] = True
            parent[v] = u
            side[v] = side[u]
            branch[v] = v if branch[u] == ROOT_BRANCH else branch[u]
            queue.append(v)

    for arr in (level, parent, branch, side):
        arr.setflags(write=False)
    return TreeMetrics(
        tree=tree,
        dist=dist,
        weight_centers=centers,
        epsilon=1 if len(centers) == 1 else 0,
        level=level,
        parent=parent,
        branch=branch,
        side=side,
        total_level=int(level.sum()),
    )


def phi(m: TreeMetrics, x: int, y: int) -> int:
    """Largest level of a common ancestor of ``x`` and ``y``; 0 if they lie on
    opposite sides of a two-center tree (no common ancestor)."""
    if m.side[x] != m.side[y]:
        return 0
    lx, ly = int(m.level[x]), int(m.level[y])
    while lx > ly:
        x = int(m.parent[x])
        lx -= 1
    while ly > lx:
        y = int(m.parent[y])
        ly -= 1
    while x != y:
        x, y = int(m.parent[x]), int(m.parent[y])
        lx -= 1
    return lx


def delta(m: TreeMetrics, x: int, y: int) -> int:
    return int(len(m.weight_centers) == 2 and m.side[x] != m.side[y])


def branch_relation(m: TreeMetrics, x: int, y: int) -> BranchRelation:
    if x == y:
        raise ValueError("branch relation needs two distinct vertices")
    if len(m.weight_centers) == 2 and m.side[x] != m.side[y]:
        return BranchRelation.OPPOSITE
    bx, by = m.branch[x], m.branch[y]
    if bx == ROOT_BRANCH or by == ROOT_BRANCH or bx != by:
        return BranchRelation.DIFFERENT
    return BranchRelation.SAME


def same_branch(m: TreeMetrics, x: int, y: int) -> bool:
    """True when x and y share a branch; a non-center vertex shares one with itself."""
    return phi(m, x, y) > 0
