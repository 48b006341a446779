"""Optimal radio labelings of the Petersen graph times a star, ``P(5,2) □ K_{1,n}``.

Petersen vertices use the x-naming of :func:`build_petersen_explicit`
(``x_i`` at index ``i - 1``); the star has center ``y_0`` and leaves
``y_1..y_n``.  Column ``j`` of the ordering grid carries a permutation
``sigma_j``; vertex ``(x_i, y_j)`` is called ``a_r`` with ``r = sigma_j(i)``.
Leaf columns are visited row-major in ``r`` (``t = (r-1)n + j``), the center
column fills ``z_0`` and the tail.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from .graphs import build_petersen_explicit, star
from .labeling import (
    ProductInstance,
    RadioLabeling,
    VertexOrdering,
    canonical_labeling,
    validate,
)
from .search import SearchBudget, heuristic_search

log = logging.getLogger(__name__)


class ConstructionError(RuntimeError):
    """No labeling of the target span was produced."""


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``{1..n}`` stored as its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.image)}: {self.image}")

    @classmethod
    def identity(cls, n: int = 10) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(self * other)(i) == self(other(i))``."""
        return Permutation(tuple(self(other(i)) for i in range(1, len(other) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self.image, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Permutation.identity(len(self))
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def alpha() -> Permutation:
    return Permutation((1, 5, 9, 3, 7, 2, 4, 6, 8, 10))


def beta() -> Permutation:
    return Permutation((1, 4, 2, 5, 3, 6, 9, 7, 10, 8))


def tau() -> Permutation:
    return Permutation((5, 1, 2, 3, 4, 10, 6, 7, 8, 9))


def _column_prefix(n: int) -> Permutation:
    return {
        0: alpha(),
        1: Permutation.identity(),
        2: beta(),
        3: beta() ** 3,
        4: beta() ** 2,
    }[n % 5]


def _center_slot(r: int, n: int) -> int:
    """Position of ``(a_r, y_0)`` in the ordering."""
    if r == 5:
        return 0
    if n % 5 == 0:
        if r <= 4:
            return 10 * n + r
        if r == 6:
            return 10 * n + 9
        return 10 * n + r - 2
    if r <= 4:
        return 10 * n + 5 - r
    return 10 * n + r - 1


@dataclass(frozen=True, eq=False)
class ConstructionPlan:
    n: int
    instance: ProductInstance
    pairs: tuple[tuple[int, int], ...]

    @property
    def case(self) -> int:
        return self.n % 5

    def column_permutation(self, j: int) -> Permutation:
        if j == 0:
            return Permutation.identity()
        return _column_prefix(self.n) * tau() ** (j - 1)

    @cached_property
    def ordering(self) -> VertexOrdering:
        return VertexOrdering.from_pairs(self.pairs, self.instance)


def build_ordering(n: int) -> ConstructionPlan:
    if n < 3:
        raise ValueError(f"the star needs at least 3 leaves, got n={n}")
    inst = ProductInstance.build(build_petersen_explicit(), star(n))
    slots: list[tuple[int, int] | None] = [None] * (10 * (n + 1))
    prefix, t = _column_prefix(n), tau()
    for j in range(1, n + 1):
        sigma = prefix * t ** (j - 1)
        for i in range(1, 11):
            slots[(sigma(i) - 1) * n + j] = (i - 1, j)
    for r in range(1, 11):
        slots[_center_slot(r, n)] = (r - 1, 0)
    assert all(s is not None for s in slots)
    return ConstructionPlan(n, inst, tuple(slots))


def target_span(n: int) -> int:
    return 10 * n + 27


def construct_optimal(n: int, budget: SearchBudget | None = None) -> RadioLabeling:
    """A validated radio labeling of ``P(5,2) □ K_{1,n}`` with span ``10n + 27``.

    The closed-form ordering is tried first.  If its canonical labeling fails
    (it does for n = 3), annealing seeded from that ordering searches for the
    target span; :class:`ConstructionError` is raised if the budget runs out.
    """
    plan = build_ordering(n)
    inst = plan.instance
    target = target_span(n)
    lab = canonical_labeling(plan.ordering, inst)
    checked = validate(inst.graph, inst.dist, lab.labels, order=lab.order, origin="scheme")
    if checked.valid and checked.span == target:
        return checked
    if n >= 6:
        raise ConstructionError(f"closed-form ordering failed for n={n}: {checked.violation}")
    log.info("closed-form ordering invalid for n=%d (%s); falling back to search", n, checked.violation)
    budget = budget or SearchBudget(max_nodes=600_000, time_limit=60.0, rng_seed=0)
    budget = SearchBudget(budget.max_nodes, budget.time_limit, budget.rng_seed, target)
    result = heuristic_search(inst.graph, inst.dist, budget, initial=lab.order, lower_bound=target)
    if result.span != target:
        raise ConstructionError(
            f"search reached span {result.span}, target {target}, after {result.nodes_explored} moves")
    best = result.best
    return RadioLabeling(best.graph, best.labels, best.valid, None, best.order, "scheme+search")


def table_grid(labeling: RadioLabeling, n: int) -> list[list[tuple[int, int]]]:
    """``grid[i][j] = (t, label)`` for vertex ``(x_{i+1}, y_j)``."""
    order = labeling.ordering()
    pos = {v: t for t, v in enumerate(order)}
    return [[(pos[i * (n + 1) + j], int(labeling.labels[i * (n + 1) + j])) for j in range(n + 1)]
            for i in range(10)]


def table_csv(labeling: RadioLabeling, n: int) -> str:
    rows = [",".join(["vertex"] + [f"y{j}" for j in range(n + 1)])]
    for i, row in enumerate(table_grid(labeling, n)):
        rows.append(",".join([f"x{i + 1}"] + [f"z{t}:{lab}" for t, lab in row]))
    return "\n".join(rows) + "\n"
