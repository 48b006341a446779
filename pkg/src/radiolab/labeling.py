"""Radio labelings of ``P(m,k) □ T``: validation, the span lower bound, the
canonical labeling of a vertex ordering and the optimality condition checks.

A radio labeling ``f`` of a graph of diameter ``D`` satisfies
``|f(u) - f(v)| >= D + 1 - d(u, v)`` for every pair of distinct vertices.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    cartesian_product,
    product_distances,
)
from .trees import TreeMetrics, compute_metrics

log = logging.getLogger(__name__)


class LabelingError(ValueError):
    pass


class InfeasibleConstructionError(LabelingError):
    """The canonical recurrence produced a negative step."""


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    required: int
    actual: int

    def __str__(self):
        return f"pair ({self.u}, {self.v}): gap {self.actual} < required {self.required}"


@dataclass(frozen=True, eq=False)
class RadioLabeling:
    graph: Graph
    labels: np.ndarray
    valid: bool | None = None
    violation: Violation | None = None
    order: tuple[int, ...] | None = None
    origin: str = ""

    @property
    def span(self) -> int:
        return int(self.labels.max())

    def ordering(self) -> list[int]:
        """Vertices by increasing label (ties by index)."""
        if self.order is not None:
            return list(self.order)
        return [int(v) for v in np.lexsort((np.arange(len(self.labels)), self.labels))]


def _as_labels(labels) -> np.ndarray:
    arr = np.asarray(labels, dtype=np.int64)
    if arr.ndim != 1:
        raise LabelingError("labels must be a flat sequence")
    return arr


def validate(g: Graph, d: DistanceMatrix, labels, *, order=None, origin: str = "") -> RadioLabeling:
    """Check every unordered pair.  On failure the witness is the
    lexicographically smallest violating pair ``(u, v)``, ``u < v``."""
    f = _as_labels(labels)
    if len(f) != g.n:
        raise LabelingError(f"expected {g.n} labels, got {len(f)}")
    if (f < 0).any():
        raise LabelingError(f"negative label at vertex {int(np.argmax(f < 0))}")
    required = d.diameter + 1 - d.dist
    gap = np.abs(f[:, None] - f[None, :])
    bad = np.triu(gap < required, k=1)
    violation = None
    if bad.any():
        u, v = (int(i) for i in np.argwhere(bad)[0])
        violation = Violation(u, v, int(required[u, v]), int(gap[u, v]))
    f = f.copy()
    f.setflags(write=False)
    return RadioLabeling(
        g, f, violation is None, violation,
        tuple(int(v) for v in order) if order is not None else None, origin,
    )


def greedy_labels(order: Sequence[int], rows: Sequence[Sequence[int]], diameter: int) -> list[int]:
    """Smallest labels consistent with ``order`` (labels strictly increase).

    Only the previous ``diameter`` vertices can bind: a vertex ``s`` steps back
    already sits at least ``s`` below the newcomer, and no pair needs more than
    ``diameter``.
    """
    f = [0] * len(order)
    top = diameter + 1
    for t in range(1, len(order)):
        v = order[t]
        row = rows[v]
        best = f[t - 1] + 1
        for s in range(max(0, t - diameter), t):
            need = f[s] + top - row[order[s]]
            if need > best:
                best = need
        f[t] = best
    return f


def greedy_min_labeling(g: Graph, d: DistanceMatrix, order: Sequence[int]) -> RadioLabeling:
    order = [int(v) for v in order]
    if sorted(order) != list(range(g.n)):
        raise LabelingError("order must be a permutation of the vertices")
    f = greedy_labels(order, d.dist.tolist(), d.diameter)
    labels = np.empty(g.n, dtype=np.int64)
    labels[order] = f
    return validate(g, d, labels, order=order, origin="greedy")


# --------------------------------------------------------------- instances


@dataclass(frozen=True, eq=False)
class ProductInstance:
    """``P(m,k) □ T`` together with the factor data every check needs."""

    petersen: Graph
    tree: Graph
    metrics: TreeMetrics
    petersen_dist: DistanceMatrix

    @classmethod
    def build(cls, petersen: Graph, tree: Graph) -> "ProductInstance":
        if petersen.kind != "generalized_petersen":
            raise ValueError(f"left factor must be a generalized Petersen graph, got {petersen.kind}")
        return cls(petersen, tree, compute_metrics(tree), all_pairs_distances(petersen))

    @property
    def d_p(self) -> int:
        return self.petersen_dist.diameter

    @property
    def d_t(self) -> int:
        return self.metrics.diameter

    @property
    def epsilon(self) -> int:
        return self.metrics.epsilon

    @property
    def size(self) -> int:
        return self.petersen.n * self.tree.n

    @cached_property
    def graph(self) -> Graph:
        return cartesian_product(self.petersen, self.tree)

    @cached_property
    def dist(self) -> DistanceMatrix:
        return product_distances(self.petersen_dist, self.metrics.dist)


@dataclass(frozen=True)
class LowerBound:
    m: int
    n: int
    d_t: int
    epsilon: int
    total_level: int
    value: int
    degenerate: bool

    def __str__(self):
        s = (f"lower bound {self.value}  (m={self.m}, n={self.n}, d_t={self.d_t}, "
             f"epsilon={self.epsilon}, L(T)={self.total_level})")
        if self.degenerate:
            s += "  [tree of diameter 0: outside the bound's intended regime]"
        return s


def lower_bound_report(petersen: Graph, tree: Graph | TreeMetrics) -> LowerBound:
    if petersen.kind != "generalized_petersen":
        raise ValueError("left factor must be a generalized Petersen graph")
    metrics = tree if isinstance(tree, TreeMetrics) else compute_metrics(tree)
    m = petersen.n // 2
    n = metrics.n
    d_t, eps, total = metrics.diameter, metrics.epsilon, metrics.total_level
    value = (2 * m * n - 1) * (d_t + eps) - 4 * m * total
    return LowerBound(m, n, d_t, eps, total, value, d_t == 0)


def lower_bound(petersen: Graph, tree: Graph | TreeMetrics) -> int:
    """``(2mn - 1)(d_t + eps) - 4m L(T)`` for ``P(m,k) □ T``."""
    return lower_bound_report(petersen, tree).value


# --------------------------------------------------------------- orderings


@dataclass(frozen=True, eq=False)
class VertexOrdering:
    """Sequence ``z_0..z_{N-1}`` of product vertices as (petersen, tree) pairs.

    ``prefix[t] = sum_{u<t} (L(y_u) + L(y_{u+1}))`` makes any window sum O(1).
    """

    pairs: np.ndarray
    right_count: int
    levels: np.ndarray
    prefix: np.ndarray

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], inst: ProductInstance) -> "VertexOrdering":
        arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        if len(arr) != inst.size:
            raise LabelingError(f"ordering has {len(arr)} entries, product has {inst.size} vertices")
        if (arr[:, 0] < 0).any() or (arr[:, 0] >= inst.petersen.n).any() \
                or (arr[:, 1] < 0).any() or (arr[:, 1] >= inst.tree.n).any():
            raise LabelingError("ordering entry out of range")
        flat = arr[:, 0] * inst.tree.n + arr[:, 1]
        if len(np.unique(flat)) != len(flat):
            raise LabelingError("ordering is not a permutation (repeated vertex)")
        levels = inst.metrics.level[arr[:, 1]]
        steps = levels[:-1] + levels[1:]
        prefix = np.concatenate([[0], np.cumsum(steps)]).astype(np.int64)
        for a in (arr, levels, prefix):
            a.setflags(write=False)
        return cls(arr, inst.tree.n, levels, prefix)

    @classmethod
    def from_flat(cls, flat: Iterable[int], inst: ProductInstance) -> "VertexOrdering":
        return cls.from_pairs([divmod(int(v), inst.tree.n) for v in flat], inst)

    def __len__(self):
        return len(self.pairs)

    @property
    def flat(self) -> np.ndarray:
        return self.pairs[:, 0] * self.right_count + self.pairs[:, 1]

    @property
    def left(self) -> np.ndarray:
        return self.pairs[:, 0]

    @property
    def right(self) -> np.ndarray:
        return self.pairs[:, 1]

    def swapped(self, i: int, j: int, inst: ProductInstance) -> "VertexOrdering":
        p = self.pairs.copy()
        p[[i, j]] = p[[j, i]]
        return VertexOrdering.from_pairs(p, inst)


def canonical_labels(ordering: VertexOrdering, inst: ProductInstance) -> np.ndarray:
    """Labels along the ordering: ``f(z_0) = 0`` and each step is
    ``d_t + eps - L(y_t) - L(y_{t+1})``."""
    steps = inst.d_t + inst.epsilon - ordering.levels[:-1] - ordering.levels[1:]
    if (steps < 0).any():
        t = int(np.argmax(steps < 0))
        raise InfeasibleConstructionError(f"negative step {int(steps[t])} between z{t} and z{t + 1}")
    return np.concatenate([[0], np.cumsum(steps)]).astype(np.int64)


def canonical_labeling(ordering: VertexOrdering, inst: ProductInstance) -> RadioLabeling:
    """The canonical labeling, not validated (``valid`` is ``None``)."""
    seq = canonical_labels(ordering, inst)
    labels = np.empty(len(seq), dtype=np.int64)
    labels[ordering.flat] = seq
    labels.setflags(write=False)
    return RadioLabeling(inst.graph, labels, None, None, tuple(int(v) for v in ordering.flat), "canonical")


def e_value(ordering: VertexOrdering, inst: ProductInstance, a: int, b: int) -> int:
    """Minimum combined distance ``d_T + d_P`` the pair ``(z_a, z_b)`` must have
    for the canonical labeling to respect it."""
    if not 0 <= a < b < len(ordering):
        raise IndexError(f"need 0 <= a < b < {len(ordering)}, got a={a}, b={b}")
    S = ordering.prefix
    return int(S[b] - S[a] - (b - a) * (inst.d_t + inst.epsilon) + inst.d_t + inst.d_p + 1)


# -------------------------------------------------------------- conditions


@dataclass
class ConditionResult:
    name: str
    description: str
    holds: bool
    witness: dict | None = None

    def __str__(self):
        mark = "PASS" if self.holds else "FAIL"
        s = f"({self.name}) {mark}  {self.description}"
        if self.witness:
            s += "  witness: " + ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return s


@dataclass
class ConditionReport:
    kind: str
    results: dict[str, ConditionResult] = field(default_factory=dict)
    required: tuple[str, ...] = ()
    any_of: tuple[str, ...] = ()
    notes: list[str] = field(default_factory=list)

    def add(self, result: ConditionResult):
        self.results[result.name] = result

    def __getitem__(self, name: str) -> ConditionResult:
        return self.results[name]

    @property
    def holds(self) -> bool:
        ok = all(self.results[n].holds for n in self.required)
        if self.any_of:
            ok = ok and any(self.results[n].holds for n in self.any_of)
        return ok

    def failures(self) -> list[ConditionResult]:
        return [r for r in self.results.values() if not r.holds]

    def render(self) -> str:
        lines = [f"{self.kind} conditions: {'HOLD' if self.holds else 'FAIL'}"]
        lines += ["  " + str(r) for r in self.results.values()]
        lines += ["  note: " + n for n in self.notes]
        return "\n".join(lines)


def _consecutive_distance(ordering: VertexOrdering, inst: ProductInstance) -> ConditionResult:
    x = ordering.left
    d = inst.petersen_dist.dist[x[:-1], x[1:]]
    bad = np.flatnonzero(d != inst.d_p)
    w = None
    if len(bad):
        t = int(bad[0])
        w = {"t": t, "distance": int(d[t]), "required": inst.d_p}
    return ConditionResult("a", "consecutive Petersen coordinates at distance d_p", w is None, w)


def _endpoint_levels(ordering: VertexOrdering) -> ConditionResult:
    first, last = int(ordering.levels[0]), int(ordering.levels[-1])
    ok = first + last == 0
    w = None if ok else {"a": 0, "b": len(ordering) - 1, "first_level": first, "last_level": last}
    return ConditionResult("b", "first and last tree vertices are weight centers", ok, w)


def _consecutive_branches(ordering: VertexOrdering, inst: ProductInstance) -> ConditionResult:
    m = inst.metrics
    y = ordering.right
    ph = m.phi_table[y[:-1], y[1:]]
    bad = ph != 0
    if m.epsilon == 0:
        bad |= m.side[y[:-1]] == m.side[y[1:]]
    idx = np.flatnonzero(bad)
    w = None
    if len(idx):
        t = int(idx[0])
        w = {"t": t, "y_t": int(y[t]), "y_t+1": int(y[t + 1]), "phi": int(ph[t])}
    rel = "different" if m.epsilon == 1 else "opposite"
    return ConditionResult("c", f"consecutive tree vertices in {rel} branches", w is None, w)


def _note_degenerate(report: ConditionReport, inst: ProductInstance):
    if inst.d_t == 0:
        report.notes.append("tree of diameter 0 lies outside the bound's intended regime")


def check_equality_conditions(ordering: VertexOrdering, inst: ProductInstance) -> ConditionReport:
    """Conditions under which the canonical labeling of ``ordering`` attains the lower bound."""
    report = ConditionReport("equality", required=("a", "b", "c", "d"))
    report.add(_consecutive_distance(ordering, inst))
    report.add(_endpoint_levels(ordering))
    report.add(_consecutive_branches(ordering, inst))
    desc = "canonical labeling is a radio labeling"
    try:
        lab = canonical_labeling(ordering, inst)
    except InfeasibleConstructionError as exc:
        report.add(ConditionResult("d", desc, False, {"error": str(exc)}))
    else:
        checked = validate(inst.graph, inst.dist, lab.labels)
        w = None
        if not checked.valid:
            v = checked.violation
            w = {"u": v.u, "v": v.v, "required": v.required, "actual": v.actual}
        report.add(ConditionResult("d", desc, checked.valid, w))
    _note_degenerate(report, inst)
    return report


def first_e_violation(ordering: VertexOrdering, inst: ProductInstance) -> dict | None:
    """Smallest ``(a, b)`` with ``d_T + d_P < E(a, b)``, scanning one row at a time."""
    x, y, S = ordering.left, ordering.right, ordering.prefix
    DP, DT = inst.petersen_dist.dist, inst.metrics.dist.dist
    step = inst.d_t + inst.epsilon
    const = inst.d_t + inst.d_p + 1
    N = len(ordering)
    for a in range(N - 1):
        b = np.arange(a + 1, N)
        lhs = DT[y[a], y[a + 1:]] + DP[x[a], x[a + 1:]]
        rhs = S[a + 1:] - S[a] - (b - a) * step + const
        bad = np.flatnonzero(lhs < rhs)
        if len(bad):
            k = int(bad[0])
            return {"a": a, "b": a + 1 + k, "distance": int(lhs[k]), "E": int(rhs[k])}
    return None


def check_main_conditions(ordering: VertexOrdering, inst: ProductInstance) -> ConditionReport:
    """Exact characterisation: all three hold iff the canonical labeling is a
    radio labeling whose span equals the lower bound."""
    report = ConditionReport("main", required=("a", "b", "c"))
    report.add(_consecutive_distance(ordering, inst))
    report.add(_endpoint_levels(ordering))
    w = first_e_violation(ordering, inst)
    report.add(ConditionResult("c", "every pair a<b has d_T + d_P >= E(a,b)", w is None, w))
    _note_degenerate(report, inst)
    return report


def check_sufficient_conditions(
    ordering: VertexOrdering, inst: ProductInstance, which: Iterable[str] = ("d", "e", "f")
) -> ConditionReport:
    """(a)-(c) plus at least one of the requested (d), (e), (f).

    Half-integer thresholds are compared after doubling both sides.
    """
    which = tuple(sorted(set(which)))
    if not which or not set(which) <= {"d", "e", "f"}:
        raise ValueError(f"'which' must be a non-empty subset of d, e, f; got {which}")
    m = inst.metrics
    d_t, d_p, eps = inst.d_t, inst.d_p, inst.epsilon
    x, y = ordering.left, ordering.right
    DP, DT = inst.petersen_dist.dist, m.dist.dist
    N = len(ordering)
    report = ConditionReport("sufficient", required=("a", "b", "c"), any_of=which)

    # (a): consecutive distance d_p, and for gap g >= 2, d_P >= d_p - (g - 1) (one
    # center) or d_p - (g - 2) (two centers); beyond that window it is vacuous
    cons = _consecutive_distance(ordering, inst)
    slack = 1 if eps == 1 else 2
    worst = None
    for g in range(2, min(N, d_p + slack)):
        need = d_p - (g - slack)
        d = DP[x[:-g], x[g:]]
        bad = np.flatnonzero(d < need)
        if len(bad):
            a = int(bad[0])
            cand = {"a": a, "b": a + g, "distance": int(d[a]), "required": need}
            if worst is None or (a, a + g) < (worst["a"], worst["b"]):
                worst = cand
    if cons.holds and worst is not None:
        cons = ConditionResult("a", cons.description, False, worst)
    report.add(ConditionResult(
        "a", "consecutive distance d_p and long-range Petersen separation", cons.holds, cons.witness))
    report.add(_endpoint_levels(ordering))
    report.add(_consecutive_branches(ordering, inst))

    cd = DT[y[:-1], y[1:]]
    if "d" in which:
        w = None
        if N >= 3:
            pair_min = np.minimum(cd[:-1], cd[1:])
            bad = np.flatnonzero(2 * pair_min > d_t + 1 - eps)
            if len(bad):
                t = int(bad[0])
                w = {"t": t, "d1": int(cd[t]), "d2": int(cd[t + 1]), "threshold_x2": d_t + 1 - eps}
        report.add(ConditionResult("d", "min of adjacent consecutive tree distances <= (d_t+1-eps)/2", w is None, w))
    if "e" in which:
        bad = np.flatnonzero(2 * cd > d_t + 1 + eps)
        w = None
        if len(bad):
            t = int(bad[0])
            w = {"t": t, "distance": int(cd[t]), "threshold_x2": d_t + 1 + eps}
        report.add(ConditionResult("e", "every consecutive tree distance <= (d_t+1+eps)/2", w is None, w))
    if "f" in which:
        cap2 = d_t + 1 if eps == 1 else d_t - 1
        over = np.flatnonzero(2 * ordering.levels > cap2)
        w = None
        if len(over):
            t = int(over[0])
            w = {"t": t, "level": int(ordering.levels[t]), "cap_x2": cap2}
        else:
            sep = d_t + d_p
            best = None
            for g in range(1, min(N, sep)):
                bad = np.flatnonzero(m.phi_table[y[:-g], y[g:]] > 0)
                if len(bad):
                    a = int(bad[0])
                    if best is None or (a, a + g) < (best["a"], best["b"]):
                        best = {"a": a, "b": a + g, "separation": g, "required": sep}
            w = best
        report.add(ConditionResult("f", "level caps and same-branch separation >= d_t + d_p", w is None, w))
    _note_degenerate(report, inst)
    return report
