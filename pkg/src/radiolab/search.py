"""Search oracles: exact radio number for tiny graphs and annealing over
vertex orderings for larger ones.

Both work in ordering space.  For a fixed order of increasing labels the
greedy labeling is pointwise minimal, so the radio number is the minimum
greedy span over all orderings.
"""
from __future__ import annotations

import math
import os
import random
import time
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .graphs import DistanceMatrix, Graph
from .labeling import RadioLabeling, greedy_labels, validate

DEFAULT_MAX_NODES = 400_000
DEFAULT_TIME_LIMIT = 120.0
SWAP_PROBABILITY = 0.9
INITIAL_TEMPERATURE = 2.0
COOLING = 0.99995
MIN_TEMPERATURE = 0.05


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    time_limit: float = DEFAULT_TIME_LIMIT
    rng_seed: int = 0
    target_span: int | None = None

    def __post_init__(self):
        if self.max_nodes < 0 or self.time_limit < 0 or self.rng_seed < 0:
            raise ValueError("budget fields must be nonnegative")

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        """Defaults, then ``RADIOLAB_MAX_NODES`` / ``RADIOLAB_TIME_LIMIT`` /
        ``RADIOLAB_SEED``, then explicit non-None overrides."""
        env = os.environ
        b = cls(
            max_nodes=int(env.get("RADIOLAB_MAX_NODES", DEFAULT_MAX_NODES)),
            time_limit=float(env.get("RADIOLAB_TIME_LIMIT", DEFAULT_TIME_LIMIT)),
            rng_seed=int(env.get("RADIOLAB_SEED", 0)),
        )
        return replace(b, **{k: v for k, v in overrides.items() if v is not None})


@dataclass(frozen=True, eq=False)
class SearchResult:
    best: RadioLabeling
    proven_optimal: bool
    nodes_explored: int

    @property
    def span(self) -> int:
        return self.best.span


def _labeling(g: Graph, d: DistanceMatrix, order: Sequence[int], origin: str) -> RadioLabeling:
    f = greedy_labels(order, d.dist.tolist(), d.diameter)
    labels = np.empty(g.n, dtype=np.int64)
    labels[list(order)] = f
    out = validate(g, d, labels, order=order, origin=origin)
    assert out.valid, "greedy labeling must be valid"
    return out


def exact_radio_number(g: Graph, d: DistanceMatrix, budget: SearchBudget | None = None) -> SearchResult:
    """Branch and bound over label-increasing vertex orders.

    Vertices are tried by smallest feasible label, ties broken by descending
    eccentricity then index.  A branch is cut once its label plus one per
    unplaced vertex cannot beat the incumbent.
    """
    budget = budget or SearchBudget()
    n = g.n
    rows = d.dist.tolist()
    top = d.diameter + 1
    diam = d.diameter
    ecc = d.eccentricity()
    rank = sorted(range(n), key=lambda v: (-int(ecc[v]), v))

    best_order = list(rank)
    best_span = greedy_labels(best_order, rows, diam)[-1]
    order: list[int] = []
    labels: list[int] = []
    used = [False] * n
    nodes = 0
    exhausted = True
    deadline = time.monotonic() + budget.time_limit

    def next_label(v: int) -> int:
        t = len(order)
        if t == 0:
            return 0
        best = labels[-1] + 1
        row = rows[v]
        for s in range(max(0, t - diam), t):
            need = labels[s] + top - row[order[s]]
            if need > best:
                best = need
        return best

    def dfs():
        nonlocal nodes, best_span, best_order, exhausted
        if len(order) == n:
            if labels[-1] < best_span:
                best_span = labels[-1]
                best_order = list(order)
            return
        nodes += 1
        if nodes > budget.max_nodes or (nodes & 1023 == 0 and time.monotonic() > deadline):
            exhausted = False
            return
        remaining = n - len(order) - 1
        cands = sorted((next_label(v), i, v) for i, v in enumerate(rank) if not used[v])
        for lab, _, v in cands:
            if not exhausted:
                return
            if lab + remaining >= best_span:
                break
            used[v] = True
            order.append(v)
            labels.append(lab)
            dfs()
            labels.pop()
            order.pop()
            used[v] = False

    dfs()
    return SearchResult(_labeling(g, d, best_order, "exact"), exhausted, nodes)


def heuristic_search(
    g: Graph,
    d: DistanceMatrix,
    budget: SearchBudget | None = None,
    initial: Sequence[int] | None = None,
    lower_bound: int | None = None,
) -> SearchResult:
    """Simulated annealing over vertex orderings, scoring each by its greedy span.

    Moves swap two positions or relocate one entry; temperature cools
    geometrically.  Deterministic for a given seed unless the time limit cuts
    the run short.  ``proven_optimal`` is set only when the best span meets a
    caller-supplied ``lower_bound``.
    """
    budget = budget or SearchBudget()
    rng = random.Random(budget.rng_seed)
    n = g.n
    rows = d.dist.tolist()
    diam = d.diameter
    top = diam + 1
    if initial is None:
        cur = list(range(n))
        rng.shuffle(cur)
    else:
        cur = [int(v) for v in initial]
        if sorted(cur) != list(range(n)):
            raise ValueError("initial order must be a permutation of the vertices")
    f = greedy_labels(cur, rows, diam)
    best_order, best_span = list(cur), f[-1]
    target = budget.target_span
    if lower_bound is not None and target is None:
        target = lower_bound

    def relabel(order, f, start):
        for t in range(max(start, 1), n):
            v = order[t]
            row = rows[v]
            b = f[t - 1] + 1
            for s in range(max(0, t - diam), t):
                need = f[s] + top - row[order[s]]
                if need > b:
                    b = need
            f[t] = b

    temp = INITIAL_TEMPERATURE
    deadline = time.monotonic() + budget.time_limit
    it = 0
    while n > 1 and it < budget.max_nodes and (target is None or best_span > target):
        it += 1
        if it & 1023 == 0 and time.monotonic() > deadline:
            break
        i, j = rng.sample(range(n), 2)
        new = list(cur)
        if rng.random() < SWAP_PROBABILITY:
            new[i], new[j] = new[j], new[i]
        else:
            new.insert(j, new.pop(i))
        nf = list(f)
        relabel(new, nf, min(i, j))
        delta = nf[-1] - f[-1]
        if delta <= 0 or rng.random() < math.exp(-delta / temp):
            cur, f = new, nf
            if f[-1] < best_span:
                best_span, best_order = f[-1], list(cur)
        temp = max(MIN_TEMPERATURE, temp * COOLING)

    best = _labeling(g, d, best_order, "heuristic")
    proven = lower_bound is not None and best.span <= lower_bound
    return SearchResult(best, proven, it)
