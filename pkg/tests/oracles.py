"""Slow, independent reference computations used only by the tests."""
from __future__ import annotations

import itertools

import numpy as np


def floyd_warshall(n, edges):
    INF = 10 ** 9
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return np.array(d)


def is_radio_labeling(f, dist):
    diam = dist.max()
    n = len(f)
    return all(abs(f[u] - f[v]) >= diam + 1 - dist[u][v] for u in range(n) for v in range(u + 1, n))


def brute_force_radio_number(dist, upper):
    """Smallest span s <= upper admitting a radio labeling with labels in 0..s.

    Enumerates label vectors vertex by vertex, rejecting a partial vector as
    soon as it violates a pair; no ordering argument is used.
    """
    dist = np.asarray(dist)
    n = len(dist)
    diam = int(dist.max())
    for s in range(upper + 1):
        f = [None] * n

        def extend(i):
            if i == n:
                return True
            for lab in range(s + 1):
                if all(abs(lab - f[j]) >= diam + 1 - dist[i][j] for j in range(i)):
                    f[i] = lab
                    if extend(i + 1):
                        return True
            return False

        if extend(0):
            return s
    return None


def isomorphic(adj1, adj2):
    """Exhaustive mapping search with adjacency pruning."""
    n = len(adj1)
    if n != len(adj2):
        return False
    a1 = [set(a) for a in adj1]
    a2 = [set(a) for a in adj2]
    if sorted(map(len, a1)) != sorted(map(len, a2)):
        return False
    mapping = [-1] * n
    used = [False] * n

    def go(i):
        if i == n:
            return True
        for c in range(n):
            if used[c] or len(a2[c]) != len(a1[i]):
                continue
            if all((mapping[j] in a2[c]) == (j in a1[i]) for j in range(i)):
                mapping[i] = c
                used[c] = True
                if go(i + 1):
                    return True
                used[c] = False
        mapping[i] = -1
        return False

    return go(0)


def weight_centers_brute(n, edges):
    d = floyd_warshall(n, edges)
    w = d.sum(axis=1)
    return sorted(int(i) for i in np.flatnonzero(w == w.min())), d


def components_without(n, edges, removed):
    """Vertex sets of the components after deleting vertex set / edge."""
    keep = [e for e in edges if not (set(e) & removed.get("vertices", set()))
            and tuple(sorted(e)) != removed.get("edge")]
    verts = [v for v in range(n) if v not in removed.get("vertices", set())]
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in keep:
        parent[find(u)] = find(v)
    groups = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def all_orderings(n):
    return itertools.permutations(range(n))
