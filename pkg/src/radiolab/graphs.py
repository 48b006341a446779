"""Graph construction and exact hop distances.

Vertices are dense 0-based integers.  A product vertex ``(a, b)`` of
``g □ h`` lives at flat index ``a * h.n + b``.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graph input (bad parameters, invalid trees, ...)."""


class InvalidTreeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    kind: str = "generic"
    params: Mapping = field(default_factory=dict)
    factors: tuple["Graph", "Graph"] | None = None

    def __post_init__(self):
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self):
        extra = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"Graph(kind={self.kind}, n={self.n}, edges={self.edge_count}{', ' + extra if extra else ''})"


def _adjacency(n: int, edges: Iterable[tuple[int, int]], *, strict: bool) -> tuple[tuple[int, ...], ...]:
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in nbrs[u] and strict:
            raise GraphError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return tuple(tuple(sorted(s)) for s in nbrs)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Simple undirected graph on ``n`` vertices; duplicate edges are rejected."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    return Graph(n, _adjacency(n, edges, strict=True))


def build_generalized_petersen(m: int, k: int) -> Graph:
    """Generalized Petersen graph: outer cycle u_0..u_{m-1} (indices 0..m-1),
    spokes u_i v_i and inner chords v_i v_{i+k} (v_i at index m + i).

    Coinciding inner chords (2k = m mod m) or a degenerate k are collapsed to a
    simple graph; ``params['degenerate']`` records that and a warning is issued.
    """
    if m < 3 or k < 1:
        raise GraphError(f"generalized Petersen needs m >= 3 and k >= 1, got m={m}, k={k}")
    pairs = []
    for i in range(m):
        pairs.append((i, (i + 1) % m))
        pairs.append((i, m + i))
        pairs.append((m + i, m + (i + k) % m))
    degenerate = False
    clean = set()
    for u, v in pairs:
        if u == v:
            degenerate = True
            continue
        e = (min(u, v), max(u, v))
        if e in clean:
            degenerate = True
        clean.add(e)
    if degenerate:
        warnings.warn(f"P({m},{k}) has coinciding or looped inner chords; deduplicated", stacklevel=2)
    return Graph(
        2 * m,
        _adjacency(2 * m, sorted(clean), strict=True),
        kind="generalized_petersen",
        params={"m": m, "k": k, "naming": "uv", "degenerate": degenerate},
    )


# x_i x_{i+2}, x_j x_{j+3} and three extra chords, 1-based as printed
_PETERSEN_X_EDGES = (
    [(i, i + 2) for i in (1, 2, 3, 4, 6, 7, 8)]
    + [(j, j + 3) for j in (1, 2, 5, 6, 7)]
    + [(1, 10), (2, 7), (3, 9)]
)


def build_petersen_explicit() -> Graph:
    """The Petersen graph with vertices x_1..x_10 stored at indices 0..9.

    This is the naming every star-product construction in
    :mod:`radiolab.construction` is written against.
    """
    edges = [(a - 1, b - 1) for a, b in _PETERSEN_X_EDGES]
    return Graph(
        10,
        _adjacency(10, edges, strict=True),
        kind="generalized_petersen",
        params={"m": 5, "k": 2, "naming": "x", "degenerate": False},
    )


def build_tree(edges: Sequence[tuple[int, int]], n: int) -> Graph:
    if n < 1:
        raise InvalidTreeError("a tree needs at least one vertex")
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidTreeError(f"duplicate edge ({u}, {v})")
        seen.add(key)
    try:
        adj = _adjacency(n, edges, strict=True)
    except GraphError as exc:
        raise InvalidTreeError(str(exc)) from None
    g = Graph(n, adj)
    reached = _bfs(g, 0)
    if (reached < 0).any():
        raise InvalidTreeError(f"disconnected: vertex {int(np.argmax(reached < 0))} unreachable from 0")
    if len(edges) != n - 1:
        raise InvalidTreeError(f"contains a cycle ({len(edges)} edges on {n} vertices)")
    return Graph(n, adj, kind="tree", params={"edges": tuple(tuple(sorted(e)) for e in edges)})


def star(leaves: int) -> Graph:
    """K_{1,n}: center y_0 at index 0, leaves y_1..y_n at 1..n."""
    return build_tree([(0, j) for j in range(1, leaves + 1)], leaves + 1)


def path_tree(n: int) -> Graph:
    return build_tree([(i, i + 1) for i in range(n - 1)], n)


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    if n == 1:
        return build_tree([], 1)
    if n == 2:
        return build_tree([(0, 1)], 2)
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return build_tree(edges, n)


def random_connected_graph(n: int, rng: np.random.Generator, p: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    base = random_tree(n, rng).edges()
    present = set(base)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < p:
                present.add((u, v))
    return from_edges(n, sorted(present))


def product_index(left: int, right: int, right_count: int) -> int:
    return left * right_count + right


def product_pair(flat: int, right_count: int) -> tuple[int, int]:
    return divmod(flat, right_count)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    nh = h.n
    edges = []
    for a in range(g.n):
        for b in range(nh):
            u = a * nh + b
            for b2 in h.adj[b]:
                if b2 > b:
                    edges.append((u, a * nh + b2))
            for a2 in g.adj[a]:
                if a2 > a:
                    edges.append((u, a2 * nh + b))
    return Graph(
        g.n * nh,
        _adjacency(g.n * nh, edges, strict=True),
        kind="product",
        params={"left_count": g.n, "right_count": nh},
        factors=(g, h),
    )


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    dist: np.ndarray
    diameter: int

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def eccentricity(self) -> np.ndarray:
        return self.dist.max(axis=1)


def _bfs(g: Graph, source: int) -> np.ndarray:
    d = np.full(g.n, -1, dtype=np.int64)
    d[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if d[v] < 0:
                d[v] = d[u] + 1
                queue.append(v)
    return d


def _freeze(dist: np.ndarray) -> DistanceMatrix:
    dist.setflags(write=False)
    return DistanceMatrix(dist, int(dist.max()))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex.  Raises DisconnectedGraphError if any pair is unreachable."""
    dist = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs(g, s)
        if (row < 0).any():
            raise DisconnectedGraphError(f"vertex {int(np.argmax(row < 0))} unreachable from {s}")
        dist[s] = row
    return _freeze(dist)


def product_distance(dg: DistanceMatrix, dh: DistanceMatrix, u: tuple[int, int], v: tuple[int, int]) -> int:
    return int(dg.dist[u[0], v[0]] + dh.dist[u[1], v[1]])


def product_distances(dg: DistanceMatrix, dh: DistanceMatrix) -> DistanceMatrix:
    """Full distance matrix of ``g □ h`` from the factor matrices, by additivity."""
    ng, nh = dg.n, dh.n
    dist = (dg.dist[:, None, :, None] + dh.dist[None, :, None, :]).reshape(ng * nh, ng * nh).copy()
    return _freeze(dist)


# ---------------------------------------------------------------- file formats


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse ``u v`` lines (0-based, ``#`` comments).  A leading ``n <count>``
    line fixes the vertex count; otherwise it is ``max index + 1``."""
    n = None
    edges: list[tuple[int, int]] = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if first and parts[0] == "n":
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            first = False
            continue
        first = False
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    if n is None:
        if not edges:
            raise GraphError("empty edge list and no 'n <count>' line")
        n = max(max(e) for e in edges) + 1
    return n, edges


def read_tree(path) -> Graph:
    with open(path) as fh:
        n, edges = parse_edge_list(fh.read())
    return build_tree(edges, n)


def read_graph(path) -> Graph:
    with open(path) as fh:
        n, edges = parse_edge_list(fh.read())
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def vertex_names(g: Graph) -> list[str]:
    """Display names: x_i (1-based) for the x-named Petersen graph, u_i/v_i for
    generalized Petersen, y_j for trees, pairs for products."""
    if g.kind == "generalized_petersen":
        if g.params.get("naming") == "x":
            return [f"x{i + 1}" for i in range(g.n)]
        m = g.params["m"]
        return [f"u{i}" for i in range(m)] + [f"v{i}" for i in range(m)]
    if g.kind == "tree":
        return [f"y{j}" for j in range(g.n)]
    if g.kind == "product" and g.factors is not None:
        left, right = (vertex_names(f) for f in g.factors)
        return [f"({a},{b})" for a in left for b in right]
    return [str(i) for i in range(g.n)]


def to_dot(g: Graph, labels: Sequence[int] | None = None) -> str:
    names = vertex_names(g)
    out = ["graph G {"]
    for u in range(g.n):
        text = names[u] if labels is None else f"{names[u]}\\n{labels[u]}"
        out.append(f'  {u} [label="{text}"];')
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


# ------------------------------------------------------------ descriptors


def describe(g: Graph) -> dict:
    """JSON-serialisable recipe from which :func:`from_descriptor` rebuilds ``g``."""
    if g.kind == "generalized_petersen":
        if g.params.get("naming") == "x":
            return {"kind": "petersen_x"}
        return {"kind": "generalized_petersen", "m": g.params["m"], "k": g.params["k"]}
    if g.kind == "tree":
        return {"kind": "tree", "n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.kind == "product" and g.factors is not None:
        return {"kind": "product", "left": describe(g.factors[0]), "right": describe(g.factors[1])}
    return {"kind": "generic", "n": g.n, "edges": [list(e) for e in g.edges()]}


def from_descriptor(desc: Mapping) -> Graph:
    try:
        kind = desc["kind"]
        if kind == "petersen_x":
            return build_petersen_explicit()
        if kind == "generalized_petersen":
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                return build_generalized_petersen(int(desc["m"]), int(desc["k"]))
        if kind == "tree":
            return build_tree([tuple(e) for e in desc["edges"]], int(desc["n"]))
        if kind == "product":
            return cartesian_product(from_descriptor(desc["left"]), from_descriptor(desc["right"]))
        if kind == "generic":
            return from_edges(int(desc["n"]), [tuple(e) for e in desc["edges"]])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph descriptor: {exc!r}") from None
    raise GraphError(f"unknown graph kind {desc.get('kind')!r}")
