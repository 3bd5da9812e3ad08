"""Immutable simple graphs and exact distance-based indices.

All indices are computed from unweighted breadth-first search distances and
returned as Python integers, so values never overflow.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np


class DisconnectedGraphError(ValueError):
    """Raised when a distance computation needs a connected graph."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this always indicates a bug."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    ``edges`` is normalized on construction to sorted ``(u, v)`` pairs with
    ``u < v``. Self-loops and out-of-range endpoints are rejected; duplicate
    edges are merged.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError(f"vertex_count must be non-negative, got {n}")
        normalized = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for {n} vertices")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(vertex_count, tuple(edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """Read-only all-pairs distance matrix (computed once per graph)."""
        return _all_pairs(self)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on ``vertices``.

        Returns the subgraph, renumbered in increasing order of the original
        indices, and the tuple mapping new index -> original index.
        """
        keep = tuple(sorted(set(vertices)))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        sub = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(keep), tuple(sub)), keep

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range for {self.vertex_count} vertices")


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex of a connected graph."""
    g._check_vertex(source)
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(
                f"vertex {v} is unreachable from vertex {source}"
            )
    return dist


def _all_pairs(g: Graph) -> np.ndarray:
    n = g.vertex_count
    d = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        d[s] = bfs_distances(g, s)
    d.flags.writeable = False
    return d


def all_pairs(g: Graph) -> np.ndarray:
    """All-pairs hop distances as an ``n x n`` integer array.

    The array is shared with the graph's cache and is read-only.
    """
    return g.distance_matrix


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    try:
        bfs_distances(g, 0)
    except DisconnectedGraphError:
        return False
    return True


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def distance_distribution(g: Graph) -> dict[int, int]:
    """Map each distance ``k >= 1`` to the number of unordered pairs at distance ``k``."""
    n = g.vertex_count
    if n < 2:
        return {}
    d = g.distance_matrix
    upper = d[np.triu_indices(n, k=1)]
    counts = np.bincount(upper)
    dist = {k: int(c) for k, c in enumerate(counts) if k >= 1 and c}
    if sum(dist.values()) != math.comb(n, 2):
        raise InvariantError("distance distribution does not cover all pairs")
    return dist


def _check_lambda(lam: int) -> int:
    if isinstance(lam, bool) or int(lam) != lam or lam < 0:
        raise ValueError(f"lambda must be a non-negative integer, got {lam!r}")
    return int(lam)


def w_lambda(g: Graph, lam: int) -> int:
    """Sum of ``d(u, v) ** lam`` over unordered vertex pairs."""
    lam = _check_lambda(lam)
    return sum(c * k**lam for k, c in distance_distribution(g).items())


def w_lambda_real(g: Graph, lam: float) -> float:
    """Floating-point W_lambda for real ``lam`` (relative accuracy about 1e-12)."""
    dist = distance_distribution(g)
    if lam == 0:
        return float(math.comb(g.vertex_count, 2))
    return math.fsum(c * float(k) ** lam for k, c in dist.items())


def wiener(g: Graph) -> int:
    return w_lambda(g, 1)


def hyper_wiener(g: Graph) -> int:
    """Half the sum of ``d**2 + d`` over unordered pairs."""
    total = w_lambda(g, 2) + w_lambda(g, 1)
    if total % 2:
        raise InvariantError("W_2 + W_1 is odd; d^2 + d must be even for every pair")
    return total // 2


def d_lambda(g: Graph, f: Iterable[int], k: Iterable[int], lam: int) -> int:
    """Sum of ``d(u, v) ** lam`` over ordered pairs ``u in f``, ``v in k``.

    Pairs with ``u == v`` contribute nothing, also for ``lam == 0``, so that
    ``d_lambda(g, S, S, lam) == 2 * W_lambda`` for an isometric ``S``.
    """
    lam = _check_lambda(lam)
    f = sorted(set(f))
    k = sorted(set(k))
    for v in (*f, *k):
        g._check_vertex(v)
    if not f or not k:
        return 0
    block = g.distance_matrix[np.ix_(f, k)]
    counts = np.bincount(block.ravel())
    return sum(int(c) * d**lam for d, c in enumerate(counts) if d >= 1)
