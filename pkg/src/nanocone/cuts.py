"""Convex edge cuts (Djokovic-Winkler classes) and cut-based indices.

For a partial cube every class of the transitive closure of the
Djokovic-Winkler relation is an edge cut that splits the graph into two
convex halves. Distances then count separating cuts, which gives

* ``W = sum |A_i| * |B_i|``,
* ``W_{lam+1} = c * W_lam - sum (W_lam(A_i) + W_lam(B_i))`` for ``c`` classes,
* ``WW = ((c + 1) * W - sum (W(A_i) + W(B_i))) / 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from nanocone.graph import Graph, InvariantError, is_bipartite, is_connected, w_lambda, wiener


class UnsupportedGraphError(ValueError):
    """The graph is outside the class the cut method handles."""


class InvalidCutError(ValueError):
    """A computed edge class does not split the graph into two convex halves."""


@dataclass(frozen=True)
class CutClass:
    edges: tuple[tuple[int, int], ...]
    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def product(self) -> int:
        return len(self.side_a) * len(self.side_b)


@dataclass(frozen=True)
class CutPartition:
    graph: Graph
    classes: tuple[CutClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def _require_supported(g: Graph) -> None:
    if not is_connected(g):
        raise UnsupportedGraphError("the cut method needs a connected graph")
    if not is_bipartite(g):
        raise UnsupportedGraphError("the cut method needs a bipartite graph")


def is_convex(g: Graph, s: Iterable[int], dist: np.ndarray | None = None) -> bool:
    """True iff every shortest path between two vertices of ``s`` stays inside ``s``."""
    s = sorted(set(s))
    for v in s:
        g._check_vertex(v)
    d = g.distance_matrix if dist is None else dist
    outside = np.setdiff1d(np.arange(g.vertex_count), s)
    if len(s) < 2 or len(outside) == 0:
        return True
    inner = d[np.ix_(s, s)]
    cross = d[np.ix_(s, outside)]
    # w lies on a u-v geodesic iff d(u, w) + d(w, v) == d(u, v)
    for i in range(len(s)):
        through = cross[i][None, :] + cross
        if np.any(through == inner[i][:, None]):
            return False
    return True


def is_isometric(g: Graph, s: Iterable[int]) -> bool:
    """True iff the induced subgraph on ``s`` keeps the distances of ``g``."""
    sub, keep = g.induced(s)
    if not is_connected(sub):
        return False
    ambient = g.distance_matrix[np.ix_(keep, keep)]
    return bool(np.array_equal(sub.distance_matrix, ambient))


def _components_without(g: Graph, removed: set[tuple[int, int]]) -> list[frozenset[int]]:
    kept = [e for e in g.edges if e not in removed]
    n = g.vertex_count
    if kept:
        u, v = np.array(kept).T
        m = coo_matrix((np.ones(len(kept)), (u, v)), shape=(n, n))
    else:
        m = coo_matrix((n, n))
    count, label = connected_components(m, directed=False)
    return [frozenset(np.flatnonzero(label == c).tolist()) for c in range(count)]


def _make_class(g: Graph, edges, dist, check_convex: bool) -> CutClass:
    edges = tuple(sorted(edges))
    parts = _components_without(g, set(edges))
    if len(parts) != 2:
        raise InvalidCutError(f"removing class {edges[:3]}... leaves {len(parts)} components")
    x = edges[0][0]
    side_a, side_b = parts if x in parts[0] else parts[::-1]
    for u, v in edges:
        if (u in side_a) == (v in side_a):
            raise InvalidCutError(f"edge ({u}, {v}) of a class does not cross its cut")
    if check_convex:
        for side in (side_a, side_b):
            if not is_convex(g, side, dist):
                raise InvalidCutError(f"a side of class {edges[:3]}... is not convex")
    return CutClass(edges, side_a, side_b)


def theta_star_classes(g: Graph) -> CutPartition:
    """Transitive closure of the Djokovic-Winkler relation, as validated cuts.

    Edges ``xy`` and ``uv`` are related iff
    ``d(x, u) + d(y, v) != d(x, v) + d(y, u)``. Uses the full distance matrix
    and ``O(E^2)`` comparisons; see :func:`convex_cuts` for large graphs.
    """
    _require_supported(g)
    if g.edge_count == 0:
        return CutPartition(g, ())
    d = g.distance_matrix
    x, y = (np.array(col) for col in zip(*g.edges))
    related = (d[np.ix_(x, x)] + d[np.ix_(y, y)]) != (d[np.ix_(x, y)] + d[np.ix_(y, x)])
    count, label = connected_components(csr_matrix(related), directed=False)
    groups: dict[int, list[tuple[int, int]]] = {}
    for e, c in zip(g.edges, label):
        groups.setdefault(int(c), []).append(e)
    classes = [_make_class(g, es, d, check_convex=True) for es in groups.values()]
    classes.sort(key=lambda c: c.edges[0])
    return CutPartition(g, tuple(classes))


def convex_cuts(g: Graph) -> CutPartition:
    """Cut classes found with two BFS runs per class instead of a distance matrix.

    For an edge ``xy`` of a bipartite graph, the edges related to it are
    exactly those crossing ``{w : d(w, x) < d(w, y)}``. If the relation is
    not transitive (not a partial cube), some edge lands in two different
    cuts and an error is raised. Convexity of the sides is not rechecked.
    """
    _require_supported(g)
    n = g.vertex_count
    if g.edge_count == 0:
        return CutPartition(g, ())
    eu, ev = (np.array(col) for col in zip(*g.edges))
    adj = coo_matrix((np.ones(2 * len(eu)), (np.r_[eu, ev], np.r_[ev, eu])), shape=(n, n)).tocsr()
    owner = np.full(len(eu), -1)
    classes = []
    for seed in range(len(eu)):
        if owner[seed] >= 0:
            continue
        x, y = int(eu[seed]), int(ev[seed])
        dx, dy = shortest_path(adj, unweighted=True, indices=[x, y])
        side = dx < dy
        crossing = np.flatnonzero(side[eu] != side[ev])
        if np.any(owner[crossing] >= 0):
            raise InvalidCutError("edge classes overlap; the graph is not a partial cube")
        owner[crossing] = len(classes)
        a = frozenset(np.flatnonzero(side).tolist())
        b = frozenset(np.flatnonzero(~side).tolist())
        edges = tuple((int(eu[i]), int(ev[i])) for i in crossing)
        classes.append(CutClass(edges, a, b))
    return CutPartition(g, tuple(classes))


def check_partition(cuts: CutPartition) -> None:
    """Raise InvalidCutError unless the classes partition the edge set."""
    seen: set[tuple[int, int]] = set()
    total = 0
    for c in cuts.classes:
        if not c.edges:
            raise InvalidCutError("empty cut class")
        seen.update(c.edges)
        total += len(c.edges)
        if len(c.side_a) + len(c.side_b) != cuts.graph.vertex_count:
            raise InvalidCutError("cut sides do not cover the vertex set")
    if total != len(seen) or seen != set(cuts.graph.edges):
        raise InvalidCutError("cut classes do not partition the edge set")


def _side_graphs(g: Graph, cuts: CutPartition):
    for c in cuts.classes:
        yield g.induced(c.side_a)[0], g.induced(c.side_b)[0]


def wiener_via_cuts(g: Graph, cuts: CutPartition | None = None) -> int:
    cuts = theta_star_classes(g) if cuts is None else cuts
    return sum(c.product for c in cuts.classes)


def wlambda_via_recursion(g: Graph, lam: int, cuts: CutPartition | None = None) -> int:
    """W_lam from the pair count by repeated cut recursion.

    Each step needs W of the two sides at the previous exponent; those are
    computed by BFS on the extracted sides, which is exact because convex
    sides are isometric.
    """
    if isinstance(lam, bool) or int(lam) != lam or lam < 0:
        raise ValueError(f"lambda must be a non-negative integer, got {lam!r}")
    cuts = theta_star_classes(g) if cuts is None else cuts
    sides = list(_side_graphs(g, cuts))
    c = len(cuts.classes)
    value = math.comb(g.vertex_count, 2)
    for mu in range(int(lam)):
        value = c * value - sum(w_lambda(a, mu) + w_lambda(b, mu) for a, b in sides)
    return value


def hyper_wiener_via_cuts(g: Graph, cuts: CutPartition | None = None) -> int:
    cuts = theta_star_classes(g) if cuts is None else cuts
    c = len(cuts.classes)
    w = wiener_via_cuts(g, cuts)
    inner = sum(wiener(a) + wiener(b) for a, b in _side_graphs(g, cuts))
    twice = (c + 1) * w - inner
    if twice % 2:
        raise InvariantError("cut identity for the hyper-Wiener index gave an odd numerator")
    return twice // 2
