"""Constructors for the hexagonal graph families and the one-pentagon nanocone.

Lattice families live on the brick-wall model of the honeycomb: vertices are
integer points ``(x, y)``, every horizontal neighbour pair is an edge, and
``(x, y) -- (x, y + 1)`` is an edge when ``x + y`` is even. Each hexagon is a
2 x 1 brick whose lower-left corner has ``x + y`` even.

Every edge changes exactly one of three lattice coordinates::

    row       y
    diagonal  floor((x + y) / 2)
    column    ceil((x - y) / 2)

so the graph families are cut out by simple inequalities on them:

* ``Z(n, k)``: rows ``0 <= y <= k`` and columns ``0 .. n``. That is a
  k x n parallelogram of hexagons plus pendant vertices at its two acute
  corners (``(-1, 0)`` and ``(2n + k, k)``).
* ``ZL(n, k, l)``: ``Z(n, k)`` restricted to diagonals ``<= n + l - 1``, which
  shaves the top-right acute corner down to a staircase.
* ``M(n, k)``: ``ZL(n + 1, k, 0)``, a trapezoid whose long row has n hexagons
  with pendants at both ends of that row.
* ``A(n)``: ``M(n, n)`` plus a pendant at the apex, i.e. a triangle of hexagons
  with one pendant at each corner.

The cone ``G_n`` is built as concentric cycles. Cycle ``j`` has ``5(2j + 1)``
vertices labelled ``(j, s, t)`` with sector ``s`` in ``0..4`` and arc index
``t`` in ``0..2j``. Every even ``t`` of cycle ``j`` sends a spoke to
``(j + 1, s, t + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import networkx as nx

from nanocone.graph import Graph

FAMILIES = ("A", "Z", "M", "ZL", "Cone")

_PARAM_NAMES = {
    "A": ("n",),
    "Z": ("n", "k"),
    "M": ("n", "k"),
    "ZL": ("n", "k", "l"),
    "Cone": ("n",),
}


class ConeLabel(NamedTuple):
    layer: int
    sector: int
    arc: int


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: tuple[int, ...]
    graph: Graph
    # exact coordinates, one pair per vertex
    embedding: tuple[tuple[Fraction, Fraction], ...]
    # brick-wall (x, y) for lattice families, ConeLabel for the cone
    labels: tuple

    @property
    def name(self) -> str:
        return f"{self.family}({', '.join(map(str, self.params))})"

    def param_dict(self) -> dict[str, int]:
        return dict(zip(_PARAM_NAMES[self.family], self.params))

    def index_of(self, label) -> int:
        return self.labels.index(label)


def canonical_family(name: str) -> str:
    for fam in FAMILIES:
        if fam.lower() == str(name).lower():
            return fam
    raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def param_names(family: str) -> tuple[str, ...]:
    return _PARAM_NAMES[canonical_family(family)]


def _check_params(family: str, params: tuple[int, ...]) -> None:
    names = _PARAM_NAMES[family]
    if len(params) != len(names):
        raise ValueError(f"{family} takes parameters {names}, got {params}")
    for name, value in zip(names, params):
        if isinstance(value, bool) or int(value) != value:
            raise ValueError(f"parameter {name} must be an integer, got {value!r}")
        if value < 0:
            raise ValueError(f"parameter {name} must be non-negative, got {value}")
    if family == "M":
        n, k = params
        if k > n:
            raise ValueError(f"M(n, k) needs k <= n, got n={n}, k={k}")
    if family == "ZL":
        n, k, l = params
        if not l <= k <= n:
            raise ValueError(f"ZL(n, k, l) needs l <= k <= n, got n={n}, k={k}, l={l}")


def expected_vertex_count(family: str, params) -> int:
    """Vertex count from the closed-form count of each family."""
    family = canonical_family(family)
    params = tuple(params)
    _check_params(family, params)
    if family == "A":
        (n,) = params
        return (n + 2) ** 2
    if family == "Z":
        n, k = params
        return 2 * (n + 1) * (k + 1)
    if family == "M":
        n, k = params
        return (k + 1) * (2 * n - k + 3)
    if family == "ZL":
        n, k, l = params
        return 2 * (n + 1) * (k + 1) - (k - l + 1) ** 2
    (n,) = params
    return 5 * (n + 1) ** 2


# -- brick-wall lattice -------------------------------------------------------


def _diagonal(x: int, y: int) -> int:
    return (x + y) // 2


def _lattice_points(n: int, k: int, max_diagonal: int | None = None) -> list[tuple[int, int]]:
    pts = []
    for y in range(k + 1):
        for x in range(y - 1, 2 * n + y + 1):
            if max_diagonal is None or _diagonal(x, y) <= max_diagonal:
                pts.append((x, y))
    return pts


def honeycomb_position(x: int, y: int) -> tuple[Fraction, Fraction]:
    """Exact position of brick-wall vertex ``(x, y)`` in a unit-bond honeycomb.

    The abscissa is expressed in units of ``sqrt(3) / 2`` so it stays rational.
    """
    lift = Fraction(1, 4) if (x + y) % 2 == 0 else Fraction(-1, 4)
    return Fraction(x), Fraction(3 * y, 2) + lift


def _lattice_instance(family: str, params: tuple[int, ...], points) -> FamilyInstance:
    pts = set(points)
    raw_edges = []
    for x, y in pts:
        if (x + 1, y) in pts:
            raw_edges.append(((x, y), (x + 1, y)))
        if (x + y) % 2 == 0 and (x, y + 1) in pts:
            raw_edges.append(((x, y), (x, y + 1)))
    degree = dict.fromkeys(pts, 0)
    for a, b in raw_edges:
        degree[a] += 1
        degree[b] += 1
    # row-major, left to right, pendant vertices last
    order = sorted(pts, key=lambda p: (degree[p] == 1, p[1], p[0]))
    index = {p: i for i, p in enumerate(order)}
    graph = Graph(len(order), tuple((index[a], index[b]) for a, b in raw_edges))
    embedding = tuple(honeycomb_position(x, y) for x, y in order)
    return FamilyInstance(family, params, graph, embedding, tuple(order))


def build_Z(n: int, k: int) -> FamilyInstance:
    """Parallelogram of k rows with n hexagons each, plus two corner pendants.

    ``k == 0`` gives the path on ``2n + 2`` vertices.
    """
    _check_params("Z", (n, k))
    return _lattice_instance("Z", (n, k), _lattice_points(n, k))


def build_ZL(n: int, k: int, l: int) -> FamilyInstance:
    _check_params("ZL", (n, k, l))
    return _lattice_instance("ZL", (n, k, l), _lattice_points(n, k, n + l - 1))


def build_M(n: int, k: int) -> FamilyInstance:
    """Trapezoid with rows of ``n - k + 1 .. n`` hexagons and two pendants on the long row."""
    _check_params("M", (n, k))
    return _lattice_instance("M", (n, k), _lattice_points(n + 1, k, n))


def build_A(n: int) -> FamilyInstance:
    """Triangle with rows of ``1 .. n`` hexagons and a pendant at each corner.

    ``A(0)`` is the star K_{1,3}.
    """
    _check_params("A", (n,))
    pts = _lattice_points(n + 1, n, n) + [(n, n + 1)]
    return _lattice_instance("A", (n,), pts)


# -- nanocone -----------------------------------------------------------------


def _cone_position(label: ConeLabel) -> tuple[Fraction, Fraction]:
    j, s, t = label
    angle = 2 * math.pi * (s + (t + 0.5) / (2 * j + 1)) / 5
    r = j + 1
    return (
        Fraction(r * math.cos(angle)).limit_denominator(10**6),
        Fraction(r * math.sin(angle)).limit_denominator(10**6),
    )


def build_cone(n: int) -> FamilyInstance:
    """One-pentagon nanocone with ``n`` hexagon layers around the core."""
    _check_params("Cone", (n,))
    labels = [
        ConeLabel(j, s, t)
        for j in range(n + 1)
        for s in range(5)
        for t in range(2 * j + 1)
    ]
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for j in range(n + 1):
        start = 5 * j * j  # vertices in cycles 0 .. j-1
        length = 5 * (2 * j + 1)
        for i in range(length):
            edges.append((start + i, start + (i + 1) % length))
        if j < n:
            for s in range(5):
                for t in range(0, 2 * j + 1, 2):
                    edges.append((index[ConeLabel(j, s, t)], index[ConeLabel(j + 1, s, t + 1)]))
    graph = Graph(len(labels), tuple(edges))
    embedding = tuple(_cone_position(lab) for lab in labels)
    return FamilyInstance("Cone", (n,), graph, embedding, tuple(labels))


def build(family: str, params) -> FamilyInstance:
    family = canonical_family(family)
    params = tuple(int(p) for p in params)
    builders = {"A": build_A, "Z": build_Z, "M": build_M, "ZL": build_ZL, "Cone": build_cone}
    _check_params(family, params)
    return builders[family](*params)


def rotate_sector(label: ConeLabel, steps: int = 1) -> ConeLabel:
    return ConeLabel(label.layer, (label.sector + steps) % 5, label.arc)


def sector_partition(cone: FamilyInstance) -> list[frozenset[int]]:
    """The five sector vertex sets of a cone, in sector order."""
    if not isinstance(cone, FamilyInstance) or cone.family != "Cone":
        raise TypeError("sector_partition needs an instance built by build_cone")
    sectors: list[set[int]] = [set() for _ in range(5)]
    for v, lab in enumerate(cone.labels):
        sectors[lab.sector].add(v)
    return [frozenset(s) for s in sectors]


def sector_union(cone: FamilyInstance, count: int, first: int = 0) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``count`` consecutive sectors starting at ``first``.

    Returns the subgraph and the map from its vertices to cone vertices.
    """
    if not 1 <= count <= 5:
        raise ValueError(f"sector count must be in 1..5, got {count}")
    parts = sector_partition(cone)
    chosen = set().union(*(parts[(first + i) % 5] for i in range(count)))
    return cone.graph.induced(chosen)


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Explicit vertex bijection ``g -> h`` preserving adjacency, or None."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return None
    gx = nx.Graph()
    gx.add_nodes_from(range(g.vertex_count))
    gx.add_edges_from(g.edges)
    hx = nx.Graph()
    hx.add_nodes_from(range(h.vertex_count))
    hx.add_edges_from(h.edges)
    matcher = nx.algorithms.isomorphism.GraphMatcher(gx, hx)
    if not matcher.is_isomorphic():
        return None
    mapping = dict(matcher.mapping)
    if not is_isomorphism(g, h, mapping):
        raise AssertionError("isomorphism search returned an invalid mapping")
    return mapping


def is_isomorphism(g: Graph, h: Graph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != list(range(g.vertex_count)):
        return False
    if sorted(mapping.values()) != list(range(h.vertex_count)):
        return False
    image = {tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges}
    return image == set(h.edges)


def sector_model(cone: FamilyInstance, count: int) -> FamilyInstance:
    """Standalone family instance matching ``count`` consecutive cone sectors.

    One sector of ``G_n`` is ``A(n - 1)``, two are ``Z(n, n)`` and three are
    ``M(2n, n)``.
    """
    (n,) = cone.params
    if count == 1:
        if n < 1:
            raise ValueError("a single sector of G_0 is one vertex, not an A graph")
        return build_A(n - 1)
    if count == 2:
        return build_Z(n, n)
    if count == 3:
        return build_M(2 * n, n)
    raise ValueError(f"no standalone model for {count} sectors")


def sector_bijection(cone: FamilyInstance, count: int) -> dict[ConeLabel, object]:
    """Label bijection from ``count`` cone sectors onto their standalone model.

    Keys are cone labels, values are the model's brick-wall labels. Raises if
    the two graphs are not isomorphic.
    """
    sub, to_cone = sector_union(cone, count)
    model = sector_model(cone, count)
    mapping = find_isomorphism(sub, model.graph)
    if mapping is None:
        raise AssertionError(
            f"{count} sector(s) of {cone.name} are not isomorphic to {model.name}"
        )
    return {cone.labels[to_cone[i]]: model.labels[j] for i, j in mapping.items()}
