import math

import pytest

from conftest import cycle, path
from nanocone import families
from nanocone.families import ConeLabel, build, build_A, build_cone, build_M, build_Z, build_ZL
from nanocone.graph import Graph, is_bipartite, is_connected, wiener
from nanocone.closed_forms import eval_formula
from nanocone.cuts import is_isometric


def _iso(g, h):
    return families.find_isomorphism(g, h) is not None


@pytest.mark.parametrize("n, v, e", [(0, 5, 5), (1, 20, 25), (3, 80, 110)])
def test_cone_sizes(n, v, e):
    g = build_cone(n).graph
    assert (g.vertex_count, g.edge_count) == (v, e)


def test_cone_zero_is_pentagon():
    assert _iso(build_cone(0).graph, cycle(5))


@pytest.mark.parametrize("n", range(0, 21))
def test_cone_edge_count_formula(n):
    assert build_cone(n).graph.edge_count == 5 * (n + 1) * (3 * n + 2) // 2


def _faces(inst):
    """Bounded faces of the planar embedding by walking half-edges."""
    import math as m
    pos = [(float(x), float(y)) for x, y in inst.embedding]
    adj = inst.graph.adjacency
    order = {
        v: sorted(adj[v], key=lambda w: m.atan2(pos[w][1] - pos[v][1], pos[w][0] - pos[v][0]))
        for v in range(inst.graph.vertex_count)
    }
    seen, faces = set(), []
    for u, v in inst.graph.edges:
        for a, b in ((u, v), (v, u)):
            if (a, b) in seen:
                continue
            face = []
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                nbrs = order[b]
                i = nbrs.index(a)
                a, b = b, nbrs[(i - 1) % len(nbrs)]
            faces.append(face)
    return faces


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cone_faces_are_hexagons_around_a_pentagon(n):
    inst = build_cone(n)
    sizes = sorted(len(f) for f in _faces(inst))
    bounded = sizes[:-1]  # the longest walk is the outer face
    assert bounded.count(5) == 1
    assert set(bounded) == {5, 6}
    g = inst.graph
    assert g.vertex_count - g.edge_count + len(sizes) == 2


def test_a0_is_star():
    g = build_A(0).graph
    star = Graph(4, ((0, 1), (0, 2), (0, 3)))
    assert _iso(g, star)
    assert wiener(g) == 9


def test_a1():
    g = build_A(1).graph
    assert g.vertex_count == 9
    assert wiener(g) == 84
    assert sorted(g.degree(v) for v in range(9)).count(1) == 3


def test_a7_count():
    assert build_A(7).graph.vertex_count == 81


def test_z_counts_and_values():
    assert build_Z(9, 5).graph.vertex_count == 120
    z11 = build_Z(1, 1).graph
    assert z11.vertex_count == 8 and wiener(z11) == 62
    assert _iso(build_Z(2, 0).graph, path(6))
    assert wiener(build_Z(2, 0).graph) == 35


def test_z11_pendants_antipodal():
    inst = build_Z(1, 1)
    g = inst.graph
    pend = [v for v in range(g.vertex_count) if g.degree(v) == 1]
    assert len(pend) == 2
    assert g.distance_matrix[pend[0], pend[1]] == 5


def test_m_examples():
    m00 = build_M(0, 0).graph
    assert _iso(m00, path(3))
    assert build_M(11, 6).graph.vertex_count == 133
    m21 = build_M(2, 1).graph
    assert m21.vertex_count == 12 and wiener(m21) == 185


def test_m_rejects_k_above_n():
    with pytest.raises(ValueError):
        build_M(1, 2)


def test_zl_examples():
    assert build_ZL(11, 6, 2).graph.vertex_count == 143
    small = build_ZL(2, 1, 0).graph
    assert small.vertex_count == 2 * 3 * 2 - 2 ** 2
    assert wiener(small) == eval_formula("W_ZL", (2, 1, 0))
    for n in range(4):
        for k in range(n + 1):
            assert build_ZL(n, k, k).graph.vertex_count == 2 * (n + 1) * (k + 1) - 1


@pytest.mark.parametrize("bad", [(-1, 0), (1.5, 1)])
def test_invalid_params(bad):
    with pytest.raises(ValueError):
        build_Z(*bad)


def test_unknown_family():
    with pytest.raises(ValueError):
        build("hexagon", (1,))


@pytest.mark.parametrize("fam, params, count", [
    ("Z", (9, 5), 120), ("Cone", (1,), 20), ("ZL", (11, 6, 2), 143), ("z", (1, 1), 8),
])
def test_expected_vertex_count(fam, params, count):
    assert families.expected_vertex_count(fam, params) == count


def test_cone_count_forced_by_pair_identity():
    for n in range(6):
        z = families.expected_vertex_count("Z", (n, n))
        m = families.expected_vertex_count("M", (2 * n, n))
        assert 5 * (math.comb(m, 2) - math.comb(z, 2)) == math.comb(5 * (n + 1) ** 2, 2)


def _grid():
    for n in range(5):
        yield "A", (n,)
        for k in range(n + 1):
            yield "Z", (n, k)
            yield "M", (n, k)
            for l in range(k + 1):
                yield "ZL", (n, k, l)


@pytest.mark.parametrize("fam, params", list(_grid()))
def test_lattice_instances_are_benzenoid_like(fam, params):
    inst = build(fam, params)
    g = inst.graph
    assert g.vertex_count == families.expected_vertex_count(fam, params)
    assert is_connected(g) and is_bipartite(g)
    assert max(g.degree(v) for v in range(g.vertex_count)) <= 3
    assert len(set(inst.embedding)) == g.vertex_count


def test_lattice_embedding_has_unit_edges():
    inst = build_M(4, 3)
    for u, v in inst.graph.edges:
        (x1, y1), (x2, y2) = inst.embedding[u], inst.embedding[v]
        assert (x1 - x2) ** 2 * 3 / 4 + (y1 - y2) ** 2 == 1


def test_sector_partition_g1():
    cone = build_cone(1)
    parts = families.sector_partition(cone)
    assert [len(p) for p in parts] == [4] * 5
    g1, _ = families.sector_union(cone, 1)
    assert _iso(g1, build_A(0).graph)
    g12, _ = families.sector_union(cone, 2)
    assert g12.vertex_count == 8 and wiener(g12) == 62


@pytest.mark.parametrize("n", range(0, 6))
def test_sector_partition_covers(n):
    parts = families.sector_partition(build_cone(n))
    assert sum(map(len, parts)) == 5 * (n + 1) ** 2
    assert len(frozenset().union(*parts)) == 5 * (n + 1) ** 2


def test_sector_partition_type_error():
    with pytest.raises(TypeError):
        families.sector_partition(build_Z(1, 1))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("count", [1, 2, 3])
def test_sector_unions_match_models(n, count):
    cone = build_cone(n)
    bij = families.sector_bijection(cone, count)
    model = families.sector_model(cone, count)
    assert len(bij) == model.graph.vertex_count
    sub, keep = families.sector_union(cone, count)
    assert is_isometric(cone.graph, keep)


@pytest.mark.parametrize("n", range(0, 5))
def test_rotation_is_automorphism(n):
    cone = build_cone(n)
    index = {lab: i for i, lab in enumerate(cone.labels)}
    image = {tuple(sorted((index[families.rotate_sector(cone.labels[u])],
                           index[families.rotate_sector(cone.labels[v])])))
             for u, v in cone.graph.edges}
    assert image == set(cone.graph.edges)


def test_rotate_sector_wraps():
    assert families.rotate_sector(ConeLabel(2, 4, 3)) == ConeLabel(2, 0, 3)


def test_find_isomorphism_negative():
    assert families.find_isomorphism(cycle(6), path(6)) is None
    assert families.find_isomorphism(cycle(6), Graph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)))) is None


def test_build_deterministic():
    a, b = build_ZL(5, 3, 1), build_ZL(5, 3, 1)
    assert a.graph == b.graph and a.embedding == b.embedding
