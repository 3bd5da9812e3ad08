import json

import pytest

from nanocone import families
from nanocone.formats import GraphDocument, from_csv, from_json, serialize, to_csv, to_dot, to_json


@pytest.mark.parametrize("fam, params", [("Cone", (2,)), ("Z", (3, 2)), ("ZL", (4, 3, 1)), ("A", (2,))])
def test_json_round_trip(fam, params):
    inst = families.build(fam, params)
    doc = GraphDocument.from_instance(inst)
    back = from_json(to_json(doc))
    assert back == doc
    assert back.graph == inst.graph


def test_json_fields():
    doc = GraphDocument.from_instance(families.build_cone(0))
    data = json.loads(to_json(doc))
    assert data["vertex_count"] == 5 and len(data["edges"]) == 5
    assert data["edges"] == sorted(data["edges"])
    assert data["version"] == 1
    assert all(isinstance(c, str) for pair in data["coordinates"] for c in pair)


def test_edges_deduplicated_and_sorted():
    doc = GraphDocument("custom", {}, 3, ((2, 1), (1, 2), (0, 1)))
    assert doc.edges == ((0, 1), (1, 2))


def test_bad_documents():
    with pytest.raises(IndexError):
        GraphDocument("custom", {}, 2, ((0, 5),))
    with pytest.raises(ValueError):
        from_json(json.dumps({"format": "nanocone-graph", "version": 99}))
    with pytest.raises(ValueError):
        from_json("{}")


def test_csv_round_trip():
    inst = families.build_Z(9, 5)
    text = to_csv(GraphDocument.from_instance(inst))
    assert text.splitlines()[0] == "source,target"
    assert from_csv(text) == inst.graph
    assert from_csv(text).vertex_count == 120


def test_dot_has_positions():
    text = to_dot(GraphDocument.from_instance(families.build_A(1)))
    assert text.startswith("graph nanocone {")
    assert text.count("pos=") == 9
    assert text.count(" -- ") == families.build_A(1).graph.edge_count


def test_serialize_is_deterministic():
    a = serialize(GraphDocument.from_instance(families.build_M(3, 2)), "dot")
    b = serialize(GraphDocument.from_instance(families.build_M(3, 2)), "dot")
    assert a == b
    with pytest.raises(ValueError):
        serialize(GraphDocument.from_instance(families.build_M(3, 2)), "xml")
