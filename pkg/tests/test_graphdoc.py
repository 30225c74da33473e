"""JSON graph documents: exact rationals, diagnostics, canonical output."""

from fractions import Fraction

import pytest

from levelgraph.catalog import octahedron
from levelgraph.errors import InputError
from levelgraph.graphdoc import GraphDocument, dumps, load, loads, save


def test_round_trip_is_idempotent():
    doc = GraphDocument(octahedron(), {"f": [Fraction(i, 3) for i in range(6)]})
    text = dumps(doc)
    again = dumps(loads(text))
    assert text == again


def test_rationals_survive_exactly():
    doc = loads(dumps(GraphDocument(octahedron(),
                                    {"f": [Fraction(1, 3)] * 6})))
    assert doc.values["f"] == [Fraction(1, 3)] * 6


def test_values_accept_ints_and_strings():
    doc = loads("""{"vertices": 2, "edges": [[0, 1]],
                    "values": {"f": [3, "-7/2"]}}""")
    assert doc.values["f"] == [Fraction(3), Fraction(-7, 2)]


def test_vertex_count_or_labels():
    by_count = loads('{"vertices": 3, "edges": [[0, 1]]}')
    assert by_count.graph.n == 3 and by_count.graph.labels is None
    by_labels = loads('{"vertices": ["a", "b"], "edges": [[0, 1]]}')
    assert by_labels.graph.n == 2
    assert list(by_labels.graph.labels) == ["a", "b"]


def test_coordinates_round_trip():
    g = octahedron()
    assert g.coordinates is not None
    doc = loads(dumps(GraphDocument(g)))
    assert doc.graph.coordinates == g.coordinates


def test_bad_json_reports_position():
    with pytest.raises(InputError, match=r"line 2, column"):
        loads('{"vertices": 2,\n "edges": }')


def test_bad_edge_reports_index():
    with pytest.raises(InputError, match=r"edges\[1\]"):
        loads('{"vertices": 3, "edges": [[0, 1], [1, 1]]}')
    with pytest.raises(InputError, match=r"edges\[0\].*out of range"):
        loads('{"vertices": 2, "edges": [[0, 5]]}')
    with pytest.raises(InputError, match=r"edges\[1\].*duplicate"):
        loads('{"vertices": 2, "edges": [[0, 1], [1, 0]]}')


def test_bad_value_entry_reports_path():
    with pytest.raises(InputError, match=r"values\['f'\]\[1\]"):
        loads('{"vertices": 2, "edges": [[0, 1]], "values": {"f": [1, "x"]}}')
    with pytest.raises(InputError, match=r"values\['f'\].*expected 2"):
        loads('{"vertices": 2, "edges": [[0, 1]], "values": {"f": [1]}}')


def test_unsupported_version():
    with pytest.raises(InputError, match="format_version"):
        loads('{"format_version": 99, "vertices": 1, "edges": []}')


def test_file_round_trip(tmp_path):
    p = tmp_path / "doc.json"
    doc = GraphDocument(octahedron(), {"h": [Fraction(5)] * 6})
    save(doc, str(p))
    back = load(str(p))
    assert back.graph.n == 6
    assert back.values["h"] == [Fraction(5)] * 6
    assert dumps(back) == dumps(doc)
