"""On-disk format round trips."""

from __future__ import annotations

import json

import pytest

from recolor import Coloring, Graph, InvalidParams, TreeDecomposition
from recolor import io as rio
from recolor.engine import RecoloringSequence, RecoloringStep


def sample_graph():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


class TestGraphFormats:
    def test_text_round_trip(self):
        g = sample_graph()
        assert rio.graph_from_text(rio.graph_to_text(g)) == g

    def test_text_header_checked(self):
        with pytest.raises(InvalidParams):
            rio.graph_from_text("3\n")
        with pytest.raises(InvalidParams):
            rio.graph_from_text("3 2\n0 1\n")

    def test_json_round_trip(self):
        g = sample_graph()
        assert rio.graph_from_json(rio.graph_to_json(g)) == g

    def test_json_accepts_edge_list(self):
        g = rio.graph_from_json({"n": 3, "edges": [[0, 1], [1, 2]]})
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_json_one_sided_adjacency_ok(self):
        g = rio.graph_from_json({"n": 2, "adj": [[1], []]})
        assert g.has_edge(0, 1)

    def test_read_graph_sniffs_and_unwraps_bundles(self, tmp_path):
        g = sample_graph()
        p1 = tmp_path / "g.txt"
        p1.write_text(rio.graph_to_text(g))
        assert rio.read_graph(p1) == g
        p2 = tmp_path / "g.json"
        p2.write_text(json.dumps({"graph": rio.graph_to_json(g)}))
        assert rio.read_graph(p2) == g


class TestOtherFormats:
    def test_coloring_round_trip(self, tmp_path):
        c = Coloring((1, 3, 2), 3)
        p = tmp_path / "c.json"
        rio.write_coloring(p, c)
        assert rio.read_coloring(p, 3) == c

    def test_coloring_must_be_array(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text('{"colors": [1, 2]}')
        with pytest.raises(InvalidParams):
            rio.read_coloring(p, 3)

    def test_decomposition_round_trip(self):
        td = TreeDecomposition.make([{0, 1, 2}, {0, 2, 3}], [(0, 1)])
        obj = rio.decomposition_to_json(td)
        assert rio.decomposition_from_json(obj) == td

    def test_sequence_round_trip(self, tmp_path):
        s = RecoloringSequence(
            (RecoloringStep(1, 3), RecoloringStep(0, 2)), Coloring((1, 2, 1), 3), 3
        )
        p = tmp_path / "s.json"
        rio.write_sequence(p, s)
        assert rio.read_sequence(p) == s

    def test_sequence_json_shape(self):
        s = RecoloringSequence((RecoloringStep(1, 3),), Coloring((1, 2), 3), 3)
        obj = rio.sequence_to_json(s)
        assert obj == {"palette": 3, "start": [1, 2], "steps": [[1, 3]]}

    def test_ordering_reader_accepts_plain_list(self, tmp_path):
        g = Graph(3, [(0, 1), (1, 2)])
        p = tmp_path / "o.json"
        p.write_text("[2, 1, 0]")
        o = rio.read_ordering(p, g)
        assert o.order == (2, 1, 0)
