"""Text format round trips and parse errors."""

import pytest

from gainarr.errors import ParseError
from gainarr.gaingraph import GROUP_Z, GainGraph, group_f
from gainarr.graphio import parse_graph, serialize_graph


def test_parse_basic_z():
    g, warnings = parse_graph("group Z\nvertices 3\nedge 1 2 0\nedge 2 3 -1\n")
    assert warnings == []
    assert g.group == GROUP_Z
    assert g.vertices == (1, 2, 3)
    assert g.edges == ((1, 2, 0), (2, 3, -1))


def test_parse_skips_comments_and_blanks():
    text = """
# a triangle
group Z

vertices 3   # three of them
edge 1 2 0
# middle comment
edge 1 3 0
edge 2 3 1
"""
    g, warnings = parse_graph(text)
    assert warnings == []
    assert len(g.edges) == 3


def test_parse_normalizes_orientation():
    g, _ = parse_graph("group Z\nvertices 2\nedge 2 1 3\n")
    assert g.edges == ((1, 2, -3),)


def test_parse_collapses_duplicates():
    text = "group Z\nvertices 2\nedge 1 2 5\nedge 1 2 5\nedge 2 1 -5\n"
    g, _ = parse_graph(text)
    assert g.edges == ((1, 2, 5),)


def test_parse_finite_group_reduces_with_warning():
    g, warnings = parse_graph("group F 3\nvertices 2\nedge 1 2 4\nedge 1 2 -1\n")
    assert g.group == group_f(3)
    assert g.edges == ((1, 2, 1), (1, 2, 2))
    assert warnings == [
        "line 3: gain 4 reduced to 1 mod 3",
        "line 4: gain -1 reduced to 2 mod 3",
    ]


def test_parse_rejects_composite_group_order():
    with pytest.raises(ParseError, match="line 1: group order 4 is not prime"):
        parse_graph("group F 4\nvertices 2\n")


def test_parse_rejects_bad_group_line():
    with pytest.raises(ParseError, match="line 1"):
        parse_graph("group Q\nvertices 2\n")
    with pytest.raises(ParseError, match="line 2: bad group order"):
        parse_graph("# leading comment\ngroup F seven\nvertices 2\n")


def test_parse_rejects_bad_vertices_line():
    with pytest.raises(ParseError, match="line 2: expected 'vertices"):
        parse_graph("group Z\nedge 1 2 0\n")
    with pytest.raises(ParseError, match="vertex count must be positive"):
        parse_graph("group Z\nvertices 0\n")


def test_parse_rejects_malformed_edge():
    with pytest.raises(ParseError, match="line 3: expected 'edge"):
        parse_graph("group Z\nvertices 2\nedge 1 2\n")
    with pytest.raises(ParseError, match="line 3: non-integer"):
        parse_graph("group Z\nvertices 2\nedge 1 2 x\n")


def test_parse_rejects_loop_with_line_number():
    with pytest.raises(ParseError, match="line 4: loop edge at vertex 2"):
        parse_graph("group Z\nvertices 3\nedge 1 2 0\nedge 2 2 1\n")


def test_parse_rejects_out_of_range_vertex():
    with pytest.raises(ParseError, match="line 3: vertex out of range"):
        parse_graph("group Z\nvertices 2\nedge 1 3 0\n")


def test_parse_rejects_truncated_input():
    with pytest.raises(ParseError, match="missing group line"):
        parse_graph("# nothing here\n")
    with pytest.raises(ParseError, match="missing vertices line"):
        parse_graph("group Z\n")


def test_round_trip_z():
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 0), (1, 3, -2), (2, 3, 1)])
    parsed, warnings = parse_graph(serialize_graph(g))
    assert warnings == []
    assert parsed == g


def test_round_trip_finite():
    g = GainGraph(group_f(5), (1, 2), [(1, 2, 0), (1, 2, 4)])
    parsed, warnings = parse_graph(serialize_graph(g))
    assert warnings == []
    assert parsed == g


def test_serialize_relabels_vertices():
    g = GainGraph(GROUP_Z, (3, 7, 9), [(3, 7, 1), (7, 9, -1)])
    text = serialize_graph(g)
    assert text == "group Z\nvertices 3\nedge 1 2 1\nedge 2 3 -1\n"
