"""Gain graphs: normalization, minors, switching, cycles."""

import pytest

from gainarr.errors import GraphError
from gainarr.gaingraph import (
    GROUP_Z,
    GainGraph,
    canonical_key,
    contract_edge,
    delete_edge,
    enumerate_cycles,
    group_f,
    induced_subgraph,
    is_balanced,
    switch_vertex,
)

F2 = group_f(2)
F5 = group_f(5)


def test_edge_reversal_negates_gain():
    g = GainGraph(GROUP_Z, (1, 2), [(2, 1, 3)])
    assert g.edges == ((1, 2, -3),)
    h = GainGraph(F5, (1, 2), [(2, 1, 3)])
    assert h.edges == ((1, 2, 2),)


def test_duplicate_classes_collapse():
    g = GainGraph(GROUP_Z, (1, 2), [(1, 2, 1), (2, 1, -1), (1, 2, 1)])
    assert g.edges == ((1, 2, 1),)


def test_fp_gains_reduce():
    g = GainGraph(F2, (1, 2), [(1, 2, 7)])
    assert g.edges == ((1, 2, 1),)


def test_loops_rejected():
    with pytest.raises(GraphError):
        GainGraph(GROUP_Z, (1, 2), [(1, 1, 0)])


def test_edges_must_use_known_vertices():
    with pytest.raises(GraphError):
        GainGraph(GROUP_Z, (1, 2), [(1, 3, 0)])


def test_vertices_sorted():
    g = GainGraph(GROUP_Z, (3, 1, 2), [])
    assert g.vertices == (1, 2, 3)


def test_delete_edge():
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 0), (2, 3, 1)])
    h = delete_edge(g, (1, 2, 0))
    assert h.edges == ((2, 3, 1),)
    assert h.vertices == g.vertices


def test_contract_edge_shifts_gains():
    # contracting [1,2,g] sends 1 into 2; [1,3,h] becomes [2,3,h-g] after
    # rerouting through the contracted edge
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 2), (1, 3, 5)])
    h = contract_edge(g, (1, 2, 2))
    assert h.vertices == (2, 3)
    assert h.edges == ((2, 3, 3),)


def test_contract_edge_opposite_orientation():
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 2), (1, 3, 5)])
    h = contract_edge(g, (2, 1, -2))
    assert h.vertices == (1, 3)
    assert h.edges == ((1, 3, 5),)


def test_contract_drops_loops_and_merges_parallels():
    g = GainGraph(
        GROUP_Z, (1, 2, 3), [(1, 2, 0), (1, 2, 1), (1, 3, 0), (2, 3, 0)]
    )
    h = contract_edge(g, (1, 2, 0))
    # the parallel class [1,2,1] becomes an unbalanced loop: discarded
    assert h.vertices == (2, 3)
    assert h.edges == ((2, 3, 0),)


def test_switching_preserves_cycle_balance():
    g = GainGraph(F2, (1, 2, 3), [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    balances = sorted(is_balanced(c, g.group) for c in enumerate_cycles(g))
    s = switch_vertex(g, 2)
    assert s.key != g.key
    assert sorted(is_balanced(c, s.group) for c in enumerate_cycles(s)) == balances


def test_switching_needs_sign_gains():
    g = GainGraph(GROUP_Z, (1, 2), [(1, 2, 1)])
    with pytest.raises(GraphError):
        switch_vertex(g, 1)


def test_switching_is_an_involution_over_f2():
    g = GainGraph(F2, (1, 2, 3), [(1, 2, 0), (2, 3, 1), (1, 3, 1)])
    assert switch_vertex(switch_vertex(g, 2), 2).key == g.key


def test_enumerate_cycles_triangle():
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 1), (2, 3, 2), (1, 3, 3)])
    cycles = enumerate_cycles(g)
    assert len(cycles) == 1
    assert is_balanced(cycles[0], GROUP_Z)
    g2 = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 1), (2, 3, 2), (1, 3, 0)])
    assert not is_balanced(enumerate_cycles(g2)[0], GROUP_Z)


def test_enumerate_cycles_counts():
    # K4 with zero gains: 4 triangles + 3 squares
    edges = [(i, j, 0) for i in (1, 2, 3) for j in range(i + 1, 5)]
    g = GainGraph(GROUP_Z, (1, 2, 3, 4), edges)
    cycles = enumerate_cycles(g)
    assert len(cycles) == 7
    assert all(is_balanced(c, GROUP_Z) for c in cycles)


def test_parallel_edges_make_short_cycles():
    g = GainGraph(GROUP_Z, (1, 2), [(1, 2, 0), (1, 2, 1)])
    cycles = enumerate_cycles(g, min_length=2)
    assert len(cycles) == 1
    assert not is_balanced(cycles[0], GROUP_Z)


def test_induced_subgraph():
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 1), (2, 3, 2), (1, 3, 3)])
    h = induced_subgraph(g, (1, 3))
    assert h.vertices == (1, 3)
    assert h.edges == ((1, 3, 3),)


def test_canonical_key_identifies_equal_graphs():
    a = GainGraph(GROUP_Z, (1, 2), [(2, 1, -1)])
    b = GainGraph(GROUP_Z, (2, 1), [(1, 2, 1)])
    assert canonical_key(a) == canonical_key(b)
