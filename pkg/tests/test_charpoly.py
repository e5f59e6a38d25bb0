"""Characteristic polynomials: three computations, one answer."""

import pytest

from gainarr.arrangement import build_affinographic, build_bias, build_cone
from gainarr.charpoly import (
    chi_finite_field_oracle,
    chi_gaingraph_recursive,
    chi_of_kind,
    chi_poset,
    intersection_poset,
    region_count,
)
from gainarr.errors import BoundExceeded
from gainarr.gaingraph import GROUP_Z, GainGraph, group_f
from gainarr.intpoly import IntPolynomial, T


def braid(l):
    edges = [(i, j, 0) for i in range(1, l) for j in range(i + 1, l + 1)]
    return GainGraph(GROUP_Z, tuple(range(1, l + 1)), edges)


def test_braid_chi_is_falling_factorial():
    for l in (2, 3, 4):
        chi = chi_gaingraph_recursive(braid(l), "affinographic")
        assert chi == IntPolynomial.from_roots(list(range(l)))


def test_edgeless():
    g = GainGraph(GROUP_Z, (1, 2, 3), [])
    assert chi_gaingraph_recursive(g, "affinographic") == IntPolynomial.t_power(3)
    assert chi_gaingraph_recursive(g, "bias") == IntPolynomial.from_roots([1, 1, 1])


def test_one_edge():
    g = GainGraph(GROUP_Z, (1, 2), [(1, 2, 0)])
    assert chi_gaingraph_recursive(g, "affinographic") == T * IntPolynomial((-1, 1))
    assert chi_gaingraph_recursive(g, "bias") == IntPolynomial.from_roots([1, 2])


def test_unbalanced_triangle():
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 0), (2, 3, 0), (1, 3, 1)])
    chi = chi_gaingraph_recursive(g, "affinographic")
    assert chi == T * IntPolynomial((3, -3, 1))


def test_cone_relation():
    g = GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 0), (2, 3, 1), (1, 3, -1)])
    chi_a = chi_gaingraph_recursive(g, "affinographic")
    assert chi_of_kind(g, "cone") == IntPolynomial((-1, 1)) * chi_a


def test_shift_identity_fixtures():
    for edges in ([], [(1, 2, 0)], [(1, 2, 0), (2, 3, 2)], [(1, 2, 0), (1, 2, 1)]):
        g = GainGraph(GROUP_Z, (1, 2, 3), edges)
        a = chi_gaingraph_recursive(g, "affinographic")
        b = chi_gaingraph_recursive(g, "bias")
        assert a == b.shift(1)


def test_poset_agrees_with_recursion():
    graphs = [
        GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 0), (2, 3, 1), (1, 3, -1)]),
        GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 0), (1, 2, 1), (2, 3, 0)]),
        GainGraph(group_f(2), (1, 2, 3), [(1, 2, 0), (2, 3, 1), (1, 3, 1)]),
    ]
    for g in graphs:
        assert chi_poset(build_affinographic(g)) == chi_gaingraph_recursive(
            g, "affinographic"
        )
        assert chi_poset(build_bias(g)) == chi_gaingraph_recursive(g, "bias")
        assert chi_poset(build_cone(build_affinographic(g))) == chi_of_kind(g, "cone")


def test_finite_field_oracle_agrees():
    graphs = [
        GainGraph(GROUP_Z, (1, 2), [(1, 2, 0), (1, 2, 3)]),
        GainGraph(GROUP_Z, (1, 2, 3), [(1, 2, 0), (2, 3, 1), (1, 3, -1)]),
        braid(4),
    ]
    for g in graphs:
        assert chi_finite_field_oracle(g) == chi_gaingraph_recursive(
            g, "affinographic"
        )


def test_poset_moebius_structure():
    arr = build_affinographic(braid(3))
    poset = intersection_poset(arr)
    # braid(3): bottom, three hyperplanes, one triple line
    assert len(poset.flats) == 5
    assert chi_poset(arr) == IntPolynomial.from_roots([0, 1, 2])


def test_poset_bound():
    g = braid(4)
    with pytest.raises(BoundExceeded):
        chi_poset(build_affinographic(g), max_hyperplanes=3)


def test_region_count():
    assert region_count(chi_gaingraph_recursive(braid(3), "affinographic")) == 6
    # an affine line arrangement: 3 parallel plus one crossing
    g = GainGraph(GROUP_Z, (1, 2), [(1, 2, -1), (1, 2, 0), (1, 2, 1)])
    assert region_count(chi_gaingraph_recursive(g, "affinographic")) == 4


def test_chi_of_kind_names():
    g = GainGraph(GROUP_Z, (1, 2), [(1, 2, 0)])
    assert chi_of_kind(g, "affinographic") == chi_gaingraph_recursive(
        g, "affinographic"
    )
    assert chi_of_kind(g, "bias") == chi_gaingraph_recursive(g, "bias")
    with pytest.raises(Exception):
        chi_of_kind(g, "nonsense")
