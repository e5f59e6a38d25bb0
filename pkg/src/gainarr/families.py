"""Named gain-graph families and digraph-level freeness criteria.

The families are integer gain graphs on vertices 1..l whose difference
arrangement (or whose bias arrangement, for the dms family) is the named
one: braid, Boolean, extended Catalan, extended Shi.  A digraph with
ascending arcs encodes the graphs "complete zero layer plus some gain-one
edges"; for those, freeness and supersolvability of the arrangement reduce
to two finite induced-subdigraph conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphError
from .gaingraph import GROUP_Z, GainGraph, group_f

FAMILY_KINDS = ("coxeter", "boolean", "catalan", "shi", "dms")

# complete 3-vertex graph carrying both gains over the two-element group;
# a free arrangement fixture (only freeness is asserted of it)
EDELMAN_REINER_3 = GainGraph(
    group_f(2),
    (1, 2, 3),
    tuple((i, j, g) for i in (1, 2) for j in range(i + 1, 4) for g in (0, 1)),
    _trusted=True,
)


def make_family(kind, l, m=0):
    """Gain graph for a named family on vertices 1..l.

    coxeter: all [i,j,0] (braid arrangement).
    boolean: edgeless (coordinate arrangement, via the bias construction).
    catalan: all [i,j,g] with -m <= g <= m.
    shi: all [i,j,g] with -(m-1) <= g <= m, m >= 1.
    dms: the catalan graph, meant to be read through its bias arrangement.
    """
    if kind not in FAMILY_KINDS:
        raise GraphError(f"unknown family kind {kind!r}")
    if l < 2:
        raise GraphError("families need at least two vertices")
    if m < 0:
        raise GraphError("multiplicity parameter must be nonnegative")
    vertices = range(1, l + 1)
    if kind == "boolean":
        return GainGraph(GROUP_Z, vertices, [])
    if kind == "coxeter":
        gains = [0]
    elif kind in ("catalan", "dms"):
        gains = range(-m, m + 1)
    else:  # shi
        if m < 1:
            raise GraphError("shi needs m >= 1")
        gains = range(-(m - 1), m + 1)
    edges = [
        (i, j, g)
        for i in vertices
        for j in vertices
        if i < j
        for g in gains
    ]
    return GainGraph(GROUP_Z, vertices, edges)


def raney(l, s, r):
    """Raney number r/(l s + r) * binom(l s + r, l), exactly.

    Counts are nonnegative; l s + r must be positive.  A non-integer value
    signals invalid parameters and raises.
    """
    if l < 0 or s < 0 or r < 0:
        raise ValueError("raney parameters must be nonnegative")
    n = l * s + r
    if n <= 0:
        raise ValueError("raney needs l*s + r > 0")
    value = Fraction(r, n) * math.comb(n, l)
    if value.denominator != 1:
        raise ValueError(f"raney({l}, {s}, {r}) is not an integer")
    return int(value)


@dataclass(frozen=True)
class Digraph:
    """Directed graph on 1..n with every arc ascending (i < j)."""

    n_vertices: int
    arcs: tuple

    @staticmethod
    def make(n, arcs):
        seen = set()
        for i, j in arcs:
            if not (1 <= i < j <= n):
                raise GraphError(f"arc ({i}, {j}) must ascend within 1..{n}")
            seen.add((i, j))
        return Digraph(n, tuple(sorted(seen)))


def digraph_to_gaingraph(dg):
    """Complete zero layer plus a gain-one edge per arc."""
    edges = [
        (i, j, 0)
        for i in range(1, dg.n_vertices + 1)
        for j in range(i + 1, dg.n_vertices + 1)
    ]
    edges.extend((i, j, 1) for i, j in dg.arcs)
    return GainGraph(GROUP_Z, range(1, dg.n_vertices + 1), edges)


def ab_free_criterion(dg):
    """No induced two-arc directed path and no induced pair of disjoint arcs.

    Induced means the subset's arc set is exactly the stated shape: a
    transitive triangle does not count as a path, and two arcs meeting a
    common vertex never count as disjoint.
    """
    arcset = set(dg.arcs)
    for a, b in dg.arcs:
        for c, d in dg.arcs:
            if (a, b) >= (c, d):
                continue
            shared = {a, b} & {c, d}
            if len(shared) == 1:
                # candidate path a->b->c or interleavings; induced on the
                # union of the two arcs, so only the third pair can spoil it
                (v,) = shared
                outer = sorted(({a, b} | {c, d}) - {v})
                if b == c or d == a:
                    # head of one is tail of the other: a 2-arc walk
                    if (outer[0], outer[1]) not in arcset:
                        return False
            elif not shared:
                others = [
                    (p, q)
                    for p in sorted({a, b, c, d})
                    for q in sorted({a, b, c, d})
                    if p < q and (p, q) in arcset and (p, q) not in ((a, b), (c, d))
                ]
                if not others:
                    return False
    return True


def ab_supersolvable_criterion(dg):
    """All arcs share one terminal vertex or all share one initial vertex."""
    if len(dg.arcs) <= 1:
        return True
    tails = {i for i, _ in dg.arcs}
    heads = {j for _, j in dg.arcs}
    return len(tails) == 1 or len(heads) == 1
