"""Instance generators for the verification suites.

Exhaustive enumerations are ordered deterministically (vertex count, then
edge count, then lexicographic edge tuples) so that suite reports are
byte-stable.  Random instances come from a caller-supplied seeded Random.
"""

from __future__ import annotations

import itertools
import math

from .gaingraph import GROUP_Z, GainGraph, group_f

F2 = group_f(2)

PAIR_STATES_F2 = ((), (0,), (1,), (0, 1))


def vertex_pairs(l):
    return [(i, j) for i in range(1, l + 1) for j in range(i + 1, l + 1)]


def z_ground_set(l, gain_bound):
    """All candidate edges (i, j, g), i < j, |g| <= gain_bound, sorted."""
    return sorted(
        (i, j, g) for i, j in vertex_pairs(l) for g in range(-gain_bound, gain_bound + 1)
    )


def z_graph_count(l, max_edges, gain_bound):
    n = len(z_ground_set(l, gain_bound))
    return sum(math.comb(n, k) for k in range(min(max_edges, n) + 1))


def iter_z_graphs(l, max_edges, gain_bound):
    """Every integer gain graph on vertices 1..l with at most max_edges
    edge classes and gains in [-gain_bound, gain_bound]."""
    verts = tuple(range(1, l + 1))
    ground = z_ground_set(l, gain_bound)
    for k in range(min(max_edges, len(ground)) + 1):
        for combo in itertools.combinations(ground, k):
            yield GainGraph(GROUP_Z, verts, combo, _trusted=True)


def iter_f2_graphs(l):
    """Every signed graph on vertices 1..l: 4 states per vertex pair."""
    verts = tuple(range(1, l + 1))
    pairs = vertex_pairs(l)
    for combo in itertools.product(PAIR_STATES_F2, repeat=len(pairs)):
        edges = tuple(
            (i, j, g) for (i, j), st in zip(pairs, combo) for g in st
        )
        yield GainGraph(F2, verts, edges, _trusted=True)


def random_z_graph(rng, l, max_edges, gain_bound):
    ground = z_ground_set(l, gain_bound)
    k = rng.randint(0, min(max_edges, len(ground)))
    combo = tuple(sorted(rng.sample(ground, k)))
    return GainGraph(GROUP_Z, tuple(range(1, l + 1)), combo, _trusted=True)


def random_f2_graph(rng, l):
    pairs = vertex_pairs(l)
    edges = tuple(
        (i, j, g)
        for i, j in pairs
        for g in PAIR_STATES_F2[rng.randrange(4)]
    )
    return GainGraph(F2, tuple(range(1, l + 1)), edges, _trusted=True)


def iter_digraph_arc_sets(l):
    """Arc subsets of the ascending pairs on 1..l, in mask order."""
    pairs = vertex_pairs(l)
    for mask in range(1 << len(pairs)):
        yield tuple(p for k, p in enumerate(pairs) if mask >> k & 1)


def complete_positive_graphs(l):
    """Signed graphs with a complete positive layer: one per negative
    edge subset, yielded with the plain negative graph's pair list."""
    pairs = vertex_pairs(l)
    verts = tuple(range(1, l + 1))
    for mask in range(1 << len(pairs)):
        neg = tuple(p for k, p in enumerate(pairs) if mask >> k & 1)
        edges = tuple(
            sorted([(i, j, 0) for i, j in pairs] + [(i, j, 1) for i, j in neg])
        )
        yield GainGraph(F2, verts, edges, _trusted=True), neg


def three_vertex_instances(gain_bound=2, max_per_pair=3):
    """Integer gain graphs on 3 vertices: per-pair gain sets of size at
    most max_per_pair drawn from [-gain_bound, gain_bound]."""
    gains = range(-gain_bound, gain_bound + 1)
    sets = [
        s for r in range(max_per_pair + 1) for s in itertools.combinations(gains, r)
    ]
    for s12, s13, s23 in itertools.product(sets, repeat=3):
        edges = tuple(
            sorted(
                [(1, 2, g) for g in s12]
                + [(1, 3, g) for g in s13]
                + [(2, 3, g) for g in s23]
            )
        )
        yield GainGraph(GROUP_Z, (1, 2, 3), edges, _trusted=True)
