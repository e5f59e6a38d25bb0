"""Characteristic polynomials three independent ways.

1. chi_poset: build the intersection poset of an arrangement layer by
   layer, run the Mobius recursion, and sum mu(X) t^dim(X).  Works over
   any of the exact domains, affine or central.
2. chi_gaingraph_recursive: deletion-contraction on the gain graph with
   base case t^l for the affinographic arrangement and (t-1)^l for the
   bias arrangement, pivoting on the lexicographically smallest edge,
   memoized on the graph's canonical key.
3. chi_finite_field_oracle: count complement points of the affinographic
   arrangement of an integer-gain graph over enough large primes and
   interpolate; extra primes cross-check the interpolation.

The three must agree; tests and the verify suites enforce that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import make_arrangement
from .errors import ArrangementError, BoundExceeded, GraphError, VerificationError
from .gaingraph import GROUP_Z, GainGraph, contract_edge
from .intpoly import IntPolynomial, T_MINUS_1
from .scalars import QQ_Q, SpanTracker, pdiv_exact, pgcd, pmul

DEFAULT_MAX_HYPERPLANES = 24


# ---------------------------------------------------------------------------
# intersection poset


@dataclass(frozen=True)
class Flat:
    """A nonempty intersection of hyperplanes.

    closure: indices of every hyperplane containing the flat.
    rank: codimension in the ambient space.
    """

    closure: frozenset
    rank: int


@dataclass(frozen=True)
class IntersectionPoset:
    """All flats ordered by reverse inclusion, with Mobius values.

    flats[0] is the ambient space; mobius is aligned with flats.
    """

    arrangement: object
    flats: tuple
    mobius: tuple

    def __len__(self):
        return len(self.flats)


def _scaled_aug_rows(arr):
    """Augmented rows (coeffs | const), denominator-cleared for Q(q)."""
    D = arr.domain
    rows = []
    for h in arr.hyperplanes:
        row = list(h.coeffs) + [h.const]
        if D is QQ_Q:
            scale = (1,)
            for _, den in row:
                if den != (1,):
                    g = pgcd(scale, den)
                    scale = pmul(pdiv_exact(scale, g), den)
            if scale != (1,):
                row = [D.mul(x, (scale, (1,))) for x in row]
        rows.append(row)
    return rows


def intersection_poset(arr, max_hyperplanes=DEFAULT_MAX_HYPERPLANES):
    """Layered closure construction of the poset of nonempty flats."""
    if len(arr) > max_hyperplanes:
        raise BoundExceeded(
            f"poset construction capped at {max_hyperplanes} hyperplanes,"
            f" arrangement has {len(arr)}"
        )
    D = arr.domain
    rows = _scaled_aug_rows(arr)
    n_h = len(rows)

    bottom = Flat(frozenset(), 0)
    found = {bottom.closure: bottom}
    layer = [(bottom, SpanTracker(D, arr.dim + 1))]
    while layer:
        nxt = []
        for flat, tracker in layer:
            for k in range(n_h):
                if k in flat.closure:
                    continue
                res = tracker.reduce(rows[k])
                if all(D.is_zero(x) for x in res[:-1]):
                    # residual constant nonzero: empty; zero cannot happen
                    # for k outside the closure
                    continue
                t2 = tracker.copy()
                t2.add(rows[k])
                closure = frozenset(
                    m for m in range(n_h) if t2.contains(rows[m])
                )
                if closure not in found:
                    f2 = Flat(closure, flat.rank + 1)
                    found[closure] = f2
                    nxt.append((f2, t2))
        layer = nxt

    flats = sorted(found.values(), key=lambda f: (f.rank, sorted(f.closure)))
    mobius = []
    for i, x in enumerate(flats):
        if x.rank == 0:
            mobius.append(1)
            continue
        acc = 0
        for j, y in enumerate(flats[:i]):
            if y.closure < x.closure:
                acc += mobius[j]
        # flats are rank-sorted, so every Y strictly below X precedes it
        mobius.append(-acc)
    return IntersectionPoset(arr, tuple(flats), tuple(mobius))


def chi_poset(arr, max_hyperplanes=DEFAULT_MAX_HYPERPLANES):
    """Characteristic polynomial via the Mobius function of the poset."""
    poset = intersection_poset(arr, max_hyperplanes)
    coeffs = [0] * (arr.dim + 1)
    for flat, mu in zip(poset.flats, poset.mobius):
        coeffs[arr.dim - flat.rank] += mu
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# deletion-contraction on gain graphs

_CHI_CACHE = {}


def clear_caches():
    _CHI_CACHE.clear()


def chi_gaingraph_recursive(graph, kind):
    """chi of the affinographic or bias arrangement by deletion-contraction.

    kind is "affinographic" or "bias".  The recursion always pivots on the
    lexicographically smallest edge class in its canonical orientation, so
    results are reproducible node for node.
    """
    if kind not in ("affinographic", "bias"):
        raise GraphError(f"unknown arrangement kind {kind!r}")
    key = (kind, graph.key)
    hit = _CHI_CACHE.get(key)
    if hit is not None:
        return hit
    result = _chi_rec(graph, kind)
    return result


def _chi_rec(graph, kind):
    key = (kind, graph.key)
    hit = _CHI_CACHE.get(key)
    if hit is not None:
        return hit
    if not graph.edges:
        n = graph.n_vertices
        if kind == "affinographic":
            val = IntPolynomial.t_power(n)
        else:
            val = IntPolynomial.from_roots([1] * n)
    else:
        e = graph.edges[0]
        deleted = GainGraph(
            graph.group, graph.vertices, graph.edges[1:], _trusted=True
        )
        contracted = contract_edge(graph, e)
        val = _chi_rec(deleted, kind) - _chi_rec(contracted, kind)
    _CHI_CACHE[key] = val
    return val


def chi_cone(graph):
    """chi of the coned affinographic arrangement, (t - 1) * chi_affin."""
    return T_MINUS_1 * chi_gaingraph_recursive(graph, "affinographic")


def chi_of_kind(graph, kind):
    """kind in {"affinographic", "bias", "cone"}."""
    if kind == "cone":
        return chi_cone(graph)
    return chi_gaingraph_recursive(graph, kind)


# ---------------------------------------------------------------------------
# finite field counting oracle


def _primes_above(bound, count):
    out = []
    cand = max(2, bound + 1)
    while len(out) < count:
        if all(cand % d for d in range(2, int(cand**0.5) + 1)):
            out.append(cand)
        cand += 1
    return out


def chi_finite_field_oracle(graph, n_control=2, max_vertices=5):
    """Point-count chi of the affinographic arrangement of a Z-gain graph.

    Counts complement points over the first l+1 primes exceeding
    2*l*max|gain| + l, Lagrange-interpolates the degree-l polynomial, and
    checks the result against n_control further primes.
    """
    if graph.group != GROUP_Z:
        raise GraphError("finite field oracle needs integer gains")
    l = graph.n_vertices
    if l > max_vertices:
        raise BoundExceeded(
            f"finite field oracle capped at {max_vertices} vertices"
        )
    import numpy as np

    maxg = max((abs(g) for _, _, g in graph.edges), default=0)
    bound = 2 * l * maxg + l
    primes = _primes_above(bound, l + 1 + n_control)
    idx = {v: k for k, v in enumerate(graph.vertices)}
    edges = [(idx[i], idx[j], g) for i, j, g in graph.edges]

    counts = []
    for p in primes:
        total = 0
        # chunk on the first coordinate so memory stays p^(l-1)-sized
        if l == 1:
            counts.append(p)
            continue
        rest = np.indices((p,) * (l - 1)).reshape(l - 1, -1)
        for x0 in range(p):
            ok = np.ones(rest.shape[1], dtype=bool)
            for i, j, g in edges:
                xi = x0 if i == 0 else rest[i - 1]
                xj = x0 if j == 0 else rest[j - 1]
                ok &= (xi - xj - g) % p != 0
            total += int(ok.sum())
        counts.append(total)

    xs = primes[: l + 1]
    ys = counts[: l + 1]
    coeffs = [Fraction(0)] * (l + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [Fraction(yi)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = [Fraction(0)] + num
            for k in range(len(num) - 1):
                num[k] -= num[k + 1] * xj
            den *= xi - xj
        for k, c in enumerate(num):
            coeffs[k] += c / den
    if any(c.denominator != 1 for c in coeffs):
        raise VerificationError("finite field counts do not interpolate in Z[t]")
    poly = IntPolynomial(tuple(int(c) for c in coeffs))
    for p, n in zip(primes[l + 1 :], counts[l + 1 :]):
        if poly(p) != n:
            raise VerificationError(
                f"control prime {p}: counted {n}, polynomial gives {poly(p)}"
            )
    return poly


def region_count(arr_or_chi, max_hyperplanes=DEFAULT_MAX_HYPERPLANES):
    """Number of chambers of a real arrangement: (-1)^l chi(-1)."""
    chi = arr_or_chi
    if not isinstance(chi, IntPolynomial):
        if chi.domain.char != 0:
            raise ArrangementError("region count needs a real arrangement")
        chi = chi_poset(chi, max_hyperplanes)
    val = (-1) ** chi.degree * chi(-1)
    if val <= 0:
        raise VerificationError(f"nonpositive region count {val}")
    return val
