"""Hyperplane arrangements over exact domains.

Three constructions from a gain graph Gamma on vertices v_1 < ... < v_l:

  build_affinographic: x_i - x_j = g for each class [i, j, g], over Q for
      integer gains and over F_p for F_p gains.
  build_cone: homogenize with a new last coordinate z and add {z = 0}.
  build_bias: x_i = 0 for every vertex plus x_i - q^g x_j = 0 for every
      class, over Q(q) for integer gains and over Q(zeta_p) for F_p gains.

Hyperplanes are stored canonically: the first nonzero coefficient is 1.
Arrangements keep their hyperplanes sorted, so equal arrangements compare
equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArrangementError
from .gaingraph import GROUP_Z
from .scalars import GF, QQ, QQ_Q, SpanTracker, cyclotomic, rref


@dataclass(frozen=True)
class Hyperplane:
    """coeffs . x = const, with coeffs canonicalized."""

    coeffs: tuple
    const: object


def make_hyperplane(domain, coeffs, const):
    """Canonicalize: scale so the first nonzero coefficient is one."""
    coeffs = tuple(coeffs)
    lead = next((c for c in coeffs if not domain.is_zero(c)), None)
    if lead is None:
        raise ArrangementError("hyperplane with zero coefficient vector")
    if not domain.eq(lead, domain.one):
        inv = domain.inv(lead)
        coeffs = tuple(domain.mul(inv, c) for c in coeffs)
        const = domain.mul(inv, const)
    return Hyperplane(coeffs, const)


def _hp_sort_key(domain, h):
    return (
        tuple(domain.sort_key(c) for c in h.coeffs),
        domain.sort_key(h.const),
    )


@dataclass(frozen=True)
class Arrangement:
    """A finite set of distinct hyperplanes in a fixed ambient dimension."""

    domain: object
    dim: int
    hyperplanes: tuple

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def is_central(self):
        return all(self.domain.is_zero(h.const) for h in self.hyperplanes)


def make_arrangement(domain, dim, hyperplanes):
    seen = {}
    for h in hyperplanes:
        if len(h.coeffs) != dim:
            raise ArrangementError("hyperplane dimension mismatch")
        seen[(h.coeffs, domain.sort_key(h.const))] = h
    ordered = tuple(
        sorted(seen.values(), key=lambda h: _hp_sort_key(domain, h))
    )
    return Arrangement(domain, dim, ordered)


@dataclass(frozen=True)
class Multiplicity:
    """Multiplicity function on an arrangement's hyperplanes."""

    values: tuple  # aligned with arrangement.hyperplanes

    def total(self):
        return sum(self.values)


# ---------------------------------------------------------------------------
# constructions from gain graphs


def _affin_domain(group):
    return QQ if group == GROUP_Z else GF(group[1])


def bias_domain(group):
    return QQ_Q if group == GROUP_Z else cyclotomic(group[1])


def build_affinographic(graph):
    """x_i - x_j = g per edge class, one coordinate per vertex in order."""
    D = _affin_domain(graph.group)
    idx = {v: k for k, v in enumerate(graph.vertices)}
    n = len(graph.vertices)
    hps = []
    for i, j, g in graph.edges:
        coeffs = [D.zero] * n
        coeffs[idx[i]] = D.one
        coeffs[idx[j]] = D.neg(D.one)
        hps.append(make_hyperplane(D, coeffs, D.from_int(g)))
    return make_arrangement(D, n, hps)


def build_cone(arr):
    """Homogenize with a last coordinate z and adjoin {z = 0}."""
    D = arr.domain
    n = arr.dim
    hps = []
    for h in arr.hyperplanes:
        hps.append(
            make_hyperplane(D, h.coeffs + (D.neg(h.const),), D.zero)
        )
    hps.append(make_hyperplane(D, (D.zero,) * n + (D.one,), D.zero))
    return make_arrangement(D, n + 1, hps)


def build_bias(graph):
    """All coordinate hyperplanes plus x_i = q^g x_j per edge class."""
    D = bias_domain(graph.group)
    idx = {v: k for k, v in enumerate(graph.vertices)}
    n = len(graph.vertices)
    hps = []
    for k in range(n):
        coeffs = [D.zero] * n
        coeffs[k] = D.one
        hps.append(make_hyperplane(D, coeffs, D.zero))
    for i, j, g in graph.edges:
        coeffs = [D.zero] * n
        coeffs[idx[i]] = D.one
        coeffs[idx[j]] = D.neg(D.q_power(g))
        hps.append(make_hyperplane(D, coeffs, D.zero))
    return make_arrangement(D, n, hps)


# ---------------------------------------------------------------------------
# geometric operations


def _aug_row(domain, h):
    return list(h.coeffs) + [h.const]


def restriction(arr, h):
    """The arrangement {K cap h : K, nonempty and proper} inside h.

    Coordinates on h are the ambient ones with h's pivot variable
    eliminated.  Parallel hyperplanes (empty trace) are dropped; distinct
    hyperplanes with equal traces merge.
    """
    D = arr.domain
    if h not in arr.hyperplanes:
        raise ArrangementError("restriction hyperplane not in arrangement")
    piv = next(k for k, c in enumerate(h.coeffs) if not D.is_zero(c))
    # on h: x_piv = const - sum_{t != piv} coeffs[t] x_t   (pivot coeff is 1)
    hps = []
    for k2 in arr.hyperplanes:
        if k2 == h:
            continue
        a = k2.coeffs
        factor = a[piv]
        coeffs = tuple(
            D.sub(a[t], D.mul(factor, h.coeffs[t]))
            for t in range(arr.dim)
            if t != piv
        )
        const = D.sub(k2.const, D.mul(factor, h.const))
        if all(D.is_zero(c) for c in coeffs):
            if D.is_zero(const):
                raise ArrangementError("duplicate hyperplane in restriction")
            continue  # parallel to h, empty trace
        hps.append(make_hyperplane(D, coeffs, const))
    return make_arrangement(D, arr.dim - 1, hps)


def ziegler_restriction(arr, h):
    """Restriction to h with natural multiplicities.

    Requires a central arrangement.  Each restricted hyperplane's
    multiplicity is the number of members of arr - {h} whose trace it is.
    """
    D = arr.domain
    if not arr.is_central:
        raise ArrangementError("Ziegler restriction needs a central arrangement")
    if h not in arr.hyperplanes:
        raise ArrangementError("restriction hyperplane not in arrangement")
    piv = next(k for k, c in enumerate(h.coeffs) if not D.is_zero(c))
    counts = {}
    for k2 in arr.hyperplanes:
        if k2 == h:
            continue
        a = k2.coeffs
        factor = a[piv]
        coeffs = tuple(
            D.sub(a[t], D.mul(factor, h.coeffs[t]))
            for t in range(arr.dim)
            if t != piv
        )
        if all(D.is_zero(c) for c in coeffs):
            raise ArrangementError("duplicate hyperplane in restriction")
        hp = make_hyperplane(D, coeffs, D.zero)
        counts[hp] = counts.get(hp, 0) + 1
    restricted = make_arrangement(D, arr.dim - 1, counts.keys())
    mult = Multiplicity(tuple(counts[h2] for h2 in restricted.hyperplanes))
    return restricted, mult


def localization(arr, hyperplanes):
    """Members of arr containing the flat cut out by the given hyperplanes.

    The given hyperplanes must have nonempty intersection.
    """
    D = arr.domain
    tracker = SpanTracker(D, arr.dim + 1)
    for h in hyperplanes:
        row = _aug_row(D, h)
        res = tracker.reduce(row)
        if all(D.is_zero(x) for x in res[:-1]) and not D.is_zero(res[-1]):
            raise ArrangementError("localization flat is empty")
        tracker.add(row)
    kept = [h for h in arr.hyperplanes if tracker.contains(_aug_row(D, h))]
    return make_arrangement(D, arr.dim, kept)


def essentialize(arr):
    """Quotient a central arrangement by the common intersection subspace.

    New coordinates are the pivot coordinates of the row space of the
    coefficient vectors; the result has ambient dimension equal to the rank.
    """
    ess, _ = essentialize_with_map(arr)
    return ess


def essentialize_with_map(arr):
    """essentialize plus {old hyperplane: new hyperplane}."""
    D = arr.domain
    if not arr.is_central:
        raise ArrangementError("essentialize needs a central arrangement")
    rows = [list(h.coeffs) for h in arr.hyperplanes]
    red, pivots = rref(D, rows)
    mapping = {}
    hps = []
    for h in arr.hyperplanes:
        new = make_hyperplane(D, tuple(h.coeffs[p] for p in pivots), D.zero)
        mapping[h] = new
        hps.append(new)
    return make_arrangement(D, len(pivots), hps), mapping


def defining_polynomial_str(arr):
    """Human-readable product of the defining linear forms."""
    D = arr.domain
    parts = []
    for h in arr.hyperplanes:
        terms = []
        for k, c in enumerate(h.coeffs):
            if D.is_zero(c):
                continue
            name = f"x{k + 1}"
            if D.eq(c, D.one):
                terms.append(f"+ {name}" if terms else name)
            else:
                s = D.to_str(c)
                if s.startswith("-") and terms:
                    terms.append(f"- {s[1:]}*{name}")
                else:
                    terms.append(f"+ {s}*{name}" if terms else f"{s}*{name}")
        lhs = " ".join(terms)
        if D.is_zero(h.const):
            parts.append(f"({lhs})")
        else:
            parts.append(f"({lhs} - {D.to_str(h.const)})")
    return " ".join(parts)
