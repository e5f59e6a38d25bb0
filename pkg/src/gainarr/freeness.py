"""Inductive and divisional freeness along edges, with certificates.

Both deciders recurse over edge classes of a gain graph:

  inductive: Gamma qualifies when it has no edges, or some edge e has both
      branches qualifying and the exponent multiset of the contraction is
      contained in that of the deletion.
  divisional: Gamma qualifies when it has no edges, or some edge e has a
      qualifying contraction whose chi divides chi of Gamma.

Exponents always mean roots of the characteristic polynomial of the coned
affinographic arrangement (kind "cone") or of the bias arrangement (kind
"bias"); a polynomial that fails to split into nonnegative integer roots
certifies non-freeness of these central arrangements outright.

Two sound refutation short-circuits run before any edge search: a
non-splitting chi at the root, and an induced subgraph with non-splitting
chi (its coned and bias arrangements are localizations, and localizations
of free arrangements stay free).

Verdicts are memoized per graph across calls; a node cap bounds how many
fresh subgraphs one top-level call may analyze.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .charpoly import chi_of_kind
from .errors import GraphError, SearchBudgetExceeded, VerificationError
from .gaingraph import GainGraph, contract_edge, induced_subgraph
from .intpoly import IntPolynomial

DEFAULT_NODE_CAP = 100_000
_SUBSCAN_MAX_VERTICES = 10

KINDS = ("cone", "bias")
_KIND_ALIASES = {
    "cone": "cone",
    "cone-affinographic": "cone",
    "affinographic-cone": "cone",
    "bias": "bias",
}

# per-edge failure codes
DEL_NOT_FREE = "deletion branch does not qualify"
CON_NOT_FREE = "contraction branch does not qualify"
DEL_CHI_NON_SPLIT = "deletion branch chi does not split"
CON_CHI_NON_SPLIT = "contraction branch chi does not split"
EXP_NON_INCLUSION = "exponent non-inclusion"
CHI_NON_DIVISION = "chi non-division"

# top-level refutation reasons
NON_INTEGER_ROOTS = "non-integer chi roots"
FORBIDDEN_SUBSTRUCTURE = "forbidden substructure"
NO_ADMISSIBLE_EDGE = "no admissible edge"


def normalize_kind(kind):
    k = _KIND_ALIASES.get(kind)
    if k is None:
        raise GraphError(f"unknown arrangement kind {kind!r}")
    return k


def exponents_from_chi(chi, dim=None):
    """Exponent multiset (ascending) read off the chi roots.

    Requires a monic chi; if dim is given the degree must match.  Returns
    None when chi does not split into nonnegative integer roots, which for
    a central arrangement certifies that it is not free.
    """
    if not chi.is_monic:
        raise GraphError(f"characteristic polynomial {chi} is not monic")
    if dim is not None and chi.degree != dim:
        raise GraphError(
            f"chi degree {chi.degree} does not match ambient dimension {dim}"
        )
    roots = chi.integer_roots()
    return None if roots is None else tuple(roots)


def _included(sub, sup):
    counts = Counter(sup)
    for r in sub:
        counts[r] -= 1
        if counts[r] < 0:
            return False
    return True


class _Budget:
    __slots__ = ("used", "cap")

    def __init__(self, cap):
        self.used = 0
        self.cap = cap

    def spend(self):
        self.used += 1
        if self.used > self.cap:
            raise SearchBudgetExceeded(
                f"freeness search exceeded its node cap of {self.cap}"
            )


_ROOT_CACHE = {}
_ANALYSIS = {}


def clear_caches():
    _ROOT_CACHE.clear()
    _ANALYSIS.clear()


def _roots_of(poly):
    hit = _ROOT_CACHE.get(poly.coeffs, False)
    if hit is False:
        hit = poly.integer_roots()
        _ROOT_CACHE[poly.coeffs] = hit
    return hit


def _analyze(graph, budget):
    """Shared decider node: all four verdicts for one graph."""
    rec = _ANALYSIS.get(graph.key)
    if rec is not None:
        return rec
    budget.spend()
    chi = {k: chi_of_kind(graph, k) for k in KINDS}
    roots = {k: _roots_of(chi[k]) for k in KINDS}
    rec = {
        "chi": chi,
        "roots": roots,
        "sub": {},
        "if": {},
        "df": {},
    }
    for kind in KINDS:
        if not graph.edges:
            rec["if"][kind] = (True, None, None)
            rec["df"][kind] = (True, None, None)
            continue
        if roots[kind] is None:
            rec["if"][kind] = (False, None, NON_INTEGER_ROOTS)
            rec["df"][kind] = (False, None, NON_INTEGER_ROOTS)
            continue
        sub = _forbidden_substructure(graph, kind)
        rec["sub"][kind] = sub
        if sub is not None:
            rec["if"][kind] = (False, None, FORBIDDEN_SUBSTRUCTURE)
            rec["df"][kind] = (False, None, FORBIDDEN_SUBSTRUCTURE)
            continue
        rec["if"][kind] = _search_if(graph, kind, chi[kind], budget)
        rec["df"][kind] = _search_df(graph, kind, chi[kind], budget)
    _ANALYSIS[graph.key] = rec
    return rec


def _forbidden_substructure(graph, kind):
    """A proper induced subgraph with non-splitting chi, if one exists."""
    n = graph.n_vertices
    if n > _SUBSCAN_MAX_VERTICES:
        return None
    for size in range(3, n):
        for subset in itertools.combinations(graph.vertices, size):
            sg = induced_subgraph(graph, subset)
            if not sg.edges:
                continue
            chi_sub = chi_of_kind(sg, kind)
            if _roots_of(chi_sub) is None:
                return (subset, chi_sub)
    return None


def _branches(graph, e):
    deleted = GainGraph(
        graph.group,
        graph.vertices,
        tuple(x for x in graph.edges if x != e),
        _trusted=True,
    )
    return deleted, contract_edge(graph, e)


def _search_if(graph, kind, chi, budget):
    fails = []
    for e in graph.edges:
        deleted, contracted = _branches(graph, e)
        roots_del = _roots_of(chi_of_kind(deleted, kind))
        if roots_del is None:
            fails.append((e, DEL_CHI_NON_SPLIT))
            continue
        roots_con = _roots_of(chi_of_kind(contracted, kind))
        if roots_con is None:
            fails.append((e, CON_CHI_NON_SPLIT))
            continue
        if not _included(roots_con, roots_del):
            fails.append((e, EXP_NON_INCLUSION))
            continue
        if not _analyze(contracted, budget)["if"][kind][0]:
            fails.append((e, CON_NOT_FREE))
            continue
        if not _analyze(deleted, budget)["if"][kind][0]:
            fails.append((e, DEL_NOT_FREE))
            continue
        return (True, e, None)
    return (False, None, tuple(fails))


def _search_df(graph, kind, chi, budget):
    fails = []
    for e in graph.edges:
        _, contracted = _branches(graph, e)
        chi_con = chi_of_kind(contracted, kind)
        if not chi_con.divides(chi):
            fails.append((e, CHI_NON_DIVISION))
            continue
        if not _analyze(contracted, budget)["df"][kind][0]:
            fails.append((e, CON_NOT_FREE))
            continue
        return (True, e, None)
    return (False, None, tuple(fails))


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class FreenessCertificate:
    """Replayable record of one decider run.

    For a yes verdict, steps lists every subgraph of the successful
    derivation once, in depth-first preorder, each with its pivot edge and
    branch keys.  For a no verdict, refutation carries the reason and the
    explored search tree.
    """

    decider: str
    kind: str
    graph_key: tuple
    verdict: bool
    chi: IntPolynomial
    exponents: tuple | None
    steps: tuple
    refutation: dict | None
    nodes_explored: int

    def to_json(self):
        return {
            "decider": self.decider,
            "kind": self.kind,
            "verdict": self.verdict,
            "chi": {
                "coeffs": list(self.chi.coeffs),
                "str": str(self.chi),
                "factored": self.chi.factored_str(),
            },
            "exponents": list(self.exponents) if self.exponents else None,
            "steps": [
                {
                    "vertices": list(s["vertices"]),
                    "edges": [list(e) for e in s["edges"]],
                    "pivot": list(s["pivot"]) if s["pivot"] else None,
                    "chi": s["chi"],
                    "exponents": list(s["exponents"]),
                }
                for s in self.steps
            ],
            "refutation": _refutation_json(self.refutation),
            "nodes_explored": self.nodes_explored,
        }


def _refutation_json(ref):
    if ref is None:
        return None
    out = {"reason": ref["reason"]}
    if "chi" in ref:
        out["chi"] = str(ref["chi"])
    if "subset" in ref:
        out["subset"] = list(ref["subset"])
        out["subgraph_chi"] = str(ref["subgraph_chi"])
    if "edge_failures" in ref:
        out["edge_failures"] = [
            {"edge": list(e), "code": c} for e, c in ref["edge_failures"]
        ]
    if "search_tree" in ref:
        out["search_tree"] = [
            {
                "vertices": list(n["vertices"]),
                "edges": [list(e) for e in n["edges"]],
                "chi": n["chi"],
                "edge_failures": [
                    {"edge": list(e), "code": c} for e, c in n["edge_failures"]
                ],
                "reason": n["reason"],
            }
            for n in ref["search_tree"]
        ]
    return out


def _collect_witness(graph, decider, kind, budget):
    steps = []
    seen = set()
    stack = [graph]
    while stack:
        g = stack.pop()
        if g.key in seen:
            continue
        seen.add(g.key)
        rec = _analyze(g, budget)
        chi = rec["chi"][kind]
        verdict, pivot, _ = rec[decider][kind]
        if not verdict:
            raise VerificationError("witness walk reached a refuted subgraph")
        steps.append(
            {
                "vertices": g.vertices,
                "edges": g.edges,
                "pivot": pivot,
                "chi": str(chi),
                "exponents": rec["roots"][kind],
            }
        )
        if pivot is not None:
            deleted, contracted = _branches(g, pivot)
            if decider == "if":
                stack.append(deleted)
            stack.append(contracted)
    return tuple(steps)


def _collect_failure_tree(graph, decider, kind, budget, node_cap):
    nodes = []
    seen = set()
    stack = [graph]
    while stack:
        g = stack.pop()
        if g.key in seen:
            continue
        seen.add(g.key)
        if len(seen) > node_cap:
            raise SearchBudgetExceeded(
                f"failure certificate exceeds the node cap of {node_cap}"
            )
        rec = _analyze(g, budget)
        verdict, _, detail = rec[decider][kind]
        if verdict:
            continue
        entry = {
            "vertices": g.vertices,
            "edges": g.edges,
            "chi": str(rec["chi"][kind]),
            "edge_failures": (),
            "reason": detail if isinstance(detail, str) else NO_ADMISSIBLE_EDGE,
        }
        if not isinstance(detail, str):
            entry["edge_failures"] = detail
            for e, code in detail:
                deleted, contracted = _branches(g, e)
                if code in (CON_NOT_FREE,):
                    stack.append(contracted)
                elif code in (DEL_NOT_FREE,):
                    stack.append(deleted)
        nodes.append(entry)
    return tuple(nodes)


def _certify(graph, decider, kind, node_cap):
    kind = normalize_kind(kind)
    budget = _Budget(node_cap)
    rec = _analyze(graph, budget)
    chi = rec["chi"][kind]
    verdict, pivot, detail = rec[decider][kind]
    exponents = rec["roots"][kind]
    steps = ()
    refutation = None
    if verdict:
        steps = _collect_witness(graph, decider, kind, budget)
    else:
        if detail == NON_INTEGER_ROOTS:
            refutation = {"reason": NON_INTEGER_ROOTS, "chi": chi}
        elif detail == FORBIDDEN_SUBSTRUCTURE:
            subset, chi_sub = rec["sub"][kind]
            refutation = {
                "reason": FORBIDDEN_SUBSTRUCTURE,
                "subset": subset,
                "subgraph_chi": chi_sub,
            }
        else:
            refutation = {
                "reason": NO_ADMISSIBLE_EDGE,
                "edge_failures": detail,
                "search_tree": _collect_failure_tree(
                    graph, decider, kind, budget, node_cap
                ),
            }
    return FreenessCertificate(
        decider="inductive" if decider == "if" else "divisional",
        kind=kind,
        graph_key=graph.key,
        verdict=verdict,
        chi=chi,
        exponents=exponents,
        steps=steps,
        refutation=refutation,
        nodes_explored=budget.used,
    )


def if_along_edges(graph, kind="cone", node_cap=DEFAULT_NODE_CAP):
    """Decide inductive freeness along edges; returns a FreenessCertificate."""
    return _certify(graph, "if", kind, node_cap)


def df_along_edges(graph, kind="cone", node_cap=DEFAULT_NODE_CAP):
    """Decide divisional freeness along edges; returns a FreenessCertificate."""
    return _certify(graph, "df", kind, node_cap)


def freeness_verdicts(graph, node_cap=DEFAULT_NODE_CAP):
    """All four verdicts (decider x kind) without certificate assembly."""
    budget = _Budget(node_cap)
    rec = _analyze(graph, budget)
    return {
        "if": {k: rec["if"][k][0] for k in KINDS},
        "df": {k: rec["df"][k][0] for k in KINDS},
        "chi": dict(rec["chi"]),
        "exponents": dict(rec["roots"]),
        "nodes": budget.used,
    }


# ---------------------------------------------------------------------------
# replay


def replay_certificate(cert, graph):
    """Re-derive a yes-certificate from its steps without searching.

    Checks that every step's pivot is admissible by the decider's own rule
    and that every branch is itself a step, bottoming out at edgeless
    graphs.  Raises VerificationError on any mismatch, returns True.
    """
    if not cert.verdict:
        raise VerificationError("only yes-certificates replay")
    kind = cert.kind
    by_key = {}
    for s in cert.steps:
        g = GainGraph(graph.group, s["vertices"], s["edges"])
        by_key[g.key] = (g, s)
    root = GainGraph(graph.group, graph.vertices, graph.edges)
    if root.key != graph.key or root.key not in by_key:
        raise VerificationError("certificate does not start at the graph")
    for g, s in by_key.values():
        chi = chi_of_kind(g, kind)
        if str(chi) != s["chi"]:
            raise VerificationError(f"chi mismatch at {g.key}")
        if tuple(chi.integer_roots() or ()) != tuple(s["exponents"]):
            raise VerificationError(f"exponent mismatch at {g.key}")
        pivot = s["pivot"]
        if pivot is None:
            if g.edges:
                raise VerificationError("non-edgeless step without a pivot")
            continue
        if tuple(pivot) not in g.edges:
            raise VerificationError(f"pivot {pivot} not an edge of {g.key}")
        deleted, contracted = _branches(g, tuple(pivot))
        chi_con = chi_of_kind(contracted, kind)
        if cert.decider == "inductive":
            roots_del = chi_of_kind(deleted, kind).integer_roots()
            roots_con = chi_con.integer_roots()
            if roots_del is None or roots_con is None:
                raise VerificationError("branch chi does not split")
            if not _included(roots_con, roots_del):
                raise VerificationError("exponent inclusion fails on replay")
            if deleted.key not in by_key or contracted.key not in by_key:
                raise VerificationError("branch missing from certificate")
        else:
            if not chi_con.divides(chi):
                raise VerificationError("divisibility fails on replay")
            if contracted.key not in by_key:
                raise VerificationError("branch missing from certificate")
    return True
