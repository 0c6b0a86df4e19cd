#!/usr/bin/env python3
"""
verifiers.py
- One checker per identity or theorem about X_(G,w); each returns a
  VerificationReport, and a failing report always carries a witness
  (the inputs plus both sides' values) that can be replayed later
- Every X used in an assertion comes from the deletion-contraction engine and
  is cross-checked against the subset engine (stable engine above its limit)
- EXPANSIONS turns a check name into the concrete reports for one corpus graph;
  STANDALONE holds the checks that need no corpus
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from math import comb, factorial, prod
from typing import Callable, Iterable, Mapping

from csf_engine import (
    EngineDisagreement,
    SubsetLimitError,
    chromatic_polynomial,
    csf_delcon_value,
    csf_stable_value,
    csf_subsets_value,
    csf_uncontract_check,
    graph_fingerprint,
    weak_csf_truncated,
)
from oriented_csf import (
    divisible_by_one_plus_q,
    flip_relation_sides,
    quasi_csf,
    quasi_csf_compositions,
)
from partition_algebra import (
    Basis,
    Partition,
    SymFunc,
    convert,
    omega,
    partitions_of,
    sigma,
    truncate,
)
from weighted_graph import (
    NotACycleError,
    NotSimpleError,
    Orientation,
    VertexWeightedGraph,
    acyclic_orientations,
    all_orientations,
    canonical_key,
    check_cycle,
    complete_graph,
    connected_partitions,
    count_acyclic_orientations,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    graph_from_json,
    is_refinement,
    path_graph,
    simple_cycles,
    uncontractions,
)

log = logging.getLogger("verifiers")


class WeightedInputError(ValueError):
    """A theorem stated for unweighted graphs was handed a weighted one."""


@dataclass
class VerificationReport:
    check: str
    instance: dict
    passed: bool
    witness: dict | None = None
    note: str | None = None

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError(f"failing {self.check} report has no witness")

    @property
    def fingerprint(self) -> str:
        return self.instance.get("fingerprint") or "-"

    def sort_key(self) -> tuple:
        return (self.check, self.fingerprint, json.dumps(self.instance.get("params", {}), sort_keys=True))

    def to_json(self) -> dict:
        out = {"check": self.check, "instance": self.instance, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "VerificationReport":
        return cls(obj["check"], obj["instance"], obj["passed"], obj.get("witness"), obj.get("note"))


def instance_descriptor(g: VertexWeightedGraph | None, **params) -> dict:
    return {
        "fingerprint": graph_fingerprint(g) if g is not None else None,
        "graph": g.to_json() if g is not None else None,
        "params": params,
    }


def _report(check: str, g, passed: bool, witness: dict, note: str | None = None, **params) -> VerificationReport:
    if not passed:
        log.warning("%s failed on %r %s", check, g, params or "")
    return VerificationReport(check, instance_descriptor(g, **params), passed, None if passed else witness, note)


def _dense_json(poly: Mapping) -> list:
    return [{"exponents": list(vec), "coeff": str(c)} for vec, c in sorted(poly.items(), reverse=True)]


def _sign(g: VertexWeightedGraph) -> int:
    return -1 if (g.d - g.n) % 2 else 1


# ---------------- Cross-checked X ----------------

_checked: dict[bytes, SymFunc] = {}


def checked_csf(g: VertexWeightedGraph) -> SymFunc:
    """X from deletion-contraction, confirmed by a second engine (cached per isomorphism class)."""
    key = canonical_key(g)
    if key is not None and key in _checked:
        return _checked[key]
    x = csf_delcon_value(g)
    try:
        other, name = csf_subsets_value(g), "subsets"
    except SubsetLimitError:
        other, name = csf_stable_value(g), "stable"
    if x != other:
        raise EngineDisagreement(g, {"delcon": x, name: other})
    if key is not None:
        _checked[key] = x
    return x


# ---------------- Engines and minors ----------------

def verify_engines(g: VertexWeightedGraph) -> VerificationReport:
    values = {"delcon": csf_delcon_value(g), "stable": csf_stable_value(g)}
    try:
        values["subsets"] = csf_subsets_value(g)
    except SubsetLimitError as e:
        log.debug("engines: %s", e)
    ref = values["delcon"]
    passed = all(v == ref for v in values.values())
    return _report("engines", g, passed, {"values": {k: v.to_json() for k, v in sorted(values.items())}})


def verify_delcon_all_edges(g: VertexWeightedGraph) -> VerificationReport:
    """X(G) = X(G minus e) - X(G/e) at every edge, not just the recursion pivot."""
    x = checked_csf(g)
    bad = []
    for i in range(len(g.edges)):
        rhs = csf_delcon_value(g.delete_edge(i)) - csf_delcon_value(g.contract_edge(i))
        if rhs != x:
            bad.append({"edge": i, "rhs": rhs.to_json()})
    return _report("delcon", g, not bad, {"lhs": x.to_json(), "failures": bad})


def verify_uncontraction_family(g: VertexWeightedGraph, v: int) -> VerificationReport:
    """X(G) = X(H minus e) - X(H) for every uncontraction (H, e) of G at v."""
    bad = []
    count = 0
    for h, e in uncontractions(g, v):
        count += 1
        if canonical_key(h.contract_edge(e)) != canonical_key(g):
            bad.append({"uncontraction": h.to_json(), "edge": e, "reason": "does not contract back to G"})
        elif not csf_uncontract_check(h, e):
            bad.append({"uncontraction": h.to_json(), "edge": e, "reason": "relation fails"})
    note = None if count else f"vertex {v} has weight 1; no uncontractions"
    return _report("uncontraction", g, not bad, {"failures": bad}, note, vertex=v)


def verify_simple_contraction(g: VertexWeightedGraph) -> VerificationReport:
    """On a simple graph, simple contraction and full contraction have the same X."""
    if not g.is_simple():
        raise NotSimpleError("simple contraction check needs a simple graph")
    bad = []
    for i in range(len(g.edges)):
        a = checked_csf(g.simple_contract(i))
        b = checked_csf(g.contract_edge(i))
        if a != b:
            bad.append({"edge": i, "simple": a.to_json(), "full": b.to_json()})
    return _report("simple_contraction", g, not bad, {"failures": bad})


def verify_multiplicativity(g: VertexWeightedGraph, h: VertexWeightedGraph) -> VerificationReport:
    union = checked_csf(disjoint_union(g, h))
    product_ = checked_csf(g) * checked_csf(h)
    return _report(
        "multiplicativity", g, union == product_,
        {"union": union.to_json(), "product": product_.to_json()},
        other=h.to_json(),
    )


# ---------------- Weak CSF and p-positivity ----------------

def verify_involution(g: VertexWeightedGraph) -> VerificationReport:
    """Weak CSF == (-1)^(d-n) omega(X), both truncated to d variables."""
    k = max(g.d, 1)
    weak = weak_csf_truncated(g, k)
    rhs = truncate(omega(checked_csf(g)) * _sign(g), k)
    return _report("involution", g, weak == rhs, {"k": k, "weak": _dense_json(weak), "omega_side": _dense_json(rhs)})


def verify_p_positivity(g: VertexWeightedGraph) -> VerificationReport:
    y = omega(checked_csf(g)) * _sign(g)
    return _report("p_positivity", g, y.is_positive(), {"signed_omega": y.to_json()})


# ---------------- Cycles ----------------

def verify_cycle_relation(g: VertexWeightedGraph, cycle: Iterable[int], e: int) -> VerificationReport:
    """sum over S in C minus e of (-1)^|S| X(G minus S) vanishes."""
    cycle = check_cycle(g, cycle)
    i = g._resolve(e)
    if i not in cycle:
        raise NotACycleError(f"edge {i} is not on cycle {cycle}")
    rest = [j for j in cycle if j != i]
    total = SymFunc.zero(Basis.P, g.d)
    for r in range(len(rest) + 1):
        for s in combinations(rest, r):
            total = total + checked_csf(g.delete_edges(s)) * (-1) ** r
    return _report("cycle", g, total.is_zero(), {"sum": total.to_json()}, cycle=list(cycle), edge=i)


# ---------------- Sinks ----------------

def sink_sum(g: VertexWeightedGraph, m: int | None = None, materialize: bool = False) -> int:
    """
    (-1)^(d-n) * sum over (acyclic orientation, sink map) with swt == m of
    (-1)^(m - #sinks); m=None sums over every sink weight.

    Only the subset sizes matter for the sign, so by default each sink v gets a
    size a_v weighted by C(w(v), a_v). `materialize=True` lists the subsets.
    """
    total = 0
    for gamma in acyclic_orientations(g):
        sinks = sorted(gamma.sinks())
        s = len(sinks)
        if materialize:
            choices = [
                [c for r in range(1, g.weight(v) + 1) for c in combinations(range(1, g.weight(v) + 1), r)]
                for v in sinks
            ]
            for pick in product(*choices):
                swt = sum(len(c) for c in pick)
                if m is None or swt == m:
                    total += (-1) ** (swt - s)
            continue
        for sizes in product(*(range(1, g.weight(v) + 1) for v in sinks)):
            swt = sum(sizes)
            if m is None or swt == m:
                total += (-1) ** (swt - s) * prod(comb(g.weight(v), a) for v, a in zip(sinks, sizes))
    return _sign(g) * total


def verify_sink_theorem(g: VertexWeightedGraph, m: int | None = None) -> VerificationReport:
    """sigma_m(X) against the signed count of (orientation, sink map) pairs; m=None is the total."""
    x = checked_csf(g)
    left = sigma(x, m)
    right = sink_sum(g, m)
    return _report("sink", g, left == right, {"sigma": str(left), "sink_sum": right}, m=m)


def _require_unit_simple(g: VertexWeightedGraph) -> None:
    if not g.is_unweighted():
        raise WeightedInputError("theorem is stated for unweighted graphs")
    if not g.is_simple():
        raise NotSimpleError("theorem is checked on simple loop-free graphs only")


def sink_counts(g: VertexWeightedGraph) -> Counter:
    """a_m(G): acyclic orientations by number of sinks."""
    return Counter(len(gamma.sinks()) for gamma in acyclic_orientations(g))


def verify_stanley_sinks(g: VertexWeightedGraph) -> VerificationReport:
    """sigma_m(X) = a_m(G) for every m, and a(G) = (-1)^n chi_G(-1)."""
    _require_unit_simple(g)
    x = checked_csf(g)
    a = sink_counts(g)
    rows = {m: (sigma(x, m), a.get(m, 0)) for m in range(1, g.n + 1)}
    chi = chromatic_polynomial(g, -1)
    total = sum(a.values())
    passed = all(s == c for s, c in rows.values()) and total == (-1) ** g.n * chi
    witness = {
        "per_m": {str(m): {"sigma": str(s), "a_m": c} for m, (s, c) in rows.items()},
        "a": total,
        "chi_at_minus_one": chi,
    }
    return _report("stanley", g, passed, witness)


def verify_hook_coefficient(g: VertexWeightedGraph) -> VerificationReport:
    """[s_(m,1^(n-m))] X = sum_k C(k-1, m-1) a_k(G)."""
    _require_unit_simple(g)
    s = convert(checked_csf(g), Basis.S)
    a = sink_counts(g)
    rows = {}
    for m in range(1, g.n + 1):
        hook = Partition((m,) + (1,) * (g.n - m))
        rows[m] = (s.coefficient(hook), sum(comb(k - 1, m - 1) * a.get(k, 0) for k in range(1, g.n + 1)))
    passed = all(lhs == rhs for lhs, rhs in rows.values())
    return _report("hook", g, passed, {"per_m": {str(m): [str(l), r] for m, (l, r) in rows.items()}})


def verify_acyclic_recurrence(g: VertexWeightedGraph) -> VerificationReport:
    """a(G) = a(G minus e) + a(G/e) for every non-loop edge, and a(G) = (-1)^n chi_G(-1)."""
    a = count_acyclic_orientations(g)
    bad = []
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        rhs = count_acyclic_orientations(g.delete_edge(i)) + count_acyclic_orientations(g.contract_edge(i))
        if rhs != a:
            bad.append({"edge": i, "deleted_plus_contracted": rhs})
    chi = chromatic_polynomial(g, -1)
    passed = not bad and a == (-1) ** g.n * chi
    return _report("acyclic", g, passed, {"a": a, "chi_at_minus_one": chi, "failures": bad})


# ---------------- e-positivity ----------------

def check_e_positivity(g: VertexWeightedGraph) -> VerificationReport:
    """
    Weighted graphs are never e-positive after the sign (-1)^(d-n); e-positive
    ones must have every refinement of every connected-partition type; and the
    e_d coefficient of a connected graph has sign (-1)^(d-n).
    """
    x = checked_csf(g)
    if x.is_zero():
        return _report("epos", g, True, {}, "X = 0 (graph has a loop)")
    y = convert(x * _sign(g), Basis.E)
    negatives = [lam for lam, c in y.items() if c < 0]
    e_positive = not negatives
    problems = []
    if max(g.weights, default=1) > 1 and e_positive:
        problems.append("weighted graph is e-positive")
    if e_positive:
        types = connected_partitions(g)
        for lam in sorted(types, reverse=True):
            for mu in partitions_of(g.d):
                if mu not in types and is_refinement(mu, lam):
                    problems.append(f"type {lam!r} is achievable but its refinement {mu!r} is not")
    note = None
    if g.is_connected():
        top = Partition((g.d,))
        if y.coefficient(top) <= 0:
            problems.append(f"e_{g.d} coefficient has the wrong sign")
        note = (
            f"e_{g.d} coefficient of X is {convert(x, Basis.E).coefficient(top)}; "
            f"only its sign (-1)^(d-n) is checked, not the value"
        )
    witness = {
        "signed_e": y.to_json(),
        "negative": [list(lam) for lam in negatives],
        "problems": problems,
    }
    return _report("epos", g, not problems, witness, note)


# ---------------- Oriented q-function ----------------

def verify_flip(gamma: Orientation, e: int, k: int | None = None) -> VerificationReport:
    """
    X(gamma) + X(flip_e gamma) = (1+q)(X(gamma minus e) - X(gamma/e)).

    With k >= n every proper coloring's composition fits into k variables, so the
    composition-indexed forms are compared; they spread injectively to k variables.
    """
    g = gamma.graph
    i = g._resolve(e)
    k = max(g.d, 1) if k is None else k
    if k >= g.n:
        left = _comp_add(quasi_csf_compositions(gamma), quasi_csf_compositions(gamma.flip(i)))
        diff = _comp_add(
            quasi_csf_compositions(gamma.delete_edge(i)), quasi_csf_compositions(gamma.contract(i)), -1
        )
        right = {a: _times_one_plus_q(c) for a, c in diff.items()}
        right = {a: c for a, c in right.items() if c}
        passed = left == right
        witness = {"left": _comp_json(left), "right": _comp_json(right)}
    else:
        lq, rq = flip_relation_sides(gamma, i, k)
        passed = lq == rq
        witness = {"left": lq.to_json(), "right": rq.to_json()}
    return _report("flip", g, passed, witness, orientation=[list(a) for a in gamma.arcs], edge=i, k=k)


def _comp_add(a: Mapping, b: Mapping, sign: int = 1) -> dict:
    out = dict(a)
    for alpha, c in b.items():
        cur = out.get(alpha, ())
        n = max(len(cur), len(c))
        merged = [(cur[j] if j < len(cur) else 0) + sign * (c[j] if j < len(c) else 0) for j in range(n)]
        while merged and merged[-1] == 0:
            merged.pop()
        if merged:
            out[alpha] = tuple(merged)
        else:
            out.pop(alpha, None)
    return out


def _times_one_plus_q(c: tuple) -> tuple:
    return tuple((c[j] if j < len(c) else 0) + (c[j - 1] if j >= 1 else 0) for j in range(len(c) + 1))


def _comp_json(comps: Mapping) -> list:
    return [{"composition": list(a), "q_coeffs": list(c)} for a, c in sorted(comps.items())]


def verify_q_specialization(gamma: Orientation, k: int | None = None) -> VerificationReport:
    """q = 1 recovers the k-variable truncation of X."""
    g = gamma.graph
    k = max(g.d, 1) if k is None else k
    at_one = quasi_csf(gamma, k).at_q_one()
    expected = truncate(checked_csf(g), k)
    return _report(
        "qspec", g, at_one == expected,
        {"q_one": _dense_json(at_one), "truncated_x": _dense_json(expected)},
        orientation=[list(a) for a in gamma.arcs], k=k,
    )


def oriented_p3() -> tuple[Orientation, int]:
    """Unit path u -> v -> x and the index of the edge at its source."""
    g = path_graph([1, 1, 1])
    gamma = Orientation(g, [(0, 1), (1, 2)])
    return gamma, g.edge_index(0, 1)


def verify_q_example() -> VerificationReport:
    gamma, e = oriented_p3()
    k = 3
    whole = quasi_csf(gamma, k).specialize_ones()
    deleted = quasi_csf(gamma.delete_edge(e), k).specialize_ones()
    contracted = quasi_csf(gamma.contract(e), k).specialize_ones()
    flipped = quasi_csf(gamma.flip(e), k).specialize_ones()
    left, right = flip_relation_sides(gamma, e, k)
    values = {
        "whole": list(whole),
        "deleted": list(deleted),
        "contracted": list(contracted),
        "flipped": list(flipped),
        "flip_left": list(left.specialize_ones()),
        "flip_right": list(right.specialize_ones()),
    }
    checks = {
        "whole is q^2+10q+1": whole == (1, 10, 1),
        "deletion is 9q+9": deleted == (9, 9),
        "contraction is 3q+3": contracted == (3, 3),
        "flip relation": left == right,
        "(1+q)(6q+6) on the right": right.specialize_ones() == (6, 12, 6),
        "1+q divides deletion and contraction": divisible_by_one_plus_q(deleted) and divisible_by_one_plus_q(contracted),
        "1+q does not divide q^2+10q+1": not divisible_by_one_plus_q(whole),
    }
    failed = [name for name, ok in checks.items() if not ok]
    return _report("q_example", gamma.graph, not failed, {"values": values, "failed": failed}, k=k)


# ---------------- Closed forms and standalone checks ----------------

def verify_closed_forms(lam: Iterable[int]) -> VerificationReport:
    """X(K^lam) = prod r_i! m_lam, X(complement of K^lam) = p_lam, disjoint cliques K_lam_i give prod lam_i! e_lam."""
    lam = Partition(lam)
    clique = checked_csf(complete_graph(lam))
    empty = checked_csf(edgeless_graph(lam))
    union = VertexWeightedGraph({})
    for part in lam:
        union = disjoint_union(union, complete_graph([1] * part))
    cliques = checked_csf(union)
    want_clique = SymFunc(Basis.M, {lam: lam.multiplicity_factorial()}, lam.size())
    want_empty = SymFunc.element(Basis.P, lam)
    want_cliques = SymFunc(Basis.E, {lam: prod(factorial(p) for p in lam)}, lam.size())
    results = {
        "complete": clique == want_clique,
        "edgeless": empty == want_empty,
        "clique_union": cliques == want_cliques,
    }
    witness = {
        "failed": [k for k, ok in results.items() if not ok],
        "complete": convert(clique, Basis.M).to_json(),
        "edgeless": empty.to_json(),
        "clique_union": convert(cliques, Basis.E).to_json(),
    }
    return _report("closed_forms", None, all(results.values()), witness, **{"lambda": list(lam)})


def verify_newton(a: int) -> VerificationReport:
    """sigma_m(p_a) = (-1)^(a-m) C(a, m) for every 1 <= m <= a."""
    p = SymFunc.element(Basis.P, (a,))
    rows = {m: (sigma(p, m), (-1) ** (a - m) * comb(a, m)) for m in range(1, a + 1)}
    passed = all(lhs == rhs for lhs, rhs in rows.values())
    return _report("newton", None, passed, {"per_m": {str(m): [str(l), r] for m, (l, r) in rows.items()}}, a=a)


FIG1_A = (1, 2, 1, 3, 2)
FIG1_B = (1, 3, 2, 1, 2)


def _closing_decomposition(weights: tuple) -> tuple[bool, dict]:
    """X(path) = X(cycle on the same weights) + X(the cycle with its closing edge contracted)."""
    path = path_graph(weights)
    closed = path.add_edge(0, len(weights) - 1)
    shrunk = cycle_graph((weights[0] + weights[-1],) + tuple(weights[1:-1]))
    x_path, x_cycle, x_small = checked_csf(path), checked_csf(closed), checked_csf(shrunk)
    contracted = closed.contract_edge(closed.edge_index(0, len(weights) - 1))
    ok = x_path == x_cycle + x_small and canonical_key(contracted) == canonical_key(shrunk)
    return ok, {"path": x_path.to_json(), "cycle": x_cycle.to_json(), "shrunk_cycle": x_small.to_json()}


def verify_fig1_pair() -> VerificationReport:
    """Two non-isomorphic weighted paths with equal X, and the cycle decomposition that explains it."""
    a, b = path_graph(FIG1_A), path_graph(FIG1_B)
    xa, xb = checked_csf(a), checked_csf(b)
    dec_a, wa = _closing_decomposition(FIG1_A)
    dec_b, wb = _closing_decomposition(FIG1_B)
    results = {
        "equal_csf": xa == xb,
        "non_isomorphic": canonical_key(a) != canonical_key(b),
        "decomposition_a": dec_a,
        "decomposition_b": dec_b,
        "same_five_cycle": canonical_key(cycle_graph(FIG1_A)) == canonical_key(cycle_graph(FIG1_B)),
    }
    witness = {"failed": [k for k, ok in results.items() if not ok], "a": wa, "b": wb}
    return _report("fig1", a, all(results.values()), witness, other=b.to_json())


# ---------------- Registries ----------------

MULTIPLICATIVITY_PARTNERS = (path_graph([1, 2]), complete_graph([1, 1, 1]), edgeless_graph([2]))


def _per_orientation(g: VertexWeightedGraph) -> list[VerificationReport]:
    k = max(g.d, 1)
    return [verify_flip(gamma, i, k) for gamma in all_orientations(g) for i in range(len(g.edges))]


EXPANSIONS: dict[str, Callable[[VertexWeightedGraph], list[VerificationReport]]] = {
    "engines": lambda g: [verify_engines(g)],
    "delcon": lambda g: [verify_delcon_all_edges(g)],
    "uncontraction": lambda g: [verify_uncontraction_family(g, v) for v in g.vertices if g.weight(v) > 1],
    "simple_contraction": lambda g: [verify_simple_contraction(g)],
    "multiplicativity": lambda g: [verify_multiplicativity(g, h) for h in MULTIPLICATIVITY_PARTNERS],
    "involution": lambda g: [verify_involution(g)],
    "p_positivity": lambda g: [verify_p_positivity(g)],
    "cycle": lambda g: [verify_cycle_relation(g, c, c[0]) for c in simple_cycles(g)],
    "sink": lambda g: [verify_sink_theorem(g, m) for m in range(1, g.d + 1)] + [verify_sink_theorem(g, None)],
    "stanley": lambda g: [verify_stanley_sinks(g)],
    "hook": lambda g: [verify_hook_coefficient(g)],
    "acyclic": lambda g: [verify_acyclic_recurrence(g)],
    "epos": lambda g: [check_e_positivity(g)],
    "flip": _per_orientation,
    "qspec": lambda g: [verify_q_specialization(next(all_orientations(g)))],
}

STANDALONE: dict[str, Callable[[], list[VerificationReport]]] = {
    "fig1": lambda: [verify_fig1_pair()],
    "q_example": lambda: [verify_q_example()],
    "newton": lambda: [verify_newton(a) for a in range(1, 11)],
    "closed_forms": lambda: [verify_closed_forms(lam) for d in range(1, 7) for lam in partitions_of(d)],
}

CHECKS = tuple(EXPANSIONS) + tuple(STANDALONE)


def replay(record: Mapping) -> VerificationReport:
    """Re-run the check a report or witness file describes, on the instance it recorded."""
    check = record["check"]
    instance = record["instance"]
    params = instance.get("params") or {}
    g = graph_from_json(instance["graph"])[0] if instance.get("graph") else None
    if check == "fig1":
        return verify_fig1_pair()
    if check == "q_example":
        return verify_q_example()
    if check == "newton":
        return verify_newton(int(params["a"]))
    if check == "closed_forms":
        return verify_closed_forms(params["lambda"])
    if g is None:
        raise ValueError(f"{check} record has no graph")
    if check in ("flip", "qspec"):
        gamma = Orientation(g, [tuple(a) for a in params["orientation"]])
        if check == "flip":
            return verify_flip(gamma, int(params["edge"]), int(params["k"]))
        return verify_q_specialization(gamma, int(params["k"]))
    if check == "cycle":
        return verify_cycle_relation(g, params["cycle"], int(params["edge"]))
    if check == "sink":
        return verify_sink_theorem(g, params.get("m"))
    if check == "uncontraction":
        return verify_uncontraction_family(g, int(params["vertex"]))
    if check == "multiplicativity":
        return verify_multiplicativity(g, graph_from_json(params["other"])[0])
    single = {
        "engines": verify_engines,
        "delcon": verify_delcon_all_edges,
        "simple_contraction": verify_simple_contraction,
        "involution": verify_involution,
        "p_positivity": verify_p_positivity,
        "stanley": verify_stanley_sinks,
        "hook": verify_hook_coefficient,
        "acyclic": verify_acyclic_recurrence,
        "epos": check_e_positivity,
    }
    if check not in single:
        raise ValueError(f"unknown check {check!r}")
    return single[check](g)
