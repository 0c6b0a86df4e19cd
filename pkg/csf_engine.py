#!/usr/bin/env python3
"""
csf_engine.py
- Chromatic symmetric function X_(G,w) of a vertex-weighted multigraph, three ways:
    stable   m-expansion from stable partitions
    subsets  signed p-expansion over all edge subsets
    delcon   memoized deletion-contraction down to edgeless graphs
- The weak (orientation-counting) variant truncated to k variables
- The chromatic polynomial, directly for k >= 0 and by interpolation otherwise

All engines return their value in the p-basis. The deletion-contraction memo is
keyed by canonical_key, so it is shared across isomorphic minors and never
consulted for graphs above the canonical-key bound.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from sympy import Rational, interpolate, symbols

import config
from partition_algebra import Basis, Partition, SymFunc, SymFuncError, convert, evaluate
from weighted_graph import (
    VertexWeightedGraph,
    acyclic_orientations,
    canonical_key,
    count_acyclic_orientations,
    lambda_of_subset,
    stable_partition_types,
    stable_partitions,
)

log = logging.getLogger("csf_engine")


class SubsetLimitError(ValueError):
    """The subset engine refuses graphs with too many edges."""


class EngineDisagreement(RuntimeError):
    """Two engines produced different values for the same graph."""

    def __init__(self, graph: VertexWeightedGraph, values: dict[str, SymFunc]):
        self.graph = graph
        self.values = values
        names = ", ".join(sorted(values))
        super().__init__(f"engines disagree on {graph!r} ({names})")

    def witness(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "values": {name: v.to_json() for name, v in sorted(self.values.items())},
        }


@dataclass(frozen=True)
class CsfResult:
    value: SymFunc
    provenance: str
    fingerprint: str | None

    def to_json(self) -> dict:
        return {"engine": self.provenance, "fingerprint": self.fingerprint, "value": self.value.to_json()}


def _key_digest(key: bytes) -> str:
    return hashlib.sha256(key).hexdigest()[:16]


def graph_fingerprint(g: VertexWeightedGraph) -> str:
    """Short hex id: hash of canonical_key when available, else of the labeled graph."""
    key = canonical_key(g)
    return _key_digest(key if key is not None else json.dumps(g.to_json(), sort_keys=True).encode())


def _result(g: VertexWeightedGraph, value: SymFunc, engine: str) -> CsfResult:
    """Results above the canonical-key bound carry no fingerprint."""
    key = canonical_key(g)
    return CsfResult(value, engine, _key_digest(key) if key is not None else None)


def _zero(g: VertexWeightedGraph) -> SymFunc:
    return SymFunc.zero(Basis.P, g.d)


# ---------------- Stable partitions ----------------

def csf_stable_value(g: VertexWeightedGraph) -> SymFunc:
    if g.has_loop():
        return _zero(g)
    terms = {lam: count * lam.multiplicity_factorial() for lam, count in stable_partition_types(g).items()}
    return convert(SymFunc(Basis.M, terms, g.d), Basis.P)


def csf_stable(g: VertexWeightedGraph) -> CsfResult:
    """Sum over lambda of |St_lambda| * prod r_i(lambda)! * m_lambda."""
    return _result(g, csf_stable_value(g), "stable")


# ---------------- Edge subsets ----------------

def csf_subsets_value(g: VertexWeightedGraph, limit: int | None = None) -> SymFunc:
    limit = config.SUBSET_EDGE_LIMIT if limit is None else limit
    m = len(g.edges)
    if m > limit:
        raise SubsetLimitError(f"subset engine needs 2^{m} terms; limit is {limit} edges")
    terms: dict[Partition, int] = {}
    for mask in range(1 << m):
        chosen = [i for i in range(m) if mask >> i & 1]
        lam = lambda_of_subset(g, chosen)
        terms[lam] = terms.get(lam, 0) + (-1) ** len(chosen)
    return SymFunc(Basis.P, terms, g.d)


def csf_subsets(g: VertexWeightedGraph, limit: int | None = None) -> CsfResult:
    """Sum over S subset of E of (-1)^|S| p_lambda(S)."""
    return _result(g, csf_subsets_value(g, limit), "subsets")


# ---------------- Deletion-contraction ----------------

_memo: dict[bytes, SymFunc] = {}


def clear_memo() -> None:
    _memo.clear()


def memo_size() -> int:
    return len(_memo)


def _delcon(g: VertexWeightedGraph, bound: int) -> SymFunc:
    if g.has_loop():
        return _zero(g)
    if not g.edges:
        return SymFunc.element(Basis.P, g.sorted_weights())
    key = canonical_key(g, bound)
    if key is not None:
        hit = _memo.get(key)
        if hit is not None:
            return hit
    # edges are kept sorted, so index 0 is the smallest (min, max, occurrence) edge
    value = _delcon(g.delete_edge(0), bound) - _delcon(g.contract_edge(0), bound)
    if key is not None:
        _memo.setdefault(key, value)
    return value


def csf_delcon_value(g: VertexWeightedGraph, bound: int | None = None) -> SymFunc:
    bound = config.MEMO_BOUND if bound is None else bound
    if g.n > bound:
        log.warning("graph has %d vertices, above memo bound %d; top levels run uncached", g.n, bound)
    return _delcon(g, bound)


def csf_delcon(g: VertexWeightedGraph, bound: int | None = None) -> CsfResult:
    """X(G) = X(G minus e) - X(G/e), bottoming out at p_(sorted weights)."""
    return _result(g, csf_delcon_value(g, bound), "delcon")


ENGINES = {
    "stable": csf_stable,
    "subsets": csf_subsets,
    "delcon": csf_delcon,
}


def csf_all(g: VertexWeightedGraph) -> CsfResult:
    """Run every engine and insist they agree; the subset engine is skipped above its limit."""
    values = {"delcon": csf_delcon_value(g), "stable": csf_stable_value(g)}
    try:
        values["subsets"] = csf_subsets_value(g)
    except SubsetLimitError as e:
        log.warning("subsets engine skipped: %s", e)
    reference = values["delcon"]
    if any(v != reference for v in values.values()):
        raise EngineDisagreement(g, values)
    return _result(g, reference, "all")


def compute(g: VertexWeightedGraph, engine: str = "delcon") -> CsfResult:
    if engine == "all":
        return csf_all(g)
    try:
        fn = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from all, {', '.join(ENGINES)}") from None
    return fn(g)


def csf_uncontract_check(g: VertexWeightedGraph, e) -> bool:
    """
    Check X(G/e, w/e) == X(G minus e, w) - X(G, w), reading (G, w) as the
    uncontraction of G/e at the merged vertex. X(G) comes from the stable
    engine so the two sides are computed independently.
    """
    i = g._resolve(e)
    contracted = csf_delcon_value(g.contract_edge(i))
    deleted = csf_delcon_value(g.delete_edge(i))
    whole = csf_stable_value(g)
    ok = contracted == deleted - whole
    log.debug("uncontraction %r at edge %s -> %s", g, g.edges[i], ok)
    return ok


# ---------------- Weak CSF ----------------

def weak_csf_truncated(g: VertexWeightedGraph, k: int, brute_force: bool = False) -> dict[tuple[int, ...], int]:
    """
    Sum over pairs (acyclic orientation, coloring into 1..k) with
    color(tail) <= color(head) on every arc, of prod x_color(v)^w(v).

    For a fixed coloring, arcs between different colors are forced upward and
    any cycle must stay inside one color class, so the number of compatible
    acyclic orientations is the product of a(G[class]) over the classes.
    `brute_force=True` enumerates the pairs directly instead.
    """
    if k < 1:
        raise SymFuncError(f"weak CSF needs at least one variable, got k={k}")
    out: dict[tuple[int, ...], int] = {}
    if g.has_loop():
        return out
    verts = g.vertices

    def monomial(colors) -> tuple[int, ...]:
        exps = [0] * k
        for v, c in zip(verts, colors):
            exps[c] += g.weight(v)
        return tuple(exps)

    if brute_force:
        for gamma in acyclic_orientations(g):
            for colors in product(range(k), repeat=g.n):
                col = dict(zip(verts, colors))
                if all(col[t] <= col[h] for t, h in gamma.arcs):
                    vec = monomial(colors)
                    out[vec] = out.get(vec, 0) + 1
        return out

    # a coloring using colors c_1 < ... < c_r is an ordered set partition B_1..B_r
    # plus an r-subset of 1..k; collect per block-weight composition first
    counts: dict[frozenset, int] = {}
    comps: dict[tuple[int, ...], int] = {}
    for blocks in stable_partitions(VertexWeightedGraph(g.weight_map())):
        total = 1
        for block in blocks:
            if block not in counts:
                counts[block] = count_acyclic_orientations(g.induced(block))
            total *= counts[block]
        if not total:
            continue
        for order in permutations(blocks):
            alpha = tuple(g.total_weight(b) for b in order)
            comps[alpha] = comps.get(alpha, 0) + total
    for alpha, total in comps.items():
        for slots in combinations(range(k), len(alpha)):
            vec = [0] * k
            for s, a in zip(slots, alpha):
                vec[s] = a
            vec = tuple(vec)
            out[vec] = out.get(vec, 0) + total
    return out


# ---------------- Chromatic polynomial ----------------

_k = symbols("k")


def chromatic_polynomial_expr(g: VertexWeightedGraph):
    """chi_G as a sympy polynomial in k, interpolated from X(1^k) for k = 0..n."""
    x = csf_delcon_value(g)
    points = [(k, Rational(int(evaluate(x, [1] * k)))) for k in range(g.n + 1)]
    return interpolate(points, _k).expand()


def chromatic_polynomial(g: VertexWeightedGraph, k: int) -> int:
    """Number of proper k-colorings for k >= 0; the interpolated polynomial's value otherwise."""
    if k >= 0:
        value = evaluate(csf_delcon_value(g), [1] * k)
    else:
        value = Fraction(str(chromatic_polynomial_expr(g).subs(_k, k)))
    if value.denominator != 1:
        raise SymFuncError(f"chromatic polynomial took a non-integer value {value} at k={k}")
    return int(value)
