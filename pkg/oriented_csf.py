#!/usr/bin/env python3
"""
oriented_csf.py
- q-deformed chromatic function of an oriented vertex-weighted graph,
  truncated to k variables: sum over proper colorings of x^w * q^asc
- The flip relation  X(gamma) + X(flip_e gamma) = (1+q)(X(G minus e) - X(G/e))

A proper coloring that uses colors c_1 < ... < c_r is an ordered partition of
V into stable blocks B_1..B_r together with an r-subset of 1..k. Ascents only
depend on the block order, so the function is first collected per ordered
stable partition (block weights -> q-polynomial) and then spread over the
k-variable exponent vectors.
"""

from __future__ import annotations

import logging
from itertools import combinations, permutations, product
from typing import Iterable, Mapping

from sympy import Poly, symbols

from weighted_graph import Orientation, stable_partitions

log = logging.getLogger("oriented_csf")

_q = symbols("q")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add_q(a: tuple[int, ...], b: tuple[int, ...], sign: int = 1) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n))


class QPolynomial:
    """Exponent vector (length k) -> integer polynomial in q, stored as ascending coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[tuple[int, ...], Iterable[int]] | None = None):
        self.k = int(k)
        clean = {}
        for vec, coeffs in (terms or {}).items():
            vec = tuple(int(x) for x in vec)
            if len(vec) != self.k:
                raise ValueError(f"exponent vector {vec} does not have length {self.k}")
            c = _trim(int(x) for x in coeffs)
            if c:
                clean[vec] = c
        self.terms: dict[tuple[int, ...], tuple[int, ...]] = clean

    @classmethod
    def from_compositions(cls, comps: Mapping[tuple[int, ...], tuple[int, ...]], k: int) -> "QPolynomial":
        """Spread composition-indexed coefficients over every increasing choice of variables."""
        terms: dict[tuple[int, ...], tuple[int, ...]] = {}
        for alpha, coeffs in comps.items():
            for slots in combinations(range(k), len(alpha)):
                vec = [0] * k
                for s, a in zip(slots, alpha):
                    vec[s] = a
                vec = tuple(vec)
                terms[vec] = _add_q(terms.get(vec, ()), coeffs)
        return cls(k, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "QPolynomial") -> None:
        if other.k != self.k:
            raise ValueError(f"cannot combine q-polynomials in {self.k} and {other.k} variables")

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for vec, c in other.terms.items():
            terms[vec] = _add_q(terms.get(vec, ()), c)
        return QPolynomial(self.k, terms)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(self.k, {vec: tuple(-x for x in c) for vec, c in self.terms.items()})

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def times_one_plus_q(self) -> "QPolynomial":
        return QPolynomial(self.k, {vec: _add_q(c, (0,) + c) for vec, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    __hash__ = None

    def q_degree(self) -> int:
        return max((len(c) - 1 for c in self.terms.values()), default=-1)

    def specialize_ones(self) -> tuple[int, ...]:
        """x_1 = ... = x_k = 1: the remaining q-polynomial."""
        total: tuple[int, ...] = ()
        for c in self.terms.values():
            total = _add_q(total, c)
        return total

    def at_q_one(self) -> dict[tuple[int, ...], int]:
        return {vec: sum(c) for vec, c in self.terms.items() if sum(c)}

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "terms": [{"exponents": list(vec), "q_coeffs": list(c)} for vec, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "QPolynomial":
        return cls(obj["k"], {tuple(t["exponents"]): t["q_coeffs"] for t in obj["terms"]})

    def __repr__(self) -> str:
        return f"QPolynomial(k={self.k}, {len(self.terms)} terms)"


def q_poly_str(coeffs: Iterable[int]) -> str:
    return str(Poly(list(reversed(list(coeffs))) or [0], _q).as_expr())


def divisible_by_one_plus_q(coeffs: Iterable[int]) -> bool:
    coeffs = list(coeffs)
    if not any(coeffs):
        return True
    _, rem = Poly(list(reversed(coeffs)), _q).div(Poly(1 + _q, _q))
    return rem.is_zero


# ---------------- The q-function ----------------

def quasi_csf_compositions(gamma: Orientation) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Block-weight composition -> q-polynomial, one term per ordered stable partition."""
    g = gamma.graph
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    for blocks in stable_partitions(g):
        for order in permutations(blocks):
            pos = {v: i for i, block in enumerate(order) for v in block}
            asc = sum(1 for t, h in gamma.arcs if pos[t] < pos[h])
            alpha = tuple(g.total_weight(b) for b in order)
            out[alpha] = _add_q(out.get(alpha, ()), (0,) * asc + (1,))
    return {a: c for a, c in out.items() if c}


def quasi_csf(gamma: Orientation, k: int) -> QPolynomial:
    """Sum over proper colorings into 1..k of x^w q^asc, ascents counted per arc occurrence."""
    if k < 1:
        raise ValueError(f"quasi_csf needs k >= 1, got {k}")
    return QPolynomial.from_compositions(quasi_csf_compositions(gamma), k)


def quasi_csf_bruteforce(gamma: Orientation, k: int) -> QPolynomial:
    g = gamma.graph
    terms: dict[tuple[int, ...], tuple[int, ...]] = {}
    for colors in product(range(k), repeat=g.n):
        col = dict(zip(g.vertices, colors))
        if any(col[u] == col[v] for u, v in g.edges):
            continue
        vec = [0] * k
        for v, c in col.items():
            vec[c] += g.weight(v)
        asc = gamma.ascents(col)
        terms[tuple(vec)] = _add_q(terms.get(tuple(vec), ()), (0,) * asc + (1,))
    return QPolynomial(k, terms)


def flip_orientation(gamma: Orientation, e) -> Orientation:
    return gamma.flip(e)


def flip_relation_sides(gamma: Orientation, e, k: int) -> tuple[QPolynomial, QPolynomial]:
    """(X(gamma) + X(flip_e gamma), (1+q)(X(gamma minus e) - X(gamma/e)))."""
    i = gamma.graph._resolve(e)
    left = quasi_csf(gamma, k) + quasi_csf(gamma.flip(i), k)
    right = (quasi_csf(gamma.delete_edge(i), k) - quasi_csf(gamma.contract(i), k)).times_one_plus_q()
    return left, right


def verify_flip_relation(gamma: Orientation, e, k: int) -> bool:
    left, right = flip_relation_sides(gamma, e, k)
    if left != right:
        log.debug("flip relation fails for %r at edge %s", gamma, e)
    return left == right
