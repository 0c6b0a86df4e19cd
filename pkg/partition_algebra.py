#!/usr/bin/env python3
"""
partition_algebra.py
- Integer partitions, Kostka numbers and exact symmetric-function arithmetic
- Five bases (m, p, e, h, s) with conversions through the monomial basis
- The involution omega, k-variable evaluation/truncation and the e-coefficient sums sigma

Coefficients are Fractions throughout; nothing here ever touches floating point.
Every value is immutable once built, and the memo tables below are plain
insert-once caches keyed by hashable partitions.
"""

from __future__ import annotations

import json
import hashlib
import logging
from enum import Enum
from fractions import Fraction
from functools import cache, lru_cache
from math import factorial, prod
from typing import Iterable, Mapping

from sympy.utilities.iterables import multiset_permutations

log = logging.getLogger("partition_algebra")


class SymFuncError(ValueError):
    """Malformed partition or symmetric function, or an invalid operation on one."""


class BasisMismatchError(SymFuncError):
    pass


class PartitionSizeError(SymFuncError):
    pass


# ---------------- Partitions ----------------

class Partition(tuple):
    """Weakly decreasing tuple of positive integers. The empty partition is allowed."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if parts and parts[-1] < 1:
            raise SymFuncError(f"partition parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise SymFuncError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition."""
        return cls(sorted(parts, reverse=True))

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def r(self, i: int) -> int:
        """Number of parts equal to i."""
        return self.count(i)

    def multiplicity_factorial(self) -> int:
        """prod_i r_i(lambda)!"""
        return prod(factorial(self.count(i)) for i in set(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def dominates(self, other: "Partition") -> bool:
        if self.size() != sum(other):
            raise PartitionSizeError(f"dominance needs equal sizes: {self} vs {other}")
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def __repr__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"


def _partitions_bounded(d: int, largest: int):
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            yield (first,) + rest


@cache
def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of d in reverse-lexicographic order: (d) first, 1^d last."""
    if d < 0:
        raise PartitionSizeError(f"cannot partition a negative number: {d}")
    return tuple(Partition(p) for p in _partitions_bounded(d, d))


# ---------------- Kostka numbers ----------------

def _horizontal_strips(shape: tuple, before: tuple, filled: tuple, count: int, row: int = 0):
    """Extend `filled` by `count` boxes, at most one per column, staying inside `shape`."""
    if count == 0:
        yield filled
        return
    if row == len(shape):
        return
    cap = shape[row] if row == 0 else min(shape[row], before[row - 1])
    room = cap - filled[row]
    for add in range(min(room, count), -1, -1):
        nxt = filled[:row] + (filled[row] + add,) + filled[row + 1:]
        yield from _horizontal_strips(shape, before, nxt, count - add, row + 1)


@lru_cache(maxsize=None)
def _count_fillings(shape: tuple, content: tuple, filled: tuple) -> int:
    if not content:
        return 1 if filled == shape else 0
    total = 0
    for nxt in _horizontal_strips(shape, filled, filled, content[0]):
        total += _count_fillings(shape, content[1:], nxt)
    return total


@cache
def kostka(shape: tuple, content: tuple) -> int:
    """
    Number of semi-standard Young tableaux of `shape` with content `content`.

    Values 1, 2, ... are placed in turn; each value occupies a horizontal strip,
    which is exactly "weak along rows, strict down columns".
    """
    shape = Partition(shape)
    content = tuple(int(c) for c in content)
    if shape.size() != sum(content):
        raise PartitionSizeError(f"kostka needs |shape| == |content|: {shape} vs {content}")
    if not shape:
        return 1
    return _count_fillings(tuple(shape), tuple(c for c in content if c), (0,) * len(shape))


# ---------------- Bases ----------------

class Basis(str, Enum):
    M = "m"
    P = "p"
    E = "e"
    H = "h"
    S = "s"


def _as_basis(basis) -> Basis:
    try:
        return Basis(basis.lower() if isinstance(basis, str) else basis)
    except ValueError:
        raise SymFuncError(f"unknown basis: {basis!r}") from None


class SymFunc:
    """
    Sparse symmetric function: basis tag plus Partition -> Fraction map.

    `degree` is the declared degree; every key has size <= degree and zero
    coefficients are never stored. Homogeneous values (all the graph
    functions) have every key of size == degree.
    """

    __slots__ = ("basis", "degree", "_coeffs")

    def __init__(self, basis, coeffs: Mapping | None = None, degree: int | None = None):
        self.basis = _as_basis(basis)
        clean: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            clean[lam] = clean.get(lam, Fraction(0)) + Fraction(c)
        self._coeffs = {lam: c for lam, c in clean.items() if c != 0}
        top = max((lam.size() for lam in self._coeffs), default=0)
        if degree is None:
            degree = top
        elif top > degree:
            raise PartitionSizeError(f"term of size {top} exceeds declared degree {degree}")
        self.degree = int(degree)

    # -- constructors --
    @classmethod
    def zero(cls, basis, degree: int = 0) -> "SymFunc":
        return cls(basis, {}, degree)

    @classmethod
    def element(cls, basis, parts: Iterable[int]) -> "SymFunc":
        lam = Partition(parts)
        return cls(basis, {lam: 1}, lam.size())

    # -- access --
    def coefficient(self, parts: Iterable[int]) -> Fraction:
        return self._coeffs.get(Partition(parts), Fraction(0))

    def items(self):
        """(partition, coefficient) pairs in reverse-lexicographic order."""
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0].size(), kv[0]), reverse=True)

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_homogeneous(self) -> bool:
        return all(lam.size() == self.degree for lam in self._coeffs)

    def is_positive(self) -> bool:
        """All stored coefficients nonnegative (b-positivity in this basis)."""
        return all(c >= 0 for c in self._coeffs.values())

    # -- arithmetic --
    def _check_basis(self, other: "SymFunc") -> None:
        if other.basis != self.basis:
            raise BasisMismatchError(f"cannot combine {self.basis.value}- and {other.basis.value}-basis values")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_basis(other)
        terms = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            terms[lam] = terms.get(lam, 0) + c
        return SymFunc(self.basis, terms, max(self.degree, other.degree))

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self._coeffs.items()}, self.degree)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, {lam: c * other for lam, c in self._coeffs.items()}, self.degree)
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self._coeffs == other._coeffs

    __hash__ = None

    # -- serialization --
    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "num": c.numerator, "den": c.denominator}
                for lam, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SymFunc":
        try:
            terms = {}
            for t in obj["terms"]:
                den = int(t.get("den", 1))
                if den == 0:
                    raise SymFuncError("zero denominator")
                lam = Partition(t["partition"])
                terms[lam] = terms.get(lam, 0) + Fraction(int(t["num"]), den)
            return cls(obj["basis"], terms, obj.get("degree"))
        except (KeyError, TypeError, ValueError) as e:
            raise SymFuncError(f"malformed symmetric function JSON: {e}") from None

    def fingerprint(self) -> str:
        """Stable hash of the canonical p-basis serialization."""
        canon = convert(self, Basis.P).to_json()
        canon.pop("degree")
        blob = json.dumps(canon, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def __repr__(self) -> str:
        return f"SymFunc({self.basis.value}, {self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for lam, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            out.append(f"{sign} {coef}{self.basis.value}{lam!r}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# ---------------- Monomial products ----------------

@cache
def _arrangements(parts: tuple, width: int) -> tuple[tuple[int, ...], ...]:
    """Distinct exponent vectors of length `width` that sort to `parts`."""
    if len(parts) > width:
        return ()
    if width == 0:
        return ((),)
    padded = list(parts) + [0] * (width - len(parts))
    return tuple(tuple(v) for v in multiset_permutations(padded))


def _strip_zeros(vec) -> Partition:
    return Partition.from_parts(v for v in vec if v)


@cache
def _monomial_product(alpha: Partition, beta: Partition) -> dict[Partition, int]:
    """m_alpha * m_beta as {gamma: multiplicity}, by merging exponent vectors."""
    if not alpha:
        return {beta: 1}
    if not beta:
        return {alpha: 1}
    width = len(alpha) + len(beta)
    anchored = tuple(beta) + (0,) * (width - len(beta))
    candidates = {_strip_zeros(a + b for a, b in zip(arr, anchored)) for arr in _arrangements(tuple(alpha), width)}
    out = {}
    for gamma in candidates:
        target = tuple(gamma)
        hits = 0
        for arr in _arrangements(tuple(alpha), len(target)):
            rest = [g - a for g, a in zip(target, arr)]
            if min(rest) >= 0 and _strip_zeros(rest) == beta:
                hits += 1
        if hits:
            out[gamma] = hits
    return out


def _m_product_terms(f: Mapping, g: Mapping) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            for gamma, k in _monomial_product(Partition(lam), Partition(mu)).items():
                out[gamma] = out.get(gamma, 0) + a * b * k
    return out


def m_multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two m-basis functions, expanded in the m-basis."""
    if f.basis != Basis.M or g.basis != Basis.M:
        raise BasisMismatchError("m_multiply needs two m-basis operands")
    return SymFunc(Basis.M, _m_product_terms(f._coeffs, g._coeffs), f.degree + g.degree)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the common basis of f and g."""
    f._check_basis(g)
    degree = f.degree + g.degree
    if f.basis == Basis.M:
        return m_multiply(f, g)
    if f.basis == Basis.S:
        return convert(m_multiply(convert(f, Basis.M), convert(g, Basis.M)), Basis.S)
    # p, e and h are multiplicative: b_lambda * b_mu = b_(lambda u mu)
    terms: dict[Partition, Fraction] = {}
    for lam, a in f._coeffs.items():
        for mu, b in g._coeffs.items():
            key = Partition.from_parts(lam + mu)
            terms[key] = terms.get(key, 0) + a * b
    return SymFunc(f.basis, terms, degree)


# ---------------- Basis expansions in m ----------------

def _generator_in_m(basis: Basis, n: int) -> dict[Partition, int]:
    if basis == Basis.P:
        return {Partition((n,)): 1}
    if basis == Basis.E:
        return {Partition((1,) * n): 1}
    if basis == Basis.H:
        return {mu: 1 for mu in partitions_of(n)}
    raise SymFuncError(f"{basis.value} has no single-part generators")


@cache
def _in_m(basis: Basis, lam: Partition) -> dict[Partition, Fraction]:
    if basis == Basis.M:
        return {lam: Fraction(1)}
    if basis == Basis.S:
        return {mu: Fraction(k) for mu in partitions_of(lam.size()) if (k := kostka(lam, mu))}
    terms: dict[Partition, Fraction] = {Partition(): Fraction(1)}
    for part in lam:
        terms = _m_product_terms(terms, _generator_in_m(basis, part))
    return terms


def basis_in_m(basis, parts: Iterable[int]) -> SymFunc:
    """The element b_lambda of `basis`, expanded in the m-basis."""
    lam = Partition(parts)
    return SymFunc(Basis.M, _in_m(_as_basis(basis), lam), lam.size())


# ---------------- Triangular solves ----------------

# For each target basis: which m-term leads b_lambda, which end of the
# reverse-lex order to peel from so that every other term is still unsolved,
# and whether the other terms lie below (True) or above the leading one in dominance.
#   s_lambda = m_lambda + (dominated terms)        peel the largest key
#   e_lambda = m_lambda' + (dominated terms)       peel the largest key, index by conjugate
#   p_lambda = (prod r_i!) m_lambda + (coarser)    peel the smallest key
_TRIANGULAR = {
    Basis.S: (lambda mu: mu, max, True),
    Basis.E: (lambda mu: mu.conjugate(), max, True),
    Basis.P: (lambda mu: mu, min, False),
}


@cache
def _leading_expansion(target: Basis, mu: Partition) -> tuple[Partition, Fraction, dict]:
    index, peel, below = _TRIANGULAR[target]
    lam = index(mu)
    expansion = _in_m(target, lam)
    lead = expansion.get(mu)
    if not lead:
        raise SymFuncError(f"internal: {target.value}{lam!r} has no m{mu!r} term")
    for key in expansion:
        if key != mu and key.size() == mu.size() and peel(key, mu) == key:
            raise SymFuncError(f"internal: {target.value}-expansion is not triangular at {mu!r}")
        if key != mu and not (mu.dominates(key) if below else key.dominates(mu)):
            raise SymFuncError(f"internal: {target.value}-expansion term m{key!r} breaks dominance at {mu!r}")
    return lam, lead, expansion


def _solve_from_m(terms: Mapping, target: Basis) -> dict[Partition, Fraction]:
    if target == Basis.M:
        return dict(terms)
    if target == Basis.H:
        # h_lambda = omega(e_lambda): read the e-coefficients of omega(f)
        return _solve_from_m(_omega_m(terms), Basis.E)
    _, peel, _ = _TRIANGULAR[target]
    residual = {k: Fraction(v) for k, v in terms.items() if v}
    out: dict[Partition, Fraction] = {}
    while residual:
        mu = peel(residual, key=lambda k: (k.size(), k))
        lam, lead, expansion = _leading_expansion(target, mu)
        c = residual[mu] / lead
        out[lam] = out.get(lam, 0) + c
        for key, v in expansion.items():
            nv = residual.get(key, 0) - c * v
            if nv:
                residual[key] = nv
            else:
                residual.pop(key, None)
        if mu in residual:
            raise SymFuncError(f"internal: triangular solve stalled at {mu!r}")
    return {k: v for k, v in out.items() if v}


def _to_m(terms: Mapping, basis: Basis) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for lam, c in terms.items():
        for mu, v in _in_m(basis, lam).items():
            out[mu] = out.get(mu, 0) + c * v
    return {k: v for k, v in out.items() if v}


def _omega_sign(lam: Partition) -> int:
    return -1 if (lam.size() - lam.length()) % 2 else 1


def _omega_m(terms: Mapping) -> dict[Partition, Fraction]:
    p_terms = _solve_from_m(terms, Basis.P)
    return _to_m({lam: c * _omega_sign(lam) for lam, c in p_terms.items()}, Basis.P)


@cache
def _transition(source: Basis, target: Basis, lam: Partition) -> dict[Partition, Fraction]:
    return _solve_from_m(_in_m(source, lam), target)


def convert(f: SymFunc, target) -> SymFunc:
    """Re-express f in `target`; exact, and convert(convert(f, B), A) == f."""
    target = _as_basis(target)
    if f.basis == target:
        return f
    out: dict[Partition, Fraction] = {}
    for lam, c in f._coeffs.items():
        for mu, v in _transition(f.basis, target, lam).items():
            out[mu] = out.get(mu, 0) + c * v
    return SymFunc(target, out, f.degree)


def omega(f: SymFunc) -> SymFunc:
    """omega(p_lambda) = (-1)^(|lambda| - l(lambda)) p_lambda, returned in f's basis."""
    p = convert(f, Basis.P)
    flipped = SymFunc(Basis.P, {lam: c * _omega_sign(lam) for lam, c in p._coeffs.items()}, f.degree)
    return convert(flipped, f.basis)


# ---------------- Specializations ----------------

def truncate(f: SymFunc, k: int) -> dict[tuple[int, ...], Fraction]:
    """Dense polynomial f(x_1..x_k, 0, 0, ...) as exponent-vector -> coefficient."""
    if k < 0:
        raise SymFuncError(f"variable count must be nonnegative: {k}")
    out: dict[tuple[int, ...], Fraction] = {}
    for lam, c in convert(f, Basis.M)._coeffs.items():
        for vec in _arrangements(tuple(lam), k):
            out[vec] = out.get(vec, 0) + c
    return {v: c for v, c in out.items() if c}


def evaluate(f: SymFunc, values: Iterable) -> Fraction:
    """Substitute x_i = values[i] (and x_i = 0 beyond) into f."""
    values = tuple(Fraction(v) for v in values)
    total = Fraction(0)
    for lam, c in convert(f, Basis.M)._coeffs.items():
        if not lam:
            total += c
            continue
        for vec in _arrangements(tuple(lam), len(values)):
            total += c * prod((x ** e for x, e in zip(values, vec) if e), start=Fraction(1))
    return total


def sigma(f: SymFunc, m: int | None = None) -> Fraction:
    """Sum of e-basis coefficients, optionally only over partitions of length m."""
    e = convert(f, Basis.E)
    return sum((c for lam, c in e._coeffs.items() if m is None or lam.length() == m), Fraction(0))
