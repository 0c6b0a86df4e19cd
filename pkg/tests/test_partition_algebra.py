from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from partition_algebra import (
    Basis,
    BasisMismatchError,
    Partition,
    PartitionSizeError,
    SymFunc,
    SymFuncError,
    basis_in_m,
    convert,
    evaluate,
    kostka,
    m_multiply,
    omega,
    partitions_of,
    sigma,
    truncate,
)
from partition_algebra import _leading_expansion


def el(basis, *parts):
    return SymFunc.element(basis, parts)


@st.composite
def symfuncs(draw, max_degree=5):
    d = draw(st.integers(1, max_degree))
    basis = draw(st.sampled_from(list(Basis)))
    keys = draw(st.lists(st.sampled_from(partitions_of(d)), max_size=4))
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(keys), max_size=len(keys)))
    return SymFunc(basis, dict(zip(keys, coeffs)), d)


# ---------------- Partitions ----------------

def test_partitions_in_reverse_lex_order():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == (Partition(),)
    assert len(partitions_of(8)) == 22
    sevens = partitions_of(7)
    assert list(sevens) == sorted(sevens, reverse=True)
    assert len(set(sevens)) == len(sevens) == 15


def test_partition_rejects_bad_parts():
    with pytest.raises(SymFuncError):
        Partition((1, 2))
    with pytest.raises(SymFuncError):
        Partition((2, 0))
    assert Partition.from_parts([1, 3, 2]) == (3, 2, 1)


def test_conjugate_and_multiplicities():
    assert Partition((3, 1)).conjugate() == (2, 1, 1)
    assert Partition((2, 2, 1, 1)).multiplicity_factorial() == 4
    assert Partition((3, 1)).dominates((2, 2))
    assert not Partition((2, 2)).dominates((3, 1))


def test_kostka_numbers():
    assert kostka((3, 1), (3, 1)) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1, 1), (2, 1)) == 0
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    with pytest.raises(PartitionSizeError):
        kostka((2, 1), (2, 2))


@pytest.mark.parametrize("d", range(1, 7))
def test_kostka_follows_dominance(d):
    for lam in partitions_of(d):
        assert kostka(lam, lam) == 1
        for mu in partitions_of(d):
            if lam.dominates(mu):
                assert kostka(lam, mu) >= 1
            else:
                assert kostka(lam, mu) == 0


# ---------------- Products and expansions ----------------

def test_monomial_products():
    m1 = el(Basis.M, 1)
    assert m_multiply(m1, m1) == SymFunc(Basis.M, {(2,): 1, (1, 1): 2})
    assert m_multiply(el(Basis.M, 2), m1) == SymFunc(Basis.M, {(3,): 1, (2, 1): 1})
    with pytest.raises(BasisMismatchError):
        m_multiply(m1, el(Basis.P, 1))


def dense_monomial(lam, k):
    padded = tuple(lam) + (0,) * (k - len(lam))
    return {vec: 1 for vec in set(permutations(padded))}


def dense_product(f, g):
    out = {}
    for a, c in f.items():
        for b, v in g.items():
            vec = tuple(x + y for x, y in zip(a, b))
            out[vec] = out.get(vec, 0) + c * v
    return {vec: c for vec, c in out.items() if c}


def test_monomial_products_match_dense_polynomials():
    pairs = [
        (alpha, beta)
        for total in range(2, 7)
        for a in range(1, total)
        for alpha in partitions_of(a)
        for beta in partitions_of(total - a)
    ]
    for alpha, beta in pairs:
        k = alpha.size() + beta.size()
        product = m_multiply(el(Basis.M, *alpha), el(Basis.M, *beta))
        assert truncate(product, k) == dense_product(dense_monomial(alpha, k), dense_monomial(beta, k)), (alpha, beta)


def test_multiplicative_bases_concatenate():
    assert el(Basis.P, 2) * el(Basis.P, 1) == el(Basis.P, 2, 1)
    assert el(Basis.E, 1) * el(Basis.E, 1) == el(Basis.E, 1, 1)


def test_expansions_in_m():
    assert basis_in_m(Basis.E, (2,)) == el(Basis.M, 1, 1)
    assert basis_in_m(Basis.P, (2, 1)) == SymFunc(Basis.M, {(3,): 1, (2, 1): 1})
    assert basis_in_m(Basis.S, (2, 1)) == SymFunc(Basis.M, {(2, 1): 1, (1, 1, 1): 2})
    assert basis_in_m(Basis.H, (2,)) == SymFunc(Basis.M, {(2,): 1, (1, 1): 1})


def test_power_sums_in_e_basis():
    p2 = convert(el(Basis.P, 2), Basis.E)
    assert p2.as_dict() == {(1, 1): 1, (2,): -2}
    p3 = convert(el(Basis.P, 3), Basis.E)
    assert p3.as_dict() == {(1, 1, 1): 1, (2, 1): -3, (3,): 3}


@pytest.mark.parametrize("d", range(1, 9))
def test_every_basis_element_round_trips(d):
    for lam in partitions_of(d):
        for source in Basis:
            for target in Basis:
                if source == target:
                    continue
                there = convert(el(source, *lam), target)
                assert convert(there, source).as_dict() == {lam: 1}, (source, target, lam)


@pytest.mark.parametrize("target", [Basis.S, Basis.E, Basis.P])
def test_triangular_expansions_respect_dominance(target):
    for d in range(1, 8):
        for mu in partitions_of(d):
            _, lead, expansion = _leading_expansion(target, mu)
            assert lead != 0
            for key in expansion:
                if key == mu:
                    continue
                if target == Basis.P:
                    assert key.dominates(mu)
                else:
                    assert mu.dominates(key)


def test_mixed_arithmetic_needs_same_basis():
    with pytest.raises(BasisMismatchError):
        el(Basis.P, 1) + el(Basis.E, 1)
    f = el(Basis.P, 2) * 3 - el(Basis.P, 1, 1)
    assert f.coefficient((2,)) == 3
    assert f.coefficient((1, 1)) == -1


def test_equality_converts_across_bases():
    assert el(Basis.M, 1, 1) == el(Basis.E, 2)
    assert el(Basis.P, 1) == el(Basis.S, 1)


def test_items_reverse_lex_and_degree():
    f = SymFunc(Basis.P, {(1, 1, 1): 1, (3,): 2, (2, 1): -3})
    assert [lam for lam, _ in f.items()] == [(3,), (2, 1), (1, 1, 1)]
    assert f.degree == 3 and f.is_homogeneous()
    with pytest.raises(PartitionSizeError):
        SymFunc(Basis.P, {(3,): 1}, degree=2)


def test_zero_keeps_declared_degree():
    z = SymFunc.zero(Basis.P, 4)
    assert z.is_zero() and z.degree == 4
    assert str(z) == "0"


def test_json_shape():
    f = SymFunc(Basis.E, {(2, 1): Fraction(-1, 2)})
    obj = f.to_json()
    assert obj == {"basis": "e", "degree": 3, "terms": [{"partition": [2, 1], "num": -1, "den": 2}]}
    assert SymFunc.from_json(obj) == f
    with pytest.raises(SymFuncError):
        SymFunc.from_json({"basis": "e", "terms": [{"partition": [1], "num": 1, "den": 0}]})
    with pytest.raises(SymFuncError):
        SymFunc.from_json({"basis": "q", "terms": []})


def test_fingerprint_ignores_basis():
    assert el(Basis.M, 1, 1).fingerprint() == el(Basis.E, 2).fingerprint()
    assert el(Basis.P, 2).fingerprint() != el(Basis.P, 1, 1).fingerprint()


# ---------------- omega and specializations ----------------

def test_omega_on_power_sums():
    assert omega(el(Basis.P, 2, 1)) == -el(Basis.P, 2, 1)
    assert omega(el(Basis.P, 3)) == el(Basis.P, 3)
    assert omega(el(Basis.E, 2)) == el(Basis.H, 2)


def test_evaluate_and_truncate():
    assert evaluate(el(Basis.M, 1, 1), [1, 1]) == 1
    assert evaluate(el(Basis.P, 2), [1, 1, 1]) == 3
    assert evaluate(el(Basis.M, 1, 1) * 2, [1, 1, 1]) == 6
    assert truncate(el(Basis.P, 2, 1), 2) == {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 3): 1}
    assert truncate(el(Basis.M, 1, 1, 1), 2) == {}


def test_sigma():
    assert sigma(el(Basis.P, 5), 2) == -10
    assert sigma(el(Basis.E, 3, 1)) == 1
    assert sigma(el(Basis.E, 3) * 6, 1) == 6
    assert sigma(el(Basis.E, 3) * 6, 2) == 0


# ---------------- Properties ----------------

@settings(max_examples=40, deadline=None)
@given(symfuncs(), st.sampled_from(list(Basis)))
def test_conversion_is_invertible(f, target):
    there = convert(f, target)
    assert there.basis == target
    assert convert(there, f.basis).as_dict() == f.as_dict()


@settings(max_examples=40, deadline=None)
@given(symfuncs())
def test_omega_is_an_involution(f):
    assert omega(omega(f)).as_dict() == f.as_dict()


@settings(max_examples=30, deadline=None)
@given(symfuncs())
def test_evaluate_at_ones_ignores_basis(f):
    for k in range(1, f.degree + 1):
        ones = [1] * k
        want = evaluate(f, ones)
        for target in Basis:
            assert evaluate(convert(f, target), ones) == want


@settings(max_examples=30, deadline=None)
@given(symfuncs(max_degree=3), symfuncs(max_degree=3))
def test_product_agrees_across_bases(f, g):
    g = convert(g, f.basis)
    in_m = m_multiply(convert(f, Basis.M), convert(g, Basis.M))
    assert f * g == in_m
