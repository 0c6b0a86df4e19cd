import pytest

import config
import csf_engine
from csf_engine import (
    EngineDisagreement,
    SubsetLimitError,
    chromatic_polynomial,
    chromatic_polynomial_expr,
    clear_memo,
    compute,
    csf_all,
    csf_delcon_value,
    csf_stable_value,
    csf_subsets_value,
    csf_uncontract_check,
    graph_fingerprint,
    memo_size,
    weak_csf_truncated,
)
from partition_algebra import Basis, SymFunc, SymFuncError, convert
from weighted_graph import VertexWeightedGraph, complete_graph, edgeless_graph, path_graph

ENGINE_FNS = [csf_stable_value, csf_subsets_value, csf_delcon_value]


def p(terms):
    return SymFunc(Basis.P, terms)


@pytest.mark.parametrize("engine", ENGINE_FNS)
def test_unit_edge(engine, unit_edge):
    assert engine(unit_edge) == p({(1, 1): 1, (2,): -1})


@pytest.mark.parametrize("engine", ENGINE_FNS)
def test_triangle(engine, triangle):
    x = engine(triangle)
    assert x == p({(1, 1, 1): 1, (2, 1): -3, (3,): 2})
    assert convert(x, Basis.E).as_dict() == {(3,): 6}


@pytest.mark.parametrize("engine", ENGINE_FNS)
def test_weighted_edge(engine, weighted_edge):
    x = engine(weighted_edge)
    assert x == p({(2, 1): 1, (3,): -1})
    assert convert(x, Basis.E).as_dict() == {(2, 1): 1, (3,): -3}
    assert convert(x, Basis.M).as_dict() == {(2, 1): 1}


@pytest.mark.parametrize("engine", ENGINE_FNS)
def test_closed_forms(engine):
    assert engine(complete_graph([2, 2, 1])) == SymFunc(Basis.M, {(2, 2, 1): 2})
    assert engine(edgeless_graph([3, 1])) == SymFunc.element(Basis.P, (3, 1))


@pytest.mark.parametrize("engine", ENGINE_FNS)
def test_loop_gives_zero_of_full_degree(engine, loop_graph):
    x = engine(loop_graph)
    assert x.is_zero()
    assert x.degree == 3


def test_parallel_edges_do_not_change_x():
    single = path_graph([2, 1])
    double = VertexWeightedGraph({0: 2, 1: 1}, [(0, 1), (0, 1)])
    for engine in ENGINE_FNS:
        assert engine(double) == engine(single)


def test_fig1_paths_share_x(fig1_pair):
    a, b = fig1_pair
    assert csf_all(a).value == csf_all(b).value


def test_subset_limit(triangle):
    with pytest.raises(SubsetLimitError):
        csf_subsets_value(triangle, limit=2)


def test_all_skips_subsets_above_limit(monkeypatch, triangle):
    monkeypatch.setattr(csf_engine.config, "SUBSET_EDGE_LIMIT", 1)
    assert csf_all(triangle).value == p({(1, 1, 1): 1, (2, 1): -3, (3,): 2})


def test_disagreement_is_reported(monkeypatch, triangle):
    monkeypatch.setattr(csf_engine, "csf_stable_value", lambda g: SymFunc.zero(Basis.P, g.d))
    with pytest.raises(EngineDisagreement) as info:
        csf_all(triangle)
    witness = info.value.witness()
    assert set(witness["values"]) == {"delcon", "stable", "subsets"}
    assert witness["graph"] == triangle.to_json()


def test_compute_dispatch(triangle):
    result = compute(triangle, "stable")
    assert result.provenance == "stable"
    assert result.fingerprint == graph_fingerprint(triangle)
    assert result.to_json()["engine"] == "stable"
    with pytest.raises(ValueError):
        compute(triangle, "magic")


def test_fingerprint_matches_for_every_engine(monkeypatch, triangle):
    relabeled = triangle.relabel({0: 2, 1: 0, 2: 1})
    for engine in ("stable", "subsets", "delcon"):
        assert compute(relabeled, engine).fingerprint == graph_fingerprint(triangle)
    monkeypatch.setattr(config, "MEMO_BOUND", 2)
    assert compute(triangle, "stable").fingerprint is None
    assert len(graph_fingerprint(triangle)) == 16


def test_memo_is_filled_and_cleared(fig1_pair):
    clear_memo()
    assert memo_size() == 0
    csf_delcon_value(fig1_pair[0])
    assert memo_size() > 0
    clear_memo()
    assert memo_size() == 0


def test_delcon_above_memo_bound(triangle):
    assert csf_delcon_value(triangle, bound=1) == csf_stable_value(triangle)


def test_uncontraction_identity(triangle, weighted_edge):
    assert csf_uncontract_check(triangle, 0)
    assert csf_uncontract_check(weighted_edge, (0, 1))


# ---------------- Weak CSF ----------------

def test_weak_csf_of_edgeless_graph():
    expected = {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 3): 1}
    assert weak_csf_truncated(edgeless_graph([2, 1]), 2) == expected


def test_weak_csf_of_unit_edge(unit_edge):
    expected = {(2, 0): 2, (1, 1): 2, (0, 2): 2}
    assert weak_csf_truncated(unit_edge, 2) == expected
    assert weak_csf_truncated(unit_edge, 2, brute_force=True) == expected


@pytest.mark.parametrize("graph", [
    complete_graph([1, 1, 1]),
    path_graph([2, 1, 1]),
    VertexWeightedGraph({0: 1, 1: 2}, [(0, 1), (0, 1)]),
])
def test_weak_csf_fast_matches_brute_force(graph):
    assert weak_csf_truncated(graph, 3) == weak_csf_truncated(graph, 3, brute_force=True)


def test_weak_csf_edge_cases(loop_graph, unit_edge):
    assert weak_csf_truncated(loop_graph, 3) == {}
    with pytest.raises(SymFuncError):
        weak_csf_truncated(unit_edge, 0)


# ---------------- Chromatic polynomial ----------------

def test_chromatic_polynomial(triangle, loop_graph):
    assert chromatic_polynomial(triangle, 3) == 6
    assert chromatic_polynomial(triangle, 2) == 0
    assert chromatic_polynomial(triangle, -1) == -6
    assert chromatic_polynomial(path_graph([1, 1, 1]), -1) == -4
    assert chromatic_polynomial(loop_graph, 3) == 0
    assert chromatic_polynomial(loop_graph, -1) == 0


def test_chromatic_polynomial_ignores_weights():
    k = csf_engine._k
    expr = chromatic_polynomial_expr(path_graph([3, 1]))
    assert (expr - (k ** 2 - k)).expand() == 0
