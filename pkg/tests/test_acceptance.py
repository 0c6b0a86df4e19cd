"""
End-to-end sweeps over each check's default corpus, the same graphs
`csf verify <check>` visits.
"""

import pytest

from corpus import corpora_for, sweep
from verifiers import STANDALONE, verify_fig1_pair, verify_q_example


def run(check):
    specs = [] if check in STANDALONE else corpora_for(check)
    reports, interrupted = sweep(check, specs, jobs=1, progress=False)
    assert not interrupted
    assert reports
    failed = [r.to_json() for r in reports if not r.passed]
    assert not failed, failed[:3]
    return reports


def test_weighted_path_pair():
    assert verify_fig1_pair().passed


def test_oriented_path_example():
    assert verify_q_example().passed


def test_engine_agreement_covers_all_five_vertex_graphs():
    reports = run("engines")
    five = [r for r in reports if len(r.instance["graph"]["vertices"]) == 5]
    assert len(five) == 1024


def test_involution_with_multigraphs_and_loop():
    reports = run("involution")
    assert any([0, 0] in r.instance["graph"]["edges"] for r in reports)


def test_p_positivity():
    run("p_positivity")


def test_cycle_relation():
    run("cycle")


def test_sink_theorems():
    run("sink")
    run("stanley")
    run("acyclic")
    run("newton")


def test_closed_forms():
    run("closed_forms")


def test_weighted_graphs_are_never_e_positive():
    reports = run("epos")
    noted = [r for r in reports if r.note and "sign" in r.note]
    assert noted


def test_hook_coefficients():
    run("hook")


@pytest.mark.parametrize("check", ["delcon", "uncontraction", "simple_contraction", "multiplicativity", "qspec"])
def test_structural_identities(check):
    run(check)


@pytest.mark.slow
def test_flip_relation():
    run("flip")
