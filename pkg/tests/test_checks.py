from resolvalg.checks import (
    chain_suite,
    circle_suite,
    exact_identity_suite,
    kernel_reduction_suite,
    make_report,
    relation_suite,
    rewrite_equivalence_suite,
    summarize,
)
from resolvalg.config import RunConfig


def test_summarize_exit_codes():
    ok = make_report("a", "law", "pass")
    bad = make_report("b", "law", "fail")
    maybe = make_report("c", "law", "inconclusive")
    assert summarize([ok])["exit_code"] == 0
    assert summarize([ok, bad, maybe])["exit_code"] == 1
    assert summarize([ok, maybe])["exit_code"] == 3


def test_relation_suite_deterministic(cfg):
    a = relation_suite(cfg, dim=2, seed=3, instances=2)
    b = relation_suite(cfg, dim=2, seed=3, instances=2)
    assert a == b


def test_relation_suite_single_level_flags_inconclusive(cfg):
    reports = relation_suite(cfg, dim=2, seed=0, instances=1, schedule=[16])
    assert {r["status"] for r in reports} == {"inconclusive"}


def test_exact_suites_pass(cfg):
    for report in exact_identity_suite(cfg) + circle_suite(cfg):
        assert report["status"] == "pass", report


def test_rewrite_equivalence_passes(cfg):
    (report,) = rewrite_equivalence_suite(cfg, samples=4)
    assert report["status"] == "pass"


def test_chain_suite_small(cfg):
    reports = chain_suite(cfg, dims=(2,), exhaustive_dims=(2,))
    assert all(r["status"] == "pass" for r in reports)


def test_kernel_reduction(cfg):
    (report,) = kernel_reduction_suite(cfg)
    assert report["status"] == "pass"
    assert report["residuals"][-1] < 1e-10
