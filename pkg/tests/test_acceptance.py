"""Acceptance gate: every criterion runs as its own test so the verbose
report shows one pass/fail line per criterion."""

import time

import pytest

from pizzagames import acceptance

_REGRESSION = [(n, f) for c, n, f in acceptance.CHECKS if c == "regression"]
_OTHER = [(c, n, f) for c, n, f in acceptance.CHECKS if c != "regression"]


@pytest.mark.parametrize(
    "fn", [f for _, f in _REGRESSION], ids=[n for n, _ in _REGRESSION]
)
def test_regression(fn):
    fn()


def test_regression_table_runtime_under_budget():
    t0 = time.perf_counter()
    for _, fn in _REGRESSION:
        fn()
    elapsed = time.perf_counter() - t0
    assert elapsed < acceptance.REGRESSION_BUDGET_S, f"{elapsed:.2f} s"


@pytest.mark.parametrize(
    "fn", [f for _, _, f in _OTHER], ids=[f"{c}-{n}" for c, n, _ in _OTHER]
)
def test_suite(fn):
    fn()


def test_runner_report_passes():
    report = acceptance.run_acceptance(only="regression")
    assert report["passed"]
    assert report["counts"]["failed"] == 0


def test_runner_subset_filter():
    report = acceptance.run_acceptance(only="pizza")
    names = {c["name"] for c in report["checks"]}
    assert "pizza-15-value" in names
    assert "tes-intro-values" not in names
