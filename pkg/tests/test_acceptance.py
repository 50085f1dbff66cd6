"""Full acceptance sweeps, one test per criterion.

Each test prints a single ACCEPTANCE line (visible under pytest -s, or in
the captured stdout of a failing test) and asserts the criterion passed.
"""
from __future__ import annotations

from tamelift.acceptance import (
    run_criterion_1,
    run_criterion_2,
    run_criterion_3,
    run_criterion_4,
    run_criterion_5,
    run_criterion_6,
    run_criterion_7,
)


def _report(result):
    state = "PASS" if result.passed else "FAIL"
    print(f"ACCEPTANCE {result.number}: {state} ({result.name}, "
          f"{result.cases} cases, {result.seconds:.1f}s)")
    assert result.passed, result.summary()


def test_acceptance_1_lift_soundness():
    _report(run_criterion_1())


def test_acceptance_2_kernel_image_exactness():
    _report(run_criterion_2())


def test_acceptance_3_irreducibility_vs_oracle():
    _report(run_criterion_3())


def test_acceptance_4_regular_lift_search():
    _report(run_criterion_4())


def test_acceptance_5_golden_fixtures():
    _report(run_criterion_5())


def test_acceptance_6_niveau_power_identity():
    _report(run_criterion_6())


def test_acceptance_7_chamber_sum_invariance():
    _report(run_criterion_7())
