# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

import pytest

from gentrib.analytic import DeltaNotPositive, discriminant
from gentrib.identities import (
    CheckReport,
    check_binet,
    check_cassini_u,
    check_cassini_v,
    check_lemma9,
    check_matrix_forms,
    check_matrix_quadratic,
    check_quad_approx,
    check_quaternion_binet,
    pool_params,
    run_suite,
)
from gentrib.seq_core import make_params, preset
from gentrib.suite_config import IDENTITY_IDS, SuiteConfig

DELTA_NONPOSITIVE = make_params(0, 0, 1, 0, 3, 0)


@pytest.fixture(scope="module")
def tribonacci():
    return preset("tribonacci")


@pytest.fixture(scope="module")
def default_reports():
    return run_suite(SuiteConfig())


def _assert_passed(report: CheckReport):
    assert report.passed, f"Expected {report.identity_id} to pass, got failures {report.failures[:3]}"
    assert report.status == "pass"


def test_check_cassini_u():
    for r, s, t in ((1, 1, 1), (2, 3, 5), (1, 0, 0), (-4, 2, -3), (0, 0, 0)):
        report = check_cassini_u(r, s, t, (2, 200))
        _assert_passed(report)
        assert report.identity_id == "cassini_u"
        assert report.params == make_params(0, 0, 1, r, s, t)
        assert report.worst_residual == 0.0

    with pytest.raises(ValueError):
        check_cassini_u(1, 1, 1, (1, 10))
    with pytest.raises(ValueError):
        check_cassini_u(1, 1, 1, (10, 5))


def test_check_cassini_v(tribonacci):
    for p in (tribonacci, make_params(1, 1, 1, 1, 1, 1), make_params(5, -2, 3, 1, 2, 1), make_params(-9, 4, 7, -5, 0, 3)):
        report = check_cassini_v(p, (0, 60))
        _assert_passed(report)
        assert report.notes == ()

    report = check_cassini_v(make_params(1, 2, 3, 1, 1, 0), (0, 20))
    _assert_passed(report)
    assert len(report.notes) == 1, f"Expected a note for t = 0, got {report.notes}"


def test_check_matrix_forms(tribonacci):
    report = check_matrix_forms(tribonacci, (0, 50))
    _assert_passed(report)
    assert report.identity_id == "matrix_forms"
    assert any("n >= 2" in note for note in report.notes), f"Got notes {report.notes}"

    assert check_matrix_forms(tribonacci, (2, 30), forms=("u",)).identity_id == "matrix_form_12"
    assert check_matrix_forms(tribonacci, (2, 30), forms=("u",)).notes == ()

    report = check_matrix_forms(make_params(1, 2, 3, 1, 1, 0), (0, 30), forms=("shift",))
    _assert_passed(report)
    assert report.identity_id == "matrix_form_14"
    assert report.notes == ("sum-form skipped: t = 0",), f"Got notes {report.notes}"

    report = check_matrix_forms(make_params(-3, 8, 1, 4, -2, -5), (0, 1), forms=("u",))
    _assert_passed(report)
    assert report.notes == ("U-form needs n >= 2: no index checked",)


def test_check_matrix_quadratic(tribonacci):
    for p in (tribonacci, preset("padovan"), make_params(5, -2, 3, 1, 2, 1), make_params(2, 0, -1, -3, 4, 0)):
        _assert_passed(check_matrix_quadratic(p, (0, 40)))


def test_check_lemma9():
    report = check_lemma9(make_params(5, -2, 3, 1, 2, 1), (2, 100))
    _assert_passed(report)
    assert report.identity_id == "lemma_9"
    assert report.notes == ()

    report = check_lemma9(make_params(5, -2, 3, 1, 2, 1), (0, 1))
    _assert_passed(report)
    assert len(report.notes) == 1


def test_floating_checks(tribonacci):
    for p in (tribonacci, preset("padovan"), preset("narayana", 3), make_params(5, -2, 3, 1, 2, 1)):
        for check in (check_quad_approx, check_binet, check_quaternion_binet):
            report = check(p, (0, 40))
            _assert_passed(report)
            assert report.worst_residual <= 1e-8, f"{report.identity_id}: worst residual {report.worst_residual}"

    assert check_binet(tribonacci, (0, 5)).identity_id == "binet_v"
    assert check_quaternion_binet(tribonacci, (0, 5)).identity_id == "binet_quaternion"

    for check in (check_quad_approx, check_binet, check_quaternion_binet):
        with pytest.raises(DeltaNotPositive):
            check(DELTA_NONPOSITIVE, (0, 10))


def test_failing_tolerance(tribonacci):
    # a tolerance below rounding level must report failures rather than raise
    report = check_binet(tribonacci, (30, 60), tol=1e-30, abs_tol=1e-30)
    assert not report.passed
    assert report.status == "fail"
    assert report.worst_residual > 0.0
    n, detail = report.failures[0]
    assert 30 <= n <= 60
    assert "residual" in detail


def test_report_to_dict(tribonacci):
    data = check_cassini_v(tribonacci, (0, 3)).to_dict()
    assert data == {
        "identity_id": "cassini_v",
        "params": "V(0,0,1;1,1,1)",
        "range": [0, 3],
        "status": "pass",
        "worst_residual": 0.0,
        "failures": [],
        "notes": [],
        "seed": None,
    }


def test_pool_params():
    cfg = SuiteConfig(random_count=10, seed=3, params=[preset("tribonacci"), make_params(1, 2, 3, 1, 1, 1)])
    pool = pool_params(cfg)
    assert pool[0] == preset("tribonacci")
    assert pool[5] == make_params(1, 2, 3, 1, 1, 1), "Explicit sets come right after the presets"
    assert len(pool) == len(set(pool))
    assert 6 <= len(pool) <= 16
    for p in pool[6:]:
        assert all(-9 <= v <= 9 for v in p.seeds)
        assert all(-5 <= c <= 5 for c in p.coefficients)
        assert all(type(x) is int for x in p)

    assert pool_params(cfg) == pool, "Expected the same pool for the same seed"
    assert pool_params(SuiteConfig(random_count=0, presets=[])) == []


def test_run_suite_defaults(default_reports):
    assert default_reports, "Expected a non-empty report list"
    failed = [r for r in default_reports if not r.passed]
    assert not failed, f"Expected every check to pass, got {[(r.identity_id, r.params, r.failures[:1]) for r in failed]}"
    assert {r.identity_id for r in default_reports} == set(IDENTITY_IDS)
    assert all(r.seed == 20240501 for r in default_reports)

    keys = [(r.identity_id, tuple(r.params), r.index_range[0]) for r in default_reports]
    assert keys == sorted(keys), "Expected reports sorted by identity, parameters and range"

    for r in default_reports:
        if r.identity_id in ("quad_approx", "binet_v", "binet_quaternion"):
            assert discriminant(r.params.r, r.params.s, r.params.t) > 0


def test_run_suite_selection():
    assert run_suite(SuiteConfig(identities=[])) == []

    cfg = SuiteConfig(presets=["tribonacci"], random_count=0, identities=["cassini_u", "lemma_9"], n_hi=30)
    reports = run_suite(cfg)
    assert [r.identity_id for r in reports] == ["cassini_u", "lemma_9"]
    assert reports[0].index_range == (2, 30)
    assert all(r.seed is None for r in reports)

    cfg = SuiteConfig(presets=["tribonacci"], random_count=0, identities=["cassini_u"], n_hi=1)
    assert run_suite(cfg) == []


def test_run_suite_explicit_delta_gate():
    cfg = SuiteConfig(presets=[], random_count=0, params=[DELTA_NONPOSITIVE], identities=["cassini_v"])
    _assert_passed(run_suite(cfg)[0])

    cfg = SuiteConfig(presets=[], random_count=0, params=[DELTA_NONPOSITIVE], identities=["binet_v"])
    with pytest.raises(DeltaNotPositive):
        run_suite(cfg)


def test_run_suite_deterministic(default_reports):
    again = run_suite(SuiteConfig())
    assert [r.to_dict() for r in again] == [r.to_dict() for r in default_reports]

    threaded = run_suite(SuiteConfig(workers=4))
    assert [r.to_dict() for r in threaded] == [r.to_dict() for r in default_reports]
