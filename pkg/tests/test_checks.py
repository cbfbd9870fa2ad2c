import inspect
from fractions import Fraction

import pytest

from coalescence.checks import bijection_checks, oracle_checks
from coalescence.core.report_processor import make_identity_report, process_verification_data, render_value
from coalescence.core.verifier import SUITE_NAMES, planned_checks, run_verification
from coalescence.errors import ParameterError


def _run(planned):
    return [(name, fn(**kwargs)) for name, fn, kwargs in planned]


def test_make_identity_report_keeps_first_counterexample():
    evaluations = [
        ({"n": 1}, Fraction(1, 2), Fraction(1, 2)),
        ({"n": 2}, Fraction(1, 3), Fraction(2, 3)),
        ({"n": 3}, 1, 2),
    ]
    report = make_identity_report("demo", "identities", "1 <= n <= 3", evaluations, {"extra": 1})
    assert not report.passed
    assert (report.points, report.failures) == (3, 2)
    assert report.counterexample.parameters == {"n": 2}
    assert (report.counterexample.expected, report.counterexample.actual) == ("1/3", "2/3")
    assert report.details == {"extra": 1}


def test_make_identity_report_passes_on_agreement():
    report = make_identity_report("demo", "oracle", "empty", iter(()))
    assert report.passed and report.points == 0 and report.counterexample is None


def test_render_value():
    assert render_value({1: Fraction(1, 2), 3: 0}) == "{1: 1/2, 3: 0}"
    assert render_value((Fraction(2, 4), 5)) == "(1/2, 5)"


def test_process_verification_data_summarizes():
    good = make_identity_report("a", "identities", "g", [({}, 1, 1)])
    bad = make_identity_report("b", "identities", "g", [({}, 1, 2), ({}, 3, 3)])
    result = process_verification_data("identities", 4, [good, bad])
    assert not result.passed
    assert result.summary.total_checks == 2
    assert result.summary.passed_checks == 1
    assert result.summary.total_points == 3


def test_planned_checks_validation():
    assert "all" in SUITE_NAMES
    with pytest.raises(ParameterError):
        planned_checks("nonsense")
    with pytest.raises(ParameterError):
        planned_checks("identities", n_max=0)


def test_all_is_the_union_of_the_suites():
    names = [name for name, _, _ in planned_checks("all", 4)]
    expected = [
        name
        for suite in ("identities", "bijections", "oracle")
        for name, _, _ in planned_checks(suite, 4)
    ]
    assert names == expected
    assert len(names) == len(set(names))


def test_identity_and_formula_checks_pass_on_small_grids():
    for name, report in _run(planned_checks("identities", 6)):
        assert report.passed, name
        assert report.points > 0, name


def test_bijection_checks_pass_on_small_grids():
    planned = [
        (name, fn, kwargs if name != "random_roundtrips" else {**kwargs, "samples": 300})
        for name, fn, kwargs in bijection_checks.bijection_checks(4)
    ]
    for name, report in _run(planned):
        assert report.passed, name
        assert report.points > 0, name


def test_full_roundtrip_details():
    report = bijection_checks.check_full_roundtrip(4)
    assert report.passed
    assert report.details["roundtrips"] > 0


def test_oracle_checks_pass_on_small_grids():
    planned = [entry for entry in oracle_checks.oracle_checks(5) if entry[0] != "monte_carlo"]
    for name, report in _run(planned):
        assert report.passed, name


def test_monte_carlo_check_with_few_samples():
    report = oracle_checks.check_monte_carlo(samples=20000, seed=7)
    assert report.passed
    assert report.points == len(oracle_checks.MONTE_CARLO_CASES)
    assert set(report.details) == {"50,2", "101,3"}


def test_run_verification_keeps_planning_order():
    report = run_verification("identities", 4)
    assert report.passed
    assert report.suite == "identities" and report.n_max == 4
    assert [r.name for r in report.reports] == [name for name, _, _ in planned_checks("identities", 4)]
    assert report.summary.failed_checks == 0


def test_run_verification_rejects_unknown_suite():
    with pytest.raises(ParameterError):
        run_verification("everything")


def _effective_bounds(suite):
    bounds = {}
    for name, fn, kwargs in planned_checks(suite):
        defaults = {
            key: parameter.default
            for key, parameter in inspect.signature(fn).parameters.items()
            if parameter.default is not inspect.Parameter.empty
        }
        bounds[name] = {**defaults, **kwargs}
    return bounds


def test_default_bounds_cover_the_acceptance_grids():
    identities = _effective_bounds("identities")
    assert identities["lemma_identity_1"]["n_max"] >= 12
    assert identities["lemma_identity_2"]["p_abs"] >= 12
    assert identities["lemma_identity_3"]["k_max"] >= 10
    assert identities["lemma_identity_4"]["k_max"] >= 10
    assert identities["a_decomposition"]["n_max"] >= 20
    assert identities["b_decomposition"]["n_max"] >= 20
    assert identities["route_agreement"]["n_max"] >= 30
    assert identities["special_cases"]["n_max"] >= 50
    assert identities["separation_complement"]["n_max"] >= 30

    bijections = _effective_bounds("bijections")
    assert bijections["full_roundtrip"]["n_max"] >= 6
    assert bijections["step_roundtrips"]["n_max"] >= 6
    assert bijections["random_roundtrips"]["samples"] >= 10_000

    oracle = _effective_bounds("oracle")
    assert oracle["oracle_coalescence"]["n_max"] >= 9
    assert oracle["monte_carlo"]["samples"] >= 1_000_000


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["identities", "bijections", "oracle"])
def test_suites_pass_at_default_bounds(suite):
    for name, report in _run(planned_checks(suite)):
        assert report.passed, f"{name}: {report.counterexample}"
        assert report.points > 0, name
