"""Unit tests for the suite runner and table rendering."""

import json
import threading
import time

import pytest

from trigbase.core import suites
from trigbase.core.errors import CheckSkipped, NotDivisible
from trigbase.core.report import CheckReport, CheckStatus
from trigbase.core.suites import run_checks, run_suite, suite_names
from trigbase.utils.render import parse_json_table, render, render_csv, render_plain


def _passing(name, delay=0.0):
    def check():
        time.sleep(delay)
        report = CheckReport(name)
        report.expect_equal("x", 1, 1)
        return report.finish()
    return name, check


def _failing(name):
    def check():
        report = CheckReport(name, anchor="always fails")
        report.expect_equal("x", 1, 2)
        return report.finish()
    return name, check


class TestRunChecks:
    """Tests for the parallel runner."""

    def test_results_keep_order(self):
        checks = [_passing(f"c{k}", delay=0.02 * (5 - k)) for k in range(5)]
        reports = run_checks(checks, workers=4)
        assert [r.name for r in reports] == ["c0", "c1", "c2", "c3", "c4"]

    def test_uses_threads(self):
        seen = set()

        def check():
            seen.add(threading.get_ident())
            time.sleep(0.05)
            return CheckReport("t")

        run_checks([("a", check), ("b", check), ("c", check)], workers=3)
        assert len(seen) > 1

    def test_failure_is_a_report(self):
        reports = run_checks([_passing("ok"), _failing("bad")], workers=2)
        assert reports[0].passed
        assert reports[1].status is CheckStatus.FAILED
        assert reports[1].failures[0].where == "x"

    def test_domain_error_becomes_failure(self):
        def check():
            raise NotDivisible("remainder 1")

        report = run_checks([("div", check)])[0]
        assert report.status is CheckStatus.FAILED
        assert report.failures[0].where == "NotDivisible"

    def test_value_error_is_a_failure(self):
        def check():
            raise ValueError("size too small")

        report = run_checks([("small", check)])[0]
        assert report.status is CheckStatus.FAILED
        assert report.failures[0].where == "ValueError"

    def test_unexpected_error_is_a_failure(self):
        def check():
            raise TypeError("unsupported operand")

        report = run_checks([("typo", check)])[0]
        assert report.status is CheckStatus.FAILED
        assert report.failures[0].where == "TypeError"

    def test_skipped_is_not_tested(self):
        def check():
            raise CheckSkipped("needs size >= 2")

        report = run_checks([("small", check)])[0]
        assert report.status is CheckStatus.NOT_TESTED
        assert report.anchor == "needs size >= 2"

    def test_bad_workers(self):
        with pytest.raises(ValueError):
            run_checks([], workers=0)


class TestRunSuite:
    """Tests for named suites."""

    def test_names(self):
        assert suite_names() == ["chebyshev", "riordan", "basechange", "fourier", "spread"]

    def test_single_suite(self):
        results = run_suite("riordan", 6, workers=2)
        assert [r.suite for r in results] == ["riordan"]
        assert results[0].passed
        assert results[0].failed == []

    def test_all_suites(self):
        results = run_suite("all", 5, workers=4)
        assert [r.suite for r in results] == suite_names()
        assert all(r.passed for r in results)

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nope", 5)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            run_suite("spread", 0)

    def test_failing_check_is_reported(self, mocker):
        mocker.patch.dict(suites.SUITES, {"spread": lambda order: [_failing("broken")]})
        result = run_suite("spread", 5)[0]
        assert not result.passed
        assert [r.name for r in result.failed] == ["broken"]

    def test_raising_check_fails_the_suite(self, mocker):
        def check():
            raise ValueError("matrix size must be >= 2, got 1")

        mocker.patch.dict(suites.SUITES, {"spread": lambda order: [_passing("ok"), ("raises", check)]})
        result = run_suite("spread", 5)[0]
        assert not result.passed
        assert [r.name for r in result.failed] == ["raises"]

    def test_skipped_check_keeps_the_suite_passing(self, mocker):
        def check():
            raise CheckSkipped("needs size >= 2")

        mocker.patch.dict(suites.SUITES, {"spread": lambda order: [_passing("ok"), ("skipped", check)]})
        result = run_suite("spread", 5)[0]
        assert result.passed
        assert result.reports[1].status is CheckStatus.NOT_TESTED

    def test_spread_at_order_one(self):
        result = run_suite("spread", 1)[0]
        assert result.passed
        assert [r.status for r in result.reports if r.name == "spread_riordan_check"] == [CheckStatus.PASSED]


class TestRender:
    """Tests for the plain, csv and json renderings."""

    ROWS = [[1, None, -1], [None, 10, None]]

    def test_plain(self):
        assert render_plain(self.ROWS) == "1      -1\n   10\n"

    def test_plain_header(self):
        assert render_plain([[1, 2]], header=["a", "bb"]).splitlines()[0] == "a  bb"

    def test_csv(self):
        assert render_csv(self.ROWS) == "1,0,-1\n0,10,0\n"

    def test_json(self):
        text = render(self.ROWS, "json", name="T")
        payload = json.loads(text)
        assert payload["object"] == "T"
        assert payload["rows"][0] == ["1", "0", "-1"]
        assert parse_json_table(text) == [[1, 0, -1], [0, 10, 0]]

    def test_json_big_numbers(self):
        big = 3**200
        assert parse_json_table(render([[big]], "json")) == [[big]]

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render(self.ROWS, "xml")
