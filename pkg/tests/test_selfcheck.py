import pytest

from qblocks.selfcheck import SUITE_NAMES, run_selfcheck
from qblocks.zigzag import FAULT_SHIFT


def test_default_run_passes():
    report = run_selfcheck(seed=0, cases=8)
    assert report.ok
    assert [s.name for s in report.suites] == list(SUITE_NAMES)
    assert all(s.cases == 8 for s in report.suites)


def test_vacuous_run_lists_suites():
    report = run_selfcheck(seed=5, cases=0)
    assert report.ok
    lines = report.text_lines()
    assert lines[0] == "selfcheck seed=5 cases=0"
    for name in SUITE_NAMES:
        assert f"pass {name}: 0 cases" in lines
    assert lines[-1] == f"result: ok ({len(SUITE_NAMES)} suites)"


def test_fault_hook_names_the_relation():
    report = run_selfcheck(seed=0, cases=3, zigzag_fault=FAULT_SHIFT)
    assert not report.ok
    broken = {s.name: s for s in report.suites}["zigzag-relations"]
    assert not broken.ok
    assert any("expected Z" in msg and "*Y" in msg or "*X" in msg
               for msg in broken.failures)
    joined = "\n".join(report.text_lines())
    assert "FAIL zigzag-relations" in joined
    assert "expected" in joined


def test_fault_does_not_leak_into_other_suites():
    report = run_selfcheck(seed=0, cases=3, zigzag_fault=FAULT_SHIFT)
    for suite in report.suites:
        if suite.name != "zigzag-relations":
            assert suite.ok, suite


def test_reports_are_reproducible():
    first = run_selfcheck(seed=11, cases=6)
    second = run_selfcheck(seed=11, cases=6)
    assert first == second
    assert first.text_lines() == second.text_lines()
    assert first.to_json() == second.to_json()


def test_json_shape():
    report = run_selfcheck(seed=2, cases=1)
    payload = report.to_json()
    assert payload["seed"] == 2
    assert payload["cases"] == 1
    assert payload["ok"] is True
    assert [row["name"] for row in payload["suites"]] == list(SUITE_NAMES)
    assert all(row["failures"] == [] for row in payload["suites"])


def test_negative_cases_rejected():
    with pytest.raises(ValueError):
        run_selfcheck(seed=0, cases=-1)
