"""Acceptance criteria 1-9, one test each; every test reports a PASS/FAIL line."""

import pytest

from skewsp import acceptance


@pytest.mark.parametrize("number", range(1, 10), ids=[f"criterion_{k}" for k in range(1, 10)])
def test_criterion(number, acceptance_log):
    try:
        result = acceptance.CRITERIA[number - 1]()
    except Exception as exc:
        acceptance_log.append(f"criterion {number}: FAIL  raised {exc!r}")
        raise
    print(result.line())
    acceptance_log.append(result.line())
    assert result.passed, result.details
