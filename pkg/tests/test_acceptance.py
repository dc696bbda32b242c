"""Acceptance sweep: one pass/fail line per check (run with -s to see them)."""

import pytest

from simplicial_codes import acceptance


def _collect():
    cases = []
    for number, fn in sorted(acceptance.CRITERIA.items()):
        for result in fn():
            cases.append(pytest.param(result, id=f"C{number}:{result.name}"))
    return cases


@pytest.mark.parametrize("result", _collect())
def test_criterion(result):
    print(result.line())
    assert result.passed, result.detail
