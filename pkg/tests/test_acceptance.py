"""Every acceptance criterion at full scale, within its time limit.

Each run prints one PASS/FAIL line; ``pytest -s`` shows them live, and a
summary block is printed at the end of the session.
"""

import pytest

from hyperprimes.acceptance import CRITERIA

_lines: list[str] = []


@pytest.fixture(scope="module", autouse=True)
def _summary():
    yield
    print("\nacceptance summary")
    for line in _lines:
        print(line)


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"c{c.number:02d}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    result = criterion.run("full")
    with capsys.disabled():
        print(f"\n{result.line}")
    _lines.append(result.line)
    assert result.passed, result.detail
