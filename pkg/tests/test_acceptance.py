"""One pass/fail line per acceptance criterion.

The lines are printed as each criterion runs (visible with ``-s``) and
collected into an "acceptance criteria" section of the terminal summary.
"""

import pytest

from lperm.acceptance import CRITERIA, TIME_LIMITS

from conftest import ACCEPTANCE_LINES

SEED = 42


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = CRITERIA[number](SEED)
    limit = TIME_LIMITS.get(number)
    if limit is not None and result.seconds >= limit:
        result.passed = False
        result.failures.append(f"took {result.seconds:.2f}s, limit {limit}s")
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, "\n".join([line] + result.failures[:5])
