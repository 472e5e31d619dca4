"""One check per acceptance criterion; each prints its own pass/fail line."""

import pytest

from grothwitt import acceptance


@pytest.mark.parametrize("number", sorted(acceptance.CHECKS))
def test_criterion(number, capsys):
    result = acceptance.run(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
