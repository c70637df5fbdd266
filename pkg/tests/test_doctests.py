"""Run the usage examples embedded in the library docstrings."""

import doctest

import pytest

from bstat import bijection, core, distributions, polynomial, statistics


@pytest.mark.parametrize(
    "module", [core, statistics, polynomial, bijection, distributions]
)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.attempted > 0
    assert result.failed == 0
