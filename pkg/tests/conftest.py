import pytest


@pytest.fixture
def python_kernel():
    """Route whole-group sums through the pure-Python backend for one test."""
    from bstat import _kernels

    previous = _kernels.use("python")
    try:
        yield
    finally:
        _kernels.use(previous)


@pytest.fixture
def broken_flag_descent(monkeypatch):
    """Mutant: fdes forgets the first-letter sign contribution."""
    from bstat import core

    monkeypatch.setattr("bstat.statistics.fdes", lambda w: 2 * core.descent_number(w))


@pytest.fixture
def integer_letter_ranking(monkeypatch):
    """Mutant: rank letters by plain integer value instead of the letter order."""
    monkeypatch.setattr("bstat.core.sort_letters", sorted)
    monkeypatch.setattr("bstat.bijection.sort_letters", sorted)
