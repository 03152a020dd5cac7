"""Shared fixtures: memoized SR graphs and spectra.

Spectra of the same SR(m,n) are needed by many tests and by several
acceptance criteria; computing each once per session keeps the suite
inside its runtime budget without changing any assertion.  The terminal
summary hook replays the one-line-per-criterion acceptance record, which
default capture would otherwise swallow.
"""

import sys
from functools import lru_cache

import pytest

from rooklab.graphs import sr_graph
from rooklab.linalg import integral_spectrum


@lru_cache(maxsize=None)
def _graph(m, n):
    return sr_graph(m, n)


@lru_cache(maxsize=None)
def _spectrum(m, n):
    return integral_spectrum(_graph(m, n))


@pytest.fixture(scope="session")
def sr():
    return _graph


@pytest.fixture(scope="session")
def sr_spectrum():
    return _spectrum


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.line(line)
