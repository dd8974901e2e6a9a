import random

import pytest
from hypothesis import strategies as st

from algcoh.exactalg import UniPoly


def polys(max_degree=6, lo=-9, hi=9, nonzero=False):
    coeffs = st.lists(
        st.fractions(min_value=lo, max_value=hi, max_denominator=4),
        min_size=1 if nonzero else 0,
        max_size=max_degree + 1,
    ).map(UniPoly)
    if nonzero:
        coeffs = coeffs.filter(lambda p: not p.is_zero())
    return coeffs


@pytest.fixture
def rng():
    return random.Random(20261015)


# acceptance criteria register a one-line verdict here; printed after the run
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
