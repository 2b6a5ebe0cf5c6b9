from fractions import Fraction

import pytest
from hypothesis import strategies as st

from orthohyp.cases import get_case
from orthohyp.invariant_form import compute_form
from orthohyp.monodromy import build_triple

# results of the acceptance criteria, printed at the end of the session
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line("criterion %d: %s  %s" % (n, "PASS" if ok else "FAIL", title))


def fractions(max_num=20, max_den=6):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def nonzero_fractions(max_num=20, max_den=6):
    return fractions(max_num, max_den).filter(bool)


@pytest.fixture(scope="session")
def triples():
    return {c: build_triple(get_case(c).params) for c in range(1, 15)}


@pytest.fixture(scope="session")
def forms(triples):
    return {c: compute_form(t) for c, t in triples.items()}
