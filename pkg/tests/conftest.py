import itertools

import pytest
from hypothesis import strategies as st

from ihquot.poincare import PoincarePolynomial

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


def P(*coeffs, truncation=None):
    """``P(1, 2, 1)`` is ``1 + 2t^2 + t^4``."""
    return PoincarePolynomial.from_list(coeffs, truncation=truncation)


def admissible(weights):
    """Zero level is nonempty and of positive dimension."""
    return (len(weights) >= 2
            and not (all(w > 0 for w in weights) or all(w < 0 for w in weights)))


def weight_multisets(values, max_len, min_len=1):
    for size in range(min_len, max_len + 1):
        for ms in itertools.combinations_with_replacement(values, size):
            if admissible(ms):
                yield list(ms)


weight_lists = (st.lists(st.integers(-3, 3), min_size=1, max_size=9)
                .filter(admissible))


@pytest.fixture
def small_weight_lists():
    return list(weight_multisets([-2, -1, 0, 1, 2], 5, min_len=2))
