import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

# open unit interval, modest denominators so exact sums stay cheap
unit_fractions = st.fractions(
    min_value=Fraction(1, 1000), max_value=Fraction(999, 1000), max_denominator=1000
)


def naive_shots(q):
    """Greedy shooter that tracks both players' win probabilities directly."""
    q = Fraction(q)
    p = 1 - q
    alice = bob = Fraction(0)
    alive = Fraction(1)  # probability nobody has been hit yet
    while True:
        shot = -1 if alice > bob else 1
        if shot == 1:
            alice += alive * p
        else:
            bob += alive * p
        alive *= q
        yield shot


def naive_greedy(q, length):
    return list(itertools.islice(naive_shots(q), length))


def morphism_prefix(length):
    word = [1]
    while len(word) < length:
        word = [c for x in word for c in (x, -x)]
    return word[:length]


@pytest.fixture
def table1():
    return [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1]


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        label = (item.function.__doc__ or item.name).strip()
        _acceptance.append(("PASS" if report.passed else "FAIL", label))


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for status, label in _acceptance:
            terminalreporter.write_line(f"{status}  criterion {label}")
