import pytest
from hypothesis import strategies as st

from ivfuzzy.algebra import godel_chain, lukasiewicz_chain
from ivfuzzy.fuzzy import IVFuzzySet
from ivfuzzy.interval import IntervalNumber

D = 20


@st.composite
def intervals(draw, den=D):
    lo = draw(st.integers(0, den))
    hi = draw(st.integers(lo, den))
    return IntervalNumber(lo, hi, den)


def iv(lo, hi=None):
    return IntervalNumber.of(lo, hi)


def example_set(I, n, inside=(0.7, 0.8), outside=(0.3, 0.4)):
    """[0.7,0.8] on I, [0.3,0.4] off I."""
    return IVFuzzySet.indicator(I, n, iv(*inside), iv(*outside))


@pytest.fixture
def g3():
    return godel_chain(3)


@pytest.fixture
def l3():
    return lukasiewicz_chain(3)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            for name, value in getattr(rep, "user_properties", []):
                if name == "criterion" and rep.when == "call":
                    lines.append((value[0], f"criterion {value[0]:>2}: {'PASS' if rep.passed else 'FAIL'}  {value[1]}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
