import sys
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from ecpsl.clopen import ClopenSet
from ecpsl.hat import E, TOP, ZERO, Tuple

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

HALF = ClopenSet([(0, Fraction(1, 2))])
UPPER = ClopenSet([(Fraction(1, 2), 1)])
FULL = ClopenSet.full()


def iv(*pairs):
    """ClopenSet from ``(lo, hi)`` pairs given as strings or numbers."""
    return ClopenSet([(Fraction(lo), Fraction(hi)) for lo, hi in pairs])


@st.composite
def clopens(draw, max_rank=6):
    k = draw(st.integers(0, max_rank))
    return ClopenSet.from_mask(draw(st.integers(0, (1 << (1 << k)) - 1)), k)


def hats(max_rank=3):
    return st.one_of(st.just(TOP), st.just(E), st.just(ZERO), clopens(max_rank))


def skeletal_hats(max_rank=3):
    return hats(max_rank).filter(lambda h: h != E)


@st.composite
def tuples(draw, n=None, max_level=4, max_rank=3, comps=None):
    if n is None:
        n = draw(st.integers(1, max_level))
    if comps is None:
        comps = hats(max_rank)
    return Tuple(n, tuple(draw(comps) for _ in range(n)))


@st.composite
def tuple_pairs(draw, max_level=4, max_rank=3):
    n = draw(st.integers(1, max_level))
    return draw(tuples(n=n, max_rank=max_rank)), draw(tuples(n=n, max_rank=max_rank))


@pytest.fixture
def small_pool():
    """The four-element subalgebra {0, [0,1/2), [1/2,1), full} of A, plus T."""
    return [ZERO, HALF, UPPER, FULL, TOP]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
