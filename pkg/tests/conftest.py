import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from spinorlab.embed import QubitState
from spinorlab.fock import FockState
from spinorlab.scalars import GaussianRational

settings.register_profile(
    "spinorlab", deadline=None, max_examples=30, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("spinorlab")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 6))
gaussians = st.builds(GaussianRational, rationals, rationals)


@st.composite
def fock_states(draw, modes=None, min_modes=1, max_modes=6, parity=None, real=False):
    N = modes if modes is not None else draw(st.integers(min_modes, max_modes))
    masks = range(1 << N)
    if parity is not None:
        masks = [m for m in masks if m.bit_count() % 2 == parity]
    coeff = rationals if real else gaussians
    terms = draw(st.dictionaries(st.sampled_from(list(masks)), coeff, max_size=10))
    return FockState(N, terms)


@st.composite
def qubit_states(draw, n=4, real=False):
    coeff = rationals if real else gaussians
    return QubitState(n, tuple(draw(st.lists(coeff, min_size=1 << n, max_size=1 << n))))


@st.composite
def antisymmetric(draw, N):
    M = [[Fraction(0)] * N for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            v = draw(rationals)
            M[i][j], M[j][i] = v, -v
    return M


@pytest.fixture
def rng():
    return random.Random(20261016)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
