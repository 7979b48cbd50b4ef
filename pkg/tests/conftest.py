import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bielliptic.curve import BiellipticCurve
from bielliptic.qalg import resultant

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

CURVE_A = (0, 0, 1, -6, 5, 0)
CURVE_B = (1, -1, 0, 2, -3, 0)
CURVE_C = (1, -2, 3, -4, 3, 0)


def small_curves(lo=-3, hi=3):
    """Nonsingular curves with small integer coefficients."""
    ints = st.integers(lo, hi)
    return st.tuples(ints, ints, ints, ints, ints, ints).map(
        lambda k: BiellipticCurve(*k)).filter(lambda c: c.nonsingular)


def random_curves(n, seed=2024, lo=-4, hi=4, shared_root=None):
    """n nonsingular curves; shared_root=True/False filters on Res(tau, tau_check)."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        c = BiellipticCurve(*[rng.randint(lo, hi) for _ in range(6)])
        if not c.nonsingular:
            continue
        if shared_root is not None:
            shares = resultant(c.tau, c.tau_check) == 0
            if shares != shared_root:
                continue
        out.append(c)
    return out


@pytest.fixture
def curve_a():
    return BiellipticCurve(*CURVE_A)


@pytest.fixture
def curve_b():
    return BiellipticCurve(*CURVE_B)


@pytest.fixture
def curve_c():
    return BiellipticCurve(*CURVE_C)


def F(x):
    return Fraction(x)
