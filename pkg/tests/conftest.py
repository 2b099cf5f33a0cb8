import os
import sys
from fractions import Fraction

TESTS_DIR = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(TESTS_DIR)
SRC = os.path.join(ROOT, "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

from thetadissect.cyclotomic import CycloNum, euler_phi  # noqa: E402
from thetadissect.laurent import LaurentSeries, Monomial, ScaledMonomial  # noqa: E402
from thetadissect.theta import ThetaArgs  # noqa: E402


def make_series(entries, validity, order=1):
    """entries: {(p, q): rational or CycloNum}."""
    pairs = []
    for (p, q), c in entries.items():
        if not isinstance(c, CycloNum):
            c = CycloNum.from_rational(Fraction(c), order)
        pairs.append((Monomial(p, q), c))
    return LaurentSeries.make(pairs, validity, order)


def plain_theta_args(order=1):
    """Arguments (a, b) of the plain kernel f(a, b)."""
    return ThetaArgs(
        ScaledMonomial.make(1, 1, 0, order),
        ScaledMonomial.make(1, 0, 1, order),
    )


def rand_cyclo(rng, order, span=9):
    phi = euler_phi(order)
    return CycloNum(
        order,
        tuple(Fraction(rng.randint(-span, span), rng.randint(1, span)) for _ in range(phi)),
    )
