"""Shared helpers for the test suite: seeded samples of group elements."""

import random
from math import gcd

from tcircle import Dyadic, make_element, pseudo_rotation, random_element


def order_two_nonlinear():
    """An order-2 element whose orbit-successor arc has length 3/4.

    It maps [0, 3/4] onto [3/4, 1] with slopes 1/4 and 1/2 and is defined on
    [3/4, 1] by the inverse pieces, so squaring gives the identity while the
    arc [0, g(0)] has non-power-of-two length.
    """
    return make_element([("0", "3/4"), ("1/2", "7/8"), ("3/4", "1"), ("7/8", "3/2")])


def f_generator():
    """An infinite-order element fixing 0 (slopes 1/2, 1, 2)."""
    return make_element([("0", "0"), ("1/2", "1/4"), ("3/4", "1/2")])


def random_dyadic(rng: random.Random, max_exp: int = 10) -> Dyadic:
    e = rng.randint(0, max_exp)
    return Dyadic(rng.randrange(0, 1 << e), e)


def torsion_samples(count: int, qmax: int = 16, seed: int = 20260811, complexity: int = 3):
    """Seeded conjugated finite-order elements: (q, m, w, w * gamma_q^m * w^-1)."""
    rng = random.Random(seed)
    for _ in range(count):
        q = rng.randint(2, qmax)
        m = rng.choice([m for m in range(1, q) if gcd(m, q) == 1])
        w = random_element(rng.randrange(2**32), rng.randint(1, complexity))
        g = w * pseudo_rotation(q) ** m * w.inverse()
        yield q, m, w, g
