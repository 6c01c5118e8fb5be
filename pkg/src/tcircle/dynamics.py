"""Rotation numbers and finite-order detection.

For a finite-order element the rotation number is an exactly computed reduced
fraction p/q whose denominator is the order, and the orbit of 0 visits the
circle in the same cyclic pattern as the rotation by p/q.  For everything
else only a certified estimate is available: the canonical-lift average
F^n(0)/n, which differs from the true rotation number by at most 1/n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dyadic import Dyadic, ZERO
from .element import CircleElement, identity
from .errors import DomainError, InvariantViolation

DEFAULT_CAP = 4096


@dataclass(frozen=True)
class InfiniteOrder:
    """The element provably has infinite order."""


@dataclass(frozen=True)
class Undetermined:
    """No conclusion up to the iteration cap."""

    cap: int


INFINITE = InfiniteOrder()


@dataclass(frozen=True)
class TorsionCertificate:
    """Verified order data: g^q = id, rotation number p/q, orbit of 0.

    The orbit is listed in dynamical order (0, g(0), g^2(0), ...); sorting it
    in [0, 1) and reindexing by j -> j*p mod q recovers the dynamical order,
    which pins down p.
    """

    g: CircleElement
    q: int
    p: int
    orbit: tuple

    def __post_init__(self):
        if len(self.orbit) != self.q or self.orbit[0] != ZERO:
            raise InvariantViolation("orbit does not match the claimed order")
        if self.q == 1:
            if self.p != 0:
                raise InvariantViolation("identity must have rotation number 0")
            return
        if not (0 < self.p < self.q) or gcd(self.p, self.q) != 1:
            raise InvariantViolation(f"rotation number {self.p}/{self.q} is not reduced")
        ordered = sorted(self.orbit)
        for j in range(self.q):
            if ordered[(j * self.p) % self.q] != self.orbit[j]:
                raise InvariantViolation("orbit cyclic order inconsistent with p/q")


def orbit_of_zero(g: CircleElement, cap: int = DEFAULT_CAP):
    """Iterate 0 under g and certify the order if the orbit closes.

    Returns a TorsionCertificate when g has finite order q <= cap, INFINITE
    when some g^q fixes 0 but is not the identity (a finite-order circle map
    with a fixed point is the identity), and Undetermined(cap) otherwise.
    """
    if cap < 1:
        raise DomainError("cap must be positive")
    orbit = [ZERO]
    x = ZERO
    for step in range(1, cap + 1):
        x = g(x)
        if x == ZERO:
            if g**step == identity():
                p = sorted(orbit).index(orbit[1]) if step > 1 else 0
                return TorsionCertificate(g, step, p, tuple(orbit))
            return INFINITE
        orbit.append(x)
    return Undetermined(cap)


def certificate(g: CircleElement, cap: int = DEFAULT_CAP) -> TorsionCertificate:
    """orbit_of_zero, raising DomainError unless g is certified torsion."""
    result = orbit_of_zero(g, cap)
    if isinstance(result, TorsionCertificate):
        return result
    if isinstance(result, InfiniteOrder):
        raise DomainError("element has infinite order")
    raise DomainError(f"order undetermined up to cap {cap}")


def exact_rotation_number(cert: TorsionCertificate) -> Fraction:
    return Fraction(cert.p, cert.q)


def estimate_rotation_number(g: CircleElement, n: int):
    """(F^n(0)/n, 1/n) with F the canonical lift; the error is at most 1/n."""
    if n < 1:
        raise DomainError("iteration count must be positive")
    v = ZERO
    for _ in range(n):
        v = g.lift(v)
    return v.as_fraction() / n, Fraction(1, n)


def order_of(g: CircleElement, cap: int = DEFAULT_CAP):
    """The order of g, INFINITE, or Undetermined(cap)."""
    result = orbit_of_zero(g, cap)
    if isinstance(result, TorsionCertificate):
        return result.q
    return result
