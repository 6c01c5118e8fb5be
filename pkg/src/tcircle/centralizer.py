"""The centralizer of a finite cyclic subgroup, as a short exact sequence.

For C = <g> of order q >= 2 the centralizer Z C sits in an exact sequence

    1 -> C -> Z C -> T -> 1

realized here by explicit exact maps.  Let g^s be the power sending 0 to its
orbit successor a, and let G be its canonical lift, so G^q is exactly the
unit translation.  An increasing PL bijection Phi of the line is built from
the canonical dyadic PL map psi: [0,1] -> [0,a] by the rule
Phi(x + 1) = G(Phi(x)); it intertwines the unit translation with G.  Then

    project(h) descends Phi^-1 o H o Phi     (H the canonical lift of h)
    section(h0) descends Phi o H0 o Phi^-1

and both land in the group because all ingredients are dyadic PL.  A plain
linear rescaling of [0, a] would generally not have power-of-two slope, which
is why psi is a canonical dyadic PL map instead.

The section is only a set-theoretic splitting; `section_defect` measures its
failure to be multiplicative as an exponent of g.
"""

from __future__ import annotations

from .dyadic import Dyadic, ZERO, ONE
from .dynamics import TorsionCertificate
from .element import CircleElement, IntervalMap, canonical_dpl, identity, _from_lift_nodes
from .errors import DomainError, InvariantViolation


class _LiftMap:
    """Canonical lift of a circle element, with exact functional inverse."""

    def __init__(self, g: CircleElement):
        self.g = g
        self._ginv = g.inverse()
        # The functional inverse of the canonical lift and the canonical lift
        # of the inverse differ by an integer constant.
        off = self._ginv.lift(g.lift(ZERO))
        if not off.is_integer():
            raise InvariantViolation("lift inverse offset is not an integer")
        self._off = -off.num

    def at(self, x: Dyadic) -> Dyadic:
        return self.g.lift(x)

    def inv_at(self, y: Dyadic) -> Dyadic:
        return self._ginv.lift(y) + self._off

    def breaks_in(self, lo: Dyadic, hi: Dyadic):
        out = []
        for k in range(lo.floor(), hi.floor() + 1):
            for bx, _ in self.g.breakpoints:
                x = bx + k
                if lo <= x <= hi:
                    out.append(x)
        return out


class _InvView:
    """The inverse of another exact PL line map, by delegation."""

    def __init__(self, inner):
        self.inner = inner

    def at(self, x):
        return self.inner.inv_at(x)

    def inv_at(self, y):
        return self.inner.at(y)

    def breaks_in(self, lo, hi):
        inner = self.inner
        return [inner.at(b) for b in inner.breaks_in(inner.inv_at(lo), inner.inv_at(hi))]


class _UnrollMap:
    """The equivariant unrolling Phi: increasing PL bijection of the line
    with Phi|[0,1] = psi and Phi(x + 1) = G(Phi(x))."""

    def __init__(self, ctx: "CentralizerContext"):
        self.ctx = ctx

    def _deck_pow(self, n: int, y: Dyadic) -> Dyadic:
        # G^(kq + r) = (unit translation)^k o G^r
        k, r = divmod(n, self.ctx.q)
        for _ in range(r):
            y = self.ctx.deck.at(y)
        return y + k

    def at(self, x: Dyadic) -> Dyadic:
        n = x.floor()
        return self._deck_pow(n, self.ctx.psi.at(x - n))

    def inv_at(self, y: Dyadic) -> Dyadic:
        m = y.floor()
        base = m * self.ctx.q
        for r in range(self.ctx.q):
            if y < self._deck_pow(base + r + 1, ZERO):
                n = base + r
                return self.ctx.psi.inv_at(self._deck_pow(-n, y)) + n
        raise InvariantViolation("deck orbit failed to bracket a point")

    def breaks_in(self, lo: Dyadic, hi: Dyadic):
        ctx = self.ctx
        out = []
        for n in range(lo.floor(), hi.floor() + 1):
            block = [Dyadic(n)]
            for px, _ in ctx.psi.nodes[1:-1]:
                block.append(px + n)
            r = n % ctx.q
            if r:
                for bx, _ in ctx.power_of_successor(r).breakpoints:
                    if ZERO < bx < ctx.a:
                        block.append(ctx.psi.inv_at(bx) + n)
            out.extend(b for b in block if lo <= b <= hi)
        return out


def _descend(maps) -> CircleElement:
    """Composite of exact PL line maps, descended to a circle element.

    The maps are given in application order.  Candidate breakpoints are the
    pullbacks into [0,1] of every factor's breaks over the relevant range; the
    composite is affine between consecutive candidates, so sampling there is
    exact.  The composite must commute with the unit translation.
    """
    xs = {ZERO, ONE}
    lo, hi = ZERO, ONE
    prefix = []
    for m in maps:
        for b in m.breaks_in(lo, hi):
            x = b
            for pm in reversed(prefix):
                x = pm.inv_at(x)
            if ZERO < x < ONE:
                xs.add(x)
        lo, hi = m.at(lo), m.at(hi)
        prefix.append(m)
    nodes = []
    for x in sorted(xs):
        y = x
        for m in maps:
            y = m.at(y)
        nodes.append((x, y))
    if nodes[-1][1] != nodes[0][1] + 1:
        raise InvariantViolation("conjugated lift does not commute with unit translation")
    return _from_lift_nodes(nodes)


class CentralizerContext:
    """Exact data for the centralizer sequence of C = <g>, order q >= 2.

    Attributes: generator g, rotation data (p, q, s) with s*p = 1 mod q, the
    orbit successor a = g^s(0), the deck lift G of g^s (with G(0) = a and
    G^q = unit translation, machine-checked), and the canonical PL
    reparametrization psi: [0,1] -> [0,a] seeding the unrolling.
    """

    def __init__(self, cert: TorsionCertificate):
        if cert.q < 2:
            raise DomainError("centralizer context requires order >= 2")
        self.g = cert.g
        self.q = cert.q
        self.p = cert.p
        self.s = pow(self.p, -1, self.q)
        self.successor = self.g**self.s
        self.a = self.successor(ZERO)
        if not (ZERO < self.a < ONE):
            raise InvariantViolation("orbit successor of 0 must lie in (0, 1)")
        self.psi: IntervalMap = canonical_dpl((ZERO, ONE), (ZERO, self.a))
        self.deck = _LiftMap(self.successor)
        self._successor_powers = [identity()]
        for _ in range(self.q - 1):
            self._successor_powers.append(self._successor_powers[-1] * self.successor)
        if self._successor_powers[-1] * self.successor != identity():
            raise InvariantViolation("successor power has wrong order")
        v = ZERO
        for _ in range(self.q):
            v = self.deck.at(v)
        if v != ONE:
            raise InvariantViolation("deck lift does not wrap to the unit translation")

    def power_of_successor(self, r: int) -> CircleElement:
        return self._successor_powers[r % self.q]


def make_context(cert: TorsionCertificate) -> CentralizerContext:
    return CentralizerContext(cert)


def is_in_centralizer(ctx: CentralizerContext, h: CircleElement) -> bool:
    return h * ctx.g == ctx.g * h


def project(ctx: CentralizerContext, h: CircleElement) -> CircleElement:
    """The quotient-circle action of a centralizer element, as an element of T.

    Exactness guard: the canonical lifts of commuting circle maps commute on
    the nose (their commutator is an integer translation with translation
    number zero), and this is recomputed rather than assumed.
    """
    if not is_in_centralizer(ctx, h):
        raise DomainError("element does not commute with the subgroup generator")
    lift = _LiftMap(h)
    defect = lift.at(ctx.deck.at(ZERO)) - ctx.deck.at(lift.at(ZERO))
    if defect != ZERO:
        raise InvariantViolation(f"lift commutation defect {defect} should be 0")
    unroll = _UnrollMap(ctx)
    return _descend([unroll, lift, _InvView(unroll)])


def section(ctx: CentralizerContext, h0: CircleElement) -> CircleElement:
    """A centralizer element projecting exactly onto h0.

    Conjugating the canonical lift of h0 by the unrolling yields a line map
    that commutes with the deck lift, hence descends to an element commuting
    with g; project then recovers h0 on the nose.
    """
    unroll = _UnrollMap(ctx)
    return _descend([_InvView(unroll), _LiftMap(h0), unroll])


def section_defect(ctx: CentralizerContext, h1: CircleElement, h2: CircleElement) -> int:
    """The exponent k with section(h1 * h2) = section(h1) * section(h2) * g^k."""
    lhs = section(ctx, h1 * h2)
    base = section(ctx, h1) * section(ctx, h2)
    found = [k for k in range(ctx.q) if base * ctx.g**k == lhs]
    if len(found) != 1:
        raise InvariantViolation("section defect is not a unique power of g")
    return found[0]
