"""Dyadic piecewise-linear circle homeomorphisms and interval maps.

A circle element is stored through its canonical lift F: the finite list of
pairs (x, F(x)) at the breakpoints in [0, 1), anchored at x = 0 with
F(0) in [0, 1), affine between consecutive breakpoints, closed by the segment
to (x_0 + 1, F(0) + 1), and extended by F(x + 1) = F(x) + 1.  All breakpoints
are dyadic and every segment slope is an integer power of two, so group
membership is a structural property of the data.

The representation is normalized (no interior breakpoint where the slope is
unchanged), which makes equality of circle maps equality of tuples.
"""

from __future__ import annotations

import bisect
import json
import random

from .dyadic import Dyadic, ZERO, ONE, HALF, as_dyadic, binary_parts, pow2_ratio
from .errors import InvalidElementError, DomainError, InvariantViolation


def _segment_slopes(pairs, error):
    """Slope exponents of the segments through `pairs`, or raise `error`."""
    if not pairs:
        raise error("at least one breakpoint is required")
    x0, y0 = pairs[0]
    if x0 != ZERO:
        raise error("first breakpoint must be at 0")
    if not (ZERO <= y0 < ONE):
        raise error("value at 0 must lie in [0, 1)")
    slopes = []
    for i, (x1, y1) in enumerate(pairs):
        x2, y2 = pairs[i + 1] if i + 1 < len(pairs) else (x0 + 1, y0 + 1)
        dx = x2 - x1
        dy = y2 - y1
        if dx <= ZERO:
            raise error("breakpoints must be strictly increasing within [0, 1)")
        if dy <= ZERO:
            raise error("breakpoint values must be strictly increasing")
        e = pow2_ratio(dy, dx)
        if e is None:
            raise error(f"segment slope {dy}/{dx} is not a power of two")
        slopes.append(e)
    return slopes


def _normalized(pairs, error):
    slopes = _segment_slopes(pairs, error)
    kept = [pairs[0]]
    for i in range(1, len(pairs)):
        if slopes[i - 1] != slopes[i]:
            kept.append(pairs[i])
    return tuple(kept)


class CircleElement:
    """An orientation-preserving dyadic PL homeomorphism of R/Z.

    Composition is `g * h` (apply h first), powers are `g ** m`, and calling
    the element evaluates the circle map at a point of [0, 1).
    """

    __slots__ = ("pairs", "_xs", "_slopes")

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        self._slopes = _segment_slopes(self.pairs, InvariantViolation)
        self._xs = [x for x, _ in self.pairs]

    @property
    def breakpoints(self):
        return self.pairs

    def lift(self, x: Dyadic) -> Dyadic:
        """Value of the canonical lift at any point of the line."""
        k = x.floor()
        r = x - k
        i = bisect.bisect_right(self._xs, r) - 1
        xi, yi = self.pairs[i]
        return yi + (r - xi).scale_pow2(self._slopes[i]) + k

    def __call__(self, x) -> Dyadic:
        """The circle map applied to x, returned in [0, 1)."""
        return self.lift(as_dyadic(x)).mod_one()

    def __mul__(self, other):
        if not isinstance(other, CircleElement):
            return NotImplemented
        xs = {x for x, _ in other.pairs}
        oinv = other.inverse()
        for bx, _ in self.pairs:
            xs.add(oinv(bx))
        nodes = [(x, self.lift(other.lift(x))) for x in sorted(xs)]
        return _from_lift_nodes(nodes)

    def inverse(self) -> "CircleElement":
        nodes = []
        for x, y in self.pairs:
            c = y.floor()
            nodes.append((y - c, x - c))
        return _from_lift_nodes(nodes)

    def __pow__(self, m: int):
        if not isinstance(m, int):
            return NotImplemented
        if m == 0:
            return identity()
        base = self if m > 0 else self.inverse()
        m = abs(m)
        result = None
        while m:
            if m & 1:
                result = base if result is None else result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, CircleElement):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        bp = ", ".join(f"({x}, {y})" for x, y in self.pairs)
        return f"CircleElement[{bp}]"

    def to_json_dict(self) -> dict:
        return {"bp": [[str(x), str(y)] for x, y in self.pairs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data) -> "CircleElement":
        if not isinstance(data, dict) or "bp" not in data:
            raise InvalidElementError('element JSON must be an object with a "bp" list')
        raw = data["bp"]
        if not isinstance(raw, list):
            raise InvalidElementError('"bp" must be a list of coordinate pairs')
        pairs = []
        for entry in raw:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise InvalidElementError(f"malformed breakpoint pair: {entry!r}")
            x, y = entry
            if not isinstance(x, str) or not isinstance(y, str):
                raise InvalidElementError("coordinates must be dyadic strings")
            try:
                pairs.append((Dyadic.parse(x), Dyadic.parse(y)))
            except ValueError as exc:
                raise InvalidElementError(str(exc)) from exc
        return make_element(pairs)

    @classmethod
    def from_json(cls, text: str) -> "CircleElement":
        return cls.from_json_dict(json.loads(text))


def make_element(pairs) -> CircleElement:
    """Validate raw breakpoint data and return the normalized element."""
    coerced = []
    for x, y in pairs:
        try:
            coerced.append((as_dyadic(x), as_dyadic(y)))
        except (TypeError, ValueError) as exc:
            raise InvalidElementError(str(exc)) from exc
    return CircleElement(_normalized(coerced, InvalidElementError))


def _from_lift_nodes(nodes) -> CircleElement:
    """Build an element from exact (x, lift(x)) samples covering one period.

    The samples must include every breakpoint; redundant interior nodes are
    dropped.  A node at x = 1 is folded into the anchor, the anchor value is
    interpolated if x = 0 is absent, and the whole list is shifted by an
    integer so the anchor value lands in [0, 1).
    """
    by_x = {}
    for x, y in nodes:
        prev = by_x.get(x)
        if prev is None:
            by_x[x] = y
        elif prev != y:
            raise InvariantViolation(f"conflicting lift values at {x}: {prev} vs {y}")
    if ONE in by_x:
        y1 = by_x.pop(ONE)
        y0 = by_x.get(ZERO)
        if y0 is None:
            by_x[ZERO] = y1 - 1
        elif y0 + 1 != y1:
            raise InvariantViolation("lift samples are not unit-translation equivariant")
    if ZERO not in by_x:
        xs = sorted(by_x)
        xl, yl = xs[-1] - 1, by_x[xs[-1]] - 1
        xf, yf = xs[0], by_x[xs[0]]
        e = pow2_ratio(yf - yl, xf - xl)
        if e is None:
            raise InvariantViolation("wrap segment has a non-dyadic-power slope")
        by_x[ZERO] = yl + (ZERO - xl).scale_pow2(e)
    xs = sorted(by_x)
    shift = by_x[ZERO].floor()
    pairs = [(x, by_x[x] - shift) for x in xs]
    return CircleElement(_normalized(pairs, InvariantViolation))


_IDENTITY = None


def identity() -> CircleElement:
    global _IDENTITY
    if _IDENTITY is None:
        _IDENTITY = CircleElement(((ZERO, ZERO),))
    return _IDENTITY


def pseudo_rotation(q: int) -> CircleElement:
    """The standard finite-order element of order q.

    For q >= 2 it is affine on the intervals [0,1/2], [1/2,3/4], ...,
    [1-2^(1-q),1], sending each onto the next and the last back onto the
    first; q = 1 gives the identity.
    """
    if q < 1:
        raise DomainError("pseudo-rotation order must be a positive integer")
    if q == 1:
        return identity()
    lefts = [ZERO] + [ONE - Dyadic(1, j) for j in range(1, q)]
    pairs = [(lefts[j], lefts[j + 1]) for j in range(q - 1)]
    pairs.append((lefts[q - 1], ONE))
    return make_element(pairs)


class IntervalMap:
    """Orientation-preserving dyadic PL bijection between closed dyadic intervals."""

    __slots__ = ("nodes", "_xs", "_ys", "_slopes")

    def __init__(self, nodes):
        nodes = [(as_dyadic(x), as_dyadic(y)) for x, y in nodes]
        if len(nodes) < 2:
            raise InvalidElementError("an interval map needs at least two nodes")
        slopes = []
        for (x1, y1), (x2, y2) in zip(nodes, nodes[1:]):
            dx, dy = x2 - x1, y2 - y1
            if dx <= ZERO or dy <= ZERO:
                raise InvalidElementError("interval map nodes must strictly increase")
            e = pow2_ratio(dy, dx)
            if e is None:
                raise InvalidElementError(f"piece slope {dy}/{dx} is not a power of two")
            slopes.append(e)
        kept = [nodes[0]]
        for i in range(1, len(nodes) - 1):
            if slopes[i - 1] != slopes[i]:
                kept.append(nodes[i])
        kept.append(nodes[-1])
        self.nodes = tuple(kept)
        self._xs = [x for x, _ in self.nodes]
        self._ys = [y for _, y in self.nodes]
        self._slopes = [
            pow2_ratio(y2 - y1, x2 - x1)
            for (x1, y1), (x2, y2) in zip(self.nodes, self.nodes[1:])
        ]

    @property
    def src(self):
        return (self.nodes[0][0], self.nodes[-1][0])

    @property
    def dst(self):
        return (self.nodes[0][1], self.nodes[-1][1])

    def at(self, x: Dyadic) -> Dyadic:
        if not (self.nodes[0][0] <= x <= self.nodes[-1][0]):
            raise DomainError(f"{x} outside source interval {self.src}")
        i = min(bisect.bisect_right(self._xs, x) - 1, len(self._slopes) - 1)
        xi, yi = self.nodes[i]
        return yi + (x - xi).scale_pow2(self._slopes[i])

    def inv_at(self, y: Dyadic) -> Dyadic:
        if not (self.nodes[0][1] <= y <= self.nodes[-1][1]):
            raise DomainError(f"{y} outside target interval {self.dst}")
        i = min(bisect.bisect_right(self._ys, y) - 1, len(self._slopes) - 1)
        xi, yi = self.nodes[i]
        return xi + (y - yi).scale_pow2(-self._slopes[i])

    def inverse(self) -> "IntervalMap":
        return IntervalMap([(y, x) for x, y in self.nodes])

    def __mul__(self, inner):
        if not isinstance(inner, IntervalMap):
            return NotImplemented
        if inner.dst != self.src:
            raise DomainError("interval maps do not chain: target/source mismatch")
        xs = set(inner._xs)
        for x, _ in self.nodes:
            xs.add(inner.inv_at(x))
        return IntervalMap([(x, self.at(inner.at(x))) for x in sorted(xs)])

    def __eq__(self, other):
        if not isinstance(other, IntervalMap):
            return NotImplemented
        return self.nodes == other.nodes

    def __hash__(self):
        return hash(self.nodes)

    def __repr__(self):
        return f"IntervalMap[{', '.join(f'({x}, {y})' for x, y in self.nodes)}]"


def canonical_dpl(src, dst) -> IntervalMap:
    """The canonical dyadic PL bijection between two dyadic intervals.

    Both interval lengths are written as sums of distinct powers of two;
    while the part counts differ, the largest part of the shorter list
    (first occurrence on ties) is split in half, in place.  The i-th source
    part is then mapped affinely onto the i-th target part, so every piece
    has a power-of-two slope.  If the length ratio is already a power of two
    the result is affine, and canonical_dpl(I, I) is the identity on I.
    """
    (a, b), (c, d) = src, dst
    a, b, c, d = as_dyadic(a), as_dyadic(b), as_dyadic(c), as_dyadic(d)
    if b <= a or d <= c:
        raise DomainError("canonical_dpl requires nondegenerate intervals")
    sparts = binary_parts(b - a)
    dparts = binary_parts(d - c)
    while len(sparts) != len(dparts):
        shorter = sparts if len(sparts) < len(dparts) else dparts
        i = shorter.index(max(shorter))
        half = shorter[i].scale_pow2(-1)
        shorter[i : i + 1] = [half, half]
    nodes = [(a, c)]
    x, y = a, c
    for sp, dp in zip(sparts, dparts):
        x = x + sp
        y = y + dp
        nodes.append((x, y))
    return IntervalMap(nodes)


def canonical_dpl_through(src_points, dst_points) -> IntervalMap:
    """Concatenation of canonical DPL maps through matched partition points."""
    xs = [as_dyadic(v) for v in src_points]
    ys = [as_dyadic(v) for v in dst_points]
    if len(xs) != len(ys) or len(xs) < 2:
        raise DomainError("matched point lists of equal length >= 2 required")
    nodes = []
    for i in range(len(xs) - 1):
        piece = canonical_dpl((xs[i], xs[i + 1]), (ys[i], ys[i + 1]))
        nodes.extend(piece.nodes if i == 0 else piece.nodes[1:])
    return IntervalMap(nodes)


def _random_partition(rng: random.Random, pieces: int) -> list[Dyadic]:
    """A partition of [0,1] into `pieces` standard dyadic intervals."""
    cuts = [ZERO, ONE]
    for _ in range(pieces - 1):
        i = rng.randrange(len(cuts) - 1)
        cuts.insert(i + 1, (cuts[i] + cuts[i + 1]).scale_pow2(-1))
    return cuts


def _random_factor(rng: random.Random) -> CircleElement:
    if rng.random() < 0.5:
        q = rng.randint(2, 8)
        m = rng.randint(1, q - 1)
        return pseudo_rotation(q) ** m
    pieces = rng.randint(2, 5)
    src = _random_partition(rng, pieces)
    dst = _random_partition(rng, pieces)
    return make_element(list(zip(src[:-1], dst[:-1])))


def random_element(seed: int, complexity: int) -> CircleElement:
    """Deterministic pseudo-random element: a product of `complexity` factors.

    Each factor is either a power of a pseudo-rotation of order at most 8 or
    an interval-rearranging map built from two random dyadic partitions of
    [0,1] with equal piece counts (such a map fixes 0).
    """
    if complexity < 1:
        raise DomainError("complexity must be at least 1")
    rng = random.Random(seed)
    out = identity()
    for _ in range(complexity):
        out = out * _random_factor(rng)
    return out
