"""Exact arithmetic on dyadic rationals n / 2**e.

Values are kept in a canonical reduced form (odd numerator whenever the
exponent is positive, zero stored as (0, 0)), so equality is structural and
no operation ever rounds.  Numerators are plain Python integers and may grow
without bound under repeated composition of maps.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DyadicParseError


class Dyadic:
    """A rational number whose denominator is a power of two."""

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if not isinstance(num, int) or not isinstance(exp, int):
            raise TypeError("Dyadic components must be integers")
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        else:
            while exp > 0 and num % 2 == 0:
                num //= 2
                exp -= 1
        self.num = num
        self.exp = exp

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse "n" or "n/d" where d is a positive power of two."""
        s = text.strip().replace("−", "-")
        num_part, slash, den_part = s.partition("/")
        try:
            num = int(num_part)
        except ValueError:
            raise DyadicParseError(f"not a dyadic rational: {text!r}") from None
        if not slash:
            return cls(num)
        try:
            den = int(den_part)
        except ValueError:
            raise DyadicParseError(f"not a dyadic rational: {text!r}") from None
        if den <= 0 or den & (den - 1):
            raise DyadicParseError(f"denominator {den} is not a power of two")
        return cls(num, den.bit_length() - 1)

    def _coerce(self, other):
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = max(self.exp, o.exp)
        return Dyadic((self.num << (e - self.exp)) + (o.num << (e - o.exp)), e)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = max(self.exp, o.exp)
        return Dyadic((self.num << (e - self.exp)) - (o.num << (e - o.exp)), e)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Dyadic(self.num * o.num, self.exp + o.exp)

    __rmul__ = __mul__

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def scale_pow2(self, e: int) -> "Dyadic":
        """Exact multiplication by 2**e (e may be negative)."""
        return Dyadic(self.num, self.exp - e)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = max(self.exp, o.exp)
        d = (self.num << (e - self.exp)) - (o.num << (e - o.exp))
        return (d > 0) - (d < 0)

    def __eq__(self, other):
        c = self._cmp(other)
        return c == 0 if c is not NotImplemented else NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c < 0 if c is not NotImplemented else NotImplemented

    def __le__(self, other):
        c = self._cmp(other)
        return c <= 0 if c is not NotImplemented else NotImplemented

    def __gt__(self, other):
        c = self._cmp(other)
        return c > 0 if c is not NotImplemented else NotImplemented

    def __ge__(self, other):
        c = self._cmp(other)
        return c >= 0 if c is not NotImplemented else NotImplemented

    def __hash__(self):
        return hash(self.as_fraction())

    def __bool__(self):
        return self.num != 0

    def floor(self) -> int:
        return self.num >> self.exp

    def mod_one(self) -> "Dyadic":
        """Reduction to the fundamental domain [0, 1) of the circle."""
        return self - self.floor()

    def is_integer(self) -> bool:
        return self.exp == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self):
        return f"Dyadic({self.num}, {self.exp})"


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def as_dyadic(value) -> Dyadic:
    """Coerce an int, string, or Dyadic to a Dyadic."""
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, int):
        return Dyadic(value)
    if isinstance(value, str):
        return Dyadic.parse(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a dyadic rational")


def binary_parts(value: Dyadic) -> list[Dyadic]:
    """Strictly decreasing powers of two summing exactly to value > 0.

    These are the set bits of the numerator, e.g. 3/4 -> [1/2, 1/4].
    """
    if value <= ZERO:
        raise ValueError("binary_parts requires a positive value")
    parts = []
    for i in reversed(range(value.num.bit_length())):
        if (value.num >> i) & 1:
            parts.append(Dyadic(1, value.exp - i))
    return parts


def pow2_ratio(a: Dyadic, b: Dyadic):
    """The integer e with a == b * 2**e, or None if the ratio is not a power of two.

    Only same-sign nonzero pairs qualify; the reduced representation makes
    this a structural check (equal odd numerators).
    """
    if a.num == 0 or a.num != b.num:
        return None
    return b.exp - a.exp
