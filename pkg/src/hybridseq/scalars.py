"""Exact scalar arithmetic: rationals and a formal quadratic extension.

Two scalar rings are used throughout the package:

* ``Rational`` -- arbitrary-precision exact fractions.  This is the stdlib
  :class:`fractions.Fraction`, which already guarantees the canonical form
  (positive denominator, gcd-reduced, zero stored as ``0/1``).
* :class:`QuadExt` -- elements ``p + q*sqrt(D)`` of the quadratic extension
  obtained by adjoining a *formal* square root of a fixed rational radicand
  ``D``.  ``sqrt(D)`` is a symbol with ``sqrt(D)**2 == D``; the radicand may
  be negative or a perfect square, and equality is componentwise, so every
  computation here is a polynomial identity in the symbol rather than a
  statement about real numbers.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

RationalLike = Rational | int | str


class RadicandMismatchError(ValueError):
    """Raised when two QuadExt values with different radicands are combined."""


class DegenerateSplitError(ZeroDivisionError):
    """Raised when inverting p + q*sqrt(D) with p**2 == q**2 * D.

    This can only happen when D is the square of a rational, in which case
    the extension splits and contains genuine zero divisors.
    """


def rat(x: RationalLike) -> Rational:
    """Coerce an int, Fraction, or a string like ``"-5/2"`` to a Rational."""
    if isinstance(x, Rational):
        return x
    return Fraction(x)


def rat_str(x: Rational | int) -> str:
    """Render a rational canonically as ``"p/q"`` (used by all JSON output)."""
    if isinstance(x, int):
        return f"{x}/1"
    return f"{x.numerator}/{x.denominator}"


def rat_arith(x: Rational, y: Rational, op: str) -> Rational:
    """Exact field operation on rationals; ``op`` is add/sub/mul/div."""
    x, y = rat(x), rat(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise ZeroDivisionError("rational division by zero")
        return x / y
    raise ValueError(f"unknown rational operation {op!r}")


class QuadExt:
    """``rat + rad*sqrt(radicand)`` with exact Fraction components.

    Values carry their radicand; arithmetic between values with different
    radicands raises :class:`RadicandMismatchError`.  Plain rationals and
    ints coerce freely (they have zero ``rad`` part for any radicand).
    """

    __slots__ = ("rat", "rad", "radicand")

    def __init__(self, rat_part: RationalLike, rad_part: RationalLike, radicand: RationalLike):
        radicand = rat(radicand)
        if radicand == 0:
            raise ValueError("QuadExt radicand must be nonzero")
        object.__setattr__(self, "rat", rat(rat_part))
        object.__setattr__(self, "rad", rat(rad_part))
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("QuadExt values are immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def of(cls, x: RationalLike, radicand: RationalLike) -> "QuadExt":
        """Embed a rational into the extension with the given radicand."""
        return cls(rat(x), Fraction(0), radicand)

    @classmethod
    def sqrt(cls, radicand: RationalLike) -> "QuadExt":
        """The formal square root itself: 0 + 1*sqrt(radicand)."""
        return cls(Fraction(0), Fraction(1), radicand)

    # -- predicates ------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.rad == 0

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.radicand != self.radicand:
                raise RadicandMismatchError(
                    f"cannot combine radicands {self.radicand} and {other.radicand}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(rat(other), Fraction(0), self.radicand)
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.rat + o.rat, self.rad + o.rad, self.radicand)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.rat - o.rat, self.rad - o.rad, self.radicand)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadExt(-self.rat, -self.rad, self.radicand)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # (p1 + q1 s)(p2 + q2 s) = (p1 p2 + q1 q2 D) + (p1 q2 + q1 p2) s
        return QuadExt(
            self.rat * o.rat + self.rad * o.rad * self.radicand,
            self.rat * o.rad + self.rad * o.rat,
            self.radicand,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        """Multiplicative inverse (p - q*sqrt(D)) / (p**2 - q**2*D)."""
        den = self.rat * self.rat - self.rad * self.rad * self.radicand
        if den == 0:
            raise DegenerateSplitError(
                f"{self} is not invertible: p^2 = q^2*D, the extension with "
                f"radicand {self.radicand} splits and this value is a zero divisor"
            )
        return QuadExt(self.rat / den, -self.rad / den, self.radicand)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "QuadExt":
        """Exact power by repeated squaring; n must be a nonnegative integer."""
        if not isinstance(n, int) or n < 0:
            raise ValueError("QuadExt powers take a nonnegative integer exponent")
        result = QuadExt.of(1, self.radicand)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        """Galois conjugate: sqrt(D) -> -sqrt(D)."""
        return QuadExt(self.rat, -self.rad, self.radicand)

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if self.rad == 0 and other.rad == 0:
                return self.rat == other.rat
            return (
                self.radicand == other.radicand
                and self.rat == other.rat
                and self.rad == other.rad
            )
        if isinstance(other, (int, Fraction)):
            return self.rad == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.rad == 0:
            return hash(self.rat)
        return hash((self.rat, self.rad, self.radicand))

    def __bool__(self) -> bool:
        return self.rat != 0 or self.rad != 0

    def __repr__(self) -> str:
        return f"QuadExt({self.rat!r}, {self.rad!r}, {self.radicand!r})"

    def __str__(self) -> str:
        return f"{self.rat} + {self.rad}*sqrt({self.radicand})"


def quad_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    return x * y


def quad_inv(x: QuadExt) -> QuadExt:
    return x.inverse()


def quad_pow(x: QuadExt, n: int) -> QuadExt:
    return x**n
