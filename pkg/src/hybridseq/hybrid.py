"""The four-dimensional hybrid-number algebra over a commutative scalar ring.

A hybrid number is ``a + b*i + c*eps + d*h`` where the units satisfy

    i**2 = -1,   eps**2 = 0,   h**2 = 1,   i*h = -h*i = eps + i.

Multiplication is non-commutative.  The same class serves hybrids with
Rational components and hybrids with :class:`~hybridseq.scalars.QuadExt`
components; the only requirement on the scalar type is commutative ring
arithmetic (+, -, *).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import QuadExt, Rational, rat_str


class Hybrid:
    __slots__ = ("re", "im_i", "im_eps", "im_h")

    def __init__(self, re, im_i, im_eps, im_h):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im_i", im_i)
        object.__setattr__(self, "im_eps", im_eps)
        object.__setattr__(self, "im_h", im_h)

    def __setattr__(self, name, value):
        raise AttributeError("Hybrid values are immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_ints(cls, re=0, im_i=0, im_eps=0, im_h=0) -> "Hybrid":
        return cls(Fraction(re), Fraction(im_i), Fraction(im_eps), Fraction(im_h))

    @classmethod
    def zero_like(cls, scalar_zero) -> "Hybrid":
        return cls(scalar_zero, scalar_zero, scalar_zero, scalar_zero)

    @property
    def components(self):
        return (self.re, self.im_i, self.im_eps, self.im_h)

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "Hybrid") -> "Hybrid":
        return Hybrid(
            self.re + other.re,
            self.im_i + other.im_i,
            self.im_eps + other.im_eps,
            self.im_h + other.im_h,
        )

    def __sub__(self, other: "Hybrid") -> "Hybrid":
        return Hybrid(
            self.re - other.re,
            self.im_i - other.im_i,
            self.im_eps - other.im_eps,
            self.im_h - other.im_h,
        )

    def __neg__(self) -> "Hybrid":
        return Hybrid(-self.re, -self.im_i, -self.im_eps, -self.im_h)

    def scale(self, s) -> "Hybrid":
        """Multiply every component by the scalar ``s``."""
        return Hybrid(s * self.re, s * self.im_i, s * self.im_eps, s * self.im_h)

    # -- the product -----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Hybrid):
            a1, b1, c1, d1 = self.components
            a2, b2, c2, d2 = other.components
            return Hybrid(
                a1 * a2 - b1 * b2 + d1 * d2 + b1 * c2 + c1 * b2,
                a1 * b2 + b1 * a2 + b1 * d2 - d1 * b2,
                a1 * c2 + c1 * a2 + b1 * d2 - d1 * b2 + d1 * c2 - c1 * d2,
                a1 * d2 + d1 * a2 + c1 * b2 - b1 * c2,
            )
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with hybrids, so only Hybrid*Hybrid order matters
        return self.scale(other)

    # -- conjugation and character ----------------------------------------------

    def conjugate(self) -> "Hybrid":
        """Negate the i, eps, h components; an involution."""
        return Hybrid(self.re, -self.im_i, -self.im_eps, -self.im_h)

    def character(self):
        """The scalar ``k * conj(k)``.

        The three imaginary components of the product vanish identically;
        this is asserted rather than assumed so a broken product formula
        cannot silently produce a wrong scalar.
        """
        prod = self * self.conjugate()
        zero = self.re - self.re
        if not (prod.im_i == zero and prod.im_eps == zero and prod.im_h == zero):
            raise ArithmeticError(f"k*conj(k) has nonzero imaginary part for {self}")
        return prod.re

    def character_closed_form(self):
        """Independent route: a**2 + (b-c)**2 - c**2 - d**2."""
        a, b, c, d = self.components
        return a * a + (b - c) * (b - c) - c * c - d * d

    def norm_f64(self) -> float:
        """Floating approximation of sqrt(|character|); inexact, for display only."""
        ch = self.character()
        if not isinstance(ch, (int, Fraction)):
            raise TypeError("norm_f64 is defined for rational-component hybrids")
        return math.sqrt(abs(float(ch)))

    # -- structure queries --------------------------------------------------------

    def is_zero(self) -> bool:
        zero = self.re - self.re
        return all(x == zero for x in self.components)

    def map_components(self, f) -> "Hybrid":
        return Hybrid(f(self.re), f(self.im_i), f(self.im_eps), f(self.im_h))

    # -- comparison / rendering -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hybrid):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self) -> str:
        return f"Hybrid({self.re!r}, {self.im_i!r}, {self.im_eps!r}, {self.im_h!r})"

    def __str__(self) -> str:
        return f"{self.re} + {self.im_i} i + {self.im_eps} ε + {self.im_h} h"

    def to_json_dict(self) -> dict:
        """JSON object with fraction-string components: {re, i, eps, h}."""
        a, b, c, d = self.components
        if not all(isinstance(x, (int, Fraction)) for x in self.components):
            raise TypeError("JSON rendering is defined for rational-component hybrids")
        return {"re": rat_str(a), "i": rat_str(b), "eps": rat_str(c), "h": rat_str(d)}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Hybrid":
        return cls(
            Fraction(obj["re"]),
            Fraction(obj["i"]),
            Fraction(obj["eps"]),
            Fraction(obj["h"]),
        )


ZERO = Hybrid.from_ints(0, 0, 0, 0)
ONE = Hybrid.from_ints(1, 0, 0, 0)
UNIT_I = Hybrid.from_ints(0, 1, 0, 0)
UNIT_EPS = Hybrid.from_ints(0, 0, 1, 0)
UNIT_H = Hybrid.from_ints(0, 0, 0, 1)


def hybrid_mul(k1: Hybrid, k2: Hybrid) -> Hybrid:
    return k1 * k2


def hybrid_conj(k: Hybrid) -> Hybrid:
    return k.conjugate()


def hybrid_character(k: Hybrid):
    return k.character()


def hybrid_norm_f64(k: Hybrid) -> float:
    return k.norm_f64()


def lift_to_quadext(k: Hybrid, radicand: Rational) -> Hybrid:
    """Embed a rational-component hybrid into QuadExt components."""
    return k.map_components(lambda x: QuadExt.of(x, radicand))
