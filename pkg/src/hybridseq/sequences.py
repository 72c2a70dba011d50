"""Bi-periodic Horadam scalar sequences.

The sequence ``w`` is defined by ``w_n = chi(n) * w_{n-1} + c * w_{n-2}``
where ``chi(n) = a`` for even n and ``b`` for odd n, with arbitrary rational
initial values ``w_0, w_1`` and nonzero rational ``a, b, c``.  Negative
indices extend the sequence through the rearranged recurrence
``w_{n-2} = (w_n - chi(n) w_{n-1}) / c``.

The closed (Binet) form lives in the quadratic extension generated by the
roots ``alpha, beta`` of ``x**2 - ab*x - abc``:

    w_n = a**xi(n+1) / (ab)**floor(n/2) * (A*alpha**n - B*beta**n)

with ``A = (w1 - (beta/a) w0) / (alpha - beta)`` and B its conjugate
expression.  Construction requires ``delta_sq = a^2 b^2 + 4abc != 0`` so the
roots are distinct; negative and perfect-square values of ``delta_sq`` are
fine because the square root is formal.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .scalars import QuadExt, Rational, rat, RationalLike


def parity(n: int) -> int:
    """xi(n): 0 for even n, 1 for odd n, floor semantics for negatives."""
    return n % 2


class SeqKind(enum.Enum):
    GENERAL = "general"
    FIBONACCI_U = "fibonacci_u"
    LUCAS_V = "lucas_v"
    FIBONACCI_U_HAT = "fibonacci_u_hat"
    LUCAS_V_HAT = "lucas_v_hat"


@dataclass(frozen=True)
class SeqParams:
    """Defining data (a, b, c, w0, w1) of one bi-periodic Horadam sequence."""

    a: Rational
    b: Rational
    c: Rational
    w0: Rational
    w1: Rational

    def __post_init__(self):
        for name in ("a", "b", "c", "w0", "w1"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ValueError(f"a, b, c must be nonzero, got {self.triple()}")
        if self.delta_sq == 0:
            raise ValueError(
                f"delta_sq = a^2 b^2 + 4abc vanishes for {self.triple()}; "
                "the characteristic roots coincide and the closed form is undefined"
            )

    # -- derived quantities ------------------------------------------------

    def triple(self) -> tuple[Rational, Rational, Rational]:
        return (self.a, self.b, self.c)

    # cached_property writes straight into __dict__, which the frozen
    # dataclass allows; the generated __eq__/__hash__ only see the fields
    @cached_property
    def delta_sq(self) -> Rational:
        a, b, c = self.a, self.b, self.c
        return a * a * b * b + 4 * a * b * c

    @cached_property
    def alpha(self) -> QuadExt:
        return QuadExt(self.a * self.b / 2, Fraction(1, 2), self.delta_sq)

    @cached_property
    def beta(self) -> QuadExt:
        return QuadExt(self.a * self.b / 2, Fraction(-1, 2), self.delta_sq)

    @cached_property
    def delta(self) -> QuadExt:
        """alpha - beta, the formal square root of delta_sq."""
        return QuadExt.sqrt(self.delta_sq)

    @cached_property
    def binet_a(self) -> QuadExt:
        """Coefficient A = (w1 - (beta/a) w0) / (alpha - beta)."""
        num = QuadExt.of(self.w1, self.delta_sq) - self.beta * (self.w0 / self.a)
        return num / self.delta

    @cached_property
    def binet_b(self) -> QuadExt:
        """Coefficient B = (w1 - (alpha/a) w0) / (alpha - beta)."""
        num = QuadExt.of(self.w1, self.delta_sq) - self.alpha * (self.w0 / self.a)
        return num / self.delta

    # -- related parameter sets ------------------------------------------------

    def with_initials(self, w0: RationalLike, w1: RationalLike) -> "SeqParams":
        return SeqParams(self.a, self.b, self.c, rat(w0), rat(w1))

    def swapped(self) -> "SeqParams":
        """Same initial values with the roles of a and b interchanged."""
        return SeqParams(self.b, self.a, self.c, self.w0, self.w1)

    def kind_params(self, kind: SeqKind) -> "SeqParams":
        """Parameter set of a named companion sequence over the same (a, b, c)."""
        if kind is SeqKind.GENERAL:
            return self
        return _kind_params(self.a, self.b, self.c, kind)


@lru_cache(maxsize=None)
def _kind_params(a: Rational, b: Rational, c: Rational, kind: SeqKind) -> "SeqParams":
    if kind is SeqKind.FIBONACCI_U:
        return SeqParams(a, b, c, 0, 1)
    if kind is SeqKind.LUCAS_V:
        return SeqParams(a, b, c, 2, b)
    if kind is SeqKind.FIBONACCI_U_HAT:
        return SeqParams(b, a, c, 0, 1)
    if kind is SeqKind.LUCAS_V_HAT:
        return SeqParams(b, a, c, 2, a)
    raise ValueError(f"unknown kind {kind!r}")


def _compact(x: Rational):
    """Plain int for integral values: exact, hash-compatible with Fraction,
    and much faster in the bulk arithmetic of grid sweeps."""
    return x.numerator if x.denominator == 1 else x


class Sequence:
    """Memoized evaluator for one parameter set; safe for concurrent readers.

    Terms are exact rationals; integral values come back as plain int.
    """

    def __init__(self, params: SeqParams):
        self.params = params
        self._cache: dict[int, Rational] = {0: _compact(params.w0),
                                            1: _compact(params.w1)}
        self._alpha_pows: list[QuadExt] = [QuadExt.of(1, params.delta_sq)]
        self._beta_pows: list[QuadExt] = [QuadExt.of(1, params.delta_sq)]
        self._lock = threading.RLock()

    def chi(self, n: int) -> Rational:
        return self.params.a if n % 2 == 0 else self.params.b

    def term(self, n: int) -> Rational:
        """w_n for any integer n (backward recurrence below index 0)."""
        cache = self._cache
        if n in cache:
            return cache[n]
        with self._lock:
            if n in cache:
                return cache[n]
            c = self.params.c
            if n >= 2:
                m = n
                while m not in cache:
                    m -= 1
                for k in range(m + 1, n + 1):
                    cache[k] = _compact(self.chi(k) * cache[k - 1] + c * cache[k - 2])
            else:
                m = n
                while m not in cache:
                    m += 1
                for k in range(m - 1, n - 1, -1):
                    # rearranged recurrence: w_k = (w_{k+2} - chi(k+2) w_{k+1}) / c
                    cache[k] = _compact((cache[k + 2] - self.chi(k + 2) * cache[k + 1]) / c)
            return cache[n]

    def term_iterative(self, n: int) -> Rational:
        """Cache-free evaluation, used to cross-check the memoized path."""
        p = self.params
        if n == 0:
            return p.w0
        prev, cur = p.w0, p.w1
        if n >= 1:
            for k in range(2, n + 1):
                prev, cur = cur, self.chi(k) * cur + p.c * prev
            return cur
        # walk (w_k, w_{k+1}) down: w_{k-1} = (w_{k+1} - chi(k+1) w_k) / c
        for k in range(0, n, -1):
            prev, cur = (cur - self.chi(k + 1) * prev) / p.c, prev
        return prev

    def alpha_pow(self, n: int) -> QuadExt:
        """alpha**n, built incrementally and cached for sweep reuse."""
        return self._root_pow(self._alpha_pows, self.params.alpha, n)

    def beta_pow(self, n: int) -> QuadExt:
        return self._root_pow(self._beta_pows, self.params.beta, n)

    def _root_pow(self, pows: list, base: QuadExt, n: int) -> QuadExt:
        if n < 0:
            raise ValueError("root powers take nonnegative exponents")
        if n >= len(pows):
            with self._lock:
                while len(pows) <= n:
                    pows.append(pows[-1] * base)
        return pows[n]

    def term_binet(self, n: int) -> QuadExt:
        """Closed-form w_n as a QuadExt; defined for n >= 0 only."""
        if n < 0:
            raise ValueError("the closed form is stated for nonnegative indices")
        p = self.params
        pref = p.a ** parity(n + 1) / (p.a * p.b) ** (n // 2)
        value = p.binet_a * self.alpha_pow(n) - p.binet_b * self.beta_pow(n)
        return value * pref

    def term_negative_closed(self, n: int) -> Rational:
        """w_{-n} for n >= 1 via (-c)^n w_{-n} = (b/a)^xi(n) w0 u_{n+1} - w1 u_n."""
        if n < 1:
            raise ValueError("defined for n >= 1")
        p = self.params
        u = sequence(p.kind_params(SeqKind.FIBONACCI_U))
        rhs = (p.b / p.a) ** parity(n) * p.w0 * u.term(n + 1) - p.w1 * u.term(n)
        return rhs / (-p.c) ** n

    def terms(self, start: int, stop: int) -> list[Rational]:
        return [self.term(n) for n in range(start, stop)]


_SEQUENCES: dict[SeqParams, Sequence] = {}
_SEQ_LOCK = threading.Lock()


def sequence(params: SeqParams) -> Sequence:
    """Shared memoized Sequence for a parameter set (caches grow monotonically)."""
    try:
        return _SEQUENCES[params]
    except KeyError:
        with _SEQ_LOCK:
            return _SEQUENCES.setdefault(params, Sequence(params))


def term_recurrence(params: SeqParams, n: int) -> Rational:
    return sequence(params).term(n)


def term_binet(params: SeqParams, n: int) -> QuadExt:
    return sequence(params).term_binet(n)


def root_power_expansion_check(params: SeqParams, m: int) -> bool:
    """Check alpha**m and beta**m against their u-sequence expansions.

    alpha^m = a^-1 a^((m+xi)/2) b^((m-xi)/2) alpha u_m
              + c a^((m-xi)/2) b^((m+xi)/2) u_{m-1},  xi = xi(m),
    and the same expression with beta in place of alpha.
    """
    if m < 1:
        raise ValueError("defined for m >= 1")
    p = params
    u = sequence(p.kind_params(SeqKind.FIBONACCI_U))
    x = parity(m)
    hi = (m + x) // 2
    lo = (m - x) // 2
    root_coeff = p.a**hi * p.b**lo / p.a * u.term(m)
    const = QuadExt.of(p.c * p.a**lo * p.b**hi * u.term(m - 1), p.delta_sq)
    return (
        u.alpha_pow(m) == p.alpha * root_coeff + const
        and u.beta_pow(m) == p.beta * root_coeff + const
    )


def u_v_relation_check(params_u: SeqParams, params_v: SeqParams, n: int) -> bool:
    """Check the u and v closed forms at index n >= 0.

    u_n = a^xi(n+1)/(ab)^floor(n/2) * (alpha^n - beta^n)/(alpha - beta)
    v_n = a^-xi(n)/(ab)^floor(n/2) * (alpha^n + beta^n)
    """
    if n < 0:
        raise ValueError("defined for n >= 0")
    if params_u.triple() != params_v.triple():
        raise ValueError("u and v parameter sets must share (a, b, c)")
    if (params_u.w0, params_u.w1) != (Fraction(0), Fraction(1)):
        raise ValueError("params_u must have initial values (0, 1)")
    if (params_v.w0, params_v.w1) != (Fraction(2), params_v.b):
        raise ValueError("params_v must have initial values (2, b)")
    a, b = params_u.a, params_u.b
    useq = sequence(params_u)
    an, bn = useq.alpha_pow(n), useq.beta_pow(n)
    u_closed = (an - bn) / params_u.delta * (a ** parity(n + 1) / (a * b) ** (n // 2))
    v_closed = (an + bn) * (a ** (-parity(n)) / (a * b) ** (n // 2))
    return u_closed == useq.term(n) and v_closed == sequence(params_v).term(n)
