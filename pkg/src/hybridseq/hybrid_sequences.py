"""Hybrid numbers with bi-periodic Horadam components.

``K_n = w_n + w_{n+1} i + w_{n+2} eps + w_{n+3} h`` built on a scalar
sequence from :mod:`hybridseq.sequences`, together with the closed form

    K_n = a**xi(n+1)/(ab)**floor(n/2) * (A*alpha_xi(n)*alpha**n
                                         - B*beta_xi(n)*beta**n)

whose hybrid-valued coefficients are

    alpha_x = 1 + (1/a)(a/b)**x alpha i + (1/(ab)) alpha**2 eps
                + (1/(a^2 b))(a/b)**x alpha**3 h          (x in {0, 1})

and the registry of classically named special cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .hybrid import Hybrid
from .scalars import QuadExt, Rational, rat, rat_str, RationalLike
from .sequences import SeqKind, SeqParams, Sequence, parity, sequence


@dataclass(frozen=True)
class HybridSeq:
    params: SeqParams
    kind: SeqKind = SeqKind.GENERAL
    _terms: dict = field(default_factory=dict, compare=False, repr=False)
    _products: dict = field(default_factory=dict, compare=False, repr=False)
    _prefix_sums: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def seq(self) -> Sequence:
        return sequence(self.params)

    def term(self, n: int) -> Hybrid:
        """K_n with components w_n .. w_{n+3}; any integer n."""
        k = self._terms.get(n)
        if k is None:
            w = self.seq
            k = Hybrid(w.term(n), w.term(n + 1), w.term(n + 2), w.term(n + 3))
            self._terms[n] = k
        return k

    def term_product(self, i: int, j: int) -> Hybrid:
        """K_i * K_j with a sweep-friendly cache (values are immutable)."""
        key = (i, j)
        prod = self._products.get(key)
        if prod is None:
            prod = self.term(i) * self.term(j)
            self._products[key] = prod
        return prod

    def term_prefix_sum(self, n: int) -> Hybrid:
        """K_1 + ... + K_n (n >= 1), cached incrementally."""
        total = self._prefix_sums.get(n)
        if total is None:
            total = self.term_prefix_sum(n - 1) + self.term(n) if n > 1 else self.term(1)
            self._prefix_sums[n] = total
        return total

    def term_binet(self, n: int) -> Hybrid:
        """Closed-form K_n with QuadExt components; n >= 0 only.

        Negative indices intentionally go through the recurrence: the
        (ab)**floor(n/2) prefactor is only stated for nonnegative n.
        """
        if n < 0:
            raise ValueError("the hybrid closed form is stated for nonnegative indices")
        p = self.params
        x = parity(n)
        roots = root_hybrids(p)
        seq = self.seq
        pref = p.a ** parity(n + 1) / (p.a * p.b) ** (n // 2)
        value = roots.alpha(x).scale(p.binet_a * seq.alpha_pow(n)) - roots.beta(x).scale(
            p.binet_b * seq.beta_pow(n)
        )
        return value.scale(QuadExt.of(pref, p.delta_sq))

    def character(self, n: int) -> Rational:
        """C(K_n) = K_n * conj(K_n), cross-checked against the closed form
        w_n^2 + (w_{n+1}-w_{n+2})^2 - w_{n+2}^2 - w_{n+3}^2."""
        k = self.term(n)
        via_product = k.character()
        via_closed = k.character_closed_form()
        if via_product != via_closed:
            raise ArithmeticError(
                f"character routes disagree at n={n}: {via_product} != {via_closed}"
            )
        return via_product

    def term_record(self, n: int, with_character: bool = True) -> dict:
        """JSON-ready record {n, re, i, eps, h, character} with "p/q" fractions."""
        rec = {"n": n}
        rec.update(self.term(n).to_json_dict())
        if with_character:
            rec["character"] = rat_str(self.character(n))
        return rec


@dataclass(frozen=True)
class RootHybrids:
    """The four hybrid coefficients alpha_0, alpha_1, beta_0, beta_1."""

    alpha0: Hybrid
    alpha1: Hybrid
    beta0: Hybrid
    beta1: Hybrid

    def alpha(self, x: int) -> Hybrid:
        return self.alpha0 if x == 0 else self.alpha1

    def beta(self, x: int) -> Hybrid:
        return self.beta0 if x == 0 else self.beta1


def _root_hybrid(p: SeqParams, root: QuadExt, x: int) -> Hybrid:
    ratio = (p.a / p.b) ** x
    one = QuadExt.of(1, p.delta_sq)
    return Hybrid(
        one,
        root * (ratio / p.a),
        root**2 * (Fraction(1) / (p.a * p.b)),
        root**3 * (ratio / (p.a * p.a * p.b)),
    )


@lru_cache(maxsize=None)
def root_hybrids(p: SeqParams) -> RootHybrids:
    return RootHybrids(
        alpha0=_root_hybrid(p, p.alpha, 0),
        alpha1=_root_hybrid(p, p.alpha, 1),
        beta0=_root_hybrid(p, p.beta, 0),
        beta1=_root_hybrid(p, p.beta, 1),
    )


def hybrid_term(hs: HybridSeq, n: int) -> Hybrid:
    return hs.term(n)


def hybrid_term_binet(hs: HybridSeq, n: int) -> Hybrid:
    return hs.term_binet(n)


def hybrid_character_seq(hs: HybridSeq, n: int) -> Rational:
    return hs.character(n)


# ---------------------------------------------------------------------------
# Registry of named families: (w0, w1; a, b, c) tuples, possibly with free
# rational parameters.  Entries are data so each row is testable as stated.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NamedFamily:
    name: str
    description: str
    # tuple entries are either Fractions or strings naming a free parameter
    # (a leading "-" negates, as in Horadam's c = "-q")
    w0: RationalLike | str
    w1: RationalLike | str
    a: RationalLike | str
    b: RationalLike | str
    c: RationalLike | str
    free_params: tuple[str, ...] = ()
    kind: SeqKind = SeqKind.GENERAL

    def spec_tuple(self) -> str:
        def show(v):
            return str(v) if isinstance(v, str) else str(rat(v))

        return (
            f"({show(self.w0)},{show(self.w1)};"
            f"{show(self.a)},{show(self.b)},{show(self.c)})"
        )


FAMILIES: tuple[NamedFamily, ...] = (
    NamedFamily("gen-bi-periodic-fibonacci", "generalized bi-periodic Fibonacci hybrid numbers",
                0, 1, "a", "b", "c", ("a", "b", "c"), SeqKind.FIBONACCI_U),
    NamedFamily("gen-bi-periodic-lucas", "generalized bi-periodic Lucas hybrid numbers",
                2, "b", "a", "b", "c", ("a", "b", "c"), SeqKind.LUCAS_V),
    NamedFamily("horadam", "Horadam hybrid numbers",
                "W0", "W1", "p", "p", "-q", ("W0", "W1", "p", "q")),
    NamedFamily("pq-fibonacci", "(p,q)-Fibonacci hybrid numbers",
                0, 1, "p", "p", "q", ("p", "q"), SeqKind.FIBONACCI_U),
    NamedFamily("pq-lucas", "(p,q)-Lucas hybrid numbers",
                2, "p", "p", "p", "q", ("p", "q"), SeqKind.LUCAS_V),
    NamedFamily("fibonacci", "Fibonacci hybrid numbers",
                0, 1, 1, 1, 1, (), SeqKind.FIBONACCI_U),
    NamedFamily("lucas", "Lucas hybrid numbers", 2, 1, 1, 1, 1, (), SeqKind.LUCAS_V),
    NamedFamily("pell", "Pell hybrid numbers", 0, 1, 2, 2, 1, (), SeqKind.FIBONACCI_U),
    NamedFamily("pell-lucas", "Pell-Lucas hybrid numbers",
                2, 2, 2, 2, 1, (), SeqKind.LUCAS_V),
    NamedFamily("k-pell", "k-Pell hybrid numbers",
                0, 1, 2, 2, "k", ("k",), SeqKind.FIBONACCI_U),
    NamedFamily("jacobsthal", "Jacobsthal hybrid numbers",
                0, 1, 1, 1, 2, (), SeqKind.FIBONACCI_U),
    NamedFamily("jacobsthal-lucas", "Jacobsthal-Lucas hybrid numbers",
                2, 1, 1, 1, 2, (), SeqKind.LUCAS_V),
)

_FAMILY_INDEX = {f.name: f for f in FAMILIES}


class FamilyError(ValueError):
    pass


def family_lookup(
    name: str,
    free_param: RationalLike | None = None,
    **free: RationalLike,
) -> HybridSeq:
    """Build the HybridSeq for a named registry row.

    Rows with exactly one free parameter accept it positionally
    (``family_lookup("k-pell", 3)``); multi-parameter rows take keywords
    (``family_lookup("horadam", W0=1, W1=2, p=3, q=2)``).
    """
    fam = _FAMILY_INDEX.get(name)
    if fam is None:
        known = ", ".join(sorted(_FAMILY_INDEX))
        raise FamilyError(f"unknown family {name!r}; known families: {known}")
    if free_param is not None:
        if len(fam.free_params) != 1:
            raise FamilyError(
                f"family {name!r} takes parameters {fam.free_params or '()'}, "
                "not a single positional value"
            )
        free = {fam.free_params[0]: free_param, **free}
    missing = set(fam.free_params) - set(free)
    extra = set(free) - set(fam.free_params)
    if missing:
        raise FamilyError(f"family {name!r} is missing parameter(s) {sorted(missing)}")
    if extra:
        raise FamilyError(f"family {name!r} got unexpected parameter(s) {sorted(extra)}")

    def resolve(v) -> Rational:
        if isinstance(v, str):
            if v.startswith("-"):
                return -rat(free[v[1:]])
            return rat(free[v])
        return rat(v)

    params = SeqParams(
        a=resolve(fam.a), b=resolve(fam.b), c=resolve(fam.c),
        w0=resolve(fam.w0), w1=resolve(fam.w1),
    )
    return HybridSeq(params, fam.kind)
