"""Hybrid sequences: term windows, closed form, characters, named families."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hybridseq.hybrid import Hybrid
from hybridseq.hybrid_sequences import (
    FAMILIES,
    FamilyError,
    HybridSeq,
    family_lookup,
    root_hybrids,
)
from hybridseq.scalars import QuadExt
from hybridseq.sequences import SeqParams, sequence

FIB = HybridSeq(SeqParams(1, 1, 1, 0, 1))
ASYM = HybridSeq(SeqParams(2, 3, 1, 0, 1))

small_nonzero = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=3
).filter(lambda x: x != 0)
small = st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=3)


def hs_strategy():
    def build(a, b, c, w0, w1):
        if a * b * (a * b + 4 * c) == 0:
            return None
        return HybridSeq(SeqParams(a, b, c, w0, w1))

    return st.builds(build, small_nonzero, small_nonzero, small_nonzero,
                     small, small).filter(lambda h: h is not None)


class TestTermWindow:
    @given(hs_strategy())
    @settings(max_examples=40, deadline=None)
    def test_index_zero_window_closed_form(self, hs):
        # K_0 = w0 + w1 i + (a w1 + c w0) eps + ((ab+c) w1 + bc w0) h
        p = hs.params
        a, b, c = p.triple()
        expected = Hybrid(
            p.w0,
            p.w1,
            a * p.w1 + c * p.w0,
            (a * b + c) * p.w1 + b * c * p.w0,
        )
        assert hs.term(0) == expected

    def test_fibonacci_windows(self):
        assert FIB.term(0) == Hybrid.from_ints(0, 1, 1, 2)
        assert FIB.term(2) == Hybrid.from_ints(1, 2, 3, 5)

    def test_negative_window(self):
        assert FIB.term(-1) == Hybrid.from_ints(1, 0, 1, 1)

    def test_four_term_recurrence(self):
        for hs in (FIB, ASYM):
            a, b, c = hs.params.triple()
            for n in range(4, 41):
                expected = hs.term(n - 2).scale(a * b + 2 * c) - hs.term(n - 4).scale(c * c)
                assert hs.term(n) == expected

    def test_term_product_cache_consistency(self):
        direct = ASYM.term(3) * ASYM.term(5)
        assert ASYM.term_product(3, 5) == direct
        assert ASYM.term_product(3, 5) is ASYM.term_product(3, 5)

    def test_prefix_sum(self):
        total = ASYM.term(1) + ASYM.term(2) + ASYM.term(3)
        assert ASYM.term_prefix_sum(3) == total


class TestClosedForm:
    def test_initial_index(self):
        k = ASYM.term_binet(0)
        assert all(q.rad == 0 for q in k.components)
        assert [q.rat for q in k.components] == list(ASYM.term(0).components)

    def test_fibonacci_index_seven(self):
        k = FIB.term_binet(7)
        assert [q.rat for q in k.components] == [13, 21, 34, 55]
        assert all(q.rad == 0 for q in k.components)

    def test_asymmetric_index_five(self):
        k = ASYM.term_binet(5)
        assert [q.rat for q in k.components] == [55, 126, 433, 992]
        assert list(ASYM.term(5).components) == [55, 126, 433, 992]

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            FIB.term_binet(-1)

    @given(hs_strategy(), st.integers(0, 20))
    @settings(max_examples=40, deadline=None)
    def test_matches_recurrence_componentwise(self, hs, n):
        k = hs.term_binet(n)
        plain = hs.term(n)
        assert all(q.rad == 0 for q in k.components)
        assert [q.rat for q in k.components] == list(plain.components)


class TestCharacter:
    def test_fibonacci_values(self):
        assert FIB.character(0) == -5
        assert FIB.character(1) == -11

    def test_zero_sequence(self):
        hs = HybridSeq(SeqParams(1, 1, 1, 0, 0))
        assert all(hs.character(n) == 0 for n in range(-5, 10))

    @given(hs_strategy(), st.integers(-8, 15))
    @settings(max_examples=40, deadline=None)
    def test_both_routes_agree(self, hs, n):
        # character() itself cross-checks k*conj(k) against the closed form
        k = hs.term(n)
        assert hs.character(n) == k.character_closed_form()

    def test_record_shape(self):
        rec = FIB.term_record(2)
        assert rec == {"n": 2, "re": "1/1", "i": "2/1", "eps": "3/1",
                       "h": "5/1", "character": "-32/1"}


class TestRootHybrids:
    def test_unit_params_alpha0(self):
        p = FIB.params
        roots = root_hybrids(p)
        alpha = p.alpha
        expected = Hybrid(QuadExt.of(1, 5), alpha, alpha**2, alpha**3)
        assert roots.alpha(0) == expected

    def test_parity_one_scales_i_and_h(self):
        p = ASYM.params
        roots = root_hybrids(p)
        ratio = p.a / p.b
        a0, a1 = roots.alpha(0), roots.alpha(1)
        assert a1.im_i == a0.im_i * ratio
        assert a1.im_h == a0.im_h * ratio
        assert a1.re == a0.re and a1.im_eps == a0.im_eps

    def test_beta_is_root_conjugate_of_alpha(self):
        roots = root_hybrids(ASYM.params)
        for x in (0, 1):
            assert roots.beta(x) == roots.alpha(x).map_components(
                lambda q: q.conjugate()
            )


class TestHoradamReduction:
    @pytest.mark.parametrize("p,q", [(1, -1), (2, -1), (3, 2)])
    def test_matches_single_recurrence(self, p, q):
        # independent classical implementation: W_n = p W_{n-1} - q W_{n-2}
        w0, w1 = Fraction(5), Fraction(-4)
        classical = [w0, w1]
        for _ in range(40):
            classical.append(p * classical[-1] - q * classical[-2])
        hs = family_lookup("horadam", W0=w0, W1=w1, p=p, q=q)
        for n in range(30):
            assert list(hs.term(n).components) == classical[n:n + 4]


class TestFibonacciSpecialization:
    def test_components_are_classical_fibonacci(self):
        classical = [0, 1]
        for _ in range(40):
            classical.append(classical[-1] + classical[-2])
        fib = family_lookup("fibonacci")
        for n in range(31):
            assert list(fib.term(n).components) == classical[n:n + 4]


class TestFamilyRegistry:
    def test_twelve_rows(self):
        assert len(FAMILIES) == 12

    @pytest.mark.parametrize(
        "name,free,expected",
        [
            ("fibonacci", {}, (1, 1, 1, 0, 1)),
            ("lucas", {}, (1, 1, 1, 2, 1)),
            ("pell", {}, (2, 2, 1, 0, 1)),
            ("pell-lucas", {}, (2, 2, 1, 2, 2)),
            ("jacobsthal", {}, (1, 1, 2, 0, 1)),
            ("jacobsthal-lucas", {}, (1, 1, 2, 2, 1)),
            ("k-pell", {"k": 3}, (2, 2, 3, 0, 1)),
            ("pq-fibonacci", {"p": 3, "q": 2}, (3, 3, 2, 0, 1)),
            ("pq-lucas", {"p": 3, "q": 2}, (3, 3, 2, 2, 3)),
            ("horadam", {"W0": 1, "W1": 2, "p": 3, "q": 2}, (3, 3, -2, 1, 2)),
            ("gen-bi-periodic-fibonacci", {"a": 2, "b": 3, "c": 1}, (2, 3, 1, 0, 1)),
            ("gen-bi-periodic-lucas", {"a": 2, "b": 3, "c": 1}, (2, 3, 1, 2, 3)),
        ],
    )
    def test_rows_resolve_to_spec_tuples(self, name, free, expected):
        hs = family_lookup(name, **free)
        p = hs.params
        assert (p.a, p.b, p.c, p.w0, p.w1) == expected

    def test_positional_free_param(self):
        assert family_lookup("k-pell", 3).params.c == 3

    def test_unknown_family(self):
        with pytest.raises(FamilyError, match="unknown family"):
            family_lookup("tribonacci")

    def test_missing_parameter(self):
        with pytest.raises(FamilyError, match="missing"):
            family_lookup("k-pell")

    def test_extra_parameter(self):
        with pytest.raises(FamilyError, match="unexpected"):
            family_lookup("fibonacci", k=3)

    def test_positional_on_multi_param_family(self):
        with pytest.raises(FamilyError):
            family_lookup("horadam", 3)

    def test_spec_tuple_rendering(self):
        by_name = {f.name: f for f in FAMILIES}
        assert by_name["k-pell"].spec_tuple() == "(0,1;2,2,k)"
        assert by_name["horadam"].spec_tuple() == "(W0,W1;p,p,-q)"
