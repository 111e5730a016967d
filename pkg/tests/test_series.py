import random
from fractions import Fraction
from math import factorial

import pytest

from sethopf.compositions import canonical_set
from sethopf.errors import DomainError
from sethopf.hopf import antipode, h_elem, q_elem, to_h, unit_elem
from sethopf.scalars import C_QFT, QI
from sethopf.series import (
    ProductSystem,
    SigmaSeries,
    TruncSeries,
    convolve,
    eval_system,
    formal_diff,
    homomorphism_check,
    is_group_like,
    perturb_arrow,
    perturb_coderivation,
    polynomial_system,
    reverse_exponential,
    series_antipode,
    t_exponential,
    unit_series,
    universal_series,
)
from sethopf.causal import CAUSAL_SYSTEM, TimedObservable
from sethopf.words import WordElem


class TestSigmaSeries:
    def test_universal_series_terms(self):
        g = universal_series(QI(1), 3)
        assert g.term(2) == h_elem((1, 2))
        z = universal_series(QI(0), 3)
        assert z.term(0) == unit_elem() and z.term(1).is_zero()

    def test_invariance_validated(self):
        bad = h_elem((1,), (2,))  # not S_2-invariant
        with pytest.raises(DomainError):
            SigmaSeries({2: bad}, 2)

    def test_antipode_composition(self):
        g = universal_series(QI(2), 3)
        sg = series_antipode(g)
        expected = antipode(h_elem((1, 2))).scale(QI(4))
        assert sg.term(2) == expected


class TestConvolve:
    def test_unit(self):
        g = universal_series(QI(Fraction(1, 2)), 4)
        assert convolve(unit_series(4), g) == g
        assert convolve(g, unit_series(4)) == g

    def test_degree_one_doubling(self):
        c = QI(3)
        g = universal_series(c, 2)
        assert convolve(g, g).term(1) == h_elem((1,)).scale(QI(6))

    def test_group_inverse(self):
        g = universal_series(QI(5), 4)
        assert convolve(g, series_antipode(g)) == unit_series(4)
        assert convolve(series_antipode(g), g) == unit_series(4)

    def test_truncation_mismatch(self):
        with pytest.raises(DomainError):
            convolve(unit_series(2), unit_series(3))


class TestGroupLike:
    def test_universal_is_group_like(self):
        assert is_group_like(universal_series(QI(2), 3))

    def test_unit_is_group_like(self):
        assert is_group_like(unit_series(3))

    def test_primitive_series_is_not(self):
        s = SigmaSeries({n: to_h(q_elem(canonical_set(n))) for n in (1, 2)}, 2)
        assert not is_group_like(s)


class TestEvalSystem:
    def test_polynomial_spec_example(self):
        sys = polynomial_system({"g1": Fraction(2), "g2": Fraction(3)})
        got = eval_system(sys, h_elem((1, 2)), {1: "g1", 2: "g2"})
        assert got == WordElem.scalar(Fraction(6))

    def test_unit(self):
        sys = polynomial_system({})
        assert eval_system(sys, unit_elem(), {}) == WordElem.unit()

    def test_causal_word(self):
        a = TimedObservable("a", 0)
        b = TimedObservable("b", 1)
        got = eval_system(CAUSAL_SYSTEM, h_elem((1,), (2,)), {1: a, 2: b})
        assert got == WordElem.word(("a", "b"))

    def test_missing_decoration(self):
        with pytest.raises(DomainError):
            eval_system(CAUSAL_SYSTEM, h_elem((1, 2)), {1: TimedObservable("a", 0)})

    def test_equivariance(self):
        # relabeling the element and the decoration together changes nothing
        from sethopf.hopf import relabel

        a = TimedObservable("a", 0)
        b = TimedObservable("b", 1)
        x = h_elem((1, 2), (3,))
        dec = {1: a, 2: b, 3: TimedObservable("c", 2)}
        sigma = {1: 3, 2: 1, 3: 2}
        moved = relabel(x, sigma)
        moved_dec = {sigma[i]: v for i, v in dec.items()}
        assert eval_system(CAUSAL_SYSTEM, x, dec) == eval_system(CAUSAL_SYSTEM, moved, moved_dec)


class TestHomomorphismCheck:
    def test_polynomial_true(self):
        sys = polynomial_system({"A": Fraction(2)})
        assert homomorphism_check(sys, 3, {1: "A", 2: "A", 3: "A"})

    def test_causal_true(self):
        dec = {i: TimedObservable(f"x{i}", i) for i in (1, 2, 3)}
        assert homomorphism_check(CAUSAL_SYSTEM, 3, dec)

    def test_broken_detected(self):
        broken = ProductSystem(
            "broken",
            lambda F, dec: WordElem.unit() if len(F.ground) <= 1 else WordElem.zero(),
        )
        assert not homomorphism_check(broken, 2, {1: "A", 2: "A"})


class TestTExponential:
    def test_unit_series_constant_one(self):
        sys = polynomial_system({"A": Fraction(1)})
        assert t_exponential(sys, unit_series(3), "A", 3) == TruncSeries.unit(3)

    def test_classical_exponential(self):
        sys = polynomial_system({"A": Fraction(1)})
        s = t_exponential(sys, universal_series(QI(1), 6), "A", 6)
        for k in range(7):
            assert s.coeff(0, k) == WordElem.scalar(Fraction(1, factorial(k)))

    def test_homomorphism_law(self):
        sys = polynomial_system({"A": Fraction(2)})
        s = universal_series(QI(1), 4)
        t = universal_series(QI(3), 4)
        lhs = t_exponential(sys, convolve(s, t), "A", 4)
        rhs = t_exponential(sys, s, "A", 4) * t_exponential(sys, t, "A", 4)
        assert lhs == rhs

    def test_inverse(self):
        a = TimedObservable("a", 0)
        g = universal_series(C_QFT, 3)
        sinv = t_exponential(CAUSAL_SYSTEM, series_antipode(g), a, 3)
        s = t_exponential(CAUSAL_SYSTEM, g, a, 3)
        assert s * sinv == TruncSeries.unit(3)
        assert sinv * s == TruncSeries.unit(3)


class TestTruncSeries:
    def test_multiplication_matches_naive_convolution(self):
        rng = random.Random(12)

        def rand_series(order):
            terms = {}
            for r in range(order + 1):
                for n in range(order + 1 - r):
                    coeff = Fraction(rng.randint(-3, 3))
                    if coeff:
                        terms[(r, n)] = WordElem.word(("w",), coeff)
            return TruncSeries(order, terms)

        for _ in range(5):
            u = rand_series(3)
            v = rand_series(3)
            got = u * v
            # independent naive double loop
            expected = {}
            for (r1, n1), a in u.terms.items():
                for (r2, n2), b in v.terms.items():
                    if r1 + r2 + n1 + n2 <= 3:
                        key = (r1 + r2, n1 + n2)
                        expected[key] = expected.get(key, WordElem.zero()) + a * b
            assert got == TruncSeries(3, expected)

    def test_unit(self):
        u = TruncSeries.unit(2)
        x = TruncSeries(2, {(1, 1): WordElem.word(("a",))})
        assert u * x == x

    def test_formal_diff(self):
        x = WordElem.scalar(1)
        ts = TruncSeries(3, {(0, 1): x, (0, 2): x.scale(Fraction(1, 2)), (1, 0): x})
        d = formal_diff(ts, "j")
        assert d.coeff(0, 0) == x
        assert d.coeff(0, 1) == x
        assert d.coeff(1, 0).is_zero()
        dg = formal_diff(ts, "g")
        assert dg.coeff(0, 0) == x

    def test_order_guard(self):
        with pytest.raises(DomainError):
            TruncSeries(1, {(1, 1): WordElem.unit()})


class TestPerturbations:
    def test_coderivation_zero_coupling_slice(self):
        sys = polynomial_system({"A": Fraction(1), "S": Fraction(1)})
        got = perturb_coderivation(sys, universal_series(QI(1), 3), "S", "A", 3)
        assert got.at_g_zero() == t_exponential(sys, universal_series(QI(1), 3), "A", 3)

    def test_coderivation_matches_binomial_expansion(self):
        sys = polynomial_system({"A": Fraction(2), "S": Fraction(3)})
        got = perturb_coderivation(sys, universal_series(QI(1), 3), "S", "A", 3)
        # S(gS + jA) expanded by hand: coefficient of g^r j^n is
        # C(r+n, r)/(r+n)! * 3^r * 2^n = 3^r 2^n / (r! n!)
        for r in range(4):
            for n in range(4 - r):
                expected = Fraction(3**r * 2**n, factorial(r) * factorial(n))
                assert got.coeff(r, n) == WordElem.scalar(expected)

    def test_coderivation_requires_universal(self):
        s = SigmaSeries({0: unit_elem(), 1: h_elem((1,)).scale(QI(2)), 2: h_elem((1, 2))}, 2)
        with pytest.raises(DomainError):
            perturb_coderivation(polynomial_system({"A": 1, "S": 1}), s, "S", "A", 2)

    def test_arrow_g0_slice(self):
        a = TimedObservable("a", 1)
        s = TimedObservable("s", 0)
        v = perturb_arrow(CAUSAL_SYSTEM, s, a, 2, "down")
        assert v.at_g_zero() == t_exponential(
            CAUSAL_SYSTEM, universal_series(C_QFT, 2), a, 2
        )

    def test_arrow_down_equals_factorized_product(self):
        a = TimedObservable("a", 1)
        s = TimedObservable("s", 0)
        v = perturb_arrow(CAUSAL_SYSTEM, s, a, 2, "down")
        sinv = reverse_exponential(CAUSAL_SYSTEM, C_QFT, s, 2)
        stwo = perturb_coderivation(CAUSAL_SYSTEM, universal_series(C_QFT, 2), s, a, 2)
        assert v == sinv * stwo

    def test_arrow_up_mirror(self):
        a = TimedObservable("a", 1)
        s = TimedObservable("s", 0)
        w = perturb_arrow(CAUSAL_SYSTEM, s, a, 2, "up")
        sinv = reverse_exponential(CAUSAL_SYSTEM, C_QFT, s, 2)
        stwo = perturb_coderivation(CAUSAL_SYSTEM, universal_series(C_QFT, 2), s, a, 2)
        assert w == stwo * sinv

    def test_exponential_splitting(self):
        sys = polynomial_system({"A": Fraction(2), "B": Fraction(5), "A+B": Fraction(7)})
        g = universal_series(QI(1), 4)
        lhs = t_exponential(sys, g, "A+B", 4)
        rhs = t_exponential(sys, g, "A", 4) * t_exponential(sys, g, "B", 4)
        assert lhs == rhs
