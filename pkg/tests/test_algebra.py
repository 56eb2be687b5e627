"""Exact-arithmetic substrate: polynomials, determinants, Magnus expansion."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cassurg.algebra import (AlgebraError, FreeWord, LaurentPoly,
                             MagnusSeries, det, det_permutation_expansion,
                             magnus_expand, poly_det, poly_eval_derivatives)

T = ("t",)
T3 = ("t1", "t2", "t3")


def tvar(name, variables):
    return LaurentPoly.var(name, variables)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class TestLaurentPoly:
    def test_zero_coefficients_dropped(self):
        p = LaurentPoly(T, {(1,): 0, (0,): 2})
        assert p.terms == {(0,): 2}

    def test_add_mul_basic(self):
        t = tvar("t", T)
        p = t + 1
        q = t - 1
        assert p * q == t * t - 1

    def test_shift_and_invert(self):
        t = tvar("t", T)
        p = t * t - t + 1
        assert p.shift((-1,)) == t - 1 + LaurentPoly(T, {(-1,): 1})
        sym = p.shift((-1,))
        assert sym.invert_variables() == sym

    def test_variable_mismatch(self):
        with pytest.raises(AlgebraError):
            tvar("t", T) + tvar("t1", T3)

    def test_normalized_canonical(self):
        t = tvar("t", T)
        p = LaurentPoly(T, {(-2,): -3, (0,): 6})
        n = p.normalized()
        assert n == LaurentPoly(T, {(0,): 3, (2,): -6})
        assert (-p).normalized() == n
        assert (p * t * t).normalized() == n

    def test_div_exact_tj_minus_1(self):
        t1 = tvar("t1", T3)
        t2 = tvar("t2", T3)
        t3 = tvar("t3", T3)
        prod_poly = (t1 - 1) * (t2 - 1) * (t3 - 1)
        assert prod_poly.div_exact_tj_minus_1(0) == (t2 - 1) * (t3 - 1)
        with pytest.raises(AlgebraError):
            ((t1 * t2) + 1).div_exact_tj_minus_1(0)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)),
                    max_size=5),
           st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)),
                    max_size=5),
           st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)),
                    max_size=5))
    def test_ring_axioms(self, a, b, c):
        def mk(pairs):
            return LaurentPoly(T, {(e,): coeff for e, coeff in pairs})
        p, q, r = mk(a), mk(b), mk(c)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) * r == p * r + q * r
        assert (p * q) * r == p * (q * r)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)),
                    max_size=5),
           st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)),
                    max_size=5))
    def test_mul_commutes_with_eval_at_one(self, a, b):
        def mk(pairs):
            return LaurentPoly(T, {(e,): coeff for e, coeff in pairs})
        p, q = mk(a), mk(b)
        assert (p * q).eval_at_ones() == p.eval_at_ones() * q.eval_at_ones()


class TestPolyEvalDerivatives:
    def test_symmetric_trefoil_poly(self):
        p = LaurentPoly(T, {(1,): 1, (0,): -1, (-1,): 1})  # t - 1 + 1/t
        assert poly_eval_derivatives(p, (2,)) == 2

    def test_triple_product(self):
        t1, t2, t3 = (tvar(v, T3) for v in T3)
        p = (t1 - 1) * (t2 - 1) * (t3 - 1)
        assert poly_eval_derivatives(p, (1, 1, 1)) == 1

    def test_constant_vanishes(self):
        p = LaurentPoly.constant(1, T)
        assert poly_eval_derivatives(p, (3,)) == 0

    def test_order_mismatch(self):
        with pytest.raises(AlgebraError):
            poly_eval_derivatives(LaurentPoly.constant(1, T), (1, 1))


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------

class TestDet:
    def test_identity(self):
        assert det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1

    def test_kirby_shape_always_minus_one(self):
        for f in range(-5, 6):
            assert det([[0, 1], [1, f]]) == -1

    def test_two_by_two_symbolic_shape(self):
        for f1, lk, f2 in product(range(-3, 4), repeat=3):
            assert det([[f1, lk], [lk, f2]]) == f1 * f2 - lk * lk

    def test_non_square(self):
        with pytest.raises(AlgebraError):
            det([[1, 2, 3], [4, 5, 6]])

    def test_against_permutation_expansion_exhaustive(self):
        # every 3x3 matrix with entries in [-2, 2]
        rng = range(-2, 3)
        mismatches = 0
        for d, e, f in product(rng, repeat=3):
            for g, h, i in product(rng, repeat=3):
                m1 = e * i - f * h
                m2 = d * i - f * g
                m3 = d * h - e * g
                for a in rng:
                    for b in rng:
                        for c in rng:
                            brute = a * m1 - b * m2 + c * m3
                            if det([[a, b, c], [d, e, f], [g, h, i]]) != brute:
                                mismatches += 1
        assert mismatches == 0

    def test_permutation_expansion_oracle_random(self):
        rng = random.Random(11)
        for n in (1, 2, 3, 4):
            for _ in range(25):
                m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
                assert det(m) == det_permutation_expansion(m)

    def test_poly_det_matches_int_det(self):
        rng = random.Random(5)
        for n in (1, 2, 3, 4):
            for _ in range(10):
                m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
                pm = [[LaurentPoly.constant(v, T) for v in row] for row in m]
                assert poly_det(pm) == LaurentPoly.constant(det(m), T)

    def test_poly_det_vandermonde(self):
        t1, t2, t3 = (tvar(v, T3) for v in T3)
        one = LaurentPoly.constant(1, T3)
        m = [[one, t1, t1 * t1], [one, t2, t2 * t2], [one, t3, t3 * t3]]
        expected = (t2 - t1) * (t3 - t1) * (t3 - t2)
        assert poly_det(m) == expected


# ---------------------------------------------------------------------------
# Free words and Magnus expansion
# ---------------------------------------------------------------------------

class TestFreeWord:
    def test_free_reduction(self):
        w = FreeWord([(1, 1), (2, 1), (2, -1), (1, -1)])
        assert w.is_identity()

    def test_inverse(self):
        w = FreeWord([(1, 1), (2, -1), (3, 1)])
        assert (w * w.inverse()).is_identity()
        assert (w.inverse() * w).is_identity()

    def test_exponent_sum(self):
        w = FreeWord([(1, 1), (2, 1), (1, 1), (2, -1)])
        assert w.exponent_sum(1) == 2
        assert w.exponent_sum(2) == 0

    def test_bad_letters(self):
        with pytest.raises(AlgebraError):
            FreeWord([(0, 1)])
        with pytest.raises(AlgebraError):
            FreeWord([(1, 2)])


def random_word(rng, rank=3, length=6):
    return FreeWord((rng.randint(1, rank), rng.choice((1, -1)))
                    for _ in range(rng.randint(0, length)))


class TestMagnus:
    def test_identity_element(self):
        assert magnus_expand(FreeWord(), 2) == MagnusSeries.one(2)

    def test_single_generator(self):
        s = magnus_expand(FreeWord.generator(1), 2)
        assert s == MagnusSeries(2, {(): 1, (1,): 1})

    def test_commutator(self):
        w = FreeWord([(1, 1), (2, 1), (1, -1), (2, -1)])
        s = magnus_expand(w, 2)
        assert s == MagnusSeries(2, {(): 1, (1, 2): 1, (2, 1): -1})

    def test_inverse_series(self):
        s = magnus_expand(FreeWord.generator(1, -1), 3)
        assert s == MagnusSeries(3, {(): 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1})

    def test_rank_guard(self):
        with pytest.raises(AlgebraError):
            magnus_expand(FreeWord.generator(4), 2, rank=3)

    def test_homomorphism_property(self):
        rng = random.Random(23)
        for _ in range(80):
            w1, w2 = random_word(rng), random_word(rng)
            lhs = magnus_expand(w1 * w2, 2)
            rhs = magnus_expand(w1, 2) * magnus_expand(w2, 2)
            assert lhs == rhs

    def test_truncated_inverse(self):
        rng = random.Random(29)
        for degree in (1, 2, 3):
            for _ in range(40):
                w = random_word(rng)
                prod_series = magnus_expand(w * w.inverse(), degree)
                assert prod_series == MagnusSeries.one(degree)
