"""Tests for `permlab.polynomials`."""


import fractions
import unittest

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from permlab.polynomials import (GammaVector,
                                 IntPoly,
                                 ONE,
                                 T,
                                 count_real_roots,
                                 divide_exact,
                                 gamma_vector,
                                 is_palindromic,
                                 is_real_rooted,
                                 poly_gcd,
                                 pseudo_remainder,
                                 squarefree_part,
                                 sturm_chain,
                                 )


coeff_lists = st.lists(st.integers(-50, 50), max_size=7)


def _from_roots(roots):
    f = ONE
    for a in roots:
        f = f * IntPoly([-a, 1])
    return f


class test_int_poly(unittest.TestCase):
    """Arithmetic of `IntPoly`."""

    def test_normalization(self):
        """Trailing zeros are dropped, integers compare as constants."""
        self.assertEqual(IntPoly([1, 2, 0, 0]).coeffs, (1, 2))
        self.assertEqual(IntPoly([0, 0]), 0)
        self.assertEqual(IntPoly([3]), 3)
        self.assertEqual(IntPoly().degree, -1)
        self.assertEqual(str(IntPoly()), '0')
        self.assertEqual(str(IntPoly([-1, 1, -3])), '-1 + t - 3t^2')
        self.assertEqual(IntPoly([2, 3])[5], 0)
        with self.assertRaises(IndexError):
            IntPoly([2, 3])[-1]
        with self.assertRaises(ValueError):
            IntPoly([1.5])

    def test_operations(self):
        """Powers, shifts and evaluation."""
        self.assertEqual((ONE + T)**4, IntPoly([1, 4, 6, 4, 1]))
        self.assertEqual(T.shift(2), IntPoly.monomial(3))
        self.assertEqual(IntPoly([1, 6, 1])(-1), -4)
        self.assertEqual(IntPoly([1, 1]).eval_at(fractions.Fraction(1, 3)),
                         fractions.Fraction(4, 3))
        self.assertEqual(3 - T, IntPoly([3, -1]))
        self.assertEqual(IntPoly([6, 0, 9]).content, 3)
        with self.assertRaises(ValueError):
            IntPoly([1, 1]).shift(-1)
        with self.assertRaises(ValueError):
            T**-1

    @given(coeff_lists, coeff_lists, coeff_lists, st.integers(-5, 5))
    @settings(max_examples=100, deadline=None)
    def test_ring(self, a, b, c, x):
        """Ring axioms and evaluation as a homomorphism."""
        f, g, h = IntPoly(a), IntPoly(b), IntPoly(c)
        self.assertEqual(f * (g + h), f * g + f * h)
        self.assertEqual(f * g, g * f)
        self.assertEqual((f - g) + g, f)
        self.assertEqual((f * g)(x), f(x) * g(x))
        self.assertEqual(hash(f + 0), hash(f))
        self.assertEqual((f * g).derivative(),
                         f.derivative() * g + f * g.derivative())

    @given(coeff_lists, coeff_lists)
    @settings(max_examples=100, deadline=None)
    def test_exact_division(self, a, b):
        """Division undoes multiplication."""
        f, g = IntPoly(a), IntPoly(b)
        assume(not g.is_zero)
        self.assertEqual(divide_exact(f * g, g), f)


class test_gamma(unittest.TestCase):
    """Palindromicity and gamma vectors."""

    def test_eulerian(self):
        """Eulerian polynomials have nonnegative gamma vectors."""
        a3 = IntPoly([1, 4, 1])
        self.assertEqual(gamma_vector(a3, 2), GammaVector([1, 2], 2))
        a4 = IntPoly([1, 11, 11, 1])
        self.assertEqual(gamma_vector(a4, 3).to_list(), [1, 8])
        self.assertTrue(gamma_vector(a4, 3).is_nonnegative())
        self.assertFalse(GammaVector([1, -1], 2).is_nonnegative())

    def test_center(self):
        """Polynomials may be palindromic about a larger center."""
        f = IntPoly([0, 1, 1])
        self.assertTrue(is_palindromic(f, 3))
        self.assertFalse(is_palindromic(f, 2))
        self.assertEqual(gamma_vector(f, 3).reconstruct(), f)

    def test_invalid(self):
        """Wrong length or non-palindromic input."""
        with self.assertRaises(ValueError):
            GammaVector([1, 2, 3], 2)
        with self.assertRaises(ValueError):
            gamma_vector(IntPoly([1, 3, 2]), 2)

    @given(st.integers(0, 8), st.data())
    @settings(max_examples=100, deadline=None)
    def test_reconstruct(self, m, data):
        """Gamma vectors expand back to their polynomial."""
        coeffs = data.draw(st.lists(st.integers(-20, 20),
                                    min_size=m // 2 + 1,
                                    max_size=m // 2 + 1))
        g = GammaVector(coeffs, m)
        f = g.reconstruct()
        assume(not f.is_zero)
        self.assertTrue(is_palindromic(f, m))
        self.assertEqual(gamma_vector(f, m), g)


class test_sturm(unittest.TestCase):
    """Real-rootedness certificates."""

    def test_pseudo_remainder_sign(self):
        """The scaling factor is positive."""
        a = IntPoly([3, 1, 4, 1])
        b = IntPoly([1, -5])
        r = pseudo_remainder(a, b)
        self.assertEqual(r.degree, 0)
        self.assertGreater(r[0] * a.eval_at(fractions.Fraction(1, 5)), 0)
        with self.assertRaises(ZeroDivisionError):
            pseudo_remainder(a, IntPoly())

    def test_negative_leading_coefficient(self):
        """Odd powers of a negative leading coefficient are undone."""
        a = IntPoly([3, 0, 0, 1])
        b = IntPoly([1, -1])
        self.assertEqual(pseudo_remainder(a, b), IntPoly([a(1)]))
        self.assertEqual(pseudo_remainder(b, a), b)

    def test_repeated_roots(self):
        """Chains are built from the square-free part."""
        f = _from_roots([1, 1, 2])
        self.assertEqual(poly_gcd(f, f.derivative()), IntPoly([-1, 1]))
        self.assertEqual(squarefree_part(f), _from_roots([1, 2]))
        self.assertEqual(squarefree_part(-f), _from_roots([1, 2]))
        chain = sturm_chain(f)
        self.assertEqual(chain[0], _from_roots([1, 2]))
        self.assertEqual(chain[-1].degree, 0)
        self.assertTrue(all(p.content == 1 for p in chain))
        self.assertEqual(sturm_chain(IntPoly([-7])), [IntPoly([-1])])

    def test_sympy_conversion(self):
        """Integer polynomials pass through `sympy` unchanged."""
        f = IntPoly([0, -4, 0, 9])
        self.assertEqual(f.to_sympy().all_coeffs(), [9, 0, -4, 0])
        self.assertEqual(f.to_sympy().degree(), f.degree)
        self.assertEqual(IntPoly.from_sympy(f.to_sympy()), f)
        self.assertEqual(IntPoly.from_sympy(IntPoly().to_sympy()), IntPoly())
        with self.assertRaises(ValueError):
            divide_exact(f, IntPoly([0, 2, 0, 0, 1]))

    def test_examples(self):
        """Polynomials with and without complex roots."""
        self.assertTrue(is_real_rooted(IntPoly([1, 11, 11, 1])))
        self.assertTrue(is_real_rooted(IntPoly([5])))
        self.assertTrue(is_real_rooted(T**3))
        self.assertFalse(is_real_rooted(IntPoly([1, 1, 1])))
        self.assertEqual(count_real_roots(IntPoly([1, 0, -2])), 2)

    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=6),
           st.integers(1, 3))
    @settings(max_examples=100, deadline=None)
    def test_product_of_linear_factors(self, roots, scale):
        """Products of real linear factors are real-rooted."""
        f = _from_roots(roots).scalar_mul(scale)
        self.assertTrue(is_real_rooted(f))
        self.assertEqual(count_real_roots(f), len(set(roots)))
        self.assertFalse(is_real_rooted(f * IntPoly([1, 0, 1])))


if __name__ == '__main__':
    unittest.main()
