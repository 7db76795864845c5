"""Tests for `permlab.series`."""


import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.eulerian import family_classes, stat_polynomial
from permlab.groups import GroupSpec
from permlab.polynomials import IntPoly
from permlab.series import (TruncatedSeries,
                            brenti_lhs,
                            brenti_rhs,
                            carlitz_lhs,
                            carlitz_rhs,
                            inverse_power_one_minus_t,
                            )


class test_truncated_series(unittest.TestCase):
    """Arithmetic of `TruncatedSeries`."""

    def test_padding(self):
        """Coefficients are padded and truncated to K + 1."""
        self.assertEqual(TruncatedSeries([1, 2, 3, 4], 1).coeffs, (1, 2))
        self.assertEqual(TruncatedSeries([], 2).coeffs, (0, 0, 0))
        self.assertEqual(len(TruncatedSeries([5], 4)), 5)
        with self.assertRaises(ValueError):
            TruncatedSeries([1], -1)

    def test_mismatched_orders(self):
        """Series of different orders cannot be combined."""
        with self.assertRaises(ValueError):
            TruncatedSeries([1], 2) + TruncatedSeries([1], 3)
        with self.assertRaises(ValueError):
            TruncatedSeries([1], 2).first_difference(TruncatedSeries([1], 3))

    @given(st.integers(0, 6), st.integers(0, 12))
    @settings(max_examples=50, deadline=None)
    def test_inverse_power(self, m, K):
        """(1 - t)^m times (1 - t)^-m is 1."""
        one_minus_t = TruncatedSeries.from_poly(IntPoly([1, -1]), K)
        product = TruncatedSeries([1], K)
        for _ in range(m):
            product = product * one_minus_t
        self.assertEqual(product * inverse_power_one_minus_t(m, K),
                         TruncatedSeries([1], K))

    def test_scalar(self):
        """Integer multiples."""
        s = TruncatedSeries([1, 2], 2)
        self.assertEqual(3 * s, TruncatedSeries([3, 6], 2))
        with self.assertRaises(ValueError):
            inverse_power_one_minus_t(-1, 3)


class test_carlitz(unittest.TestCase):
    """Carlitz-type identities for type B classes."""

    def test_identity(self):
        """Both sides agree for every class."""
        for n in range(1, 9):
            for i in family_classes('B', n):
                self.assertIsNone(
                        carlitz_lhs(n, i, 15).first_difference(
                            carlitz_rhs(n, i, 15)),
                        msg=(n, i))

    def test_enumerated_lhs(self):
        """Left side from enumerated class polynomials."""
        spec = GroupSpec(3, signed=True)
        for i in family_classes('B', 3):
            first = (abs(i), 1 if i > 0 else -1)
            poly = stat_polynomial(spec, 'des_b', first=first)
            self.assertEqual(carlitz_lhs(3, i, 10, poly=poly),
                             carlitz_rhs(3, i, 10))

    def test_strict_sum(self):
        """Summing from k = 1 only loses the constant term of i = 1."""
        for n in range(1, 7):
            for i in family_classes('B', n):
                index = carlitz_lhs(n, i, 10).first_difference(
                        carlitz_rhs(n, i, 10, strict_paper=True))
                self.assertEqual(index, 0 if i == 1 else None, msg=(n, i))

    def test_invalid(self):
        """Classes and orders out of range."""
        with self.assertRaises(ValueError):
            carlitz_rhs(3, 0, 5)
        with self.assertRaises(ValueError):
            carlitz_lhs(3, -4, 5)
        with self.assertRaises(ValueError):
            carlitz_rhs(3, 1, 0)


class test_brenti(unittest.TestCase):
    """Series of the type B Eulerian polynomial."""

    def test_identity(self):
        """Both sides agree."""
        for n in range(1, 9):
            self.assertEqual(brenti_lhs(n, 20), brenti_rhs(n, 20))
        with self.assertRaises(ValueError):
            brenti_rhs(0, 5)


if __name__ == '__main__':
    unittest.main()
