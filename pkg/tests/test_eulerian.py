"""Tests for `permlab.eulerian`."""


import math
import unittest

from permlab.constants import FIRST_LETTER_TABLE_N6
from permlab.eulerian import (class_polynomials,
                              conger_count,
                              conger_polynomial,
                              eulerian_a,
                              eulerian_number,
                              family_classes,
                              family_polynomial,
                              first_letter_distributions,
                              lemma_drop_rhs,
                              stat_polynomial,
                              symmetrized_bar,
                              symmetrized_bar_rhs,
                              symmetrized_tilde,
                              symmetrized_tilde_rhs,
                              typeb_boundary_rhs,
                              typeb_count_rec,
                              typeb_des_poly_rec,
                              typeb_eulerian,
                              typeb_exc_count_rec,
                              typeb_exc_poly_rec,
                              )
from permlab.groups import GroupSpec
from permlab.orders import min_one_order, random_order
from permlab.polynomials import IntPoly, T, gamma_vector, is_palindromic


class test_type_a(unittest.TestCase):
    """Eulerian and restricted Eulerian polynomials."""

    def test_published_table(self):
        """Formula and enumeration reproduce the table for n = 6."""
        a = class_polynomials('A', 6)
        aexc = class_polynomials('AExc', 6)
        for j in range(1, 7):
            expected = IntPoly(FIRST_LETTER_TABLE_N6['A'][j])
            self.assertEqual(conger_polynomial(6, j), expected)
            self.assertEqual(a[j], expected)
            self.assertEqual(aexc[j],
                             IntPoly(FIRST_LETTER_TABLE_N6['AExc'][j]))

    def test_eulerian_numbers(self):
        """Recurrence, alternating sum and enumeration agree."""
        for n in range(1, 7):
            f = eulerian_a(n)
            self.assertEqual(f.to_list(),
                             [eulerian_number(n, k) for k in range(n)])
            self.assertEqual(f, stat_polynomial(GroupSpec(n), 'des'))
            self.assertEqual(f, stat_polynomial(GroupSpec(n), 'exc'))
            self.assertEqual(f(1), math.factorial(n))
        self.assertEqual(eulerian_a(0), IntPoly([1]))
        with self.assertRaises(ValueError):
            eulerian_a(-1)

    def test_descents_versus_excedances(self):
        """Class k for descents is class n + 2 - k for excedances."""
        for n in range(2, 7):
            a = class_polynomials('A', n)
            aexc = class_polynomials('AExc', n)
            self.assertEqual(a[1], aexc[1])
            self.assertEqual(a[1], eulerian_a(n - 1))
            for j in range(2, n + 1):
                self.assertEqual(a[j], aexc[n + 2 - j])

    def test_conger_errors(self):
        """Out of range arguments."""
        with self.assertRaises(ValueError):
            conger_count(4, 0, 5)
        with self.assertRaises(ValueError):
            conger_count(4, -1, 1)


class test_type_b(unittest.TestCase):
    """First-letter polynomials of signed permutations."""

    def test_recurrences_match_enumeration(self):
        """Polynomial and coefficient recurrences against enumeration."""
        for n in range(1, 6):
            des = class_polynomials('B', n)
            exc = class_polynomials('BE', n)
            for k in family_classes('B', n):
                self.assertEqual(typeb_des_poly_rec(n, k), des[k])
                self.assertEqual(typeb_exc_poly_rec(n, k), exc[k])
                self.assertEqual([typeb_count_rec(n, dsc, k)
                                  for dsc in range(n + 1)],
                                 [des[k][dsc] for dsc in range(n + 1)])
                self.assertEqual([typeb_exc_count_rec(n, e, k)
                                  for e in range(n + 1)],
                                 [exc[k][e] for e in range(n + 1)])

    def test_descents_versus_excedances(self):
        """Classes of 1 agree, the others swap sign."""
        for n in range(1, 6):
            for k in range(1, n + 1):
                if k == 1:
                    self.assertEqual(typeb_des_poly_rec(n, 1),
                                     typeb_exc_poly_rec(n, 1))
                    self.assertEqual(typeb_des_poly_rec(n, -1),
                                     typeb_exc_poly_rec(n, -1))
                else:
                    self.assertEqual(typeb_des_poly_rec(n, k),
                                     typeb_exc_poly_rec(n, -k))
                    self.assertEqual(typeb_des_poly_rec(n, -k),
                                     typeb_exc_poly_rec(n, k))

    def test_boundary_classes(self):
        """Classes of +-n are 2^(n-1) t A_{n-1}."""
        for n in range(2, 8):
            expected = T.scalar_mul(2**(n - 1)) * eulerian_a(n - 1)
            self.assertEqual(typeb_des_poly_rec(n, n), expected)
            self.assertEqual(typeb_des_poly_rec(n, -n), expected)
            self.assertEqual(typeb_boundary_rhs(n), expected)

    def test_eulerian_sum(self):
        """Classes sum to the type B Eulerian polynomial."""
        for n in range(1, 9):
            f = typeb_eulerian(n)
            self.assertEqual(f(1), 2**n * math.factorial(n))
            self.assertTrue(is_palindromic(f, n))
        self.assertEqual(typeb_eulerian(4).to_list(), [1, 76, 230, 76, 1])
        spec = GroupSpec(4, signed=True)
        self.assertEqual(stat_polynomial(spec, 'des_b'), typeb_eulerian(4))
        self.assertEqual(stat_polynomial(spec, 'exc_b'), typeb_eulerian(4))

    def test_first_letter_drop(self):
        """Level n + 1 classes assemble from level n."""
        for n1 in range(2, 8):
            for k in family_classes('B', n1):
                self.assertEqual(lemma_drop_rhs(n1, k),
                                 typeb_des_poly_rec(n1, k))
        with self.assertRaises(ValueError):
            lemma_drop_rhs(1, 1)

    def test_symmetrized(self):
        """Symmetrized polynomials: centers, gamma vectors, recurrences."""
        for n in range(1, 10):
            for k in range(1, n + 1):
                bar = symmetrized_bar(n, k)
                tilde = symmetrized_tilde(n, k)
                self.assertTrue(gamma_vector(bar, n).is_nonnegative())
                self.assertTrue(gamma_vector(tilde, n + 1).is_nonnegative())
                if n >= 2:
                    self.assertEqual(symmetrized_bar_rhs(n, k), bar)
                    self.assertEqual(symmetrized_tilde_rhs(n, k), tilde)
        with self.assertRaises(ValueError):
            symmetrized_bar(3, -1)

    def test_errors(self):
        """Classes must exist."""
        with self.assertRaises(ValueError):
            typeb_des_poly_rec(3, 0)
        with self.assertRaises(ValueError):
            typeb_des_poly_rec(3, 4)
        with self.assertRaises(ValueError):
            typeb_count_rec(3, 4, 1)
        with self.assertRaises(ValueError):
            typeb_exc_count_rec(3, -1, 1)


class test_enumeration(unittest.TestCase):
    """Distributions over enumerated groups."""

    def test_class_sizes(self):
        """Class polynomials count `class_size` elements."""
        spec = GroupSpec(3, 3)
        polys = first_letter_distributions(spec, 'ldes', min_one_order(3, 3))
        self.assertEqual(len(polys), 9)
        self.assertTrue(all(f(1) == spec.class_size for f in polys.values()))

    def test_equidistribution_any_order(self):
        """ldes and lexc are equidistributed over the whole group."""
        for seed in range(4):
            spec = GroupSpec(4, 2)
            order = random_order(4, 2, seed)
            self.assertEqual(stat_polynomial(spec, 'ldes', order),
                             stat_polynomial(spec, 'lexc', order))

    def test_family_polynomial(self):
        """Formula and enumeration agree for every family."""
        for family in ('A', 'B', 'BE', 'Bbar', 'Btilde'):
            for k in range(1, 5):
                self.assertEqual(
                        family_polynomial(family, 4, k),
                        family_polynomial(family, 4, k, method='enumerate'))
        self.assertEqual(family_polynomial('B', 4, -3),
                         family_polynomial('B', 4, -3, method='enumerate'))
        with self.assertRaises(ValueError):
            family_polynomial('AExc', 4, 2, method='formula')
        with self.assertRaises(ValueError):
            family_polynomial('C', 4, 2)
        with self.assertRaises(ValueError):
            family_polynomial('A', 4, 2, method='guess')
        with self.assertRaises(ValueError):
            family_polynomial('Bbar', 4, -2)


if __name__ == '__main__':
    unittest.main()
