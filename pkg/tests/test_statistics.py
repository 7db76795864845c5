"""Tests for `permlab.statistics`."""


import unittest

import numpy

from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.groups import (GroupSpec,
                            UnsupportedGroupError,
                            enumerate_group,
                            group_arrays,
                            make_perm,
                            reverse,
                            )
from permlab.orders import (color_major_order,
                            min_one_order,
                            random_order,
                            symmetric_order,
                            )
from permlab.statistics import (bexc,
                                des,
                                des_b,
                                exc,
                                exc_b,
                                lasc,
                                ldes,
                                lexc,
                                stat_array,
                                statistic,
                                )


EXAMPLE = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))


class test_single_element(unittest.TestCase):
    """Statistics of individual elements."""

    def test_example(self):
        """Worked example in the color-major order."""
        order = color_major_order(6, 4)
        self.assertEqual(ldes(EXAMPLE, order), 1)
        self.assertEqual(ldes(EXAMPLE, order, as_set=True), (4,))
        self.assertEqual(lexc(EXAMPLE, order), 4)
        self.assertEqual(lexc(EXAMPLE, order, as_set=True), (1, 2, 5, 6))
        self.assertEqual(lasc(EXAMPLE, order), 4)
        self.assertEqual(ldes(EXAMPLE, min_one_order(6, 4), as_set=True),
                         (2, 4))

    def test_identity(self):
        """The identity has no descents or excedances in any order."""
        for seed in range(5):
            order = random_order(4, 1, seed)
            p = make_perm((1, 2, 3, 4))
            self.assertEqual(lexc(p, order), 0)
        self.assertEqual(ldes(make_perm((1, 2, 3, 4)),
                              color_major_order(4, 1)), 0)

    def test_classical(self):
        """Classical statistics of uncolored permutations."""
        self.assertEqual(des(make_perm((3, 1, 2, 5, 9, 6, 7, 8, 4)),
                             as_set=True), (1, 5, 8))
        self.assertEqual(exc(make_perm((8, 9, 1, 6, 2, 4, 3, 7, 5)),
                             as_set=True), (1, 2, 4))
        self.assertEqual(exc(make_perm((2, 1))), 1)

    def test_signed(self):
        """Zero letter makes position 0 a possible descent."""
        spec = GroupSpec(2, signed=True)
        self.assertEqual(des_b(make_perm((1, 2), (-1, -1), spec),
                               as_set=True), (0, 1))
        self.assertEqual(des_b(make_perm((1, 2), (1, 1), spec)), 0)
        self.assertEqual(bexc(make_perm((1, 2), (-1, 1), spec)), 1)
        self.assertEqual(exc_b(make_perm((2, 1), (1, 1), spec),
                               as_set=True), (2,))
        self.assertEqual(statistic('asc_b', make_perm((1, 2), (-1, -1),
                                                      spec)), 0)

    def test_errors(self):
        """Statistics reject groups they are not defined on."""
        with self.assertRaises(UnsupportedGroupError):
            des(EXAMPLE)
        with self.assertRaises(UnsupportedGroupError):
            lexc(make_perm((1,), (1,), GroupSpec(1, signed=True)),
                 symmetric_order(1, 1))
        with self.assertRaises(UnsupportedGroupError):
            bexc(EXAMPLE)
        with self.assertRaises(UnsupportedGroupError):
            des_b(make_perm((1,), (2,), GroupSpec(1, 2, signed=True)))
        with self.assertRaises(ValueError):
            ldes(EXAMPLE, color_major_order(6, 3))
        with self.assertRaises(ValueError):
            statistic('maj', EXAMPLE)


class test_properties(unittest.TestCase):
    """Relations between statistics."""

    @given(st.integers(1, 5), st.integers(1, 3), st.integers(0, 1000),
           st.data())
    @settings(max_examples=100, deadline=None)
    def test_ascents_are_reversed_descents(self, n, d, seed, data):
        """``lasc(p) == ldes(reverse(p))`` in any order."""
        spec = GroupSpec(n, d)
        values = data.draw(st.permutations(range(1, n + 1)))
        colors = data.draw(st.lists(st.integers(0, d - 1), min_size=n,
                                    max_size=n))
        p = make_perm(values, colors, spec)
        order = random_order(n, d, seed)
        self.assertEqual(lasc(p, order), ldes(reverse(p), order))
        self.assertEqual(lasc(p, order) + ldes(p, order), n - 1)

    def test_signed_ascents(self):
        """Signed words have `n` descent or ascent positions."""
        order = symmetric_order(3, 2)
        for p in enumerate_group(GroupSpec(3, 2, signed=True)):
            self.assertEqual(ldes(p, order) + lasc(p, order), 3)

    def test_b_excedances_match_classical(self):
        """On signed permutations `bexc` is the type B excedance number."""
        for p in enumerate_group(GroupSpec(4, signed=True)):
            sigma = [c * v for v, c in zip(p.values, p.colors)]
            expected = sum(1 for i, s in enumerate(sigma, start=1)
                           if sigma[abs(s) - 1] > s or s == -i)
            self.assertEqual(bexc(p), expected, msg=str(p))
            self.assertEqual(exc_b(p), expected)

    def test_uncolored_specializations(self):
        """With one color the ordered statistics are the classical ones."""
        for order in (color_major_order(4, 1), min_one_order(4, 1)):
            for p in enumerate_group(GroupSpec(4)):
                self.assertEqual(lexc(p, order), exc(p))
                self.assertEqual(ldes(p, order), des(p))
        for p in enumerate_group(GroupSpec(3, signed=True)):
            self.assertEqual(ldes(p, symmetric_order(3, 1)), des_b(p))

    def test_reversed_order_swaps(self):
        """Reversing the order exchanges descents and ascents."""
        order = color_major_order(3, 2)
        for p in enumerate_group(GroupSpec(3, 2)):
            self.assertEqual(ldes(p, order.reversed()), lasc(p, order))
            self.assertEqual(lasc(p, order.reversed()), ldes(p, order))


class test_vectorized(unittest.TestCase):
    """Vectorized statistics agree with the per-element ones."""

    def _compare(self, name, spec, order=None):
        values, colors = group_arrays(spec)
        expected = [statistic(name, p, order)
                    for p in enumerate_group(spec)]
        observed = stat_array(name, spec, values, colors, order)
        self.assertEqual(observed.tolist(), expected, msg=(name, spec))

    def test_unsigned(self):
        """Ordered statistics on unsigned groups."""
        for n, d in [(1, 1), (3, 1), (3, 2), (4, 2), (3, 3)]:
            for order in [color_major_order(n, d), min_one_order(n, d),
                          random_order(n, d, 11)]:
                for name in ('ldes', 'lasc', 'lexc'):
                    self._compare(name, GroupSpec(n, d), order)

    def test_signed(self):
        """Ordered and type B statistics on signed groups."""
        for n, d in [(1, 1), (3, 1), (2, 2), (4, 1)]:
            spec = GroupSpec(n, d, signed=True)
            self._compare('ldes', spec, symmetric_order(n, d))
            self._compare('lasc', spec, random_order(n, d, 5, signed=True))
            self._compare('bexc', spec)
            if d == 1:
                for name in ('des_b', 'exc_b', 'asc_b'):
                    self._compare(name, spec)

    def test_classical(self):
        """Classical statistics of the symmetric group."""
        for name in ('des', 'exc'):
            self._compare(name, GroupSpec(5))

    def test_distributions(self):
        """Known distributions over small groups."""
        spec = GroupSpec(3, signed=True)
        values, colors = group_arrays(spec)
        self.assertEqual(
                numpy.bincount(stat_array('des_b', spec, values, colors))
                .tolist(),
                [1, 23, 23, 1])
        self.assertEqual(
                numpy.bincount(stat_array('exc_b', spec, values, colors))
                .tolist(),
                [1, 23, 23, 1])
        values, colors = group_arrays(GroupSpec(4))
        self.assertEqual(
                numpy.bincount(stat_array('des', GroupSpec(4), values,
                                          colors)).tolist(),
                [1, 11, 11, 1])


if __name__ == '__main__':
    unittest.main()
