"""Tests for `permlab.orders`."""


import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.groups import GroupSpec, UnsupportedGroupError
from permlab.orders import (Comparison,
                            LinearOrder,
                            color_major_order,
                            compare,
                            min_one_order,
                            named_order,
                            order_from_ranking,
                            parse_letter,
                            parse_order,
                            random_order,
                            symmetric_order,
                            )


class test_named_orders(unittest.TestCase):
    """Test the built-in orders."""

    def test_color_major(self):
        """Rank of ``(v, c)`` is ``c * n + v - 1``."""
        order = color_major_order(6, 4)
        for v, c in order.spec.alphabet:
            self.assertEqual(order.rank((v, c)), c * 6 + v - 1)
        self.assertEqual(compare(order, (5, 3), (6, 0)), Comparison.GT)
        self.assertEqual(compare(order, (6, 0), (5, 3)), Comparison.LT)

    def test_min_one(self):
        """All colors of 1 come first."""
        order = min_one_order(4, 3)
        self.assertEqual(order.letters[:3], ((1, 0), (1, 1), (1, 2)))
        self.assertEqual(order.letters[3:6], ((2, 0), (3, 0), (4, 0)))
        self.assertEqual(order.letters[-1], (4, 2))
        self.assertEqual(min_one_order(3, 1), color_major_order(3, 1))

    def test_symmetric(self):
        """Negative letters below zero, positive above."""
        order = symmetric_order(3, 1)
        self.assertEqual(str(order),
                         '3_-1 < 2_-1 < 1_-1 < 0 < 1_1 < 2_1 < 3_1')
        order = symmetric_order(2, 2)
        self.assertEqual(order.smallest(order.spec.alphabet), (2, -2))
        self.assertEqual(order.largest(order.spec.alphabet), (2, 2))
        self.assertEqual(order.rank((0, 0)), 4)

    def test_named_order(self):
        """Names resolve to orders of the right kind of group."""
        self.assertEqual(named_order('min-one', GroupSpec(3, 2)),
                         min_one_order(3, 2))
        self.assertEqual(named_order('symmetric', GroupSpec(2, signed=True)),
                         symmetric_order(2, 1))
        with self.assertRaises(UnsupportedGroupError):
            named_order('symmetric', GroupSpec(2))
        with self.assertRaises(UnsupportedGroupError):
            named_order('color-major', GroupSpec(2, signed=True))
        with self.assertRaises(ValueError):
            named_order('lexicographic', GroupSpec(2))

    def test_reversed(self):
        """Reversing twice gives the same ranking."""
        order = min_one_order(3, 2)
        self.assertEqual(order.reversed().reversed(), order)
        self.assertEqual(order.reversed().rank((1, 0)), len(order) - 1)


class test_custom_orders(unittest.TestCase):
    """Test orders built from rankings and seeds."""

    def test_ranking(self):
        """Rankings must list the alphabet exactly once."""
        order = order_from_ranking([(2, 1), (1, 0), (2, 0), (1, 1)])
        self.assertEqual(order.spec, GroupSpec(2, 2))
        self.assertEqual(order.compare((2, 1), (1, 0)), Comparison.LT)
        with self.assertRaises(ValueError):
            order_from_ranking([(1, 0), (1, 0)], GroupSpec(1))
        with self.assertRaises(ValueError):
            LinearOrder(GroupSpec(2), [(1, 0)])
        with self.assertRaises(ValueError):
            LinearOrder(GroupSpec(1), [(1, 0), (2, 0)])

    def test_signed_ranking(self):
        """Zero letter or negative colors make the group signed."""
        order = order_from_ranking([(1, -1), (0, 0), (1, 1)])
        self.assertEqual(order.spec, GroupSpec(1, signed=True))

    def test_rank_table(self):
        """Rank table agrees with `rank` and is read only."""
        order = symmetric_order(3, 2)
        for v, c in order.spec.alphabet:
            self.assertEqual(order.rank_table[v, c + order.spec.color_offset],
                             order.rank((v, c)))
        self.assertFalse(order.rank_table.flags.writeable)
        self.assertEqual(order.rank_table[1, 2], -1)

    @given(st.integers(1, 5), st.integers(1, 4), st.integers(0, 10**6))
    @settings(max_examples=50, deadline=None)
    def test_random_order(self, n, d, seed):
        """Random orders are seed-determined permutations of the alphabet."""
        order = random_order(n, d, seed)
        self.assertEqual(order, random_order(n, d, seed))
        self.assertEqual(sorted(order.letters), sorted(order.spec.alphabet))
        self.assertEqual(order.name, f"random:{seed}")
        self.assertEqual(parse_order(order.name, order.spec), order)

    def test_random_orders_differ(self):
        """Different seeds usually give different orders."""
        orders = {random_order(5, 2, seed).letters for seed in range(20)}
        self.assertGreater(len(orders), 15)


class test_parsing(unittest.TestCase):
    """Test textual letters and orders."""

    def test_letters(self):
        """Letters are written ``v.c``."""
        self.assertEqual(parse_letter('5.3'), (5, 3))
        self.assertEqual(parse_letter(' 2.-1 '), (2, -1))
        self.assertEqual(parse_letter('0'), (0, 0))
        with self.assertRaises(ValueError):
            parse_letter('5_3')

    def test_orders(self):
        """Every order description parses."""
        spec = GroupSpec(2, 2)
        self.assertEqual(parse_order('color-major', spec),
                         color_major_order(2, 2))
        self.assertEqual(
                parse_order('list:1.1,2.1,1.0,2.0', spec).letters,
                ((1, 1), (2, 1), (1, 0), (2, 0)))
        self.assertEqual(parse_order('symmetric', GroupSpec(2, signed=True)),
                         symmetric_order(2, 1))
        self.assertEqual(parse_order('random:4', GroupSpec(2, signed=True)),
                         random_order(2, 1, 4, signed=True))
        with self.assertRaises(ValueError):
            parse_order('random:x', spec)
        with self.assertRaises(ValueError):
            parse_order('list:1.0', spec)


if __name__ == '__main__':
    unittest.main()
