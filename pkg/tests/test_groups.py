"""Tests for `permlab.groups`."""


import math
import os
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from permlab.groups import (ColoredPerm,
                            CycleForm,
                            GroupSizeError,
                            GroupSpec,
                            UnsupportedGroupError,
                            cycle_decomposition,
                            enumerate_group,
                            first_letter_class,
                            from_cycle_form,
                            group_arrays,
                            make_perm,
                            max_elements,
                            parse_perm,
                            perms_from_arrays,
                            reverse,
                            )


SPECS = [GroupSpec(1), GroupSpec(2), GroupSpec(3, 2), GroupSpec(4, 3),
         GroupSpec(1, signed=True), GroupSpec(3, signed=True),
         GroupSpec(2, 2, signed=True)]


@st.composite
def colored_perms(draw, max_n=6, max_d=3, signed=None):
    """Strategy drawing a random element of a random group."""
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    if signed is None:
        signed = draw(st.booleans())
    spec = GroupSpec(n, d, signed=signed)
    values = draw(st.permutations(range(1, n + 1)))
    colors = draw(st.lists(st.sampled_from(spec.colors), min_size=n,
                           max_size=n))
    return make_perm(values, colors, spec)


class test_group_spec(unittest.TestCase):
    """Test `GroupSpec`."""

    def test_sizes(self):
        """Group sizes are n! times the number of colors to the n."""
        self.assertEqual(GroupSpec(6).size, 720)
        self.assertEqual(GroupSpec(2, 2).size, 8)
        self.assertEqual(GroupSpec(2, signed=True).size, 8)
        self.assertEqual(GroupSpec(5, 4).size, 122880)
        self.assertEqual(GroupSpec(3, 2, signed=True).size, 6 * 4**3)
        self.assertEqual(GroupSpec(4, 3).class_size,
                         GroupSpec(4, 3).size // 12)

    def test_invalid(self):
        """Lengths and color counts must be positive integers."""
        with self.assertRaises(ValueError):
            GroupSpec(0)
        with self.assertRaises(ValueError):
            GroupSpec(3, 0)
        with self.assertRaises(ValueError):
            GroupSpec(2.5)

    def test_alphabet(self):
        """Signed alphabets contain the zero letter."""
        self.assertEqual(GroupSpec(2, 2).alphabet,
                         ((1, 0), (1, 1), (2, 0), (2, 1)))
        self.assertIn((0, 0), GroupSpec(1, signed=True).alphabet)
        self.assertFalse(GroupSpec(2, 2).is_color(2))
        self.assertTrue(GroupSpec(2, 2, signed=True).is_color(-2))
        self.assertFalse(GroupSpec(2, 2, signed=True).is_color(0))


class test_make_perm(unittest.TestCase):
    """Test building and parsing colored permutations."""

    def test_valid(self):
        """Valid inputs give validated elements."""
        p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
        self.assertEqual(str(p), '2_0 4_1 1_3 5_3 6_0 3_2')
        self.assertEqual(p.first_letter, (2, 0))
        self.assertEqual(str(make_perm([1])), '1_0')
        q = make_perm((1, 2), (1, -2), GroupSpec(2, 2, signed=True))
        self.assertEqual(q.colors, (1, -2))
        self.assertEqual(make_perm((2, 1), spec=GroupSpec(2, signed=True))
                         .colors, (1, 1))

    def test_invalid(self):
        """Bad values, colors or lengths are rejected."""
        with self.assertRaises(ValueError):
            make_perm((1, 3), (0, 0), GroupSpec(2))
        with self.assertRaises(ValueError):
            make_perm((1, 2), (0, 2), GroupSpec(2, 2))
        with self.assertRaises(ValueError):
            make_perm((1, 2), (0,), GroupSpec(2, 2))
        with self.assertRaises(ValueError):
            make_perm((1, 2), (0, 1), GroupSpec(2, 1, signed=True))
        with self.assertRaisesRegex(ValueError, "`values` must be integers"):
            make_perm((1.5, 2), (0, 0), GroupSpec(2))
        with self.assertRaisesRegex(ValueError, "`colors` must be integers"):
            ColoredPerm(GroupSpec(2, 2), (1, 2), (0, 0.5))
        p = ColoredPerm(GroupSpec(2, 2), (2.0, 1), (1, 0))
        self.assertEqual(p.values, (2, 1))
        self.assertIsInstance(p.values[0], int)

    def test_parse(self):
        """Textual literals parse to the same element."""
        spec = GroupSpec(6, 4)
        self.assertEqual(parse_perm('2,4,1,5,6,3', '0,1,3,3,0,2', spec),
                         make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2),
                                   spec))
        with self.assertRaises(ValueError):
            parse_perm('2,x,1', None, GroupSpec(3))


class test_enumeration(unittest.TestCase):
    """Test exhaustive enumeration."""

    def test_counts_and_order(self):
        """Every element once, in lexicographic order."""
        for spec in SPECS:
            with self.subTest(spec=spec):
                perms = list(enumerate_group(spec))
                self.assertEqual(len(perms), spec.size)
                self.assertEqual(len(set(perms)), spec.size)
                self.assertEqual(perms, sorted(perms, key=lambda p:
                                               (p.values, p.colors)))

    def test_small_groups(self):
        """Small groups listed by hand."""
        self.assertEqual([str(p) for p in enumerate_group(GroupSpec(2))],
                         ['1_0 2_0', '2_0 1_0'])
        self.assertEqual(len(list(enumerate_group(GroupSpec(2, 2)))), 8)
        self.assertEqual(
                {str(p) for p in first_letter_class(GroupSpec(2, signed=True),
                                                    2, 1)},
                {'2_1 1_1', '2_1 1_-1'})

    def test_first_letter_classes(self):
        """Classes have equal sizes summing to the group size."""
        for spec in SPECS:
            total = 0
            for i in range(1, spec.n + 1):
                for j in spec.colors:
                    cls = list(first_letter_class(spec, i, j))
                    self.assertEqual(len(cls), spec.class_size)
                    self.assertTrue(all(p.first_letter == (i, j)
                                        for p in cls))
                    total += len(cls)
            self.assertEqual(total, spec.size)
        self.assertEqual(len(list(first_letter_class(GroupSpec(2, 2), 1, 0))),
                         2)
        with self.assertRaises(ValueError):
            first_letter_class(GroupSpec(2, 2), 3, 0)

    def test_arrays_match_stream(self):
        """Array rows are the streamed elements in the same order."""
        for spec in SPECS:
            values, colors = group_arrays(spec)
            self.assertEqual(list(perms_from_arrays(spec, values, colors)),
                             list(enumerate_group(spec)))
        spec = GroupSpec(3, 2, signed=True)
        values, colors = group_arrays(spec, (2, -1))
        self.assertEqual(list(perms_from_arrays(spec, values, colors)),
                         list(first_letter_class(spec, 2, -1)))

    def test_cap(self):
        """Enumerations beyond the cap raise `GroupSizeError`."""
        with self.assertRaises(GroupSizeError):
            enumerate_group(GroupSpec(5, 4), max_elements=1000)
        with self.assertRaises(GroupSizeError):
            group_arrays(GroupSpec(4, 2), max_elements=10)
        self.assertTrue(issubclass(GroupSizeError, ValueError))

    def test_cap_environment(self):
        """The environment variable overrides the default cap."""
        old = os.environ.get('PERMLAB_MAX_ELEMENTS')
        try:
            os.environ['PERMLAB_MAX_ELEMENTS'] = '100'
            self.assertEqual(max_elements(), 100)
            with self.assertRaises(GroupSizeError):
                list(enumerate_group(GroupSpec(4, 2)))
            os.environ['PERMLAB_MAX_ELEMENTS'] = 'lots'
            with self.assertRaises(ValueError):
                max_elements()
        finally:
            if old is None:
                os.environ.pop('PERMLAB_MAX_ELEMENTS', None)
            else:
                os.environ['PERMLAB_MAX_ELEMENTS'] = old


class test_cycles(unittest.TestCase):
    """Test decorated cycle decompositions."""

    def test_example(self):
        """Worked example: a single cycle with word colors."""
        p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
        cf = cycle_decomposition(p)
        self.assertEqual(cf.cycles,
                         (((1, 3), (2, 0), (4, 1), (5, 3), (6, 0), (3, 2)),))
        self.assertEqual(from_cycle_form(cf), p)

    def test_word_colors(self):
        """Values carry the color they have in the word."""
        spec = GroupSpec(2, 2)
        self.assertEqual(
                cycle_decomposition(make_perm((1, 2), (0, 1), spec)).cycles,
                (((1, 0),), ((2, 1),)))
        self.assertEqual(
                cycle_decomposition(make_perm((2, 1), (0, 1), spec)).cycles,
                (((1, 1), (2, 0)),))

    def test_round_trip_exhaustive(self):
        """Decomposition and reassembly are inverse on small groups."""
        for n in range(1, 6):
            for d in range(1, 4):
                for p in enumerate_group(GroupSpec(n, d)):
                    cf = cycle_decomposition(p)
                    self.assertEqual(from_cycle_form(cf), p)
                    self.assertEqual(
                            sorted(letter for cycle in cf for letter in cycle),
                            sorted(p.letters))

    def test_rotation_invariance(self):
        """Rotated and rearranged cycles give the same element."""
        spec = GroupSpec(4, 2)
        cf = CycleForm(spec, [[(1, 0), (3, 1)], [(2, 1)], [(4, 0)]])
        cf2 = CycleForm(spec, [[(4, 0)], [(3, 1), (1, 0)], [(2, 1)]])
        self.assertEqual(from_cycle_form(cf), from_cycle_form(cf2))

    def test_invalid_cycles(self):
        """Cycles must partition the values."""
        with self.assertRaises(ValueError):
            CycleForm(GroupSpec(2, 2), [[(1, 0)], [(1, 1)]])
        with self.assertRaises(ValueError):
            CycleForm(GroupSpec(2), [[(1, 0)], []])

    @given(colored_perms())
    @settings(max_examples=200, deadline=None)
    def test_round_trip_random(self, p):
        """Round trip on random elements of random groups."""
        self.assertEqual(from_cycle_form(cycle_decomposition(p)), p)


class test_reverse(unittest.TestCase):
    """Test word reversal."""

    def test_reverse(self):
        """Reversal reverses values with their colors."""
        p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
        self.assertEqual(str(reverse(p)), '3_2 6_0 5_3 1_3 4_1 2_0')
        for q in enumerate_group(GroupSpec(3, 2)):
            self.assertEqual(reverse(reverse(q)), q)
            self.assertEqual(sorted(reverse(q).letters), sorted(q.letters))

    def test_signed_rejected(self):
        """Signed words are never reversed."""
        with self.assertRaises(UnsupportedGroupError):
            reverse(make_perm((1,), (1,), GroupSpec(1, signed=True)))


class test_colored_perm(unittest.TestCase):
    """Test value semantics of `ColoredPerm`."""

    def test_hash_eq(self):
        """Equal elements hash equally."""
        spec = GroupSpec(3, 2)
        p = ColoredPerm(spec, (3, 1, 2), (1, 0, 1))
        q = make_perm([3, 1, 2], [1, 0, 1], spec)
        self.assertEqual(p, q)
        self.assertEqual(hash(p), hash(q))
        self.assertEqual(len(p), 3)
        self.assertEqual(list(p), [(3, 1), (1, 0), (2, 1)])
        self.assertEqual(math.factorial(3) * 8, spec.size)


if __name__ == '__main__':
    unittest.main()
