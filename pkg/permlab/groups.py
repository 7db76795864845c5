"""
======
groups
======

Colored permutation groups: :class:`GroupSpec` describes a group,
:class:`ColoredPerm` is one of its elements and :class:`CycleForm` is the
decorated cycle decomposition of an element. Also implements exhaustive
enumeration, both as a stream of :class:`ColoredPerm` objects and as
vectorized :mod:`numpy` arrays.

"""


import itertools
import math
import os

import numpy

import regex

from permlab.constants import DEFAULT_MAX_ELEMENTS, MAX_ELEMENTS_ENV


ZERO_LETTER = (0, 0)
"""tuple: The virtual letter prefixed to every word of a signed group."""


class GroupSizeError(ValueError):
    """Enumeration would visit more elements than the configured cap."""


class UnsupportedGroupError(ValueError):
    """Operation is not defined for this kind of group."""


def max_elements():
    """Cap on the number of elements an enumeration may visit.

    Returns
    -------
    int
        Value of the ``PERMLAB_MAX_ELEMENTS`` environment variable if set,
        otherwise :data:`permlab.constants.DEFAULT_MAX_ELEMENTS`.

    Example
    -------
    >>> import os
    >>> os.environ.pop('PERMLAB_MAX_ELEMENTS', None) is None
    True
    >>> max_elements()
    100000000
    >>> os.environ['PERMLAB_MAX_ELEMENTS'] = '500'
    >>> max_elements()
    500
    >>> del os.environ['PERMLAB_MAX_ELEMENTS']

    """
    value = os.environ.get(MAX_ELEMENTS_ENV, '').strip()
    if not value:
        return DEFAULT_MAX_ELEMENTS
    if not regex.fullmatch(r'\d+', value) or int(value) < 1:
        raise ValueError(f"`{MAX_ELEMENTS_ENV}` must be a positive integer, "
                         f"not {value!r}")
    return int(value)


def check_size(count, cap=None):
    """Raise :class:`GroupSizeError` if `count` elements exceed the cap.

    Parameters
    ----------
    count : int
        Number of elements about to be enumerated.
    cap : int or None
        Cap to use, or `None` for :func:`max_elements`.

    """
    if cap is None:
        cap = max_elements()
    if count > cap:
        raise GroupSizeError(f"enumerating {count} elements exceeds the cap "
                             f"of {cap}; set `{MAX_ELEMENTS_ENV}` to raise it")


def format_letter(letter):
    """Format a letter of the colored alphabet.

    Example
    -------
    >>> format_letter((5, 3))
    '5_3'
    >>> format_letter((2, -1))
    '2_-1'
    >>> format_letter(ZERO_LETTER)
    '0'

    """
    if tuple(letter) == ZERO_LETTER:
        return '0'
    return f"{letter[0]}_{letter[1]}"


class GroupSpec:
    """Description of a colored permutation group.

    Parameters
    ----------
    n : int
        Word length, at least 1.
    d : int
        Number of colors (unsigned) or of color magnitudes (signed).
    signed : bool
        If `False`, colors are :math:`[d]_0 = \\{0, \\ldots, d-1\\}`. If
        `True`, colors are :math:`\\{-d, \\ldots, -1, 1, \\ldots, d\\}` and
        every word carries an implicit leading zero letter.

    Attributes
    ----------
    n : int
        Word length.
    d : int
        Color parameter.
    signed : bool
        Whether the group is the zero-prefixed signed group.
    colors : tuple
        The color set in ascending order.
    color_offset : int
        Added to a color to index the columns of rank tables.

    Example
    -------
    >>> spec = GroupSpec(6, 4)
    >>> spec
    GroupSpec(n=6, d=4)
    >>> spec.colors
    (0, 1, 2, 3)
    >>> spec.size
    2949120
    >>> bspec = GroupSpec(2, 1, signed=True)
    >>> bspec.colors
    (-1, 1)
    >>> bspec.size
    8
    >>> bspec.alphabet
    ((0, 0), (1, -1), (1, 1), (2, -1), (2, 1))
    >>> bspec == GroupSpec(2, signed=True)
    True

    """

    def __init__(self, n, d=1, *, signed=False):
        """See main class doc string."""
        if int(n) != n or n < 1:
            raise ValueError(f"`n` must be an integer >= 1, not {n}")
        if int(d) != d or d < 1:
            raise ValueError(f"`d` must be an integer >= 1, not {d}")
        self.n = int(n)
        self.d = int(d)
        self.signed = bool(signed)
        if self.signed:
            self.colors = (tuple(range(-self.d, 0)) +
                           tuple(range(1, self.d + 1)))
            self.color_offset = self.d
        else:
            self.colors = tuple(range(self.d))
            self.color_offset = 0
        self._color_set = frozenset(self.colors)

    def __repr__(self):
        """Representation showing `n`, `d` and the signed flag."""
        if self.signed:
            return f"GroupSpec(n={self.n}, d={self.d}, signed=True)"
        return f"GroupSpec(n={self.n}, d={self.d})"

    def __eq__(self, other):
        """Specs are equal if they describe the same group."""
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        """Hash consistent with equality."""
        return hash(self._key())

    def _key(self):
        return (self.n, self.d, self.signed)

    @property
    def size(self):
        """int: Number of elements of the group."""
        return math.factorial(self.n) * len(self.colors)**self.n

    @property
    def class_size(self):
        """int: Number of elements with a given first letter."""
        return self.size // (self.n * len(self.colors))

    @property
    def alphabet(self):
        """tuple: All letters in ascending (value, color) order."""
        letters = [(v, c) for v in range(1, self.n + 1) for c in self.colors]
        if self.signed:
            letters.insert(0, ZERO_LETTER)
        return tuple(letters)

    def is_color(self, c):
        """Whether `c` is in the color set."""
        return c in self._color_set

    def is_letter(self, letter):
        """Whether `letter` is in the alphabet of this group."""
        v, c = letter
        if self.signed and (v, c) == ZERO_LETTER:
            return True
        return 1 <= v <= self.n and c in self._color_set

    def check_letter(self, letter):
        """Raise `ValueError` unless `letter` is in the alphabet."""
        if len(tuple(letter)) != 2 or not self.is_letter(letter):
            raise ValueError(f"{letter} is not a letter of {self}")


def _integer_tuple(name, seq):
    out = []
    for x in seq:
        ix = int(x)
        if ix != x:
            raise ValueError(f"`{name}` must be integers, got {x}")
        out.append(ix)
    return tuple(out)


class ColoredPerm:
    """Element of a colored permutation group.

    Note
    ----
    A colored permutation is the product :math:`\\pi \\times c` of a
    permutation word :math:`\\pi_1 \\ldots \\pi_n` of :math:`[n]` and colors
    :math:`c_1, \\ldots, c_n`. It is written as the word of letters
    :math:`(\\pi_i)_{c_i}`. For signed groups the leading zero letter is
    implicit and never stored.

    Use :func:`make_perm` to build one from arbitrary sequences.

    Parameters
    ----------
    spec : :class:`GroupSpec`
        Group the element belongs to.
    values : sequence of int
        The permutation word.
    colors : sequence of int
        The colors, each in ``spec.colors``.

    Attributes
    ----------
    spec : :class:`GroupSpec`
        Group of the element.
    values : tuple
        The permutation word :math:`\\pi_1, \\ldots, \\pi_n`.
    colors : tuple
        The colors :math:`c_1, \\ldots, c_n`.

    Example
    -------
    >>> spec = GroupSpec(6, 4)
    >>> p = ColoredPerm(spec, (2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2))
    >>> print(p)
    2_0 4_1 1_3 5_3 6_0 3_2
    >>> p.letters[:2]
    ((2, 0), (4, 1))
    >>> p.first_letter
    (2, 0)
    >>> ColoredPerm(GroupSpec(2), (1.5, 2), (0, 0))
    Traceback (most recent call last):
      ...
    ValueError: `values` must be integers, got 1.5

    """

    __slots__ = ('spec', 'values', 'colors')

    def __init__(self, spec, values, colors):
        """See main class doc string."""
        values = _integer_tuple('values', values)
        colors = _integer_tuple('colors', colors)
        if len(values) != spec.n or len(colors) != spec.n:
            raise ValueError(f"`values` and `colors` must have length {spec.n}"
                             f", got {len(values)} and {len(colors)}")
        if sorted(values) != list(range(1, spec.n + 1)):
            raise ValueError(f"`values` {values} not a permutation of "
                             f"1..{spec.n}")
        badcolors = [c for c in colors if not spec.is_color(c)]
        if badcolors:
            raise ValueError(f"colors {badcolors} not in color set "
                             f"{spec.colors}")
        self.spec = spec
        self.values = values
        self.colors = colors

    @classmethod
    def _trusted(cls, spec, values, colors):
        """Build without validation from tuples known to be valid."""
        p = cls.__new__(cls)
        p.spec = spec
        p.values = values
        p.colors = colors
        return p

    def __repr__(self):
        """Representation that can be evaluated back."""
        return (f"ColoredPerm({self.spec!r}, {self.values}, "
                f"{self.colors})")

    def __str__(self):
        """Word notation, letters written as ``value_color``."""
        return ' '.join(map(format_letter, self.letters))

    def __eq__(self, other):
        """Elements are equal if they have the same spec, values, colors."""
        if not isinstance(other, ColoredPerm):
            return NotImplemented
        return (self.spec == other.spec and self.values == other.values and
                self.colors == other.colors)

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self.spec, self.values, self.colors))

    def __len__(self):
        """Word length."""
        return len(self.values)

    def __iter__(self):
        """Iterate over the letters of the word."""
        return zip(self.values, self.colors)

    @property
    def letters(self):
        """tuple: The word as a tuple of ``(value, color)`` letters."""
        return tuple(zip(self.values, self.colors))

    @property
    def first_letter(self):
        """tuple: The letter :math:`(\\pi_1, c_1)`."""
        return (self.values[0], self.colors[0])


def make_perm(values, colors=None, spec=None):
    """Validated colored permutation from integer sequences.

    Parameters
    ----------
    values : sequence of int
        Permutation word of :math:`[n]`.
    colors : sequence of int or None
        Colors. `None` means all 0 (unsigned) or all 1 (signed).
    spec : :class:`GroupSpec` or None
        Group; `None` means the symmetric group (one color) of that length.

    Returns
    -------
    :class:`ColoredPerm`

    Example
    -------
    >>> spec = GroupSpec(6, 4)
    >>> print(make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), spec))
    2_0 4_1 1_3 5_3 6_0 3_2
    >>> print(make_perm([1]))
    1_0
    >>> print(make_perm((1, 2), (1, -2), GroupSpec(2, 2, signed=True)))
    1_1 2_-2
    >>> make_perm((1, 1), (0, 0), GroupSpec(2, 1))
    Traceback (most recent call last):
      ...
    ValueError: `values` (1, 1) not a permutation of 1..2

    """
    values = tuple(values)
    if spec is None:
        spec = GroupSpec(max(len(values), 1))
    if colors is None:
        colors = (1 if spec.signed else 0,) * len(values)
    return ColoredPerm(spec, values, colors)


def parse_int_list(text):
    """Parse a comma-separated list of integers.

    Example
    -------
    >>> parse_int_list('2, 4,1,-5')
    (2, 4, 1, -5)

    """
    tokens = [tok.strip() for tok in str(text).split(',')]
    if not all(regex.fullmatch(r'[+-]?\d+', tok) for tok in tokens):
        raise ValueError(f"cannot parse integer list {text!r}")
    return tuple(int(tok) for tok in tokens)


def parse_perm(word, colors=None, spec=None):
    """Colored permutation from the textual ``--word`` / ``--colors`` literal.

    Parameters
    ----------
    word : str
        Comma-separated values, e.g. ``'2,4,1,5,6,3'``.
    colors : str or None
        Comma-separated colors; `None` for the default colors.
    spec : :class:`GroupSpec` or None
        Group, defaults as in :func:`make_perm`.

    Example
    -------
    >>> print(parse_perm('2,1', '1,-1', GroupSpec(2, signed=True)))
    2_1 1_-1

    """
    values = parse_int_list(word)
    if colors is not None:
        colors = parse_int_list(colors)
    return make_perm(values, colors, spec)


class CycleForm:
    """Cycle decomposition of a colored permutation.

    Note
    ----
    Each value :math:`v` in a cycle is decorated with the color it carries
    in the word, :math:`c_{\\pi^{-1}(v)}`. So consecutive entries of a cycle
    are exactly the letters :math:`(\\pi_i, c_i)` and
    :math:`(\\pi_{\\pi_i}, c_{\\pi_i})`.

    Parameters
    ----------
    spec : :class:`GroupSpec`
        Group of the decomposed element.
    cycles : sequence of sequences of letters
        Each cycle is a nonempty sequence of ``(value, color)`` pairs.

    Attributes
    ----------
    spec : :class:`GroupSpec`
        Group of the decomposed element.
    cycles : tuple
        Tuple of cycles, each a tuple of ``(value, color)`` pairs.

    Example
    -------
    >>> cf = CycleForm(GroupSpec(4, 2), [[(1, 0), (3, 1)], [(2, 1)], [(4, 0)]])
    >>> print(cf)
    (1_0 3_1)(2_1)(4_0)
    >>> CycleForm(GroupSpec(2, 2), [[(1, 0)], [(1, 1)]])
    Traceback (most recent call last):
      ...
    ValueError: cycle values [1, 1] do not partition 1..2

    """

    __slots__ = ('spec', 'cycles')

    def __init__(self, spec, cycles):
        """See main class doc string."""
        cycles = tuple(tuple((int(v), int(c)) for v, c in cycle)
                       for cycle in cycles)
        if any(len(cycle) == 0 for cycle in cycles):
            raise ValueError('cycles must be nonempty')
        allvalues = sorted(v for cycle in cycles for v, _ in cycle)
        if allvalues != list(range(1, spec.n + 1)):
            raise ValueError(f"cycle values {allvalues} do not partition "
                             f"1..{spec.n}")
        badcolors = [c for cycle in cycles for _, c in cycle
                     if not spec.is_color(c)]
        if badcolors:
            raise ValueError(f"colors {badcolors} not in color set "
                             f"{spec.colors}")
        self.spec = spec
        self.cycles = cycles

    @classmethod
    def _trusted(cls, spec, cycles):
        cf = cls.__new__(cls)
        cf.spec = spec
        cf.cycles = cycles
        return cf

    def __repr__(self):
        """Representation that can be evaluated back."""
        return f"CycleForm({self.spec!r}, {self.cycles})"

    def __str__(self):
        """Cycle notation with letters written as ``value_color``."""
        return ''.join('(' + ' '.join(map(format_letter, cycle)) + ')'
                       for cycle in self.cycles)

    def __eq__(self, other):
        """Equal if same spec and same cycles in the same arrangement."""
        if not isinstance(other, CycleForm):
            return NotImplemented
        return self.spec == other.spec and self.cycles == other.cycles

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self.spec, self.cycles))

    def __iter__(self):
        """Iterate over cycles."""
        return iter(self.cycles)

    def __len__(self):
        """Number of cycles."""
        return len(self.cycles)


def cycle_decomposition(p):
    """Decorated cycle decomposition of a colored permutation.

    Cycles start at their smallest value and are listed by smallest value.

    Parameters
    ----------
    p : :class:`ColoredPerm`

    Returns
    -------
    :class:`CycleForm`

    Example
    -------
    >>> p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
    >>> print(cycle_decomposition(p))
    (1_3 2_0 4_1 5_3 6_0 3_2)
    >>> print(cycle_decomposition(make_perm((2, 1), (0, 1), GroupSpec(2, 2))))
    (1_1 2_0)
    >>> print(cycle_decomposition(make_perm((1, 2), (0, 1), GroupSpec(2, 2))))
    (1_0)(2_1)

    """
    n = len(p.values)
    position = [0] * (n + 1)
    for i, v in enumerate(p.values, start=1):
        position[v] = i
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append((v, p.colors[position[v] - 1]))
            v = p.values[v - 1]
        cycles.append(tuple(cycle))
    return CycleForm._trusted(p.spec, tuple(cycles))


def _from_cycles(spec, cycles):
    """Colored permutation from cycles of letters, no validation."""
    values = [0] * spec.n
    colors = [0] * spec.n
    for cycle in cycles:
        length = len(cycle)
        for k in range(length):
            v = cycle[k][0]
            values[v - 1], colors[v - 1] = cycle[(k + 1) % length]
    return ColoredPerm._trusted(spec, tuple(values), tuple(colors))


def from_cycle_form(cf):
    """Colored permutation with the given decorated cycle decomposition.

    Any rotation of the cycles and any arrangement of cycles give the same
    element.

    Parameters
    ----------
    cf : :class:`CycleForm`

    Returns
    -------
    :class:`ColoredPerm`

    Example
    -------
    >>> spec = GroupSpec(6, 4)
    >>> cycle = [(1, 3), (2, 0), (4, 1), (5, 3), (6, 0), (3, 2)]
    >>> cf = CycleForm(spec, [cycle])
    >>> print(from_cycle_form(cf))
    2_0 4_1 1_3 5_3 6_0 3_2
    >>> print(from_cycle_form(CycleForm(GroupSpec(2), [[(1, 0)], [(2, 0)]])))
    1_0 2_0

    """
    return _from_cycles(cf.spec, cf.cycles)


def reverse(p):
    """Reverse word, reversing values together with their colors.

    Parameters
    ----------
    p : :class:`ColoredPerm`
        Element of an unsigned group.

    Returns
    -------
    :class:`ColoredPerm`

    Example
    -------
    >>> p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
    >>> print(reverse(p))
    3_2 6_0 5_3 1_3 4_1 2_0
    >>> reverse(reverse(p)) == p
    True
    >>> reverse(make_perm((1,), (1,), GroupSpec(1, signed=True)))
    Traceback (most recent call last):
      ...
    permlab.groups.UnsupportedGroupError: cannot reverse signed words

    """
    if p.spec.signed:
        raise UnsupportedGroupError('cannot reverse signed words')
    return ColoredPerm._trusted(p.spec, p.values[::-1], p.colors[::-1])


def _class_permutations(spec, first_value):
    if first_value is None:
        return itertools.permutations(range(1, spec.n + 1))
    rest = [v for v in range(1, spec.n + 1) if v != first_value]
    return ((first_value,) + tail for tail in itertools.permutations(rest))


def _class_colorings(spec, first_color):
    if first_color is None:
        return itertools.product(spec.colors, repeat=spec.n)
    return ((first_color,) + tail
            for tail in itertools.product(spec.colors, repeat=spec.n - 1))


def enumerate_group(spec, *, max_elements=None):
    """Stream every element of a group exactly once.

    Elements come in lexicographic order of ``(values, colors)``.

    Parameters
    ----------
    spec : :class:`GroupSpec`
        Group to enumerate.
    max_elements : int or None
        Cap on group size, `None` for :func:`max_elements`.

    Yields
    ------
    :class:`ColoredPerm`

    Example
    -------
    >>> [str(p) for p in enumerate_group(GroupSpec(2))]
    ['1_0 2_0', '2_0 1_0']
    >>> len(list(enumerate_group(GroupSpec(2, 2))))
    8
    >>> len(list(enumerate_group(GroupSpec(2, 1, signed=True))))
    8
    >>> enumerate_group(GroupSpec(5, 4), max_elements=1000)
    ... # doctest: +ELLIPSIS
    Traceback (most recent call last):
      ...
    permlab.groups.GroupSizeError: enumerating 122880 elements exceeds ...

    """
    check_size(spec.size, max_elements)
    return _enumerate(spec, None)


def first_letter_class(spec, i, j, *, max_elements=None):
    """Stream the elements :math:`S_{(i,j)}` with first letter :math:`i_j`.

    Parameters
    ----------
    spec : :class:`GroupSpec`
        Group.
    i : int
        First value, in :math:`[n]`.
    j : int
        Color of the first value.
    max_elements : int or None
        Cap on class size, `None` for :func:`max_elements`.

    Yields
    ------
    :class:`ColoredPerm`

    Example
    -------
    >>> bspec = GroupSpec(2, 1, signed=True)
    >>> [str(p) for p in first_letter_class(bspec, 2, 1)]
    ['2_1 1_-1', '2_1 1_1']
    >>> len(list(first_letter_class(GroupSpec(6), 1, 0)))
    120

    """
    if not (1 <= i <= spec.n and spec.is_color(j)):
        raise ValueError(f"({i}, {j}) is not a first letter of {spec}")
    check_size(spec.class_size, max_elements)
    return _enumerate(spec, (i, j))


def _enumerate(spec, first):
    first_value, first_color = first if first is not None else (None, None)
    colorings = list(_class_colorings(spec, first_color))
    for values in _class_permutations(spec, first_value):
        for colors in colorings:
            yield ColoredPerm._trusted(spec, values, colors)


def group_arrays(spec, first=None, *, max_elements=None):
    """Whole group (or first-letter class) as two integer arrays.

    Rows are in the same order as :func:`enumerate_group` or
    :func:`first_letter_class`.

    Parameters
    ----------
    spec : :class:`GroupSpec`
        Group.
    first : None or tuple
        If a letter ``(i, j)``, restrict to :math:`S_{(i,j)}`.
    max_elements : int or None
        Cap on the number of rows, `None` for :func:`max_elements`.

    Returns
    -------
    tuple
        ``(values, colors)``, each a `numpy.ndarray` of shape
        (elements, `n`).

    Example
    -------
    >>> values, colors = group_arrays(GroupSpec(2, 2))
    >>> values.shape
    (8, 2)
    >>> values[:5].tolist()
    [[1, 2], [1, 2], [1, 2], [1, 2], [2, 1]]
    >>> colors[:5].tolist()
    [[0, 0], [0, 1], [1, 0], [1, 1], [0, 0]]
    >>> values, colors = group_arrays(GroupSpec(3, 2), (2, 1))
    >>> values[::4].tolist()
    [[2, 1, 3], [2, 3, 1]]
    >>> colors[:4].tolist()
    [[1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1]]

    """
    if first is None:
        first_value, first_color = None, None
        check_size(spec.size, max_elements)
    else:
        first_value, first_color = first
        if not (1 <= first_value <= spec.n and spec.is_color(first_color)):
            raise ValueError(f"{first} is not a first letter of {spec}")
        check_size(spec.class_size, max_elements)
    n = spec.n
    perms = numpy.array(list(_class_permutations(spec, first_value)),
                        dtype=numpy.int64).reshape(-1, n)
    colorings = numpy.array(list(_class_colorings(spec, first_color)),
                            dtype=numpy.int64).reshape(-1, n)
    values = numpy.repeat(perms, len(colorings), axis=0)
    colors = numpy.tile(colorings, (len(perms), 1))
    return values, colors


def perms_from_arrays(spec, values, colors):
    """Stream :class:`ColoredPerm` objects from rows of integer arrays."""
    for vrow, crow in zip(values.tolist(), colors.tolist()):
        yield ColoredPerm._trusted(spec, tuple(vrow), tuple(crow))


if __name__ == '__main__':
    import doctest
    doctest.testmod()
