"""
======
orders
======

Total orders on colored alphabets. Defines :class:`LinearOrder`, the
three named orders (color-major, min-one and symmetric), orders given by an
explicit ranking, and seeded random orders.

"""


import enum
import functools

import numpy

import regex

from permlab.constants import ORDER_NAMES
from permlab.groups import (ZERO_LETTER,
                            GroupSpec,
                            UnsupportedGroupError,
                            format_letter,
                            )


class Comparison(enum.IntEnum):
    """Outcome of comparing two letters."""

    LT = -1
    EQ = 0
    GT = 1


class LinearOrder:
    """Total order on the alphabet of a group, stored as a rank table.

    Parameters
    ----------
    spec : :class:`permlab.groups.GroupSpec`
        Group whose alphabet is ordered.
    letters : sequence of letters
        The whole alphabet in ascending order.
    name : str or None
        Label for display.

    Attributes
    ----------
    spec : :class:`permlab.groups.GroupSpec`
        Group whose alphabet is ordered.
    letters : tuple
        The alphabet in ascending order.
    name : str
        Label for display.
    rank_table : numpy.ndarray
        Read-only array, ``rank_table[v, c + spec.color_offset]`` is the
        rank of letter ``(v, c)`` and -1 for pairs outside the alphabet.

    Example
    -------
    >>> order = LinearOrder(GroupSpec(2, 2), [(1, 0), (1, 1), (2, 0), (2, 1)])
    >>> order.rank((2, 0))
    2
    >>> order.compare((2, 0), (1, 1))
    <Comparison.GT: 1>
    >>> print(order)
    1_0 < 1_1 < 2_0 < 2_1
    >>> LinearOrder(GroupSpec(2), [(1, 0), (1, 0)])
    Traceback (most recent call last):
      ...
    ValueError: duplicated letters in ranking: [(1, 0)]

    """

    def __init__(self, spec, letters, *, name=None):
        """See main class doc string."""
        letters = tuple((int(v), int(c)) for v, c in letters)
        seen = set()
        duplicates = []
        for letter in letters:
            if letter in seen:
                duplicates.append(letter)
            seen.add(letter)
        if duplicates:
            raise ValueError(f"duplicated letters in ranking: {duplicates}")
        alphabet = set(spec.alphabet)
        missing = sorted(alphabet - seen)
        extra = sorted(seen - alphabet)
        if missing or extra:
            raise ValueError(f"ranking is not a permutation of the alphabet "
                             f"of {spec}: missing {missing}, extra {extra}")
        self.spec = spec
        self.letters = letters
        self.name = name if name is not None else 'custom'
        self._rank = {letter: r for r, letter in enumerate(letters)}
        ncols = 2 * spec.d + 1 if spec.signed else spec.d
        table = numpy.full((spec.n + 1, ncols), -1, dtype=numpy.int64)
        for (v, c), r in self._rank.items():
            table[v, c + spec.color_offset] = r
        table.flags.writeable = False
        self.rank_table = table

    def __repr__(self):
        """Representation naming the order and its group."""
        return f"LinearOrder({self.name}, {self.spec!r})"

    def __str__(self):
        """The chain of letters in ascending order."""
        return ' < '.join(map(format_letter, self.letters))

    def __eq__(self, other):
        """Orders are equal if they rank the same alphabet identically."""
        if not isinstance(other, LinearOrder):
            return NotImplemented
        return self.spec == other.spec and self.letters == other.letters

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self.spec, self.letters))

    def __len__(self):
        """Size of the alphabet."""
        return len(self.letters)

    def rank(self, letter):
        """Rank of `letter`, from 0 for the smallest."""
        try:
            return self._rank[tuple(letter)]
        except KeyError:
            raise ValueError(f"{letter} is not a letter of {self.spec}")

    def compare(self, a, b):
        """Compare two letters.

        Returns
        -------
        :class:`Comparison`

        """
        ra = self.rank(a)
        rb = self.rank(b)
        if ra < rb:
            return Comparison.LT
        if ra > rb:
            return Comparison.GT
        return Comparison.EQ

    def largest(self, letters):
        """Largest of an iterable of letters."""
        return max(letters, key=self.rank)

    def smallest(self, letters):
        """Smallest of an iterable of letters."""
        return min(letters, key=self.rank)

    def reversed(self):
        """The opposite order."""
        return LinearOrder(self.spec, self.letters[::-1],
                           name=f"reversed {self.name}")


def compare(order, a, b):
    """Compare letters `a` and `b` in `order`.

    Example
    -------
    >>> order = color_major_order(6, 4)
    >>> compare(order, (5, 3), (6, 0))
    <Comparison.GT: 1>
    >>> compare(order, (5, 3), (5, 3))
    <Comparison.EQ: 0>

    """
    return order.compare(a, b)


@functools.lru_cache(maxsize=None)
def color_major_order(n, d):
    """Color-major order :math:`1_0 < \\ldots < n_0 < 1_1 < \\ldots < n_{d-1}`.

    Example
    -------
    >>> order = color_major_order(2, 2)
    >>> [order.rank(letter) for letter in [(1, 0), (2, 0), (1, 1), (2, 1)]]
    [0, 1, 2, 3]
    >>> print(color_major_order(3, 1))
    1_0 < 2_0 < 3_0

    """
    letters = [(v, c) for c in range(d) for v in range(1, n + 1)]
    return LinearOrder(GroupSpec(n, d), letters, name='color-major')


@functools.lru_cache(maxsize=None)
def min_one_order(n, d):
    """Min-one order: all colors of 1 first, then values 2..n color by color.

    Example
    -------
    >>> print(min_one_order(2, 2))
    1_0 < 1_1 < 2_0 < 2_1
    >>> min_one_order(3, 2).rank((2, 1))
    4

    """
    letters = [(1, c) for c in range(d)]
    letters += [(v, c) for c in range(d) for v in range(2, n + 1)]
    return LinearOrder(GroupSpec(n, d), letters, name='min-one')


@functools.lru_cache(maxsize=None)
def symmetric_order(n, d):
    """Symmetric order on the zero-prefixed signed alphabet.

    Negative colors lie below the zero letter, larger values lower; positive
    colors lie above it, larger values higher.

    Example
    -------
    >>> print(symmetric_order(2, 2))
    2_-2 < 2_-1 < 1_-2 < 1_-1 < 0 < 1_1 < 1_2 < 2_1 < 2_2
    >>> symmetric_order(3, 2).rank((0, 0))
    6

    """
    letters = [(v, c) for v in range(n, 0, -1) for c in range(-d, 0)]
    letters.append(ZERO_LETTER)
    letters += [(v, c) for v in range(1, n + 1) for c in range(1, d + 1)]
    return LinearOrder(GroupSpec(n, d, signed=True), letters,
                       name='symmetric')


def named_order(name, spec):
    """One of the built-in orders for the alphabet of `spec`.

    Parameters
    ----------
    name : {'color-major', 'min-one', 'symmetric'}
        Which order.
    spec : :class:`permlab.groups.GroupSpec`
        Group. The symmetric order needs a signed group, the others an
        unsigned one.

    Returns
    -------
    :class:`LinearOrder`

    """
    if name not in ORDER_NAMES:
        raise ValueError(f"invalid order `name` {name}")
    if name == 'symmetric':
        if not spec.signed:
            raise UnsupportedGroupError('the symmetric order needs a signed '
                                        'group')
        return symmetric_order(spec.n, spec.d)
    if spec.signed:
        raise UnsupportedGroupError(f"the {name} order needs an unsigned "
                                    'group')
    if name == 'color-major':
        return color_major_order(spec.n, spec.d)
    return min_one_order(spec.n, spec.d)


def order_from_ranking(letters, spec=None):
    """Order given by listing the alphabet in ascending order.

    Parameters
    ----------
    letters : sequence of letters
        The alphabet from smallest to largest.
    spec : :class:`permlab.groups.GroupSpec` or None
        Group; inferred from the letters if `None` (signed if the zero letter
        or a negative color occurs).

    Returns
    -------
    :class:`LinearOrder`

    Example
    -------
    >>> order = order_from_ranking([(2, 0), (1, 0)])
    >>> order.spec
    GroupSpec(n=2, d=1)
    >>> order.compare((1, 0), (2, 0))
    <Comparison.GT: 1>
    >>> order_from_ranking([(1, 0)]).letters
    ((1, 0),)

    """
    letters = [(int(v), int(c)) for v, c in letters]
    if spec is None:
        if not letters:
            raise ValueError('cannot infer a group from an empty ranking')
        n = max(v for v, _ in letters)
        signed = any(c < 0 for _, c in letters) or ZERO_LETTER in letters
        if signed:
            d = max(abs(c) for _, c in letters)
        else:
            d = max(c for _, c in letters) + 1
        spec = GroupSpec(n, d, signed=signed)
    return LinearOrder(spec, letters, name='list')


def random_order(n, d, seed, *, signed=False):
    """Seeded uniformly random order.

    Note
    ----
    The alphabet in ascending ``(value, color)`` order is shuffled by
    Fisher-Yates: for ``i`` from the last index down to 1, swap position
    ``i`` with position ``j = rng.integers(0, i + 1)``, where ``rng`` is
    ``numpy.random.default_rng(seed)``.

    Parameters
    ----------
    n : int
        Word length.
    d : int
        Color parameter.
    seed : int
        Seed, the order is a deterministic function of it.
    signed : bool
        Order the zero-prefixed signed alphabet instead.

    Returns
    -------
    :class:`LinearOrder`

    Example
    -------
    >>> random_order(4, 2, 7) == random_order(4, 2, 7)
    True
    >>> random_order(1, 1, 3).letters
    ((1, 0),)

    """
    spec = GroupSpec(n, d, signed=signed)
    letters = list(spec.alphabet)
    rng = numpy.random.default_rng(seed)
    for i in range(len(letters) - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        letters[i], letters[j] = letters[j], letters[i]
    return LinearOrder(spec, letters, name=f"random:{seed}")


def parse_letter(text):
    """Parse a letter written ``v.c`` (or ``0`` for the zero letter).

    Example
    -------
    >>> parse_letter('5.3')
    (5, 3)
    >>> parse_letter('2.-1')
    (2, -1)
    >>> parse_letter('0')
    (0, 0)

    """
    text = text.strip()
    if text == '0':
        return ZERO_LETTER
    m = regex.fullmatch(r'(?P<v>\d+)\.(?P<c>[+-]?\d+)', text)
    if not m:
        raise ValueError(f"cannot parse letter {text!r}, expected `v.c`")
    return (int(m.group('v')), int(m.group('c')))


def parse_order(text, spec):
    """Order from its command-line description.

    Parameters
    ----------
    text : str
        One of ``color-major``, ``min-one``, ``symmetric``,
        ``random:<seed>`` or ``list:<v.c>,<v.c>,...``.
    spec : :class:`permlab.groups.GroupSpec`
        Group whose alphabet is ordered.

    Returns
    -------
    :class:`LinearOrder`

    Example
    -------
    >>> parse_order('min-one', GroupSpec(2, 2)) == min_one_order(2, 2)
    True
    >>> print(parse_order('list:2.0,1.0', GroupSpec(2)))
    2_0 < 1_0
    >>> parse_order('random:3', GroupSpec(3, 2)) == random_order(3, 2, 3)
    True

    """
    text = text.strip()
    if text in ORDER_NAMES:
        return named_order(text, spec)
    m = regex.fullmatch(r'random:(?P<seed>\d+)', text)
    if m:
        return random_order(spec.n, spec.d, int(m.group('seed')),
                            signed=spec.signed)
    m = regex.fullmatch(r'list:(?P<letters>.+)', text)
    if m:
        letters = [parse_letter(tok)
                   for tok in m.group('letters').split(',')]
        return order_from_ranking(letters, spec)
    raise ValueError(f"invalid order {text!r}")


if __name__ == '__main__':
    import doctest
    doctest.testmod()
