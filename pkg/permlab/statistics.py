"""
==========
statistics
==========

Descent, ascent and excedance statistics of colored permutations relative
to a :class:`permlab.orders.LinearOrder`, both for single elements and
vectorized over whole groups held as :mod:`numpy` arrays (see
:func:`permlab.groups.group_arrays`).

"""


import numpy

from permlab.constants import STAT_NAMES
from permlab.groups import ZERO_LETTER, UnsupportedGroupError
from permlab.orders import color_major_order, symmetric_order


def _check_order(spec, order):
    if order.spec != spec:
        raise ValueError(f"`order` is over the alphabet of {order.spec}, "
                         f"not {spec}")


def _result(indices, as_set):
    if as_set:
        return tuple(indices)
    return len(indices)


def default_order(spec):
    """Natural order of a group: color-major, or symmetric if signed.

    Example
    -------
    >>> from permlab.groups import GroupSpec
    >>> default_order(GroupSpec(3, 2)).name
    'color-major'
    >>> default_order(GroupSpec(3, signed=True)).name
    'symmetric'

    """
    if spec.signed:
        return symmetric_order(spec.n, spec.d)
    return color_major_order(spec.n, spec.d)


def ldes(p, order, *, as_set=False):
    """Number of descents of `p` with respect to `order`.

    Note
    ----
    Position :math:`i` is a descent if
    :math:`(\\pi_i, c_i) >_L (\\pi_{i+1}, c_{i+1})`. For signed groups the
    zero letter is prepended as position 0, so position 0 is a descent when
    the first letter lies below zero.

    Parameters
    ----------
    p : :class:`permlab.groups.ColoredPerm`
        The element.
    order : :class:`permlab.orders.LinearOrder`
        Order over the alphabet of `p`.
    as_set : bool
        Return the sorted descent positions instead of their number.

    Returns
    -------
    int or tuple

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> from permlab.orders import min_one_order
    >>> p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
    >>> ldes(p, color_major_order(6, 4))
    1
    >>> ldes(p, color_major_order(6, 4), as_set=True)
    (4,)
    >>> ldes(p, min_one_order(6, 4), as_set=True)
    (2, 4)
    >>> q = make_perm((1, 2), (-1, -1), GroupSpec(2, signed=True))
    >>> ldes(q, symmetric_order(2, 1), as_set=True)
    (0, 1)

    """
    _check_order(p.spec, order)
    word = p.letters
    start = 1
    if p.spec.signed:
        word = (ZERO_LETTER,) + word
        start = 0
    rank = order.rank
    indices = [start + k for k in range(len(word) - 1)
               if rank(word[k]) > rank(word[k + 1])]
    return _result(indices, as_set)


def lasc(p, order, *, as_set=False):
    """Number of ascents of `p` with respect to `order`.

    Ascent positions are the complement of the descent positions over the
    same range (:math:`1 \\ldots n-1`, or :math:`0 \\ldots n-1` if signed).

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm, reverse
    >>> p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
    >>> order = color_major_order(6, 4)
    >>> lasc(p, order)
    4
    >>> lasc(p, order) == ldes(reverse(p), order)
    True

    """
    start = 0 if p.spec.signed else 1
    descents = set(ldes(p, order, as_set=True))
    indices = [i for i in range(start, p.spec.n) if i not in descents]
    return _result(indices, as_set)


def lexc(p, order, *, as_set=False):
    """Number of excedances of `p` with respect to `order`.

    Position :math:`i` is an excedance if
    :math:`(\\pi_{\\pi_i}, c_{\\pi_i}) >_L (\\pi_i, c_i)`, that is if the
    successor of the letter :math:`(\\pi_i, c_i)` in its decorated cycle is
    larger than it.

    Parameters
    ----------
    p : :class:`permlab.groups.ColoredPerm`
        Element of an unsigned group.
    order : :class:`permlab.orders.LinearOrder`
        Order over the alphabet of `p`.
    as_set : bool
        Return the sorted excedance positions instead of their number.

    Returns
    -------
    int or tuple

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
    >>> lexc(p, color_major_order(6, 4))
    4
    >>> lexc(p, color_major_order(6, 4), as_set=True)
    (1, 2, 5, 6)

    """
    if p.spec.signed:
        raise UnsupportedGroupError('`lexc` is for unsigned groups, use '
                                    '`bexc` for signed ones')
    _check_order(p.spec, order)
    values = p.values
    colors = p.colors
    rank = order.rank
    indices = []
    for i in range(1, p.spec.n + 1):
        v = values[i - 1]
        a = (v, colors[i - 1])
        b = (values[v - 1], colors[v - 1])
        if rank(b) > rank(a):
            indices.append(i)
    return _result(indices, as_set)


def bexc(p, *, as_set=False):
    """Number of B-excedances of an element of a signed group.

    Position :math:`i` counts if
    :math:`(\\pi_{\\pi_i}, c_{\\pi_i}) > (\\pi_i, c_i)` in the symmetric
    order, or if :math:`\\pi_i = i` with a negative color.

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> spec = GroupSpec(2, signed=True)
    >>> bexc(make_perm((1, 2), (-1, 1), spec))
    1
    >>> bexc(make_perm((2, 1), (1, 1), spec), as_set=True)
    (2,)

    """
    if not p.spec.signed:
        raise UnsupportedGroupError('`bexc` is for signed groups')
    order = symmetric_order(p.spec.n, p.spec.d)
    values = p.values
    colors = p.colors
    rank = order.rank
    indices = []
    for i in range(1, p.spec.n + 1):
        v = values[i - 1]
        c = colors[i - 1]
        if v == i:
            if c < 0:
                indices.append(i)
        elif rank((values[v - 1], colors[v - 1])) > rank((v, c)):
            indices.append(i)
    return _result(indices, as_set)


def _require_symmetric_group(spec, name):
    if spec.signed or spec.d != 1:
        raise UnsupportedGroupError(f"`{name}` needs uncolored permutations")


def _require_hyperoctahedral(spec, name):
    if not spec.signed or spec.d != 1:
        raise UnsupportedGroupError(f"`{name}` is only defined for signed "
                                    'permutations with one color magnitude')


def des(p, *, as_set=False):
    """Classical descents :math:`\\pi_i > \\pi_{i+1}` of a permutation.

    Example
    -------
    >>> from permlab.groups import make_perm
    >>> des(make_perm((2, 1)))
    1
    >>> des(make_perm((3, 1, 2, 5, 9, 6, 7, 8, 4)), as_set=True)
    (1, 5, 8)

    """
    _require_symmetric_group(p.spec, 'des')
    return ldes(p, color_major_order(p.spec.n, 1), as_set=as_set)


def exc(p, *, as_set=False):
    """Classical excedances :math:`\\pi_i > i` of a permutation.

    Example
    -------
    >>> from permlab.groups import make_perm
    >>> exc(make_perm((2, 1)))
    1
    >>> exc(make_perm((8, 9, 1, 6, 2, 4, 3, 7, 5)), as_set=True)
    (1, 2, 4)

    """
    _require_symmetric_group(p.spec, 'exc')
    indices = [i for i, v in enumerate(p.values, start=1) if v > i]
    return _result(indices, as_set)


def des_b(p, *, as_set=False):
    """Type B descents of a signed permutation, with :math:`\\pi_0 = 0`.

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> spec = GroupSpec(2, signed=True)
    >>> des_b(make_perm((1, 2), (1, -1), spec))
    1
    >>> des_b(make_perm((1, 2), (-1, -1), spec))
    2

    """
    _require_hyperoctahedral(p.spec, 'des_b')
    return ldes(p, symmetric_order(p.spec.n, 1), as_set=as_set)


def exc_b(p, *, as_set=False):
    """Type B excedances of a signed permutation."""
    _require_hyperoctahedral(p.spec, 'exc_b')
    return bexc(p, as_set=as_set)


def asc_b(p, *, as_set=False):
    """Type B ascents, :math:`n - \\mathrm{des}_B`.

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> asc_b(make_perm((1, 2), (-1, -1), GroupSpec(2, signed=True)))
    0

    """
    _require_hyperoctahedral(p.spec, 'asc_b')
    return lasc(p, symmetric_order(p.spec.n, 1), as_set=as_set)


def statistic(name, p, order=None, *, as_set=False):
    """Evaluate a statistic by name.

    Parameters
    ----------
    name : str
        One of :data:`permlab.constants.STAT_NAMES`.
    p : :class:`permlab.groups.ColoredPerm`
        The element.
    order : :class:`permlab.orders.LinearOrder` or None
        Order for ``ldes``, ``lasc`` and ``lexc``; `None` means
        :func:`default_order`. Ignored by the other statistics.
    as_set : bool
        Return the index set instead of its size.

    Returns
    -------
    int or tuple

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
    >>> statistic('lexc', p)
    4
    >>> statistic('des', p)
    Traceback (most recent call last):
      ...
    permlab.groups.UnsupportedGroupError: `des` needs uncolored permutations

    """
    if name not in STAT_NAMES:
        raise ValueError(f"invalid statistic `name` {name}")
    if name in ('ldes', 'lasc', 'lexc'):
        if order is None:
            order = default_order(p.spec)
        return _ORDERED_STATS[name](p, order, as_set=as_set)
    return _UNORDERED_STATS[name](p, as_set=as_set)


_ORDERED_STATS = {'ldes': ldes, 'lasc': lasc, 'lexc': lexc}

_UNORDERED_STATS = {'bexc': bexc,
                    'des': des,
                    'exc': exc,
                    'des_b': des_b,
                    'exc_b': exc_b,
                    'asc_b': asc_b,
                    }


def _rank_array(order, values, colors):
    return order.rank_table[values, colors + order.spec.color_offset]


def _successors(values, colors):
    """Letters following each letter in its decorated cycle."""
    index = values - 1
    return (numpy.take_along_axis(values, index, axis=1),
            numpy.take_along_axis(colors, index, axis=1))


def ldes_array(order, values, colors):
    """Vectorized :func:`ldes` over the rows of `values` and `colors`.

    Parameters
    ----------
    order : :class:`permlab.orders.LinearOrder`
        Order over the alphabet of the group the rows belong to.
    values : numpy.ndarray
        Integer array of shape (elements, `n`) holding permutation words.
    colors : numpy.ndarray
        Integer array of the same shape holding the colors.

    Returns
    -------
    numpy.ndarray
        Number of descents of each row.

    Example
    -------
    >>> from permlab.groups import GroupSpec, group_arrays
    >>> values, colors = group_arrays(GroupSpec(3))
    >>> ldes_array(color_major_order(3, 1), values, colors).tolist()
    [0, 1, 1, 1, 1, 2]

    """
    ranks = _rank_array(order, values, colors)
    if order.spec.signed:
        zero = order.rank(ZERO_LETTER)
        ranks = numpy.concatenate(
                [numpy.full((ranks.shape[0], 1), zero, dtype=ranks.dtype),
                 ranks],
                axis=1)
    return (ranks[:, :-1] > ranks[:, 1:]).sum(axis=1)


def lasc_array(order, values, colors):
    """Vectorized :func:`lasc`."""
    npositions = order.spec.n if order.spec.signed else order.spec.n - 1
    return npositions - ldes_array(order, values, colors)


def lexc_array(order, values, colors):
    """Vectorized :func:`lexc`.

    Example
    -------
    >>> from permlab.groups import GroupSpec, group_arrays
    >>> values, colors = group_arrays(GroupSpec(3))
    >>> lexc_array(color_major_order(3, 1), values, colors).tolist()
    [0, 1, 1, 2, 1, 1]

    """
    if order.spec.signed:
        raise UnsupportedGroupError('`lexc` is for unsigned groups, use '
                                    '`bexc` for signed ones')
    ranks = _rank_array(order, values, colors)
    nextranks = _rank_array(order, *_successors(values, colors))
    return (nextranks > ranks).sum(axis=1)


def bexc_array(spec, values, colors):
    """Vectorized :func:`bexc` for the signed group `spec`.

    Example
    -------
    >>> from permlab.groups import GroupSpec, group_arrays
    >>> spec = GroupSpec(2, signed=True)
    >>> values, colors = group_arrays(spec)
    >>> numpy.bincount(bexc_array(spec, values, colors)).tolist()
    [1, 6, 1]

    """
    if not spec.signed:
        raise UnsupportedGroupError('`bexc` is for signed groups')
    order = symmetric_order(spec.n, spec.d)
    ranks = _rank_array(order, values, colors)
    nextranks = _rank_array(order, *_successors(values, colors))
    fixed = values == numpy.arange(1, spec.n + 1)
    return ((nextranks > ranks) | (fixed & (colors < 0))).sum(axis=1)


def stat_array(name, spec, values, colors, order=None):
    """Vectorized :func:`statistic` over rows of a group array.

    Parameters
    ----------
    name : str
        One of :data:`permlab.constants.STAT_NAMES`.
    spec : :class:`permlab.groups.GroupSpec`
        Group the rows belong to.
    values : numpy.ndarray
        Permutation words, one per row.
    colors : numpy.ndarray
        Colors, one row per element.
    order : :class:`permlab.orders.LinearOrder` or None
        As for :func:`statistic`.

    Returns
    -------
    numpy.ndarray
        Value of the statistic for each row.

    Example
    -------
    >>> from permlab.groups import GroupSpec, group_arrays
    >>> spec = GroupSpec(2, signed=True)
    >>> values, colors = group_arrays(spec)
    >>> stat_array('des_b', spec, values, colors).tolist()
    [2, 1, 1, 0, 1, 1, 1, 1]

    """
    if name not in STAT_NAMES:
        raise ValueError(f"invalid statistic `name` {name}")
    if name in ('ldes', 'lasc', 'lexc'):
        if order is None:
            order = default_order(spec)
        _check_order(spec, order)
        func = {'ldes': ldes_array,
                'lasc': lasc_array,
                'lexc': lexc_array,
                }[name]
        return func(order, values, colors)
    if name in ('des', 'exc'):
        _require_symmetric_group(spec, name)
        order = color_major_order(spec.n, 1)
        if name == 'des':
            return ldes_array(order, values, colors)
        return (values > numpy.arange(1, spec.n + 1)).sum(axis=1)
    if name == 'bexc':
        return bexc_array(spec, values, colors)
    _require_hyperoctahedral(spec, name)
    order = symmetric_order(spec.n, 1)
    if name == 'des_b':
        return ldes_array(order, values, colors)
    if name == 'asc_b':
        return lasc_array(order, values, colors)
    return bexc_array(spec, values, colors)


if __name__ == '__main__':
    import doctest
    doctest.testmod()
