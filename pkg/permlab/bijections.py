"""
==========
bijections
==========

Bijections on colored permutation groups that carry excedance-type
statistics to descent-type statistics. Each is built on the decorated
cycle decomposition (:class:`permlab.groups.CycleForm`) and has an explicit
inverse.

"""


from permlab.groups import (ColoredPerm,
                            UnsupportedGroupError,
                            _from_cycles,
                            cycle_decomposition,
                            )
from permlab.orders import min_one_order


BIJECTION_NAMES = ('phi', 'gamma-min-one', 'gamma-sym')
"""tuple: Names of the bijections as used on the command line."""


def pair_map_s(letter, n, d):
    """Involution reflecting values :math:`2 \\ldots n` and reversing colors.

    Note
    ----
    :math:`s(1, j) = (1, d-1-j)` and :math:`s(i, j) = (n+2-i, d-1-j)` for
    :math:`i \\ge 2`.

    Example
    -------
    >>> pair_map_s((2, 0), 6, 4)
    (6, 3)
    >>> pair_map_s((1, 1), 6, 4)
    (1, 2)
    >>> pair_map_s(pair_map_s((5, 2), 6, 4), 6, 4)
    (5, 2)

    """
    i, j = letter
    if i == 1:
        return (1, d - 1 - j)
    return (n + 2 - i, d - 1 - j)


def pair_map_t(letter):
    """Involution negating the color, :math:`t(i, j) = (i, -j)`.

    Example
    -------
    >>> pair_map_t((3, -2))
    (3, 2)

    """
    i, j = letter
    return (i, -j)


def _word(spec, letters):
    return ColoredPerm._trusted(spec,
                                tuple(v for v, _ in letters),
                                tuple(c for _, c in letters))


def _require_unsigned(p, name):
    if p.spec.signed:
        raise UnsupportedGroupError(f"`{name}` is for unsigned groups")


def _require_signed(p, name):
    if not p.spec.signed:
        raise UnsupportedGroupError(f"`{name}` is for signed groups")


def _check_order(p, order):
    if order.spec != p.spec:
        raise ValueError(f"`order` is over the alphabet of {order.spec}, "
                         f"not {p.spec}")


def _rotate_to_end(cycle, position):
    """Rotate `cycle` so the entry at `position` comes last."""
    return cycle[position + 1:] + cycle[:position + 1]


def _split_after(letters, marks):
    """Split `letters` into segments ending at each marked position."""
    segments = []
    start = 0
    for k in marks:
        segments.append(tuple(letters[start: k + 1]))
        start = k + 1
    return segments


def _right_to_left_records(keys, larger):
    """Positions that beat every later position (maxima or minima)."""
    marks = []
    best = None
    for k in range(len(keys) - 1, -1, -1):
        if best is None or (keys[k] > best if larger else keys[k] < best):
            best = keys[k]
            marks.append(k)
    return marks[::-1]


def phi(p, order):
    """Bijection sending `order`-excedances to `order`-descents.

    Note
    ----
    Rotate each decorated cycle of `p` so its largest letter in `order` is
    last, list the cycles by last letter in decreasing order, concatenate,
    and reverse the resulting word. Then ``ldes(phi(p, L), L) ==
    lexc(p, L)``.

    Parameters
    ----------
    p : :class:`permlab.groups.ColoredPerm`
        Element of an unsigned group.
    order : :class:`permlab.orders.LinearOrder`
        Order over the alphabet of `p`.

    Returns
    -------
    :class:`permlab.groups.ColoredPerm`

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> from permlab.orders import color_major_order
    >>> p = make_perm((2, 4, 1, 5, 6, 3), (0, 1, 3, 3, 0, 2), GroupSpec(6, 4))
    >>> print(phi(p, color_major_order(6, 4)))
    5_3 4_1 2_0 1_3 3_2 6_0

    """
    _require_unsigned(p, 'phi')
    _check_order(p, order)
    rank = order.rank
    cycles = []
    for cycle in cycle_decomposition(p):
        top = max(range(len(cycle)), key=lambda k: rank(cycle[k]))
        cycles.append(_rotate_to_end(cycle, top))
    cycles.sort(key=lambda cycle: rank(cycle[-1]), reverse=True)
    letters = [letter for cycle in cycles for letter in cycle]
    return _word(p.spec, letters[::-1])


def phi_inverse(w, order):
    """Inverse of :func:`phi`.

    Reverses `w`, cuts it after every right-to-left maximum in `order`, and
    reads the pieces as decorated cycles.

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> from permlab.orders import color_major_order
    >>> w = make_perm((5, 4, 2, 1, 3, 6), (3, 1, 0, 3, 2, 0), GroupSpec(6, 4))
    >>> print(phi_inverse(w, color_major_order(6, 4)))
    2_0 4_1 1_3 5_3 6_0 3_2

    """
    _require_unsigned(w, 'phi_inverse')
    _check_order(w, order)
    letters = w.letters[::-1]
    marks = _right_to_left_records([order.rank(x) for x in letters], True)
    return _from_cycles(w.spec, _split_after(letters, marks))


def gamma_min_one(p):
    """Bijection carrying min-one excedances to min-one descents.

    Note
    ----
    Every entry of the decorated cycles of `p` is replaced by its image
    under :func:`pair_map_s`. Each cycle is then rotated so its smallest
    letter in the min-one order is last, the cycles are listed by last
    letter in increasing order and concatenated. The first letter
    :math:`(i, j)` of `p` becomes :math:`s(i, j)`.

    Parameters
    ----------
    p : :class:`permlab.groups.ColoredPerm`
        Element of an unsigned group.

    Returns
    -------
    :class:`permlab.groups.ColoredPerm`

    Example
    -------
    >>> from permlab.groups import make_perm
    >>> print(gamma_min_one(make_perm((8, 9, 1, 6, 2, 4, 3, 7, 5))))
    3_0 4_0 8_0 1_0 6_0 9_0 2_0 7_0 5_0
    >>> print(gamma_min_one(make_perm((2, 1))))
    2_0 1_0

    """
    _require_unsigned(p, 'gamma_min_one')
    n, d = p.spec.n, p.spec.d
    rank = min_one_order(n, d).rank
    cycles = []
    for cycle in cycle_decomposition(p):
        cycle = tuple(pair_map_s(letter, n, d) for letter in cycle)
        bottom = min(range(len(cycle)), key=lambda k: rank(cycle[k]))
        cycles.append(_rotate_to_end(cycle, bottom))
    cycles.sort(key=lambda cycle: rank(cycle[-1]))
    return _word(p.spec, [letter for cycle in cycles for letter in cycle])


def gamma_min_one_inverse(w):
    """Inverse of :func:`gamma_min_one`.

    Example
    -------
    >>> from permlab.groups import make_perm
    >>> print(gamma_min_one_inverse(make_perm((3, 4, 8, 1, 6, 9, 2, 7, 5))))
    8_0 9_0 1_0 6_0 2_0 4_0 3_0 7_0 5_0
    >>> print(gamma_min_one_inverse(make_perm((3, 1, 2, 5, 9, 6, 7, 8, 4))))
    8_0 5_0 7_0 3_0 4_0 2_0 6_0 1_0 9_0

    """
    _require_unsigned(w, 'gamma_min_one_inverse')
    n, d = w.spec.n, w.spec.d
    rank = min_one_order(n, d).rank
    letters = w.letters
    marks = _right_to_left_records([rank(x) for x in letters], False)
    cycles = [tuple(pair_map_s(letter, n, d) for letter in segment)
              for segment in _split_after(letters, marks)]
    return _from_cycles(w.spec, cycles)


def _flip_long_cycle(cycle):
    if len(cycle) == 1:
        return cycle
    return tuple(map(pair_map_t, cycle))


def gamma_symmetric(p):
    """Bijection carrying B-excedances to symmetric-order descents.

    Note
    ----
    Colors are negated on every cycle of length at least two (fixed points
    keep their color). Each cycle is rotated so its smallest value is last,
    and the cycles are listed by that value in increasing order and
    concatenated. Then ``ldes(gamma_symmetric(p), symmetric) == bexc(p)``.

    Parameters
    ----------
    p : :class:`permlab.groups.ColoredPerm`
        Element of a signed group.

    Returns
    -------
    :class:`permlab.groups.ColoredPerm`

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> spec = GroupSpec(2, signed=True)
    >>> print(gamma_symmetric(make_perm((1, 2), (-1, 1), spec)))
    1_-1 2_1
    >>> print(gamma_symmetric(make_perm((2, 1), (1, -1), spec)))
    2_-1 1_1

    """
    _require_signed(p, 'gamma_symmetric')
    cycles = []
    for cycle in cycle_decomposition(p):
        cycle = _flip_long_cycle(cycle)
        bottom = min(range(len(cycle)), key=lambda k: cycle[k][0])
        cycles.append(_rotate_to_end(cycle, bottom))
    cycles.sort(key=lambda cycle: cycle[-1][0])
    return _word(p.spec, [letter for cycle in cycles for letter in cycle])


def gamma_symmetric_inverse(w):
    """Inverse of :func:`gamma_symmetric`.

    Cuts `w` after every right-to-left minimum of the values and undoes the
    color negation on pieces of length at least two.

    Example
    -------
    >>> from permlab.groups import GroupSpec, make_perm
    >>> w = make_perm((2, 1), (1, -1), GroupSpec(2, signed=True))
    >>> print(gamma_symmetric_inverse(w))
    2_-1 1_1

    """
    _require_signed(w, 'gamma_symmetric_inverse')
    letters = w.letters
    marks = _right_to_left_records(list(w.values), False)
    cycles = [_flip_long_cycle(segment)
              for segment in _split_after(letters, marks)]
    return _from_cycles(w.spec, cycles)


def apply_bijection(name, p, order=None, *, inverse=False):
    """Apply a bijection (or its inverse) by name.

    Parameters
    ----------
    name : str
        One of :data:`BIJECTION_NAMES`.
    p : :class:`permlab.groups.ColoredPerm`
        The element.
    order : :class:`permlab.orders.LinearOrder` or None
        Order, only used (and required) by ``phi``.
    inverse : bool
        Apply the inverse map.

    Returns
    -------
    :class:`permlab.groups.ColoredPerm`

    """
    if name == 'phi':
        if order is None:
            raise ValueError('`phi` needs an `order`')
        return phi_inverse(p, order) if inverse else phi(p, order)
    if name == 'gamma-min-one':
        return gamma_min_one_inverse(p) if inverse else gamma_min_one(p)
    if name == 'gamma-sym':
        return gamma_symmetric_inverse(p) if inverse else gamma_symmetric(p)
    raise ValueError(f"invalid bijection `name` {name}")


if __name__ == '__main__':
    import doctest
    doctest.testmod()
