"""
========
eulerian
========

Eulerian-type polynomials: distributions of statistics over whole groups or
first-letter classes (by enumeration), classical and restricted Eulerian
polynomials, and the type B descent and excedance polynomials of
first-letter classes with their recurrences.

Families of first-letter polynomials used throughout:

- ``A``: descents over permutations of :math:`[n]` starting with `k`.
- ``AExc``: excedances over the same class.
- ``B``: type B descents over signed permutations starting with `k`
  (`k` may be negative).
- ``BE``: type B excedances over the same class.
- ``Bbar``: :math:`B_{n,k} + B_{n,-k}`, palindromic with center
  :math:`n/2`.
- ``Btilde``: :math:`t B_{n,k} + B_{n,-k}`, palindromic with center
  :math:`(n+1)/2`.

"""


import functools
import logging

import numpy

import scipy.special

from permlab.constants import POLY_FAMILIES
from permlab.groups import GroupSpec, group_arrays
from permlab.polynomials import ONE, T, IntPoly
from permlab.statistics import stat_array


_logger = logging.getLogger(__name__)


def _comb(n, k):
    return scipy.special.comb(n, k, exact=True)


def stat_polynomial(spec, stat, order=None, first=None, *,
                    max_elements=None):
    """Distribution of a statistic as a generating polynomial.

    Parameters
    ----------
    spec : :class:`permlab.groups.GroupSpec`
        Group to enumerate.
    stat : str
        Statistic, one of :data:`permlab.constants.STAT_NAMES`.
    order : :class:`permlab.orders.LinearOrder` or None
        Order for order-dependent statistics, see
        :func:`permlab.statistics.statistic`.
    first : tuple or None
        Restrict to elements with this first letter ``(i, j)``.
    max_elements : int or None
        Enumeration cap, see :func:`permlab.groups.max_elements`.

    Returns
    -------
    :class:`permlab.polynomials.IntPoly`
        Coefficient of :math:`t^k` is the number of elements on which the
        statistic equals `k`.

    Example
    -------
    >>> print(stat_polynomial(GroupSpec(6), 'des', first=(2, 0)))
    16t + 66t^2 + 36t^3 + 2t^4
    >>> print(stat_polynomial(GroupSpec(6), 'exc', first=(6, 0)))
    16t + 66t^2 + 36t^3 + 2t^4
    >>> bspec = GroupSpec(2, signed=True)
    >>> print(stat_polynomial(bspec, 'des_b', first=(1, 1)))
    1 + t
    >>> print(stat_polynomial(bspec, 'exc_b'))
    1 + 6t + t^2

    """
    values, colors = group_arrays(spec, first, max_elements=max_elements)
    counts = stat_array(stat, spec, values, colors, order)
    _logger.debug('distribution of %s over %d elements of %r', stat,
                  len(counts), spec)
    return IntPoly(numpy.bincount(counts, minlength=1).tolist())


def first_letter_distributions(spec, stat, order=None, *, max_elements=None):
    """Distribution of a statistic on every first-letter class at once.

    Parameters
    ----------
    spec : :class:`permlab.groups.GroupSpec`
        Group to enumerate.
    stat : str
        Statistic, one of :data:`permlab.constants.STAT_NAMES`.
    order : :class:`permlab.orders.LinearOrder` or None
        Order for order-dependent statistics.
    max_elements : int or None
        Enumeration cap.

    Returns
    -------
    dict
        Maps each first letter ``(i, j)`` to a
        :class:`permlab.polynomials.IntPoly`, keys ordered by value then
        color.

    Example
    -------
    >>> polys = first_letter_distributions(GroupSpec(2, signed=True), 'des_b')
    >>> {letter: str(poly) for letter, poly in polys.items()}
    {(1, -1): 't + t^2', (1, 1): '1 + t', (2, -1): '2t', (2, 1): '2t'}

    """
    values, colors = group_arrays(spec, max_elements=max_elements)
    counts = stat_array(stat, spec, values, colors, order)
    polys = {}
    for i in range(1, spec.n + 1):
        for j in spec.colors:
            mask = (values[:, 0] == i) & (colors[:, 0] == j)
            polys[(i, j)] = IntPoly(
                    numpy.bincount(counts[mask], minlength=1).tolist())
    _logger.debug('first-letter distributions of %s over %d elements of %r',
                  stat, len(counts), spec)
    return polys


def class_polynomials(family, n, *, max_elements=None):
    """Enumerated first-letter polynomials of a family.

    `family` is one of ``A``, ``AExc``, ``B`` or ``BE``.

    Returns
    -------
    dict
        Maps each first letter `k` (negative for negatively colored first
        letters in ``B`` and ``BE``) to its polynomial, in the order of
        :func:`family_classes`.

    Example
    -------
    >>> polys = class_polynomials('B', 2)
    >>> [str(polys[k]) for k in family_classes('B', 2)]
    ['1 + t', 't + t^2', '2t', '2t']

    """
    if family in ('A', 'AExc'):
        spec = GroupSpec(n)
        stat = 'des' if family == 'A' else 'exc'
    elif family in ('B', 'BE'):
        spec = GroupSpec(n, signed=True)
        stat = 'des_b' if family == 'B' else 'exc_b'
    else:
        raise ValueError(f"cannot enumerate `family` {family} by class")
    polys = first_letter_distributions(spec, stat, max_elements=max_elements)
    if spec.signed:
        return {k: polys[(abs(k), 1 if k > 0 else -1)]
                for k in family_classes(family, n)}
    return {k: polys[(k, 0)] for k in family_classes(family, n)}


@functools.lru_cache(maxsize=None)
def eulerian_a(n):
    """Eulerian polynomial :math:`A_n(t)`, descents over :math:`S_n`.

    Computed by :math:`A_n = (1 + (n-1)t) A_{n-1} + t(1-t) A_{n-1}'` with
    :math:`A_0 = A_1 = 1`.

    Example
    -------
    >>> print(eulerian_a(1))
    1
    >>> print(eulerian_a(3))
    1 + 4t + t^2
    >>> eulerian_a(6).to_list()
    [1, 57, 302, 302, 57, 1]

    """
    if n < 0:
        raise ValueError(f"`n` must be >= 0, not {n}")
    if n <= 1:
        return ONE
    prev = eulerian_a(n - 1)
    return ((ONE + T.scalar_mul(n - 1)) * prev +
            T * (ONE - T) * prev.derivative())


def eulerian_number(n, k):
    """Number of permutations of :math:`[n]` with `k` descents.

    Uses :math:`\\sum_{j=0}^{k} (-1)^j \\binom{n+1}{j} (k+1-j)^n`.

    Example
    -------
    >>> [eulerian_number(5, k) for k in range(5)]
    [1, 26, 66, 26, 1]
    >>> eulerian_number(0, 0)
    1
    >>> eulerian_number(4, 4)
    0

    """
    if n < 0 or k < 0:
        raise ValueError(f"need `n` >= 0 and `k` >= 0, got {n} and {k}")
    if n == 0:
        return 1 if k == 0 else 0
    if k > n - 1:
        return 0
    return sum((-1)**j * _comb(n + 1, j) * (k + 1 - j)**n
               for j in range(k + 1))


def conger_count(n, dsc, j):
    """Number of permutations by first letter and descents, Conger's sum.

    Counts the permutations of :math:`[n]` starting with `j` that have
    `dsc` descents.

    Note
    ----
    :math:`\\sum_{k=0}^{dsc} (-1)^{dsc-k} \\binom{n}{dsc-k} k^{j-1}
    (k+1)^{n-j}`, with :math:`0^0 = 1`.

    Parameters
    ----------
    n : int
        Length.
    dsc : int
        Number of descents, :math:`0 \\le dsc \\le n-1`.
    j : int
        First letter, :math:`1 \\le j \\le n`.

    Returns
    -------
    int

    Example
    -------
    >>> conger_count(6, 1, 2)
    16
    >>> conger_count(2, 0, 1)
    1
    >>> conger_count(6, 4, 6)
    26
    >>> conger_count(3, 3, 1)
    Traceback (most recent call last):
      ...
    ValueError: need 1 <= `j` <= 3 and 0 <= `dsc` <= 2, got j=1, dsc=3

    """
    if not (1 <= j <= n and 0 <= dsc <= n - 1):
        raise ValueError(f"need 1 <= `j` <= {n} and 0 <= `dsc` <= {n - 1}, "
                         f"got j={j}, dsc={dsc}")
    return sum((-1)**(dsc - k) * _comb(n, dsc - k) * k**(j - 1) *
               (k + 1)**(n - j)
               for k in range(dsc + 1))


def conger_polynomial(n, j):
    """Restricted Eulerian polynomial :math:`A_{n,j}(t)` by Conger's sum.

    Example
    -------
    >>> print(conger_polynomial(6, 3))
    8t + 60t^2 + 48t^3 + 4t^4

    """
    return IntPoly([conger_count(n, dsc, j) for dsc in range(n)])


def _check_signed_class(n, k):
    if int(n) != n or n < 1 or int(k) != k or not (1 <= abs(k) <= n):
        raise ValueError(f"need `n` >= 1 and 1 <= |`k`| <= `n`, got n={n}, "
                         f"k={k}")


@functools.lru_cache(maxsize=None)
def typeb_des_poly_rec(n, k):
    """Type B descent polynomial :math:`B_{n,k}(t)` of a first-letter class.

    Note
    ----
    No enumeration. :math:`B_{1,1} = 1`, :math:`B_{1,-1} = t`,
    :math:`B_{n,\\pm n} = 2^{n-1} t A_{n-1}(t)` and for
    :math:`1 \\le |k| < n`

    .. math::

        B_{n,k} &= (1 + (2n-3)t) B_{n-1,k} + 2t(1-t) D B_{n-1,k}
                   \\quad (k > 0) \\\\
        B_{n,k} &= ((2n-1)t - 1) B_{n-1,k} + 2t(1-t) D B_{n-1,k}
                   \\quad (k < 0)

    Parameters
    ----------
    n : int
        Length.
    k : int
        First letter, negative for a negatively colored first letter.

    Returns
    -------
    :class:`permlab.polynomials.IntPoly`

    Example
    -------
    >>> print(typeb_des_poly_rec(2, 2))
    2t
    >>> print(typeb_des_poly_rec(2, 1))
    1 + t
    >>> print(typeb_des_poly_rec(2, -1))
    t + t^2

    """
    _check_signed_class(n, k)
    if n == 1:
        return ONE if k > 0 else T
    if abs(k) == n:
        return T.scalar_mul(2**(n - 1)) * eulerian_a(n - 1)
    prev = typeb_des_poly_rec(n - 1, k)
    if k > 0:
        head = ONE + T.scalar_mul(2 * n - 3)
    else:
        head = T.scalar_mul(2 * n - 1) - ONE
    return head * prev + T.scalar_mul(2) * (ONE - T) * prev.derivative()


def typeb_eulerian(n):
    """Type B Eulerian polynomial, the sum of all :math:`B_{n,k}`.

    Example
    -------
    >>> print(typeb_eulerian(2))
    1 + 6t + t^2
    >>> typeb_eulerian(3).to_list()
    [1, 23, 23, 1]

    """
    total = IntPoly()
    for k in range(1, n + 1):
        total = total + typeb_des_poly_rec(n, k) + typeb_des_poly_rec(n, -k)
    return total


@functools.lru_cache(maxsize=None)
def _typeb_count(n, dsc, k):
    if dsc < 0 or dsc > n:
        return 0
    if n == 1:
        return int(dsc == (0 if k > 0 else 1))
    if abs(k) == n:
        return 0 if dsc == 0 else 2**(n - 1) * eulerian_number(n - 1, dsc - 1)
    if k > 0:
        return ((2 * dsc + 1) * _typeb_count(n - 1, dsc, k) +
                (2 * (n - dsc - 1) + 1) * _typeb_count(n - 1, dsc - 1, k))
    return ((2 * dsc - 1) * _typeb_count(n - 1, dsc, k) +
            (2 * (n - dsc) + 1) * _typeb_count(n - 1, dsc - 1, k))


def typeb_count_rec(n, dsc, k):
    """Number of signed permutations starting with `k` with `dsc` descents.

    Note
    ----
    Coefficient-level recurrence, for :math:`1 \\le |k| < n`

    .. math::

        B_{n,d,k} &= (2d+1) B_{n-1,d,k} + (2(n-d-1)+1) B_{n-1,d-1,k}
                     \\quad (k > 0) \\\\
        B_{n,d,k} &= (2d-1) B_{n-1,d,k} + (2(n-d)+1) B_{n-1,d-1,k}
                     \\quad (k < 0)

    with :math:`B_{n,d,\\pm n} = 2^{n-1} A(n-1, d-1)` and
    :math:`B_{n,0,\\pm n} = 0`.

    Example
    -------
    >>> typeb_count_rec(1, 1, -1)
    1
    >>> typeb_count_rec(2, 1, 1)
    1
    >>> typeb_count_rec(3, 0, 3)
    0
    >>> [typeb_count_rec(3, d, 2) for d in range(4)]
    [0, 6, 2, 0]

    """
    _check_signed_class(n, k)
    if not 0 <= dsc <= n:
        raise ValueError(f"need 0 <= `dsc` <= {n}, got {dsc}")
    return _typeb_count(n, dsc, k)


@functools.lru_cache(maxsize=None)
def _typeb_exc_count(n, e, k):
    if e < 0 or e > n:
        return 0
    if abs(k) == 1:
        return _typeb_count(n, e, k)
    if abs(k) == n:
        return 0 if e == 0 else 2**(n - 1) * eulerian_number(n - 1, e - 1)
    if k > 0:
        return ((2 * e - 1) * _typeb_exc_count(n - 1, e, k) +
                (2 * (n - e) + 1) * _typeb_exc_count(n - 1, e - 1, k))
    return ((2 * e + 1) * _typeb_exc_count(n - 1, e, k) +
            (2 * (n - e - 1) + 1) * _typeb_exc_count(n - 1, e - 1, k))


def typeb_exc_count_rec(n, exc, k):
    """Number of signed permutations by first letter and type B excedances.

    Counts the signed permutations starting with `k` that have `exc`
    excedances.

    Note
    ----
    For :math:`2 \\le |k| < n` the excedance numbers follow the descent
    recurrence of the opposite sign:

    .. math::

        BE_{n,e,k} &= (2e-1) BE_{n-1,e,k} + (2(n-e)+1) BE_{n-1,e-1,k}
                      \\quad (k > 0) \\\\
        BE_{n,e,k} &= (2e+1) BE_{n-1,e,k} + (2(n-e-1)+1) BE_{n-1,e-1,k}
                      \\quad (k < 0)

    Classes with :math:`|k| = 1` have the descent numbers of the same class
    and :math:`BE_{n,e,\\pm n} = 2^{n-1} A(n-1, e-1)`.

    Example
    -------
    >>> [typeb_exc_count_rec(3, e, 2) for e in range(4)]
    [0, 2, 6, 0]
    >>> [typeb_exc_count_rec(3, e, -1) for e in range(4)]
    [0, 1, 6, 1]

    """
    _check_signed_class(n, k)
    if not 0 <= exc <= n:
        raise ValueError(f"need 0 <= `exc` <= {n}, got {exc}")
    return _typeb_exc_count(n, exc, k)


def typeb_exc_poly_rec(n, k):
    """Type B excedance polynomial :math:`BE_{n,k}(t)` by recurrence.

    Example
    -------
    >>> print(typeb_exc_poly_rec(2, -1))
    t + t^2

    """
    _check_signed_class(n, k)
    return IntPoly([_typeb_exc_count(n, e, k) for e in range(n + 1)])


def lemma_drop_rhs(n1, k, polys=None):
    """Assemble :math:`B_{n+1,k}` from the level-:math:`n` polynomials.

    Note
    ----
    With :math:`n = n_1 - 1` and :math:`k > 0`

    .. math::

        B_{n+1,k} = \\sum_{i=-n}^{-1} B_{n,i} + t \\sum_{i=1}^{k-1} B_{n,i}
                    + \\sum_{i=k}^{n} B_{n,i}

        B_{n+1,-k} = t \\sum_{i=-n}^{-k} B_{n,i}
                     + \\sum_{i=-(k-1)}^{-1} B_{n,i}
                     + t \\sum_{i=1}^{n} B_{n,i}

    Parameters
    ----------
    n1 : int
        The length :math:`n+1` of the assembled class, at least 2.
    k : int
        Signed first letter, :math:`1 \\le |k| \\le n_1`.
    polys : callable or None
        ``polys(n, i)`` gives :math:`B_{n,i}`; default
        :func:`typeb_des_poly_rec`.

    Returns
    -------
    :class:`permlab.polynomials.IntPoly`

    Example
    -------
    >>> print(lemma_drop_rhs(2, 1))
    1 + t
    >>> print(lemma_drop_rhs(2, -1))
    t + t^2
    >>> lemma_drop_rhs(3, -2) == typeb_des_poly_rec(3, -2)
    True

    """
    if n1 < 2:
        raise ValueError(f"`n1` must be >= 2, not {n1}")
    _check_signed_class(n1, k)
    if polys is None:
        polys = typeb_des_poly_rec
    n = n1 - 1

    def block(indices):
        total = IntPoly()
        for i in indices:
            total = total + polys(n, i)
        return total

    if k > 0:
        return (block(range(-n, 0)) + T * block(range(1, k)) +
                block(range(k, n + 1)))
    k = -k
    return (T * block(range(-n, -k + 1)) + block(range(-(k - 1), 0)) +
            T * block(range(1, n + 1)))


def _check_positive_class(n, k):
    if int(n) != n or n < 1 or int(k) != k or not (1 <= k <= n):
        raise ValueError(f"need `n` >= 1 and 1 <= `k` <= `n`, got n={n}, "
                         f"k={k}")


def symmetrized_bar(n, k, polys=None):
    """:math:`\\bar B_{n,k} = B_{n,k} + B_{n,-k}`, palindromic about n/2.

    Example
    -------
    >>> print(symmetrized_bar(2, 1))
    1 + 2t + t^2
    >>> print(symmetrized_bar(2, 2))
    4t

    """
    _check_positive_class(n, k)
    if polys is None:
        polys = typeb_des_poly_rec
    return polys(n, k) + polys(n, -k)


def symmetrized_tilde(n, k, polys=None):
    """:math:`\\tilde B_{n,k} = t B_{n,k} + B_{n,-k}`.

    Palindromic about :math:`(n+1)/2`.

    Example
    -------
    >>> print(symmetrized_tilde(2, 2))
    2t + 2t^2
    >>> print(symmetrized_tilde(1, 1))
    2t

    """
    _check_positive_class(n, k)
    if polys is None:
        polys = typeb_des_poly_rec
    return T * polys(n, k) + polys(n, -k)


def symmetrized_bar_rhs(n1, k):
    """:math:`\\bar B_{n+1,k}` from level :math:`n = n_1 - 1`.

    .. math::

        \\bar B_{n+1,k} = (1+t) \\sum_{i=k}^{n} \\bar B_{n,i}
                          + 2 \\sum_{i=1}^{k-1} \\tilde B_{n,i}

    Example
    -------
    >>> symmetrized_bar_rhs(2, 1) == symmetrized_bar(2, 1)
    True
    >>> print(symmetrized_bar_rhs(2, 2))
    4t

    """
    if n1 < 2:
        raise ValueError(f"`n1` must be >= 2, not {n1}")
    _check_positive_class(n1, k)
    n = n1 - 1
    bars = sum((symmetrized_bar(n, i) for i in range(k, n + 1)), IntPoly())
    tildes = sum((symmetrized_tilde(n, i) for i in range(1, k)), IntPoly())
    return (ONE + T) * bars + tildes.scalar_mul(2)


def symmetrized_tilde_rhs(n1, k):
    """:math:`\\tilde B_{n+1,k}` from level :math:`n = n_1 - 1`.

    .. math::

        \\tilde B_{n+1,k} = 2t \\sum_{i=k}^{n} \\bar B_{n,i}
                            + (1+t) \\sum_{i=1}^{k-1} \\tilde B_{n,i}

    Example
    -------
    >>> print(symmetrized_tilde_rhs(2, 2))
    2t + 2t^2
    >>> symmetrized_tilde_rhs(3, 2) == symmetrized_tilde(3, 2)
    True

    """
    if n1 < 2:
        raise ValueError(f"`n1` must be >= 2, not {n1}")
    _check_positive_class(n1, k)
    n = n1 - 1
    bars = sum((symmetrized_bar(n, i) for i in range(k, n + 1)), IntPoly())
    tildes = sum((symmetrized_tilde(n, i) for i in range(1, k)), IntPoly())
    return T.scalar_mul(2) * bars + (ONE + T) * tildes


def typeb_boundary_rhs(n1):
    """:math:`B_{n+1,\\pm(n+1)}` as :math:`\\sum_{i=1}^{n} \\tilde B_{n,i}`.

    Example
    -------
    >>> typeb_boundary_rhs(3) == typeb_des_poly_rec(3, -3)
    True

    """
    if n1 < 2:
        raise ValueError(f"`n1` must be >= 2, not {n1}")
    n = n1 - 1
    return sum((symmetrized_tilde(n, i) for i in range(1, n + 1)), IntPoly())


_METHODS = ('auto', 'formula', 'enumerate')


def _enumerated(family, n, k, max_elements):
    if family in ('A', 'AExc'):
        stat = 'des' if family == 'A' else 'exc'
        return stat_polynomial(GroupSpec(n), stat, first=(k, 0),
                               max_elements=max_elements)
    stat = 'des_b' if family == 'B' else 'exc_b'
    return stat_polynomial(GroupSpec(n, signed=True), stat,
                           first=(abs(k), 1 if k > 0 else -1),
                           max_elements=max_elements)


def family_polynomial(family, n, k, *, method='auto', max_elements=None):
    """First-letter polynomial of a named family.

    Parameters
    ----------
    family : str
        One of :data:`permlab.constants.POLY_FAMILIES`.
    n : int
        Length.
    k : int
        First letter. Negative values are allowed for ``B`` and ``BE``.
    method : {'auto', 'formula', 'enumerate'}
        ``formula`` uses closed forms or recurrences (Conger's sum for
        ``A``, the type B recurrences otherwise) and is not available for
        ``AExc``; ``enumerate`` counts over the class; ``auto`` prefers
        ``formula``.
    max_elements : int or None
        Enumeration cap.

    Returns
    -------
    :class:`permlab.polynomials.IntPoly`

    Example
    -------
    >>> print(family_polynomial('A', 6, 2))
    16t + 66t^2 + 36t^3 + 2t^4
    >>> print(family_polynomial('AExc', 6, 6))
    16t + 66t^2 + 36t^3 + 2t^4
    >>> family_polynomial('BE', 3, 2) == family_polynomial(
    ...         'BE', 3, 2, method='enumerate')
    True
    >>> print(family_polynomial('Btilde', 2, 2, method='enumerate'))
    2t + 2t^2

    """
    if family not in POLY_FAMILIES:
        raise ValueError(f"invalid `family` {family}")
    if method not in _METHODS:
        raise ValueError(f"invalid `method` {method}")
    if family in ('A', 'AExc', 'Bbar', 'Btilde'):
        _check_positive_class(n, k)
    else:
        _check_signed_class(n, k)
    if family == 'AExc' and method == 'formula':
        raise ValueError('no formula for the `AExc` family, use '
                         "method='enumerate'")
    by_enumeration = method == 'enumerate' or family == 'AExc'
    if family in ('Bbar', 'Btilde'):
        if by_enumeration:
            def polys(m, i):
                return _enumerated('B', m, i, max_elements)
        else:
            polys = typeb_des_poly_rec
        func = symmetrized_bar if family == 'Bbar' else symmetrized_tilde
        return func(n, k, polys)
    if by_enumeration:
        return _enumerated(family, n, k, max_elements)
    if family == 'A':
        return conger_polynomial(n, k)
    if family == 'B':
        return typeb_des_poly_rec(n, k)
    return typeb_exc_poly_rec(n, k)


def family_classes(family, n):
    """First letters indexing a family at length `n`, in table order.

    Example
    -------
    >>> family_classes('B', 2)
    [1, -1, 2, -2]
    >>> family_classes('A', 3)
    [1, 2, 3]

    """
    if family in ('B', 'BE'):
        return [s * k for k in range(1, n + 1) for s in (1, -1)]
    return list(range(1, n + 1))


if __name__ == '__main__':
    import doctest
    doctest.testmod()
