"""
======
checks
======

Named, executable verifications of the identities implemented in
:mod:`permlab`. Every check compares two independent computations (usually
exhaustive enumeration against a formula, recurrence or bijection) over a
range of parameters and returns an :class:`IdentityReport`.

A failing report carries a counterexample that can be fed back into the
module operations to reproduce the failure, for instance by building the
offending element with :func:`permlab.groups.make_perm` and the order with
:func:`permlab.orders.parse_order`.

"""


import collections
import functools
import logging
import math
import multiprocessing
import time
import warnings

import numpy

import pandas as pd

from permlab.bijections import (gamma_min_one,
                                gamma_min_one_inverse,
                                gamma_symmetric,
                                gamma_symmetric_inverse,
                                pair_map_s,
                                phi,
                                phi_inverse,
                                )
from permlab.constants import DEFAULT_SERIES_TERMS, FIRST_LETTER_TABLE_N6
from permlab.eulerian import (class_polynomials,
                              conger_count,
                              conger_polynomial,
                              eulerian_a,
                              eulerian_number,
                              family_classes,
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
                              )
from permlab.groups import GroupSpec, group_arrays, perms_from_arrays
from permlab.orders import (color_major_order,
                            min_one_order,
                            random_order,
                            symmetric_order,
                            )
from permlab.polynomials import (IntPoly,
                                 ONE,
                                 T,
                                 gamma_vector,
                                 is_palindromic,
                                 is_real_rooted,
                                 )
from permlab.series import brenti_lhs, brenti_rhs, carlitz_lhs, carlitz_rhs
from permlab.statistics import bexc_array, ldes_array, lexc_array


_logger = logging.getLogger(__name__)


CheckSpec = collections.namedtuple('CheckSpec',
                                   ['id', 'statement', 'params',
                                    'supports_strict', 'aliases', 'func'])
CheckSpec.__doc__ = """Registered check.

Attributes
----------
id : str
    Identifier used by :func:`run_check` and ``permlab verify --check``.
statement : str
    The identity the check verifies.
params : dict
    Default parameters; callers may override any of them.
supports_strict : bool
    Whether the check has a variant with the identity exactly as printed.
aliases : tuple
    Further ids accepted by :func:`get_check`.
func : callable
    Runs the check, see :func:`run_check`.

"""


_REGISTRY = collections.OrderedDict()

_ALIASES = {}


def _register(check_id, statement, supports_strict=False, aliases=(),
              **params):
    """Decorator adding a check function to the registry."""
    def decorator(func):
        for name in (check_id,) + tuple(aliases):
            if name in _REGISTRY or name in _ALIASES:
                raise ValueError(f"duplicate check id {name}")
        _REGISTRY[check_id] = CheckSpec(id=check_id,
                                        statement=statement,
                                        params=dict(params),
                                        supports_strict=supports_strict,
                                        aliases=tuple(aliases),
                                        func=func,
                                        )
        _ALIASES.update(dict.fromkeys(aliases, check_id))
        return func
    return decorator


class IdentityReport:
    """Outcome of one check.

    Parameters
    ----------
    check_id : str
        Which check ran.
    params : dict
        Parameters it ran with, defaults merged with overrides.
    counterexample : dict or None
        First failure in deterministic order, `None` if the identity held.
    examined : int
        Number of elements or polynomial cells compared.
    wall_time : float
        Seconds the check took.
    strict_paper : bool
        Whether the identity was checked exactly as printed.

    Attributes
    ----------
    check_id : str
    params : dict
    counterexample : dict or None
    examined : int
    wall_time : float
    strict_paper : bool

    """

    def __init__(self, check_id, params, counterexample, examined, wall_time,
                 strict_paper=False):
        """See main class doc string."""
        self.check_id = check_id
        self.params = dict(params)
        self.counterexample = counterexample
        self.examined = int(examined)
        self.wall_time = float(wall_time)
        self.strict_paper = bool(strict_paper)

    def __repr__(self):
        """Short representation with id and status."""
        return (f"IdentityReport({self.check_id!r}, status={self.status!r}, "
                f"examined={self.examined})")

    @property
    def status(self):
        """str: 'pass' or 'fail'."""
        return 'pass' if self.counterexample is None else 'fail'

    @property
    def passed(self):
        """bool: Whether the identity held on the whole range."""
        return self.counterexample is None

    def to_dict(self):
        """Report as a JSON-serializable dict."""
        return {'check': self.check_id,
                'status': self.status,
                'params': self.params,
                'strict_paper': self.strict_paper,
                'examined': self.examined,
                'wall_time': round(self.wall_time, 4),
                'counterexample': self.counterexample,
                }


def list_checks():
    """All registered checks in registration order.

    Returns
    -------
    list
        :class:`CheckSpec` entries.

    Example
    -------
    >>> ids = [c.id for c in list_checks()]
    >>> len(ids)
    19
    >>> ids[:3]
    ['first-letter-table', 'conger-alternating-sum', \
'first-letter-descent-excedance']
    >>> [c.id for c in list_checks() if c.supports_strict]
    ['typeb-carlitz']

    """
    return list(_REGISTRY.values())


def get_check(check_id):
    """Look up a registered check by id or alias.

    Example
    -------
    >>> get_check('thm1.10-carlitz').id
    'typeb-carlitz'

    """
    try:
        return _REGISTRY[_ALIASES.get(check_id, check_id)]
    except KeyError:
        raise ValueError(f"unknown check id {check_id}; valid ids are: "
                         f"{', '.join(_REGISTRY)}") from None


def run_check(check_id, *, strict_paper=False, max_elements=None, **params):
    """Run a check and report the outcome.

    Parameters
    ----------
    check_id : str
        Id of a registered check, see :func:`list_checks`.
    strict_paper : bool
        Check the identity exactly as printed where the check supports it.
        Checks without such a variant ignore the flag with a warning.
    max_elements : int or None
        Enumeration cap, see :func:`permlab.groups.max_elements`.
    ``**params``
        Overrides of the check's default parameters. A value of `None`
        keeps the default.

    Returns
    -------
    :class:`IdentityReport`

    Example
    -------
    >>> report = run_check('first-letter-table')
    >>> report.status
    'pass'
    >>> report.examined
    12
    >>> run_check('typeb-carlitz', n=2, enumerate_up_to=1).status
    'pass'
    >>> report = run_check('typeb-carlitz', n=2, strict_paper=True)
    >>> report.status
    'fail'
    >>> {k: report.counterexample[k] for k in ('n', 'i', 'index')}
    {'n': 1, 'i': 1, 'index': 0}
    >>> run_check('typeb-carlitz', m=3)
    Traceback (most recent call last):
      ...
    ValueError: invalid parameter `m` for check typeb-carlitz; valid \
parameters are: n, K, enumerate_up_to

    """
    spec = get_check(check_id)
    check_id = spec.id
    unknown = [key for key in params if key not in spec.params]
    if unknown:
        raise ValueError(f"invalid parameter `{unknown[0]}` for check "
                         f"{check_id}; valid parameters are: "
                         f"{', '.join(spec.params)}")
    merged = dict(spec.params)
    merged.update({key: val for key, val in params.items()
                   if val is not None})
    if strict_paper and not spec.supports_strict:
        warnings.warn(f"check {check_id} has no printed variant, ignoring "
                      '`strict_paper`')
        strict_paper = False
    kwargs = dict(merged)
    if spec.supports_strict:
        kwargs['strict_paper'] = strict_paper
    _logger.info('running check %s with %s', check_id, merged)
    start = time.time()
    counterexample, examined = spec.func(max_elements=max_elements, **kwargs)
    wall_time = time.time() - start
    report = IdentityReport(check_id, merged, counterexample, examined,
                            wall_time, strict_paper)
    if counterexample is None:
        _logger.info('check %s passed on %d cells in %.2f s', check_id,
                     examined, wall_time)
    else:
        _logger.warning('check %s failed after %d cells: %s', check_id,
                        examined, counterexample)
    return report


def _run_by_id(args):
    check_id, strict_paper, max_elements, params = args
    return run_check(check_id, strict_paper=strict_paper,
                     max_elements=max_elements, **params)


def run_checks(check_ids=None, *, processes=1, strict_paper=False,
               max_elements=None, params=None):
    """Run several checks, optionally in parallel.

    Parameters
    ----------
    check_ids : list or None
        Ids to run, `None` for all registered checks.
    processes : int
        Number of worker processes; 1 runs in this process.
    strict_paper : bool
        Passed to checks that support it; ignored silently by the others.
    max_elements : int or None
        Enumeration cap.
    params : dict or None
        Parameter overrides applied to every check that has a parameter of
        that name.

    Returns
    -------
    list
        :class:`IdentityReport` objects in the order of `check_ids`,
        whatever the number of processes.

    """
    if check_ids is None:
        check_ids = list(_REGISTRY)
    if processes < 1:
        raise ValueError(f"`processes` must be >= 1, not {processes}")
    params = params or {}
    jobs = []
    for check_id in check_ids:
        spec = get_check(check_id)
        jobs.append((check_id,
                     strict_paper and spec.supports_strict,
                     max_elements,
                     {key: val for key, val in params.items()
                      if key in spec.params},
                     ))
    if processes == 1 or len(jobs) < 2:
        return [_run_by_id(job) for job in jobs]
    with multiprocessing.Pool(min(processes, len(jobs))) as pool:
        return pool.map(_run_by_id, jobs, chunksize=1)


def reports_to_frame(reports):
    """Tabulate reports as a data frame, one row per report.

    Example
    -------
    >>> df = reports_to_frame([run_check('typeb-palindromicity', n=3)])
    >>> list(df.columns)
    ['check', 'status', 'strict_paper', 'examined', 'wall_time', \
'counterexample']
    >>> df.at[0, 'status'], int(df.at[0, 'examined'])
    ('pass', 12)

    """
    Row = collections.namedtuple('Row', ['check', 'status', 'strict_paper',
                                         'examined', 'wall_time',
                                         'counterexample'])
    rows = [Row(check=r.check_id,
                status=r.status,
                strict_paper=r.strict_paper,
                examined=r.examined,
                wall_time=r.wall_time,
                counterexample=(None if r.counterexample is None
                                else str(r.counterexample)),
                )
            for r in reports]
    return pd.DataFrame.from_records(rows, columns=Row._fields)


# helpers shared by the checks

def _poly_cell(reason, expected, observed, **cell):
    """Counterexample for a polynomial identity."""
    return dict(cell, reason=reason, expected=IntPoly(expected).to_list(),
                observed=IntPoly(observed).to_list())


def _element_cell(reason, spec, order_name, p, image=None, **extra):
    """Counterexample for a statement about one group element."""
    cell = {'n': spec.n,
            'd': spec.d,
            'signed': spec.signed,
            'order': order_name,
            'word': list(p.values),
            'colors': list(p.colors),
            'reason': reason,
            }
    if image is not None:
        cell['image_word'] = list(image.values)
        cell['image_colors'] = list(image.colors)
    cell.update(extra)
    return cell


def _image_arrays(images):
    values = numpy.array([w.values for w in images], dtype=numpy.int64)
    colors = numpy.array([w.colors for w in images], dtype=numpy.int64)
    return values, colors


def _check_bijection(spec, order, perms, forward, inverse, source_stat,
                     target_order, first_map=None):
    """Pointwise check of a statistic-carrying bijection on `perms`.

    `source_stat` holds the statistic of each element of `perms`; the image
    must have that many descents in `target_order`. Returns the first
    counterexample or `None`.

    """
    images = [forward(p) for p in perms]
    seen = {}
    for p, w in zip(perms, images):
        if w in seen:
            return _element_cell('not injective', spec, order.name, p, w,
                                 other_word=list(seen[w].values),
                                 other_colors=list(seen[w].colors))
        seen[w] = p
    image_ldes = ldes_array(target_order, *_image_arrays(images))
    bad = numpy.flatnonzero(image_ldes != source_stat)
    if len(bad):
        k = int(bad[0])
        return _element_cell('descents of image differ from statistic',
                             spec, order.name, perms[k], images[k],
                             statistic=int(source_stat[k]),
                             image_descents=int(image_ldes[k]))
    for p, w in zip(perms, images):
        if first_map is not None and w.first_letter != first_map(p):
            return _element_cell('first letter not mapped as expected',
                                 spec, order.name, p, w,
                                 expected_first=list(first_map(p)))
        if inverse is not None and inverse(w) != p:
            return _element_cell('inverse does not recover the element',
                                 spec, order.name, p, w)
    return None


# the checks

@_register('first-letter-table',
           'first-letter descent and excedance polynomials of S_6 match the '
           'published table',
           aliases=('table-n6',))
def _first_letter_table(*, max_elements=None):
    examined = 0
    for family in ('A', 'AExc'):
        polys = class_polynomials(family, 6, max_elements=max_elements)
        for j, expected in FIRST_LETTER_TABLE_N6[family].items():
            examined += 1
            if polys[j] != IntPoly(expected):
                return (_poly_cell('table entry differs', expected, polys[j],
                                   family=family, n=6, k=j),
                        examined)
    return None, examined


@_register('conger-alternating-sum',
           "Conger's alternating sum counts permutations of [n] by first "
           'letter and descents',
           aliases=('thm1.1-conger',),
           n=8)
def _conger_alternating_sum(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        polys = class_polynomials('A', m, max_elements=max_elements)
        for j in range(1, m + 1):
            for dsc in range(m):
                examined += 1
                formula = conger_count(m, dsc, j)
                if formula != polys[j][dsc]:
                    return ({'n': m, 'j': j, 'dsc': dsc,
                             'reason': 'sum differs from enumeration',
                             'expected': polys[j][dsc],
                             'observed': formula},
                            examined)
    return None, examined


@_register('first-letter-descent-excedance',
           'A_{n,1} = AExc_{n,1} = A_{n-1} and A_{n,j} = AExc_{n,n+2-j} for '
           '2 <= j <= n',
           n=7)
def _first_letter_descent_excedance(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        des = class_polynomials('A', m, max_elements=max_elements)
        exc = class_polynomials('AExc', m, max_elements=max_elements)
        examined += 1
        if not des[1] == exc[1] == eulerian_a(m - 1):
            return (_poly_cell('first letter 1 differs from A_{n-1}',
                               eulerian_a(m - 1), exc[1], n=m, j=1,
                               descents=des[1].to_list()),
                    examined)
        for j in range(2, m + 1):
            examined += 1
            if des[j] != exc[m + 2 - j]:
                return (_poly_cell('A_{n,j} differs from AExc_{n,n+2-j}',
                                   des[j], exc[m + 2 - j], n=m, j=j),
                        examined)
    return None, examined


_EQUIDISTRIBUTION_CASES = ((5, 2), (4, 3), (3, 4))


@_register('ldes-lexc-equidistribution',
           'for every order L, phi is a bijection with ldes(phi(p), L) = '
           'lexc(p, L), undone by phi_inverse',
           aliases=('thm1.3-equidistribution',),
           n=None, d=None, trials=100, seed=0)
def _ldes_lexc_equidistribution(*, n, d, trials, seed, max_elements=None):
    if (n is None) != (d is None):
        raise ValueError('give both `n` and `d` or neither')
    cases = _EQUIDISTRIBUTION_CASES if n is None else ((n, d),)
    examined = 0
    for cn, cd in cases:
        spec = GroupSpec(cn, cd)
        values, colors = group_arrays(spec, max_elements=max_elements)
        perms = list(perms_from_arrays(spec, values, colors))
        orders = [color_major_order(cn, cd), min_one_order(cn, cd)]
        orders += [random_order(cn, cd, s) for s in range(seed, seed + trials)]
        _logger.debug('checking phi on %r over %d orders', spec, len(orders))
        for order in orders:
            examined += len(perms)
            counterexample = _check_bijection(
                    spec, order, perms,
                    functools.partial(phi, order=order),
                    functools.partial(phi_inverse, order=order),
                    lexc_array(order, values, colors),
                    order)
            if counterexample is not None:
                return counterexample, examined
    return None, examined


@_register('min-one-class-bijection',
           'gamma_min_one carries lexc to ldes in the min-one order and maps '
           'the class of (i, j) onto the class of s(i, j)',
           n=5, d=3)
def _min_one_class_bijection(*, n, d, max_elements=None):
    examined = 0
    for dd in range(1, d + 1):
        for m in range(1, n + 1):
            spec = GroupSpec(m, dd)
            order = min_one_order(m, dd)
            values, colors = group_arrays(spec, max_elements=max_elements)
            perms = list(perms_from_arrays(spec, values, colors))
            examined += len(perms)
            counterexample = _check_bijection(
                    spec, order, perms, gamma_min_one, gamma_min_one_inverse,
                    lexc_array(order, values, colors), order,
                    functools.partial(_min_one_first, n=m, d=dd))
            if counterexample is not None:
                return counterexample, examined
    return None, examined


def _min_one_first(p, n, d):
    return pair_map_s(p.first_letter, n, d)


def _symmetric_first(p):
    i, j = p.first_letter
    return (i, j) if i == 1 else (i, -j)


@_register('symmetric-bexc-bijection',
           'gamma_symmetric carries bexc to descents in the symmetric order '
           'and maps the class of (i, j) onto the class of (i, -j) for i >= 2',
           n=5, n_colored=3, d=2)
def _symmetric_bexc_bijection(*, n, n_colored, d, max_elements=None):
    cases = [(m, 1) for m in range(1, n + 1)]
    cases += [(m, dd) for dd in range(2, d + 1)
              for m in range(1, n_colored + 1)]
    examined = 0
    for m, dd in cases:
        spec = GroupSpec(m, dd, signed=True)
        order = symmetric_order(m, dd)
        values, colors = group_arrays(spec, max_elements=max_elements)
        perms = list(perms_from_arrays(spec, values, colors))
        examined += len(perms)
        counterexample = _check_bijection(
                spec, order, perms, gamma_symmetric, gamma_symmetric_inverse,
                bexc_array(spec, values, colors), order, _symmetric_first)
        if counterexample is not None:
            return counterexample, examined
    return None, examined


@_register('typeb-descent-excedance',
           'B_{n,1} = BE_{n,1}, B_{n,-1} = BE_{n,-1} and B_{n,k} = '
           'BE_{n,-k}, B_{n,-k} = BE_{n,k} for 2 <= k <= n',
           n=5)
def _typeb_descent_excedance(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        des = class_polynomials('B', m, max_elements=max_elements)
        exc = class_polynomials('BE', m, max_elements=max_elements)
        for k in family_classes('B', m):
            examined += 1
            partner = k if abs(k) == 1 else -k
            if des[k] != exc[partner]:
                return (_poly_cell(f"B_(n,k) differs from BE_(n,{partner})",
                                   des[k], exc[partner], n=m, k=k),
                        examined)
    return None, examined


def _gamma_cell(reason, f, m, **cell):
    return dict(cell, reason=reason, poly=f.to_list(), m=m)


def _check_gamma_positive(f, m, **cell):
    if not is_palindromic(f, m):
        return _gamma_cell('not palindromic', f, m, **cell)
    gamma = gamma_vector(f, m)
    if gamma.reconstruct() != f:
        return _gamma_cell('gamma vector does not reconstruct', f, m,
                           gamma=gamma.to_list(), **cell)
    if not gamma.is_nonnegative():
        return _gamma_cell('negative gamma coefficient', f, m,
                           gamma=gamma.to_list(), **cell)
    return None


@_register('typea-gamma-positivity',
           'A_{n,j} + A_{n,n+1-j} is palindromic about (n-1)/2 and gamma '
           'positive',
           n=8)
def _typea_gamma_positivity(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        for j in range(1, m + 1):
            examined += 1
            f = conger_polynomial(m, j) + conger_polynomial(m, m + 1 - j)
            counterexample = _check_gamma_positive(f, m - 1, n=m, j=j)
            if counterexample is not None:
                return counterexample, examined
    return None, examined


_SYMMETRIZED_BASE_CASES = (
        ('Bbar', 2, 1, (ONE + T)**2),
        ('Bbar', 2, 2, T.scalar_mul(4)),
        ('Btilde', 2, 2, T.scalar_mul(2) * (ONE + T)),
        )


@_register('typeb-gamma-positivity',
           'Bbar_{n,k} and Btilde_{n,k} are gamma positive about n/2 and '
           '(n+1)/2',
           n=12)
def _typeb_gamma_positivity(*, n, max_elements=None):
    examined = 0
    for family, m, k, expected in _SYMMETRIZED_BASE_CASES:
        examined += 1
        func = symmetrized_bar if family == 'Bbar' else symmetrized_tilde
        if func(m, k) != expected:
            return (_poly_cell('base case differs', expected, func(m, k),
                               family=family, n=m, k=k),
                    examined)
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            for family, f, center in [('Bbar', symmetrized_bar(m, k), m),
                                      ('Btilde', symmetrized_tilde(m, k),
                                       m + 1)]:
                examined += 1
                counterexample = _check_gamma_positive(f, center,
                                                       family=family,
                                                       n=m, k=k)
                if counterexample is not None:
                    return counterexample, examined
    return None, examined


@_register('typeb-symmetrized-recurrence',
           'Bbar_{n+1,k} and Btilde_{n+1,k} follow from level n, and '
           'B_{n+1,+-(n+1)} is the sum of the Btilde_{n,i}',
           n=8)
def _typeb_symmetrized_recurrence(*, n, max_elements=None):
    examined = 0
    for n1 in range(2, n + 1):
        for k in range(1, n1 + 1):
            for family, lhs, rhs in [
                    ('Bbar', symmetrized_bar(n1, k),
                     symmetrized_bar_rhs(n1, k)),
                    ('Btilde', symmetrized_tilde(n1, k),
                     symmetrized_tilde_rhs(n1, k))]:
                examined += 1
                if lhs != rhs:
                    return (_poly_cell('recurrence differs', lhs, rhs,
                                       family=family, n=n1, k=k),
                            examined)
        boundary = typeb_boundary_rhs(n1)
        for k in (n1, -n1):
            examined += 1
            if typeb_des_poly_rec(n1, k) != boundary:
                return (_poly_cell('boundary class differs',
                                   typeb_des_poly_rec(n1, k), boundary,
                                   family='B', n=n1, k=k),
                        examined)
    return None, examined


@_register('typeb-palindromicity',
           'Bbar_{n,k} is palindromic about n/2 and Btilde_{n,k} about '
           '(n+1)/2',
           n=12)
def _typeb_palindromicity(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            for family, f, center in [('Bbar', symmetrized_bar(m, k), m),
                                      ('Btilde', symmetrized_tilde(m, k),
                                       m + 1)]:
                examined += 1
                if not is_palindromic(f, center):
                    return (_gamma_cell('not palindromic', f, center,
                                        family=family, n=m, k=k),
                            examined)
    return None, examined


@_register('typeb-real-rootedness',
           'B_{n,k} and B_{n,-k} have only real roots',
           n=12)
def _typeb_real_rootedness(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        for k in family_classes('B', m):
            examined += 1
            f = typeb_des_poly_rec(m, k)
            if not is_real_rooted(f):
                return ({'n': m, 'k': k, 'poly': f.to_list(),
                         'reason': 'Sturm count below the degree'},
                        examined)
    return None, examined


@_register('typeb-carlitz',
           'B_{n,i}(t)/(1-t)^n equals its explicit series in (2k+1) and (2k) '
           'for positive i and in (2k-1) and (2k) for negative i',
           supports_strict=True,
           aliases=('thm1.10-carlitz',),
           n=10, K=DEFAULT_SERIES_TERMS, enumerate_up_to=5)
def _typeb_carlitz(*, n, K, enumerate_up_to, strict_paper=False,
                   max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        if m <= enumerate_up_to:
            polys = class_polynomials('B', m, max_elements=max_elements)
        else:
            polys = {k: typeb_des_poly_rec(m, k)
                     for k in family_classes('B', m)}
        for i in family_classes('B', m):
            examined += 1
            lhs = carlitz_lhs(m, i, K, polys[i])
            rhs = carlitz_rhs(m, i, K, strict_paper=strict_paper)
            index = lhs.first_difference(rhs)
            if index is not None:
                return ({'n': m, 'i': i, 'K': K, 'index': index,
                         'lhs': lhs[index], 'rhs': rhs[index],
                         'strict_paper': strict_paper,
                         'reason': 'series coefficients differ'},
                        examined)
    return None, examined


@_register('brenti-carlitz',
           'B_n(t)/(1-t)^(n+1) equals the sum of (2k+1)^n t^k',
           n=6, K=DEFAULT_SERIES_TERMS)
def _brenti_carlitz(*, n, K, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        examined += 1
        poly = stat_polynomial(GroupSpec(m, signed=True), 'des_b',
                               max_elements=max_elements)
        if poly != typeb_eulerian(m):
            return (_poly_cell('type B Eulerian polynomial differs',
                               poly, typeb_eulerian(m), n=m),
                    examined)
        lhs = brenti_lhs(m, K, poly)
        rhs = brenti_rhs(m, K)
        index = lhs.first_difference(rhs)
        if index is not None:
            return ({'n': m, 'K': K, 'index': index, 'lhs': lhs[index],
                     'rhs': rhs[index],
                     'reason': 'series coefficients differ'},
                    examined)
    return None, examined


@_register('typeb-count-recurrence',
           'the coefficient recurrence for B_{n,d,k} agrees with enumeration',
           n=6)
def _typeb_count_recurrence(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        polys = class_polynomials('B', m, max_elements=max_elements)
        for k in family_classes('B', m):
            for dsc in range(m + 1):
                examined += 1
                count = typeb_count_rec(m, dsc, k)
                if count != polys[k][dsc]:
                    return ({'n': m, 'k': k, 'dsc': dsc,
                             'expected': polys[k][dsc], 'observed': count,
                             'reason': 'recurrence differs from enumeration'},
                            examined)
    return None, examined


@_register('typeb-poly-recurrence',
           'the polynomial recurrence for B_{n,k}, including B_{n,+-n} = '
           '2^(n-1) t A_{n-1}, agrees with enumeration',
           n=6)
def _typeb_poly_recurrence(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        polys = class_polynomials('B', m, max_elements=max_elements)
        for k in family_classes('B', m):
            examined += 1
            if typeb_des_poly_rec(m, k) != polys[k]:
                return (_poly_cell('recurrence differs from enumeration',
                                   polys[k], typeb_des_poly_rec(m, k),
                                   n=m, k=k),
                        examined)
    return None, examined


@_register('typeb-excedance-recurrence',
           'the coefficient recurrence for BE_{n,e,k} agrees with '
           'enumeration',
           n=6)
def _typeb_excedance_recurrence(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        polys = class_polynomials('BE', m, max_elements=max_elements)
        for k in family_classes('BE', m):
            for e in range(m + 1):
                examined += 1
                count = typeb_exc_count_rec(m, e, k)
                if count != polys[k][e]:
                    return ({'n': m, 'k': k, 'exc': e,
                             'expected': polys[k][e], 'observed': count,
                             'reason': 'recurrence differs from enumeration'},
                            examined)
    return None, examined


@_register('typeb-first-letter-drop',
           'dropping the first letter assembles B_{n+1,k} from the B_{n,i}',
           n=6)
def _typeb_first_letter_drop(*, n, max_elements=None):
    examined = 0
    lower = class_polynomials('B', 1, max_elements=max_elements)
    for n1 in range(2, n + 1):
        upper = class_polynomials('B', n1, max_elements=max_elements)
        for k in family_classes('B', n1):
            examined += 1
            rhs = lemma_drop_rhs(n1, k, lambda _, i, level=lower: level[i])
            if rhs != upper[k]:
                return (_poly_cell('assembled polynomial differs', upper[k],
                                   rhs, n=n1, k=k),
                        examined)
        lower = upper
    return None, examined


@_register('eulerian-sums',
           'first-letter classes sum to A_n and B_n, which count n! and '
           '2^n n! elements',
           n=7)
def _eulerian_sums(*, n, max_elements=None):
    examined = 0
    for m in range(1, n + 1):
        examined += 1
        total = sum(class_polynomials('A', m,
                                      max_elements=max_elements).values(),
                    IntPoly())
        numbers = [eulerian_number(m, k) for k in range(m)]
        if total != eulerian_a(m) or total != IntPoly(numbers):
            return (_poly_cell('classes do not sum to A_n', eulerian_a(m),
                               total, family='A', n=m),
                    examined)
        if total(1) != math.factorial(m):
            return ({'family': 'A', 'n': m, 'value': total(1),
                     'reason': 'A_n(1) is not n!'},
                    examined)
        examined += 1
        total = sum(class_polynomials('B', m,
                                      max_elements=max_elements).values(),
                    IntPoly())
        if total != typeb_eulerian(m):
            return (_poly_cell('classes do not sum to B_n', typeb_eulerian(m),
                               total, family='B', n=m),
                    examined)
        if total(1) != 2**m * math.factorial(m):
            return ({'family': 'B', 'n': m, 'value': total(1),
                     'reason': 'B_n(1) is not 2^n n!'},
                    examined)
    return None, examined


if __name__ == '__main__':
    import doctest
    doctest.testmod()
