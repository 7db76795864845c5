"""
===
cli
===

Command-line interface, installed as the ``permlab`` console script.

Subcommands:

- ``stat``: a statistic of one colored permutation.
- ``bijection``: apply one of the bijections (or its inverse) to a word.
- ``poly``: a first-letter polynomial, optionally with its gamma vector and
  a Sturm real-rootedness certificate.
- ``series``: both sides of a Carlitz-type identity.
- ``table``: first-letter polynomials of a whole family.
- ``verify``: run registered checks.

Results go to standard output as JSON or TSV. The exit code is 0 on
success, 1 if a check failed and 2 on invalid input.

"""


import argparse
import json
import logging
import sys

import pandas as pd

import permlab
from permlab.bijections import BIJECTION_NAMES, apply_bijection
from permlab.checks import list_checks, reports_to_frame, run_checks
from permlab.constants import (DEFAULT_SERIES_TERMS,
                               POLY_FAMILIES,
                               STAT_NAMES,
                               TABLE_FAMILIES,
                               )
from permlab.eulerian import family_polynomial
from permlab.groups import GroupSpec, parse_perm
from permlab.orders import min_one_order, parse_order, symmetric_order
from permlab.polynomials import gamma_vector, is_palindromic, is_real_rooted
from permlab.series import brenti_lhs, brenti_rhs, carlitz_lhs, carlitz_rhs
from permlab.statistics import default_order, statistic
from permlab.tables import emit_table


_logger = logging.getLogger(__name__)

_GAMMA_CENTER_OFFSET = {'A': -1, 'AExc': -1, 'B': 0, 'BE': 0, 'Bbar': 0,
                        'Btilde': 1}
"""dict: Twice the center of symmetry of each family, minus `n`."""


def _write(text):
    if not text.endswith('\n'):
        text += '\n'
    sys.stdout.write(text)


def _write_records(records, fmt):
    """Write a list of flat dicts as JSON or TSV."""
    if fmt == 'json':
        _write(json.dumps(records if len(records) != 1 else records[0]))
    else:
        _write(pd.DataFrame.from_records(records)
               .to_csv(sep='\t', index=False))


def _join(values):
    return ','.join(map(str, values))


def _element_spec(args, n):
    return GroupSpec(n, args.d, signed=args.signed)


def _read_perm(args):
    """Element given by ``--word`` and ``--colors``."""
    n = len(args.word.split(','))
    return parse_perm(args.word, args.colors, _element_spec(args, n))


def _stat(args):
    p = _read_perm(args)
    order = None
    if args.stat in ('ldes', 'lasc', 'lexc'):
        order = (parse_order(args.order, p.spec) if args.order
                 else default_order(p.spec))
    indices = statistic(args.stat, p, order, as_set=True)
    record = {'word': list(p.values),
              'colors': list(p.colors),
              'stat': args.stat,
              'order': None if order is None else order.name,
              'value': len(indices),
              }
    if args.verbose:
        record['indices'] = list(indices)
    if args.format == 'tsv':
        record.update(word=_join(p.values), colors=_join(p.colors))
        if args.verbose:
            record['indices'] = _join(indices)
    _write_records([record], args.format)
    return 0


def _bijection_order(name, spec, text):
    if name == 'phi':
        return parse_order(text, spec) if text else default_order(spec)
    if text:
        raise ValueError(f"`{name}` uses a fixed order, do not give --order")
    if name == 'gamma-min-one':
        return min_one_order(spec.n, spec.d)
    return symmetric_order(spec.n, spec.d)


def _bijection(args):
    if args.map == 'gamma-sym':
        args.signed = True
    p = _read_perm(args)
    order = _bijection_order(args.map, p.spec, args.order)
    w = apply_bijection(args.map, p, order, inverse=args.inverse)
    excedance_stat = 'bexc' if args.map == 'gamma-sym' else 'lexc'
    source, target = (w, p) if args.inverse else (p, w)
    record = {'map': args.map,
              'inverse': args.inverse,
              'order': order.name,
              'input_word': list(p.values),
              'input_colors': list(p.colors),
              'output_word': list(w.values),
              'output_colors': list(w.colors),
              'excedance_stat': excedance_stat,
              'excedances': statistic(excedance_stat, source, order),
              'descents': statistic('ldes', target, order),
              }
    if args.format == 'tsv':
        for key in ('input_word', 'input_colors', 'output_word',
                    'output_colors'):
            record[key] = _join(record[key])
    _write_records([record], args.format)
    return 0


def _poly(args):
    f = family_polynomial(args.family, args.n, args.k, method=args.method)
    record = {'family': args.family,
              'n': args.n,
              'k': args.k,
              'polynomial': str(f),
              'coeffs': f.to_list(),
              }
    if args.gamma:
        m = args.n + _GAMMA_CENTER_OFFSET[args.family]
        if m >= f.degree and is_palindromic(f, m):
            record['gamma'] = gamma_vector(f, m).to_list()
        else:
            _logger.info('%s is not palindromic about %d/2, no gamma vector',
                         f, m)
            record['gamma'] = None
    if args.sturm:
        record['real_rooted'] = is_real_rooted(f)
    if args.format == 'tsv':
        record['coeffs'] = _join(record['coeffs'])
        if record.get('gamma') is not None:
            record['gamma'] = _join(record['gamma'])
    _write_records([record], args.format)
    return 0


def _series(args):
    if args.identity == 'carlitz':
        if args.i is None:
            raise ValueError('the carlitz identity needs --i')
        lhs = carlitz_lhs(args.n, args.i, args.terms)
        rhs = carlitz_rhs(args.n, args.i, args.terms,
                          strict_paper=args.strict_paper)
    else:
        if args.strict_paper:
            raise ValueError('--strict-paper only applies to carlitz')
        lhs = brenti_lhs(args.n, args.terms)
        rhs = brenti_rhs(args.n, args.terms)
    index = lhs.first_difference(rhs)
    record = {'identity': args.identity,
              'n': args.n,
              'i': args.i,
              'K': args.terms,
              'lhs': lhs.to_list(),
              'rhs': rhs.to_list(),
              'equal': index is None,
              'first_difference': index,
              }
    if args.format == 'tsv':
        record.update(lhs=_join(lhs), rhs=_join(rhs))
    _write_records([record], args.format)
    return 0 if index is None else 1


def _table(args):
    order = None
    if args.order:
        order = parse_order(args.order, GroupSpec(args.n, args.d or 1))
    _write(emit_table(args.family, args.n, args.d, args.format, order))
    return 0


def _verify(args):
    if args.list:
        _write_records([{'check': c.id, 'aliases': ','.join(c.aliases),
                         'statement': c.statement,
                         'params': json.dumps(c.params)}
                        for c in list_checks()], 'tsv')
        return 0
    if not args.all and not args.check:
        raise ValueError('give --check or --all')
    params = {key: val for key, val in [('n', args.n), ('d', args.d),
                                        ('K', args.k), ('seed', args.seed),
                                        ('trials', args.trials)]
              if val is not None}
    reports = run_checks(None if args.all else args.check,
                         processes=args.processes,
                         strict_paper=args.strict_paper,
                         params=params)
    if args.format == 'json':
        _write(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        _write(reports_to_frame(reports).to_csv(sep='\t', index=False))
    return 0 if all(r.passed for r in reports) else 1


def _add_format(parser, default='json'):
    parser.add_argument('--format', choices=['json', 'tsv'], default=default,
                        help='output format')


def _add_element(parser):
    parser.add_argument('--word', required=True,
                        help='permutation word, e.g. 2,4,1,5,6,3')
    parser.add_argument('--colors', help='colors, e.g. 0,1,3,3,0,2; '
                        'default all 0 (unsigned) or all 1 (signed)')
    parser.add_argument('--d', type=int, default=1,
                        help='number of colors (of color magnitudes if '
                        'signed)')
    parser.add_argument('--signed', action='store_true',
                        help='signed group with the zero letter prefixed')
    parser.add_argument('--order', help='color-major, min-one, symmetric, '
                        'random:<seed> or list:<v.c>,<v.c>,...')


def build_parser():
    """Argument parser of the ``permlab`` command.

    Returns
    -------
    argparse.ArgumentParser

    """
    parser = argparse.ArgumentParser(
            prog='permlab',
            description='Descent and excedance statistics on colored '
                        'permutation groups.')
    parser.add_argument('--version', action='version',
                        version=f"%(prog)s {permlab.__version__}")
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='logging level (logs go to standard error)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('stat', help='statistic of one element')
    p.add_argument('--stat', required=True, choices=STAT_NAMES)
    _add_element(p)
    p.add_argument('--verbose', action='store_true',
                   help='also print the index set')
    _add_format(p)
    p.set_defaults(func=_stat)

    p = subparsers.add_parser('bijection', help='apply a bijection')
    p.add_argument('--map', required=True, choices=BIJECTION_NAMES)
    _add_element(p)
    p.add_argument('--inverse', action='store_true',
                   help='apply the inverse map')
    _add_format(p)
    p.set_defaults(func=_bijection)

    p = subparsers.add_parser('poly', help='first-letter polynomial')
    p.add_argument('--family', required=True, choices=POLY_FAMILIES)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True,
                   help='first letter, negative for negative color (B, BE)')
    p.add_argument('--method', default='auto',
                   choices=['auto', 'formula', 'enumerate'])
    p.add_argument('--gamma', action='store_true',
                   help='add the gamma vector about the natural center')
    p.add_argument('--sturm', action='store_true',
                   help='certify real-rootedness with a Sturm chain')
    _add_format(p)
    p.set_defaults(func=_poly)

    p = subparsers.add_parser('series', help='Carlitz-type identity')
    p.add_argument('--identity', required=True,
                   choices=['carlitz', 'brenti'])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--i', type=int,
                   help='signed first letter (carlitz only)')
    p.add_argument('--terms', type=int, default=DEFAULT_SERIES_TERMS,
                   help='truncation order K')
    p.add_argument('--strict-paper', action='store_true',
                   help='sum the positive carlitz series from k = 1')
    _add_format(p)
    p.set_defaults(func=_series)

    p = subparsers.add_parser('table', help='first-letter table')
    p.add_argument('--family', required=True, choices=TABLE_FAMILIES)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, help='colors of the colored families')
    p.add_argument('--order', help='order of the colored families')
    _add_format(p, default='tsv')
    p.set_defaults(func=_table)

    p = subparsers.add_parser('verify', help='run registered checks')
    which = p.add_mutually_exclusive_group()
    which.add_argument('--check', action='append',
                       help='check id, may be repeated')
    which.add_argument('--all', action='store_true', help='run every check')
    which.add_argument('--list', action='store_true',
                       help='list the registered checks')
    p.add_argument('--n', type=int)
    p.add_argument('--d', type=int)
    p.add_argument('--k', type=int, help='series truncation order K')
    p.add_argument('--seed', type=int)
    p.add_argument('--trials', type=int)
    p.add_argument('--strict-paper', action='store_true',
                   help='check identities exactly as printed where a check '
                   'supports it')
    p.add_argument('--processes', type=int, default=1)
    _add_format(p)
    p.set_defaults(func=_verify)
    return parser


def main(argv=None):
    """Run the ``permlab`` command.

    Parameters
    ----------
    argv : list or None
        Arguments without the program name, `None` for ``sys.argv[1:]``.

    Returns
    -------
    int
        Exit code.

    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level,
                        format='%(asctime)s %(name)s %(levelname)s: '
                               '%(message)s')
    try:
        return args.func(args)
    except ValueError as e:
        sys.stderr.write(f"permlab {args.command}: error: {e}\n")
        return 2


if __name__ == '__main__':
    sys.exit(main())
