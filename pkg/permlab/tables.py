"""
======
tables
======

Tables of first-letter polynomials, one row per first-letter class, as
:class:`pandas.DataFrame` objects or as TSV / JSON text.

"""


import pandas as pd

from permlab.constants import TABLE_FAMILIES
from permlab.eulerian import class_polynomials, first_letter_distributions
from permlab.groups import GroupSpec
from permlab.statistics import default_order


def first_letter_table(family, n, d=None, order=None, *, max_elements=None):
    """First-letter polynomials of a family as a data frame.

    Parameters
    ----------
    family : str
        One of :data:`permlab.constants.TABLE_FAMILIES`. ``A`` and ``AExc``
        tabulate descents and excedances over :math:`\\mathfrak{S}_n`,
        ``B`` and ``BE`` type B descents and excedances over signed
        permutations, ``colored-ldes`` and ``colored-lexc`` the statistics
        :func:`permlab.statistics.ldes` and :func:`permlab.statistics.lexc`
        over the unsigned group with `d` colors.
    n : int
        Length.
    d : int or None
        Number of colors for the colored families (default 1). Must be
        `None` or 1 for the other families.
    order : :class:`permlab.orders.LinearOrder` or None
        Order for the colored families, by default color-major.
    max_elements : int or None
        Enumeration cap.

    Returns
    -------
    pandas.DataFrame
        Columns ``family``, ``n``, ``d``, ``value``, ``color``,
        ``polynomial`` and one column ``coeff_<i>`` per power of
        :math:`t`. Rows are ordered by value, for ``B`` and ``BE``
        positive color first, otherwise by color.

    Example
    -------
    >>> df = first_letter_table('A', 6)
    >>> df[['value', 'polynomial']].values.tolist()[:2]
    [[1, '1 + 26t + 66t^2 + 26t^3 + t^4'], [2, '16t + 66t^2 + 36t^3 + 2t^4']]
    >>> df.loc[2, ['coeff_1', 'coeff_2', 'coeff_3', 'coeff_4']].tolist()
    [8, 60, 48, 4]
    >>> df = first_letter_table('colored-ldes', 2, d=2)
    >>> df[['value', 'color', 'polynomial']].values.tolist()
    [[1, 0, '2'], [1, 1, '1 + t'], [2, 0, '1 + t'], [2, 1, '2t']]

    """
    if family not in TABLE_FAMILIES:
        raise ValueError(f"invalid `family` {family}, expected one of "
                         f"{', '.join(TABLE_FAMILIES)}")
    if family.startswith('colored-'):
        d = 1 if d is None else d
        spec = GroupSpec(n, d)
        if order is None:
            order = default_order(spec)
        stat = family[len('colored-'):]
        polys = first_letter_distributions(spec, stat, order,
                                           max_elements=max_elements)
        cells = [(i, j, poly) for (i, j), poly in polys.items()]
    else:
        if d not in (None, 1):
            raise ValueError(f"family {family} has no colors, got `d` {d}")
        if order is not None:
            raise ValueError(f"family {family} does not take an `order`")
        d = 1
        polys = class_polynomials(family, n, max_elements=max_elements)
        if family in ('B', 'BE'):
            cells = [(abs(k), 1 if k > 0 else -1, poly)
                     for k, poly in polys.items()]
        else:
            cells = [(k, 0, poly) for k, poly in polys.items()]
    ncoeffs = max(len(poly) for _, _, poly in cells) or 1
    records = []
    for value, color, poly in cells:
        record = {'family': family,
                  'n': n,
                  'd': d,
                  'value': value,
                  'color': color,
                  'polynomial': str(poly),
                  }
        for i in range(ncoeffs):
            record[f"coeff_{i}"] = poly[i]
        records.append(record)
    return pd.DataFrame.from_records(records, columns=list(records[0]))


def emit_table(family, n, d=None, fmt='tsv', order=None, *,
               max_elements=None):
    """Text rendering of :func:`first_letter_table`.

    Parameters
    ----------
    family, n, d, order, max_elements
        As for :func:`first_letter_table`.
    fmt : {'tsv', 'json'}
        Tab-separated text with a header line, or a JSON list of records.

    Returns
    -------
    str

    Example
    -------
    >>> lines = emit_table('B', 2).splitlines()
    >>> lines[0].split('\\t')
    ['family', 'n', 'd', 'value', 'color', 'polynomial', 'coeff_0', \
'coeff_1', 'coeff_2']
    >>> [line.split('\\t')[3:6] for line in lines[1:]]
    [['1', '1', '1 + t'], ['1', '-1', 't + t^2'], ['2', '1', '2t'], \
['2', '-1', '2t']]
    >>> import json
    >>> json.loads(emit_table('A', 3, fmt='json'))[1]
    {'family': 'A', 'n': 3, 'd': 1, 'value': 2, 'color': 0, \
'polynomial': '2t', 'coeff_0': 0, 'coeff_1': 2, 'coeff_2': 0}

    """
    df = first_letter_table(family, n, d, order, max_elements=max_elements)
    if fmt == 'tsv':
        return df.to_csv(sep='\t', index=False)
    elif fmt == 'json':
        return df.to_json(orient='records')
    else:
        raise ValueError(f"invalid `fmt` {fmt}")


if __name__ == '__main__':
    import doctest
    doctest.testmod()
