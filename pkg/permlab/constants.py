"""
============
constants
============

Defines constants used by package.

"""


DEFAULT_MAX_ELEMENTS = 10**8
"""int: Default cap on the number of group elements any enumeration visits."""

MAX_ELEMENTS_ENV = 'PERMLAB_MAX_ELEMENTS'
"""str: Environment variable that overrides :data:`DEFAULT_MAX_ELEMENTS`."""

DEFAULT_SERIES_TERMS = 20
"""int: Default truncation order of power series (coefficients 0 to this)."""

STAT_NAMES = ('ldes', 'lasc', 'lexc', 'bexc',
              'des', 'exc', 'des_b', 'exc_b', 'asc_b')
"""tuple: Names of the permutation statistics."""

ORDER_NAMES = ('color-major', 'min-one', 'symmetric')
"""tuple: Names of the built-in linear orders."""

TABLE_FAMILIES = ('A', 'AExc', 'B', 'BE', 'colored-ldes', 'colored-lexc')
"""tuple: Families of first-letter polynomials that can be tabulated."""

POLY_FAMILIES = ('A', 'AExc', 'B', 'BE', 'Bbar', 'Btilde')
"""tuple: Polynomial families exposed by the ``poly`` command."""

FIRST_LETTER_TABLE_N6 = {
    'A': {1: (1, 26, 66, 26, 1),
          2: (0, 16, 66, 36, 2),
          3: (0, 8, 60, 48, 4),
          4: (0, 4, 48, 60, 8),
          5: (0, 2, 36, 66, 16),
          6: (0, 1, 26, 66, 26, 1),
          },
    'AExc': {1: (1, 26, 66, 26, 1),
             2: (0, 1, 26, 66, 26, 1),
             3: (0, 2, 36, 66, 16),
             4: (0, 4, 48, 60, 8),
             5: (0, 8, 60, 48, 4),
             6: (0, 16, 66, 36, 2),
             },
    }
"""dict: Published coefficients of the first-letter descent and excedance
polynomials of :math:`\\mathfrak{S}_6`, keyed by family then first letter."""
