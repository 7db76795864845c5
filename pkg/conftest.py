"""pytest configuration: print numpy scalars as in numpy<2 so doctests match."""

import numpy


if int(numpy.__version__.split('.')[0]) >= 2:
    numpy.set_printoptions(legacy='1.25')
