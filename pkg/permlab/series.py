"""
======
series
======

Truncated power series with exact integer coefficients, and both sides of
the Carlitz-type identities for type B first-letter polynomials.

"""


import scipy.special

from permlab.constants import DEFAULT_SERIES_TERMS
from permlab.eulerian import typeb_des_poly_rec, typeb_eulerian


class TruncatedSeries:
    """Power series truncated after the term of degree `K`.

    Represents :math:`a_0 + a_1 t + \\ldots + a_K t^K` modulo
    :math:`t^{K+1}`.

    Parameters
    ----------
    coeffs : sequence of int
        Coefficients; missing ones are 0 and ones beyond `K` are dropped.
    K : int
        Truncation order.

    Attributes
    ----------
    coeffs : tuple
        Exactly ``K + 1`` integer coefficients.
    K : int
        Truncation order.

    Example
    -------
    >>> s = TruncatedSeries([1, 1], 3)
    >>> s
    TruncatedSeries((1, 1, 0, 0), K=3)
    >>> s * s
    TruncatedSeries((1, 2, 1, 0), K=3)
    >>> (s * s * s * s).coeffs
    (1, 4, 6, 4)

    """

    __slots__ = ('coeffs', 'K')

    def __init__(self, coeffs, K):
        """See main class doc string."""
        if int(K) != K or K < 0:
            raise ValueError(f"`K` must be an integer >= 0, not {K}")
        coeffs = [int(c) for c in list(coeffs)[: K + 1]]
        coeffs += [0] * (K + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.K = int(K)

    @classmethod
    def from_poly(cls, poly, K):
        """Truncate a :class:`permlab.polynomials.IntPoly`."""
        return cls(poly.coeffs, K)

    def __repr__(self):
        """Representation showing coefficients and truncation order."""
        return f"TruncatedSeries({self.coeffs}, K={self.K})"

    def __eq__(self, other):
        """Equal if same truncation order and coefficients."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.K == other.K and self.coeffs == other.coeffs

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self.coeffs, self.K))

    def __getitem__(self, i):
        """Coefficient of :math:`t^i`."""
        return self.coeffs[i]

    def __iter__(self):
        """Iterate over the coefficients."""
        return iter(self.coeffs)

    def __len__(self):
        """Number of coefficients, ``K + 1``."""
        return len(self.coeffs)

    def _check_compatible(self, other):
        if not isinstance(other, TruncatedSeries):
            return False
        if other.K != self.K:
            raise ValueError(f"truncation orders differ: {self.K} and "
                             f"{other.K}")
        return True

    def __add__(self, other):
        """Sum."""
        if not self._check_compatible(other):
            return NotImplemented
        return TruncatedSeries([a + b for a, b in
                                zip(self.coeffs, other.coeffs)], self.K)

    def __mul__(self, other):
        """Product modulo :math:`t^{K+1}`."""
        if isinstance(other, int):
            return TruncatedSeries([other * a for a in self.coeffs], self.K)
        if not self._check_compatible(other):
            return NotImplemented
        res = [0] * (self.K + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.K + 1 - i):
                    res[i + j] += a * other.coeffs[j]
        return TruncatedSeries(res, self.K)

    __rmul__ = __mul__

    def first_difference(self, other):
        """Lowest index where `self` and `other` differ, `None` if equal.

        Example
        -------
        >>> a = TruncatedSeries([1, 3, 5], 2)
        >>> a.first_difference(TruncatedSeries([0, 3, 5], 2))
        0
        >>> a.first_difference(a) is None
        True

        """
        self._check_compatible(other)
        for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return i
        return None

    def to_list(self):
        """Coefficients as a list of Python integers."""
        return list(self.coeffs)


def inverse_power_one_minus_t(m, K):
    """Series of :math:`(1-t)^{-m}`.

    Coefficient :math:`k` is :math:`\\binom{m-1+k}{k}`.

    Example
    -------
    >>> inverse_power_one_minus_t(2, 4).coeffs
    (1, 2, 3, 4, 5)
    >>> inverse_power_one_minus_t(0, 2).coeffs
    (1, 0, 0)

    """
    if m < 0:
        raise ValueError(f"`m` must be >= 0, not {m}")
    if m == 0:
        return TruncatedSeries([1], K)
    return TruncatedSeries([scipy.special.comb(m - 1 + k, k, exact=True)
                            for k in range(K + 1)], K)


def _check_class(n, i, K):
    if int(n) != n or n < 1 or int(i) != i or not (1 <= abs(i) <= n):
        raise ValueError(f"need `n` >= 1 and 1 <= |`i`| <= `n`, got n={n}, "
                         f"i={i}")
    if int(K) != K or K < 1:
        raise ValueError(f"`K` must be an integer >= 1, not {K}")


def carlitz_lhs(n, i, K=DEFAULT_SERIES_TERMS, poly=None):
    """:math:`B_{n,i}(t) / (1-t)^n` truncated at order `K`.

    Parameters
    ----------
    n : int
        Length.
    i : int
        Signed first letter.
    K : int
        Truncation order.
    poly : :class:`permlab.polynomials.IntPoly` or None
        :math:`B_{n,i}(t)`; computed by
        :func:`permlab.eulerian.typeb_des_poly_rec` if `None`.

    Returns
    -------
    :class:`TruncatedSeries`

    Example
    -------
    >>> carlitz_lhs(2, 1, 3)
    TruncatedSeries((1, 3, 5, 7), K=3)
    >>> carlitz_lhs(2, -1, 3)
    TruncatedSeries((0, 1, 3, 5), K=3)
    >>> carlitz_lhs(1, -1, 3)
    TruncatedSeries((0, 1, 1, 1), K=3)

    """
    _check_class(n, i, K)
    if poly is None:
        poly = typeb_des_poly_rec(n, i)
    return (TruncatedSeries.from_poly(poly, K) *
            inverse_power_one_minus_t(n, K))


def carlitz_rhs(n, i, K=DEFAULT_SERIES_TERMS, *, strict_paper=False):
    """Explicit series equal to :func:`carlitz_lhs`.

    Note
    ----
    For :math:`i > 0` the coefficient of :math:`t^k` is
    :math:`(2k+1)^{n-i} (2k)^{i-1}` for :math:`k \\ge 0` (with
    :math:`0^0 = 1`). For :math:`i < 0` it is
    :math:`(2k-1)^{n-|i|} (2k)^{|i|-1}` for :math:`k \\ge 1` and the
    constant term is 0.

    Parameters
    ----------
    n : int
        Length.
    i : int
        Signed first letter.
    K : int
        Truncation order.
    strict_paper : bool
        Start the positive sum at :math:`k = 1` as well. This drops the
        constant term 1 when :math:`i = 1`, so the identity then fails.

    Returns
    -------
    :class:`TruncatedSeries`

    Example
    -------
    >>> carlitz_rhs(2, 1, 3)
    TruncatedSeries((1, 3, 5, 7), K=3)
    >>> carlitz_rhs(2, 1, 3, strict_paper=True)
    TruncatedSeries((0, 3, 5, 7), K=3)
    >>> carlitz_rhs(2, -1, 3)
    TruncatedSeries((0, 1, 3, 5), K=3)

    """
    _check_class(n, i, K)
    a = abs(i)
    coeffs = [0] * (K + 1)
    if i > 0:
        start = 1 if strict_paper else 0
        for k in range(start, K + 1):
            coeffs[k] = (2 * k + 1)**(n - a) * (2 * k)**(a - 1)
    else:
        for k in range(1, K + 1):
            coeffs[k] = (2 * k - 1)**(n - a) * (2 * k)**(a - 1)
    return TruncatedSeries(coeffs, K)


def brenti_lhs(n, K=DEFAULT_SERIES_TERMS, poly=None):
    """:math:`B_n(t) / (1-t)^{n+1}` truncated at order `K`.

    `poly` is :math:`B_n(t)`, by default
    :func:`permlab.eulerian.typeb_eulerian`.

    Example
    -------
    >>> brenti_lhs(1, 2)
    TruncatedSeries((1, 3, 5), K=2)
    >>> brenti_lhs(2, 2)
    TruncatedSeries((1, 9, 25), K=2)

    """
    if int(n) != n or n < 1:
        raise ValueError(f"`n` must be an integer >= 1, not {n}")
    if poly is None:
        poly = typeb_eulerian(n)
    return (TruncatedSeries.from_poly(poly, K) *
            inverse_power_one_minus_t(n + 1, K))


def brenti_rhs(n, K=DEFAULT_SERIES_TERMS):
    """Series :math:`\\sum_{k \\ge 0} (2k+1)^n t^k` truncated at order `K`.

    Example
    -------
    >>> brenti_rhs(2, 2)
    TruncatedSeries((1, 9, 25), K=2)

    """
    if int(n) != n or n < 1:
        raise ValueError(f"`n` must be an integer >= 1, not {n}")
    return TruncatedSeries([(2 * k + 1)**n for k in range(K + 1)], K)


if __name__ == '__main__':
    import doctest
    doctest.testmod()
