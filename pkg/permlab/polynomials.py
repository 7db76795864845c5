"""
===========
polynomials
===========

Exact integer polynomials (:class:`IntPoly`), palindromicity and gamma
vectors (:class:`GammaVector`), and real-rootedness certificates via Sturm
chains; the polynomial algebra behind them is done by :mod:`sympy`.

"""


import functools
import math

import sympy
from sympy.polys.polyerrors import ExactQuotientFailed


_T_SYMBOL = sympy.Symbol('t')


class IntPoly:
    """Polynomial in :math:`t` with arbitrary-precision integer coefficients.

    Parameters
    ----------
    coeffs : sequence of int
        Coefficients, entry `i` multiplies :math:`t^i`. Trailing zeros are
        dropped.

    Attributes
    ----------
    coeffs : tuple
        Coefficients without trailing zeros, empty for the zero polynomial.

    Example
    -------
    >>> f = IntPoly([1, 2, 1, 0])
    >>> f
    IntPoly([1, 2, 1])
    >>> print(f)
    1 + 2t + t^2
    >>> f.degree
    2
    >>> f.derivative()
    IntPoly([2, 2])
    >>> IntPoly([1, 1]) * IntPoly([1, 1]) == f
    True
    >>> f(1)
    4
    >>> print(IntPoly([0, -1, 0, 3]) - 2)
    -2 - t + 3t^3
    >>> IntPoly([0.5])
    Traceback (most recent call last):
      ...
    ValueError: coefficients must be integers, got 0.5

    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        """See main class doc string."""
        ints = []
        for c in coeffs:
            ic = int(c)
            if ic != c:
                raise ValueError(f"coefficients must be integers, got {c}")
            ints.append(ic)
        while ints and ints[-1] == 0:
            ints.pop()
        self.coeffs = tuple(ints)

    @classmethod
    def monomial(cls, power, coeff=1):
        """The polynomial :math:`\\mathrm{coeff} \\cdot t^{\\mathrm{power}}`.

        Example
        -------
        >>> print(IntPoly.monomial(3, 2))
        2t^3

        """
        if power < 0:
            raise ValueError(f"`power` must be >= 0, not {power}")
        return cls([0] * power + [coeff])

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __repr__(self):
        """Representation that can be evaluated back."""
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        """Human-readable sum of terms in increasing degree."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = '' if i == 0 else ('t' if i == 1 else f"t^{i}")
            body = mono if (mono and abs(c) == 1) else f"{abs(c)}{mono}"
            if not out:
                out.append(('-' if c < 0 else '') + body)
            else:
                out.append((' - ' if c < 0 else ' + ') + body)
        return ''.join(out) or '0'

    def __eq__(self, other):
        """Equal if all coefficients agree; integers are constants."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        """Hash consistent with equality."""
        return hash(self.coeffs)

    def __len__(self):
        """Number of stored coefficients, ``degree + 1``."""
        return len(self.coeffs)

    def __iter__(self):
        """Iterate over coefficients from the constant term up."""
        return iter(self.coeffs)

    def __getitem__(self, i):
        """Coefficient of :math:`t^i`, 0 beyond the degree."""
        if i < 0:
            raise IndexError(f"no coefficient of t^{i}")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __bool__(self):
        """False only for the zero polynomial."""
        return bool(self.coeffs)

    @property
    def degree(self):
        """int: Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        """bool: Whether this is the zero polynomial."""
        return not self.coeffs

    @property
    def leading_coeff(self):
        """int: Coefficient of the highest power, 0 for zero."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def valuation(self):
        """int: Lowest power with a nonzero coefficient.

        Example
        -------
        >>> IntPoly([0, 0, 5, 1]).valuation
        2

        """
        if self.is_zero:
            raise ValueError('zero polynomial has no valuation')
        return next(i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other):
        """Sum."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPoly(res)

    __radd__ = __add__

    def __neg__(self):
        """Negation."""
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        """Difference."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        """Difference with the polynomial on the right."""
        return (-self) + other

    def __mul__(self, other):
        """Product with a polynomial or an integer."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] += a * b
        return IntPoly(res)

    __rmul__ = __mul__

    def __pow__(self, power):
        """Non-negative integer power.

        Example
        -------
        >>> print(IntPoly([1, 1])**3)
        1 + 3t + 3t^2 + t^3

        """
        if int(power) != power or power < 0:
            raise ValueError(f"`power` must be an integer >= 0, not {power}")
        result = IntPoly([1])
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def scalar_mul(self, c):
        """Multiply every coefficient by the integer `c`."""
        return IntPoly([c * a for a in self.coeffs])

    def shift(self, k):
        """Multiply by :math:`t^k`, or divide by it if `k` is negative.

        Example
        -------
        >>> IntPoly([0, 0, 1, 2]).shift(-2)
        IntPoly([1, 2])

        """
        if k >= 0:
            return IntPoly((0,) * k + self.coeffs)
        if any(self.coeffs[:-k]):
            raise ValueError(f"not divisible by t^{-k}")
        return IntPoly(self.coeffs[-k:])

    def derivative(self):
        """Derivative :math:`\\frac{d}{dt}`."""
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_at(self, x):
        """Value at `x`, exact for integers and :class:`fractions.Fraction`.

        Example
        -------
        >>> import fractions
        >>> IntPoly([1, 6, 1]).eval_at(1)
        8
        >>> IntPoly([1, 2]).eval_at(fractions.Fraction(1, 2))
        Fraction(2, 1)

        """
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    __call__ = eval_at

    @property
    def content(self):
        """int: Greatest common divisor of the coefficients, 0 for zero."""
        return functools.reduce(math.gcd, self.coeffs, 0)

    def primitive(self):
        """Divide by :attr:`content`, keeping the sign of every coefficient.

        Example
        -------
        >>> IntPoly([-4, 0, 6]).primitive()
        IntPoly([-2, 0, 3])

        """
        content = self.content
        if content <= 1:
            return self
        return IntPoly([c // content for c in self.coeffs])

    def to_sympy(self):
        """As a :class:`sympy.Poly` in `t` over the integers.

        Example
        -------
        >>> IntPoly([1, 0, 3]).to_sympy()
        Poly(3*t**2 + 1, t, domain='ZZ')

        """
        return sympy.Poly.from_list(list(reversed(self.coeffs)) or [0],
                                    _T_SYMBOL, domain='ZZ')

    @classmethod
    def from_sympy(cls, poly):
        """From a univariate :class:`sympy.Poly` with integer coefficients.

        Example
        -------
        >>> IntPoly.from_sympy(IntPoly([2, 0, 5]).to_sympy())
        IntPoly([2, 0, 5])

        """
        return cls(reversed(poly.all_coeffs()))

    def to_list(self):
        """Coefficients as a list of Python integers."""
        return list(self.coeffs)


ONE = IntPoly([1])
"""IntPoly: The constant polynomial 1."""

T = IntPoly([0, 1])
"""IntPoly: The polynomial :math:`t`."""


class GammaVector:
    """Expansion of a palindromic polynomial in the gamma basis.

    Represents :math:`\\sum_i \\gamma_i t^i (1+t)^{m-2i}`.

    Parameters
    ----------
    coeffs : sequence of int
        :math:`\\gamma_0, \\ldots, \\gamma_{\\lfloor m/2 \\rfloor}`.
    m : int
        Twice the center of symmetry.

    Example
    -------
    >>> g = GammaVector([0, 18, 48], 5)
    >>> print(g.reconstruct())
    18t + 102t^2 + 102t^3 + 18t^4
    >>> g.is_nonnegative()
    True
    >>> g
    GammaVector((0, 18, 48), m=5)

    """

    __slots__ = ('coeffs', 'm')

    def __init__(self, coeffs, m):
        """See main class doc string."""
        coeffs = tuple(int(c) for c in coeffs)
        if m < 0 or len(coeffs) != m // 2 + 1:
            raise ValueError(f"need {m // 2 + 1} gamma coefficients for "
                             f"`m` {m}, got {len(coeffs)}")
        self.coeffs = coeffs
        self.m = int(m)

    def __repr__(self):
        """Representation showing coefficients and `m`."""
        return f"GammaVector({self.coeffs}, m={self.m})"

    def __eq__(self, other):
        """Equal if same `m` and same coefficients."""
        if not isinstance(other, GammaVector):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self.coeffs, self.m))

    def __iter__(self):
        """Iterate over the gamma coefficients."""
        return iter(self.coeffs)

    def __len__(self):
        """Number of gamma coefficients."""
        return len(self.coeffs)

    def __getitem__(self, i):
        """Coefficient :math:`\\gamma_i`."""
        return self.coeffs[i]

    def is_nonnegative(self):
        """Whether all gamma coefficients are >= 0."""
        return all(c >= 0 for c in self.coeffs)

    def reconstruct(self):
        """The polynomial this vector expands."""
        total = IntPoly()
        for i, g in enumerate(self.coeffs):
            if g:
                total = total + _gamma_basis(i, self.m).scalar_mul(g)
        return total

    def to_list(self):
        """Coefficients as a list of Python integers."""
        return list(self.coeffs)


@functools.lru_cache(maxsize=None)
def _gamma_basis(i, m):
    return T**i * (ONE + T)**(m - 2 * i)


def is_palindromic(f, m):
    """Whether :math:`f_i = f_{m-i}` for :math:`0 \\le i \\le m`.

    Parameters
    ----------
    f : :class:`IntPoly`
        Polynomial.
    m : int
        Twice the center, at least the degree of `f`.

    Returns
    -------
    bool

    Example
    -------
    >>> is_palindromic(IntPoly([1, 2, 1]), 2)
    True
    >>> is_palindromic(IntPoly([1, 2]), 1)
    False
    >>> is_palindromic(IntPoly([0, 4]), 2)
    True
    >>> is_palindromic(IntPoly([1, 2, 1]), 1)
    Traceback (most recent call last):
      ...
    ValueError: `m` 1 is less than the degree 2

    """
    if m < f.degree:
        raise ValueError(f"`m` {m} is less than the degree {f.degree}")
    return all(f[i] == f[m - i] for i in range(m + 1))


def gamma_vector(f, m):
    """Gamma vector of a palindromic polynomial.

    Note
    ----
    :math:`\\gamma_i` is read off the coefficient of :math:`t^i` after the
    lower basis terms are subtracted. A nonzero residual after
    :math:`\\lfloor m/2 \\rfloor + 1` steps is an error.

    Parameters
    ----------
    f : :class:`IntPoly`
        Polynomial palindromic with respect to `m`.
    m : int
        Twice the center of symmetry.

    Returns
    -------
    :class:`GammaVector`

    Example
    -------
    >>> gamma_vector(IntPoly([1, 2, 1]), 2)
    GammaVector((1, 0), m=2)
    >>> gamma_vector(IntPoly([0, 4]), 2)
    GammaVector((0, 4), m=2)
    >>> gamma_vector(IntPoly([0, 18, 102, 102, 18]), 5)
    GammaVector((0, 18, 48), m=5)
    >>> gamma_vector(IntPoly([1, 2]), 1)
    Traceback (most recent call last):
      ...
    ValueError: 1 + 2t is not palindromic with respect to m=1

    """
    if not is_palindromic(f, m):
        raise ValueError(f"{f} is not palindromic with respect to m={m}")
    residual = f
    gammas = []
    for i in range(m // 2 + 1):
        g = residual[i]
        gammas.append(g)
        if g:
            residual = residual - _gamma_basis(i, m).scalar_mul(g)
    if not residual.is_zero:
        raise ValueError(f"nonzero residual {residual} expanding {f} in the "
                         f"gamma basis with m={m}")
    return GammaVector(gammas, m)


def pseudo_remainder(a, b):
    """Remainder of :math:`|\\mathrm{lc}(b)|^{\\delta+1} a` divided by `b`.

    Here :math:`\\delta = \\deg a - \\deg b`. Computed with
    :meth:`sympy.Poly.prem`, whose factor :math:`\\mathrm{lc}(b)^{\\delta+1}`
    is made positive, so signs are those of the true remainder.

    Example
    -------
    >>> pseudo_remainder(IntPoly([-1, 0, 1]), IntPoly([0, 2]))
    IntPoly([-4])
    >>> pseudo_remainder(IntPoly([1, 0, 1]), IntPoly([0, -2]))
    IntPoly([4])
    >>> pseudo_remainder(IntPoly([3, 0, 0, 1]), IntPoly([1, -1]))
    IntPoly([4])

    """
    if b.is_zero:
        raise ZeroDivisionError('pseudo-remainder by the zero polynomial')
    delta = a.degree - b.degree
    if delta < 0:
        return a
    rem = IntPoly.from_sympy(a.to_sympy().prem(b.to_sympy()))
    if b.leading_coeff < 0 and (delta + 1) % 2:
        rem = -rem
    return rem


def divide_exact(a, b):
    """Quotient `a` / `b`, which must be exact over the integers.

    Example
    -------
    >>> divide_exact(IntPoly([-1, 0, 1]), IntPoly([1, 1]))
    IntPoly([-1, 1])
    >>> divide_exact(IntPoly([1, 0, 1]), IntPoly([1, 1]))
    Traceback (most recent call last):
      ...
    ValueError: 1 + t does not divide 1 + t^2

    """
    if b.is_zero:
        raise ZeroDivisionError('division by the zero polynomial')
    try:
        q = a.to_sympy().exquo(b.to_sympy(), auto=False)
    except ExactQuotientFailed:
        raise ValueError(f"{b} does not divide {a}")
    return IntPoly.from_sympy(q)


def poly_gcd(a, b):
    """Primitive greatest common divisor with positive leading coefficient.

    Example
    -------
    >>> poly_gcd(IntPoly([-1, 0, 1]), IntPoly([2, 2]))
    IntPoly([1, 1])

    """
    if a.is_zero and b.is_zero:
        return IntPoly()
    g = IntPoly.from_sympy(a.to_sympy().gcd(b.to_sympy())).primitive()
    return -g if g.leading_coeff < 0 else g


def squarefree_part(f):
    """Primitive square-free part of `f`: same roots, all simple.

    The leading coefficient is positive.

    Example
    -------
    >>> print(squarefree_part(IntPoly([1, 2, 1]) * IntPoly([-2, 1])))
    -2 - t + t^2
    >>> squarefree_part(IntPoly([-3, 0, 3]))
    IntPoly([-1, 0, 1])

    """
    if f.degree < 1:
        return f
    g = IntPoly.from_sympy(f.to_sympy().sqf_part()).primitive()
    return -g if g.leading_coeff < 0 else g


def sturm_chain(f):
    """Sturm chain of the square-free part of `f`.

    Note
    ----
    The chain comes from :meth:`sympy.Poly.sturm` over the rationals.
    Every member is then scaled by a positive rational to a primitive
    integer polynomial, which leaves all signs unchanged.

    Example
    -------
    >>> sturm_chain(IntPoly([-1, 0, 1]))
    [IntPoly([-1, 0, 1]), IntPoly([0, 1]), IntPoly([1])]
    >>> sturm_chain(IntPoly([1, 0, 1]))
    [IntPoly([1, 0, 1]), IntPoly([0, 1]), IntPoly([-1])]

    """
    if f.is_zero:
        raise ValueError('the zero polynomial has no Sturm chain')
    if f.degree < 1:
        return [IntPoly([1 if f.leading_coeff > 0 else -1])]
    chain = []
    for p in squarefree_part(f).to_sympy().sturm():
        _, p = p.clear_denoms(convert=True)
        chain.append(IntPoly.from_sympy(p).primitive())
    return chain


def _sign_variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f):
    """Number of distinct real roots of `f`.

    Counts the drop in sign variations of :func:`sturm_chain` between
    :math:`-\\infty` and :math:`+\\infty`.

    Example
    -------
    >>> count_real_roots(IntPoly([-1, 0, 1]))
    2
    >>> count_real_roots(IntPoly([1, 0, 1]))
    0
    >>> count_real_roots(IntPoly([1, 2, 1]))
    1
    >>> count_real_roots(IntPoly([7]))
    0

    """
    chain = sturm_chain(f)
    at_plus = [1 if p.leading_coeff > 0 else -1 for p in chain]
    at_minus = [s if p.degree % 2 == 0 else -s
                for s, p in zip(at_plus, chain)]
    return _sign_variations(at_minus) - _sign_variations(at_plus)


def is_real_rooted(f):
    """Whether all complex roots of `f` are real.

    Factors of :math:`t` are removed, the rest is reduced to its square-free
    part, and the distinct real roots counted by :func:`count_real_roots`
    must number its degree.

    Example
    -------
    >>> is_real_rooted(IntPoly([-1, 0, 1]))
    True
    >>> is_real_rooted(IntPoly([1, 0, 1]))
    False
    >>> is_real_rooted(IntPoly([0, 0, 1, 2, 1]))
    True
    >>> is_real_rooted(IntPoly())
    Traceback (most recent call last):
      ...
    ValueError: the zero polynomial has no roots to certify

    """
    if f.is_zero:
        raise ValueError('the zero polynomial has no roots to certify')
    g = f.shift(-f.valuation)
    if g.degree < 1:
        return True
    core = squarefree_part(g)
    return count_real_roots(core) == core.degree


if __name__ == '__main__':
    import doctest
    doctest.testmod()
