"""Exact arithmetic in the ring Z[v, v^-1] of integral Laurent polynomials.

Every coefficient in the package lives here: the bar involution, the Gaussian
integers [[i]] in an arbitrary step variable, the symmetric integers [i], the
Gaussian binomials and the two small solvers used by the canonical basis
computations (antisym_solve and y_decompose)."""

# The MIT License (MIT)
#
# Copyright (c) 2016 GTRC.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import functools
import numbers


class NotBarAntisymmetricError(ValueError):
    """Raised by antisym_solve when its input is not bar-antisymmetric."""


class YDecompositionError(ValueError):
    """Raised by y_decompose when the constant term is odd."""


class LaurentPolynomial(object):
    """An element of Z[v, v^-1].

    Values are immutable and hashable. Zero coefficients are never stored, so
    two polynomials are equal exactly when their coefficient maps are equal.
    Plain integers are accepted wherever a polynomial is expected.

    Attributes:
        terms: A dict mapping integer exponents to nonzero integer coefficients.
            Treat it as read only.
    """

    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        """Create a polynomial from an exponent to coefficient mapping.

        Args:
            terms (dict): Maps exponents (int) to coefficients (int). Zero
                coefficients are dropped.

        Raises:
            TypeError: An exponent or coefficient is not an integer
        """
        clean = {}
        if terms:
            for exponent, coefficient in dict(terms).items():
                if not isinstance(exponent, numbers.Integral) or \
                        not isinstance(coefficient, numbers.Integral):
                    raise TypeError('Laurent polynomial terms must be integers,'
                                    ' got {!r}: {!r}'.format(exponent,
                                                             coefficient))
                if coefficient:
                    clean[int(exponent)] = int(coefficient)
        self.terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms):
        # terms already free of zeros
        poly = cls.__new__(cls)
        poly.terms = terms
        poly._hash = None
        return poly

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        """Return coefficient * v^exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value):
        """Return the constant polynomial with the given integer value."""
        return cls({0: value})

    @staticmethod
    def coerce(value):
        """Turn an integer or a polynomial into a polynomial.

        Raises:
            TypeError: value is neither an integer nor a LaurentPolynomial
        """
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, numbers.Integral):
            return LaurentPolynomial.constant(value)
        raise TypeError('cannot use {!r} as a Laurent polynomial'.format(value))

    # Inspection

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def coefficient(self, exponent):
        """Return the coefficient of v^exponent (0 when absent)."""
        return self.terms.get(exponent, 0)

    @property
    def constant_term(self):
        return self.terms.get(0, 0)

    def degree(self):
        """Return the largest exponent, or None for the zero polynomial."""
        return max(self.terms) if self.terms else None

    def valuation(self):
        """Return the smallest exponent, or None for the zero polynomial."""
        return min(self.terms) if self.terms else None

    def items(self):
        """Return (exponent, coefficient) pairs by descending exponent."""
        return sorted(self.terms.items(), reverse=True)

    def has_only_negative_exponents(self):
        """True for polynomials in v^-1 Z[v^-1], including zero."""
        return not self.terms or max(self.terms) < 0

    def is_bar_invariant(self):
        return self == self.bar()

    # Ring structure

    def __add__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        result = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            value = result.get(exponent, 0) + coefficient
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return LaurentPolynomial._trusted(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._trusted(
            {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, numbers.Integral):
            if not other:
                return ZERO
            return LaurentPolynomial._trusted(
                {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        result = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                result[k1 + k2] = result.get(k1 + k2, 0) + c1 * c2
        return LaurentPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            raise ValueError('only natural powers are supported, '
                             'got {!r}'.format(exponent))
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k):
        """Return v^k times this polynomial."""
        return LaurentPolynomial._trusted(
            {e + k: c for e, c in self.terms.items()})

    def bar(self):
        """Return the image under v -> v^-1."""
        return LaurentPolynomial._trusted(
            {-e: c for e, c in self.terms.items()})

    def exact_divide(self, divisor):
        """Divide exactly by another polynomial.

        Args:
            divisor (LaurentPolynomial or int): The nonzero divisor.

        Returns:
            LaurentPolynomial: The quotient q with q * divisor == self.

        Raises:
            ZeroDivisionError: divisor is zero
            ValueError: The division leaves a nonzero remainder
        """
        divisor = LaurentPolynomial.coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError('division by the zero Laurent polynomial')
        if not self.terms:
            return ZERO
        offset = self.valuation() - divisor.valuation()
        remainder = dict(self.shift(-self.valuation()).terms)
        den = divisor.shift(-divisor.valuation()).terms
        den_degree = max(den)
        den_lead = den[den_degree]
        quotient = {}
        while remainder:
            top = max(remainder)
            if top < den_degree:
                break
            factor, rest = divmod(remainder[top], den_lead)
            if rest:
                break
            t = top - den_degree
            quotient[t] = factor
            for e, c in den.items():
                value = remainder.get(e + t, 0) - factor * c
                if value:
                    remainder[e + t] = value
                else:
                    remainder.pop(e + t, None)
        if remainder:
            raise ValueError('{} is not divisible by {}'.format(self, divisor))
        return LaurentPolynomial(quotient).shift(offset)

    # Comparison and hashing

    def __eq__(self, other):
        if isinstance(other, numbers.Integral):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            if not self.terms:
                self._hash = hash(0)
            elif list(self.terms) == [0]:
                # agree with hash(int) for constants
                self._hash = hash(self.terms[0])
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # Encodings

    def __repr__(self):
        return 'LaurentPolynomial({!r})'.format(dict(self.items()))

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for exponent, coefficient in self.items():
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = 'v' if exponent == 1 else 'v^{}'.format(exponent)
                body = power if abs(coefficient) == 1 else \
                    '{}{}'.format(abs(coefficient), power)
            sign = '-' if coefficient < 0 else '+'
            pieces.append((sign, body))
        text = pieces[0][1] if pieces[0][0] == '+' else '-' + pieces[0][1]
        for sign, body in pieces[1:]:
            text += ' {} {}'.format(sign, body)
        return text

    def to_latex(self):
        """Render with descending exponents, v written as `v`."""
        if not self.terms:
            return '0'
        text = ''
        for exponent, coefficient in self.items():
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = 'v' if exponent == 1 else 'v^{{{}}}'.format(exponent)
                body = power if abs(coefficient) == 1 else \
                    '{}{}'.format(abs(coefficient), power)
            if not text:
                text = body if coefficient > 0 else '-' + body
            else:
                text += (' + ' if coefficient > 0 else ' - ') + body
        return text

    def to_json(self):
        """Return {"exponent": coefficient} with decimal string keys."""
        return {str(k): c for k, c in self.items()}

    @classmethod
    def from_json(cls, data):
        """Inverse of to_json.

        Raises:
            ValueError: A key is not a decimal integer
        """
        try:
            return cls({int(k): int(c) for k, c in data.items()})
        except (AttributeError, TypeError) as error:
            raise ValueError('bad Laurent polynomial encoding {!r}: {}'.format(
                data, error))


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial({0: 1})
V = LaurentPolynomial({1: 1})


def v_power(k):
    """Return v^k."""
    return LaurentPolynomial._trusted({k: 1})


def bar(f):
    """Return the bar image of f (v -> v^-1)."""
    return LaurentPolynomial.coerce(f).bar()


@functools.lru_cache(maxsize=None)
def gauss_int(i, step):
    """Return the Gaussian integer [[i]] = sum_{t<i} v^(t*step).

    Args:
        i (int): A natural number
        step (int): Nonzero exponent step; +2 realizes v_h^2 for h <= m and
            -2 realizes it for h > m

    Raises:
        ValueError: i is negative or step is zero
    """
    if i < 0:
        raise ValueError('gauss_int needs i >= 0, got {}'.format(i))
    if not step:
        raise ValueError('gauss_int needs a nonzero step')
    return LaurentPolynomial._trusted({t * step: 1 for t in range(i)})


@functools.lru_cache(maxsize=None)
def sym_int(i, parity='even'):
    """Return the symmetric quantum integer [i] = sum_t v^(i-1-2t).

    The odd substitution v -> v^-1 leaves [i] unchanged, so parity is only
    validated.

    Raises:
        ValueError: i is negative or parity is not 'even' or 'odd'
    """
    if parity not in ('even', 'odd'):
        raise ValueError("parity must be 'even' or 'odd', got {!r}".format(
            parity))
    if i < 0:
        raise ValueError('sym_int needs i >= 0, got {}'.format(i))
    return LaurentPolynomial._trusted({i - 1 - 2 * t: 1 for t in range(i)})


@functools.lru_cache(maxsize=None)
def q_factorial(n, step):
    """Return [[n]]! = [[1]][[2]]...[[n]] in the variable v^step."""
    result = ONE
    for t in range(1, n + 1):
        result = result * gauss_int(t, step)
    return result


@functools.lru_cache(maxsize=None)
def sym_factorial(n):
    """Return [n]! = [1][2]...[n]."""
    result = ONE
    for t in range(1, n + 1):
        result = result * sym_int(t)
    return result


@functools.lru_cache(maxsize=None)
def qq_binom(n, k, step):
    """Return the Gaussian binomial [[n]]! / ([[k]]! [[n-k]]!) in v^step.

    Args:
        n (int): A natural number
        k (int): A natural number; k > n gives the zero polynomial
        step (int): Nonzero exponent step of the variable

    Raises:
        ValueError: n or k negative, or a nonzero division remainder
    """
    if n < 0 or k < 0:
        raise ValueError('qq_binom needs naturals, got ({}, {})'.format(n, k))
    if k > n:
        return ZERO
    denominator = q_factorial(k, step) * q_factorial(n - k, step)
    return q_factorial(n, step).exact_divide(denominator)


def antisym_solve(r):
    """Solve p - bar(p) = r for p in v^-1 Z[v^-1].

    Args:
        r (LaurentPolynomial): A bar-antisymmetric polynomial

    Returns:
        LaurentPolynomial: The negative-exponent part of r.

    Raises:
        NotBarAntisymmetricError: bar(r) != -r
    """
    r = LaurentPolynomial.coerce(r)
    if r.bar() != -r:
        raise NotBarAntisymmetricError(
            'not bar-antisymmetric: {}'.format(r))
    return LaurentPolynomial._trusted(
        {k: c for k, c in r.terms.items() if k < 0})


def y_decompose(g, strict=True):
    """Split g = gY + gNeg with gY = h + bar(h), h in Z[v], gNeg in v^-1 Z[v^-1].

    Args:
        g (LaurentPolynomial): The polynomial to split
        strict (bool): If False an odd constant term is kept whole in gY,
            giving the bar-invariant part c0 + sum_k c_k (v^k + v^-k) instead
            of raising.

    Returns:
        tuple: (gY, gNeg)

    Raises:
        YDecompositionError: strict is set and the constant term is odd
    """
    g = LaurentPolynomial.coerce(g)
    if strict and g.constant_term % 2:
        raise YDecompositionError(
            'no Y-decomposition for {} (odd constant term)'.format(g))
    symmetric = {}
    for exponent, coefficient in g.terms.items():
        if exponent > 0:
            symmetric[exponent] = coefficient
            symmetric[-exponent] = coefficient
    if g.constant_term:
        symmetric[0] = g.constant_term
    g_y = LaurentPolynomial(symmetric)
    return g_y, g - g_y
