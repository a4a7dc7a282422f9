"""The quantum Schur superalgebra S(m|n, r) on the basis {[A]}.

The algebra is presented by its generator multiplication formulas: E_h and
F_h divided powers act on the left of any [A] with |A| = r. Everything else
at level r is built on top of them. That covers the spanning elements
A(j, r), the map eta_r from U+ and U-, idempotents and word application.

Basic Usage::

    shape = SuperShape(2, 1)
    x = span_element(SuperMatrix.unit(shape, 2, 1), (0, 0, 0), 2)
    y = left_mult_E(1, 1, 2, x)
"""

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

import logging

from glmn_cb.cb_laurent import (LaurentPolynomial, ZERO, ONE, v_power,
                                gauss_int, qq_binom)
from glmn_cb.cb_matrices import (SuperMatrix, SuperShape, compositions,
                                 enumerate_compositions, enumerate_level,
                                 sign_bar, _fh, _gh, _fm, _gm)
from glmn_cb.uplus.cb_uplus import add_term, terms_to_json, terms_from_json
from glmn_cb.uplus.cb_pbw import RelationReport, supercommutator

log = logging.getLogger(__name__)


class SchurElement(object):
    """A finite combination sum_A c_A [A] in S(m|n, r).

    Attributes:
        shape: The SuperShape
        r: The level
        terms: dict from SuperMatrix (valid, entry sum r) to nonzero
            LaurentPolynomial
    """

    __slots__ = ('shape', 'r', 'terms')

    def __init__(self, shape, r, terms=None):
        """Create an element.

        Raises:
            ValueError: A key of another shape, an invalid key, or a key
                whose entry sum is not r
        """
        if r < 0:
            raise ValueError('level must be natural, got {}'.format(r))
        clean = {}
        for matrix, coefficient in (terms or {}).items():
            if matrix.shape != shape:
                raise ValueError('matrix {} is not of shape {}'.format(
                    matrix, shape))
            if not matrix.is_valid():
                raise ValueError('invalid matrix {}'.format(matrix))
            if matrix.size() != r:
                raise ValueError('matrix {} does not have entry sum '
                                 '{}'.format(matrix, r))
            add_term(clean, matrix, LaurentPolynomial.coerce(coefficient))
        self.shape = shape
        self.r = r
        self.terms = clean

    @classmethod
    def _trusted(cls, shape, r, terms):
        element = cls.__new__(cls)
        element.shape = shape
        element.r = r
        element.terms = terms
        return element

    @classmethod
    def zero(cls, shape, r):
        return cls._trusted(shape, r, {})

    @classmethod
    def basis(cls, matrix, coefficient=1):
        """Return coefficient * [A] at level |A|."""
        return cls(matrix.shape, matrix.size(), {matrix: coefficient})

    def coefficient(self, matrix):
        return self.terms.get(matrix, ZERO)

    def support(self):
        return sorted(self.terms, key=SuperMatrix.sort_key, reverse=True)

    def items(self):
        return [(matrix, self.terms[matrix]) for matrix in self.support()]

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other):
        if not isinstance(other, SchurElement):
            raise TypeError('expected a SchurElement, got {!r}'.format(other))
        if other.shape != self.shape or other.r != self.r:
            raise ValueError('cannot combine level {} of {} with level {} of '
                             '{}'.format(self.r, self.shape, other.r,
                                         other.shape))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for matrix, coefficient in other.terms.items():
            add_term(terms, matrix, coefficient)
        return SchurElement._trusted(self.shape, self.r, terms)

    def __neg__(self):
        return SchurElement._trusted(self.shape, self.r,
                                     {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        try:
            scalar = LaurentPolynomial.coerce(scalar)
        except TypeError:
            return NotImplemented
        if not scalar:
            return SchurElement.zero(self.shape, self.r)
        return SchurElement._trusted(self.shape, self.r,
                                     {k: c * scalar
                                      for k, c in self.terms.items()})

    __rmul__ = __mul__

    def exact_divide(self, scalar):
        return SchurElement._trusted(
            self.shape, self.r,
            {k: c.exact_divide(scalar) for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        return self.shape == other.shape and self.r == other.r and \
            self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'SchurElement({}, r={}, {})'.format(self.shape, self.r,
                                                   self.to_text())

    def to_text(self):
        if not self.terms:
            return '0'
        return ' + '.join('({})*[{}]'.format(c, m) for m, c in self.items())

    def to_latex(self):
        if not self.terms:
            return '0'
        pieces = []
        for matrix, coefficient in self.items():
            scalar = '' if coefficient == 1 else \
                '\\left({}\\right)'.format(coefficient.to_latex())
            pieces.append('{}[{}]'.format(scalar, matrix.to_latex()))
        return ' + '.join(pieces)

    def to_json(self):
        return {'m': self.shape.m, 'n': self.shape.n, 'r': self.r,
                'terms': terms_to_json(self.items())}

    @classmethod
    def from_json(cls, data):
        """Inverse of to_json.

        Raises:
            ValueError: Malformed encoding
        """
        try:
            return cls(SuperShape(data['m'], data['n']), data['r'],
                       terms_from_json(data['terms']))
        except (KeyError, TypeError) as error:
            raise ValueError('bad level {} element: {}'.format(
                data.get('r') if isinstance(data, dict) else '?', error))


def odd_sign_sum(rows, k, m):
    """Sum of a_ij over i > m, j < k, on raw rows."""
    return sum(rows[i][j] for i in range(m, len(rows)) for j in range(k - 1))


def _shift_rows(rows, changes):
    rows = [list(row) for row in rows]
    for (i, j), delta in changes.items():
        rows[i - 1][j - 1] += delta
    return rows


def _upper_terms(a, h, p):
    """Yield (matrix, coefficient) for [pE_{h,h+1} + D][A]."""
    shape = a.shape
    rows = a.rows
    m = shape.m
    if h == m:
        if p > 1:
            return
        for k in shape.indices():
            if rows[m][k - 1] < 1:
                continue
            coefficient = v_power(_fm(rows, k, m)) * \
                gauss_int(rows[m - 1][k - 1] + 1, -2)
            if odd_sign_sum(rows, k, m) % 2:
                coefficient = -coefficient
            yield a.shifted({(m, k): 1, (m + 1, k): -1}), coefficient
        return
    s = shape.v_sign(h)
    for nu in compositions(shape.size, p, rows[h]):
        coefficient = v_power(s * _fh(rows, nu, h))
        changes = {}
        for k, x in enumerate(nu, 1):
            if x:
                coefficient = coefficient * \
                    qq_binom(rows[h - 1][k - 1] + x, x, -2 * s)
                changes[(h, k)] = changes.get((h, k), 0) + x
                changes[(h + 1, k)] = changes.get((h + 1, k), 0) - x
        yield a.shifted(changes), coefficient


def _lower_terms(a, h, p):
    """Yield (matrix, coefficient) for [pE_{h+1,h} + D][A]."""
    shape = a.shape
    rows = a.rows
    m = shape.m
    if h == m:
        if p > 1:
            return
        for k in shape.indices():
            if rows[m - 1][k - 1] < 1:
                continue
            coefficient = v_power(-_gm(rows, k, m)) * \
                gauss_int(rows[m][k - 1] + 1, 2)
            if odd_sign_sum(rows, k, m) % 2:
                coefficient = -coefficient
            yield a.shifted({(m, k): -1, (m + 1, k): 1}), coefficient
        return
    s = shape.v_sign(h + 1)
    for nu in compositions(shape.size, p, rows[h - 1]):
        coefficient = v_power(s * _gh(rows, nu, h))
        changes = {}
        for k, x in enumerate(nu, 1):
            if x:
                coefficient = coefficient * \
                    qq_binom(rows[h][k - 1] + x, x, -2 * s)
                changes[(h, k)] = changes.get((h, k), 0) - x
                changes[(h + 1, k)] = changes.get((h + 1, k), 0) + x
        yield a.shifted(changes), coefficient


def _left_mult(terms_of, name, h, p, r, x):
    shape = x.shape
    if r != x.r:
        raise ValueError('element of level {} used at level {}'.format(x.r,
                                                                       r))
    if not 1 <= h < shape.size:
        raise ValueError('generator index {} out of range for {}'.format(
            h, shape))
    if p < 1:
        raise ValueError('divided power must be positive, got {}'.format(p))
    result = {}
    for a, c in x.terms.items():
        for b, coefficient in terms_of(a, h, p):
            if b is None:
                continue
            if not b.is_valid():
                log.debug('%s_%d^(%d) on [%s]: dropped invalid %s', name, h,
                          p, a, b)
                continue
            add_term(result, b, c * coefficient)
    return SchurElement._trusted(shape, r, result)


def left_mult_E(h, p, r, x):
    """Return (pE_{h,h+1})(0, r) x.

    Raises:
        ValueError: h out of range, p < 1 or x not of level r
    """
    return _left_mult(_upper_terms, 'E', h, p, r, x)


def left_mult_F(h, p, r, x):
    """Return (pE_{h+1,h})(0, r) x.

    Raises:
        ValueError: h out of range, p < 1 or x not of level r
    """
    return _left_mult(_lower_terms, 'F', h, p, r, x)


def span_element(a, j, r):
    """Return A(j, r) = sum_lambda (-1)^sign_bar v^(lambda.j) [A + diag lambda].

    Args:
        a (SuperMatrix): A matrix with zero diagonal
        j (sequence of int): The weight vector
        r (int): The level

    Returns:
        SchurElement: Zero when |A| > r or A has a nonzero diagonal.
    """
    shape = a.shape
    j = tuple(j)
    if len(j) != shape.size:
        raise ValueError('weight vector needs {} entries'.format(shape.size))
    terms = {}
    if a.is_off_diagonal() and a.is_valid():
        for lam in enumerate_compositions(shape, r - a.size()):
            matrix = a.shifted({(i, i): x for i, x in enumerate(lam, 1)})
            coefficient = v_power(shape.dot(lam, j))
            if sign_bar(matrix):
                coefficient = -coefficient
            terms[matrix] = coefficient
    return SchurElement._trusted(shape, r, terms)


def eta_r(x, r):
    """Map an element of U+ or U- to level r: A(0) -> A(0, r)."""
    zero = (0,) * x.shape.size
    result = SchurElement.zero(x.shape, r)
    for a, c in x.terms.items():
        result = result + span_element(a, zero, r) * c
    return result


def _weight(shape, lam, r):
    lam = tuple(lam)
    if len(lam) != shape.size or any(x < 0 for x in lam) or sum(lam) != r:
        raise ValueError('{} is not a composition of {} with {} '
                         'parts'.format(lam, r, shape.size))
    return lam


def idempotent(shape, lam, r):
    """Return [diag(lambda)].

    Raises:
        ValueError: lambda is not a composition of r
    """
    return SchurElement.basis(SuperMatrix.diag(shape, _weight(shape, lam,
                                                                 r)))


def left_mult_idempotent(lam, x):
    """Return [diag(lambda)] x: the terms with row sums lambda."""
    lam = _weight(x.shape, lam, x.r)
    return SchurElement._trusted(x.shape, x.r, {
        a: c for a, c in x.terms.items() if a.ro() == lam})


def right_mult_idempotent(x, lam):
    """Return x [diag(lambda)]: the terms with column sums lambda."""
    lam = _weight(x.shape, lam, x.r)
    return SchurElement._trusted(x.shape, x.r, {
        a: c for a, c in x.terms.items() if a.co() == lam})


def schur_identity(shape, r):
    """The identity of S(m|n, r), sum_lambda [diag(lambda)]."""
    return span_element(SuperMatrix.zero(shape), (0,) * shape.size, r)


def weight_element(shape, j, r):
    """O(j, r) = sum_lambda v^(lambda.j) [diag(lambda)], the image of K^j."""
    return span_element(SuperMatrix.zero(shape), j, r)


def apply_plus_word(word, x):
    """Apply eta_r of a U+ monomial word to x (rightmost factor first)."""
    for h, p in reversed(word.factors):
        x = left_mult_E(h, p, x.r, x)
    return x


def apply_minus_word(word, x):
    """Apply eta_r of tau(word) to x.

    tau reverses products, so the factors of the U+ word act as F
    generators from left to right.
    """
    for h, p in word.factors:
        x = left_mult_F(h, p, x.r, x)
    return x


def ef_commutator_scalar(shape, h, lam):
    """The scalar by which [E_h, F_h] acts on matrices with row sums lambda."""
    d = shape.dot(lam, [1 if i == h else -1 if i == h + 1 else 0
                        for i in shape.indices()])
    s = shape.v_sign(h)
    return (v_power(d) - v_power(-d)).exact_divide(v_power(s) - v_power(-s))


def ef_commutator_check(shape, r):
    """Check [E_h, F_h] on every [A] of level r against the K-weight scalar.

    The bracket is the super commutator: E_m and F_m are both odd.

    Returns:
        RelationReport: One entry per generator and basis matrix.
    """
    report = RelationReport(shape, r)
    for a in enumerate_level(shape, r):
        z = SchurElement._trusted(shape, r, {a: ONE})
        for h in range(1, shape.size):
            parity = 1 if h == shape.m else 0

            def compose(first, second):
                return first(second(z))

            bracket = supercommutator(
                lambda y: left_mult_E(h, 1, r, y),
                lambda y: left_mult_F(h, 1, r, y),
                parity, parity, compose)
            expected = z * ef_commutator_scalar(shape, h, a.ro())
            report.record('commutator E{}F{}'.format(h, h), a,
                          bracket - expected)
    return report
