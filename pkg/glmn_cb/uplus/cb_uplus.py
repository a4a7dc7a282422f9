"""The positive part U+ of U(gl(m|n)) realized on the basis {A(0)}.

Elements are finite combinations of strictly upper triangular matrices with
Laurent coefficients. The generators E_h^(p) act through the stabilized
multiplication formulas, monomials in the generators give a unitriangular
basis, and that basis carries the bar involution. The negative part is
reached through the anti-involution tau, which transposes every matrix.

Basic Usage::

    shape = SuperShape(2, 1)
    x = eval_word(monomial_word(SuperMatrix.unit(shape, 1, 3)))
    y = bar_element(x)
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

import collections
import logging
import threading

from glmn_cb.cb_laurent import (LaurentPolynomial, ZERO, ONE, v_power,
                                gauss_int, qq_binom)
from glmn_cb.cb_matrices import (SuperMatrix, SuperShape, compositions,
                                 stat_sigma, stat_f_cap, stat_fh)

log = logging.getLogger(__name__)

PLUS = 'plus'
MINUS = 'minus'


def add_term(terms, key, coefficient):
    """Add coefficient to terms[key] in place, removing zero entries."""
    value = terms.get(key, ZERO) + coefficient
    if value:
        terms[key] = value
    else:
        terms.pop(key, None)


class AlgebraElement(object):
    """A finite combination sum_A c_A A(0) in U+ (side 'plus') or U- ('minus').

    Attributes:
        shape: The SuperShape
        side: 'plus' for strictly upper keys, 'minus' for strictly lower keys
        terms: dict from SuperMatrix to nonzero LaurentPolynomial. Treat it as
            read only.
    """

    __slots__ = ('shape', 'side', 'terms')

    def __init__(self, shape, side, terms=None):
        """Create an element.

        Args:
            shape (SuperShape): The shape
            side (str): 'plus' or 'minus'
            terms (dict): Maps SuperMatrix to LaurentPolynomial or int

        Raises:
            ValueError: Unknown side, or a key that is invalid, of another
                shape or not triangular on the declared side
        """
        if side not in (PLUS, MINUS):
            raise ValueError("side must be 'plus' or 'minus', got "
                             "{!r}".format(side))
        clean = {}
        for matrix, coefficient in (terms or {}).items():
            if matrix.shape != shape:
                raise ValueError('matrix {} is not of shape {}'.format(
                    matrix, shape))
            if not matrix.is_valid():
                raise ValueError('invalid matrix {} (mixed entry above '
                                 '1)'.format(matrix))
            triangular = matrix.is_upper() if side == PLUS else \
                matrix.is_lower()
            if not triangular:
                raise ValueError('matrix {} does not belong to the {} '
                                 'side'.format(matrix, side))
            add_term(clean, matrix, LaurentPolynomial.coerce(coefficient))
        self.shape = shape
        self.side = side
        self.terms = clean

    @classmethod
    def _trusted(cls, shape, side, terms):
        element = cls.__new__(cls)
        element.shape = shape
        element.side = side
        element.terms = terms
        return element

    @classmethod
    def identity(cls, shape, side=PLUS):
        return cls._trusted(shape, side, {SuperMatrix.zero(shape): ONE})

    @classmethod
    def zero(cls, shape, side=PLUS):
        return cls._trusted(shape, side, {})

    @classmethod
    def basis(cls, matrix, coefficient=1, side=None):
        """Return coefficient * A(0); the side defaults from the matrix."""
        if side is None:
            side = PLUS if matrix.is_upper() else MINUS
        return cls(matrix.shape, side, {matrix: coefficient})

    # Inspection

    def coefficient(self, matrix):
        return self.terms.get(matrix, ZERO)

    def support(self):
        """Support matrices, largest sort key first."""
        return sorted(self.terms, key=SuperMatrix.sort_key, reverse=True)

    def items(self):
        return [(matrix, self.terms[matrix]) for matrix in self.support()]

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def __len__(self):
        return len(self.terms)

    # Linear structure

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError('expected an AlgebraElement, got '
                            '{!r}'.format(other))
        if other.shape != self.shape or other.side != self.side:
            raise ValueError('cannot combine {} {} with {} {}'.format(
                self.shape, self.side, other.shape, other.side))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for matrix, coefficient in other.terms.items():
            add_term(terms, matrix, coefficient)
        return AlgebraElement._trusted(self.shape, self.side, terms)

    def __neg__(self):
        return AlgebraElement._trusted(
            self.shape, self.side, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        try:
            scalar = LaurentPolynomial.coerce(scalar)
        except TypeError:
            return NotImplemented
        if not scalar:
            return AlgebraElement.zero(self.shape, self.side)
        return AlgebraElement._trusted(
            self.shape, self.side,
            {k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def exact_divide(self, scalar):
        """Divide every coefficient exactly by a Laurent polynomial."""
        return AlgebraElement._trusted(
            self.shape, self.side,
            {k: c.exact_divide(scalar) for k, c in self.terms.items()})

    def map_coefficients(self, function):
        terms = {}
        for matrix, coefficient in self.terms.items():
            add_term(terms, matrix, function(coefficient))
        return AlgebraElement._trusted(self.shape, self.side, terms)

    def transposed(self):
        """The image under tau: transpose every key, switch side."""
        side = MINUS if self.side == PLUS else PLUS
        return AlgebraElement._trusted(
            self.shape, side, {k.t: c for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.shape == other.shape and self.side == other.side and \
            self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    # Encodings

    def __repr__(self):
        return 'AlgebraElement({}, {!r}, {})'.format(self.shape, self.side,
                                                     self.to_text())

    def to_text(self):
        if not self.terms:
            return '0'
        return ' + '.join('({})*({})'.format(c, m) for m, c in self.items())

    def to_latex(self):
        if not self.terms:
            return '0'
        pieces = []
        for matrix, coefficient in self.items():
            scalar = '' if coefficient == 1 else \
                '\\left({}\\right)'.format(coefficient.to_latex())
            pieces.append('{}{}(\\mathbf{{0}})'.format(scalar,
                                                       matrix.to_latex()))
        return ' + '.join(pieces)

    def to_json(self):
        return {'m': self.shape.m, 'n': self.shape.n, 'side': self.side,
                'terms': terms_to_json(self.items())}

    @classmethod
    def from_json(cls, data):
        """Inverse of to_json.

        Raises:
            ValueError: Malformed encoding
        """
        try:
            shape = SuperShape(data['m'], data['n'])
            return cls(shape, data['side'], terms_from_json(data['terms']))
        except (KeyError, TypeError) as error:
            raise ValueError('bad element encoding: {}'.format(error))


def terms_to_json(items):
    """Encode (matrix, coefficient) pairs as a list of JSON objects."""
    return [{'matrix': matrix.to_json(), 'coefficient': coefficient.to_json()}
            for matrix, coefficient in items]


def terms_from_json(data):
    """Decode a list written by terms_to_json into a dict."""
    terms = {}
    for item in data:
        matrix = SuperMatrix.from_json(item['matrix'])
        terms[matrix] = LaurentPolynomial.from_json(item['coefficient'])
    return terms


# Generator formulas


def generator_terms(a, h):
    """Yield (matrix, coefficient) pairs of E_h A(0) for strictly upper A.

    The matrices may be invalid; callers drop those.
    """
    shape = a.shape
    s = shape.v_sign(h)
    odd = h == shape.m
    rows = a.rows
    for k in range(h + 1, shape.size + 1):
        if k == h + 1:
            changes = {(h, k): 1}
        elif rows[h][k - 1]:
            changes = {(h, k): 1, (h + 1, k): -1}
        else:
            continue
        coefficient = v_power(s * stat_f_cap(a, h, k)) * \
            gauss_int(rows[h - 1][k - 1] + 1, -2 * s)
        if odd and stat_sigma(a, k) % 2:
            coefficient = -coefficient
        yield a.shifted(changes), coefficient


def divided_terms(a, h, p):
    """Yield (matrix, coefficient) pairs of E_h^(p) A(0), h != m, A upper."""
    shape = a.shape
    s = shape.v_sign(h)
    rows = a.rows
    tail_bound = rows[h][h + 1:]
    for first in range(p, -1, -1):
        for tail in compositions(len(tail_bound), p - first, tail_bound):
            nu = (0,) * h + (first,) + tail
            coefficient = v_power(s * stat_fh(nu, a, h))
            changes = {}
            if first:
                changes[(h, h + 1)] = first
            for l, x in enumerate(tail, h + 2):
                if x:
                    changes[(h, l)] = x
                    changes[(h + 1, l)] = -x
            for k, x in enumerate(nu, 1):
                if x:
                    coefficient = coefficient * \
                        qq_binom(rows[h - 1][k - 1] + x, x, -2 * s)
            yield a.shifted(changes), coefficient


def left_mult_divided_E(h, p, x):
    """Return E_h^(p) x for x in U+.

    Args:
        h (int): Generator index, 1 <= h < m+n
        p (int): Divided power, at least 1
        x (AlgebraElement): A plus side element

    Returns:
        AlgebraElement: The product. Terms landing on invalid matrices are
        dropped and logged.

    Raises:
        ValueError: h out of range, p < 1 or x on the minus side
    """
    shape = x.shape
    if not 1 <= h < shape.size:
        raise ValueError('generator index {} out of range for {}'.format(
            h, shape))
    if p < 1:
        raise ValueError('divided power must be positive, got {}'.format(p))
    if x.side != PLUS:
        raise ValueError('generators E_h act on the plus side')
    if h == shape.m and p > 1:
        return AlgebraElement.zero(shape)
    result = {}
    for a, c in x.terms.items():
        terms = generator_terms(a, h) if p == 1 else divided_terms(a, h, p)
        for b, coefficient in terms:
            if not b.is_valid():
                log.debug('E_%d^(%d) on %s: dropped invalid %s with '
                          'coefficient %s', h, p, a, b, coefficient)
                continue
            add_term(result, b, c * coefficient)
    return AlgebraElement._trusted(shape, PLUS, result)


def generator(shape, h, p=1):
    """Return E_h^(p) = (p E_{h,h+1})(0)."""
    return AlgebraElement.basis(SuperMatrix.unit(shape, h, h + 1, p))


# Monomials

Factor = collections.namedtuple('Factor', ['h', 'p'])


class MonomialWord(object):
    """An ordered product E_{h1}^(p1) E_{h2}^(p2) ... of divided powers.

    Attributes:
        shape: The SuperShape
        factors: Tuple of Factor(h, p), left to right
    """

    def __init__(self, shape, factors):
        """Create a word.

        Raises:
            ValueError: A factor index is out of range, a power is not
                positive, or the odd generator carries a power above 1
        """
        clean = []
        for h, p in factors:
            if not 1 <= h < shape.size:
                raise ValueError('factor index {} out of range for '
                                 '{}'.format(h, shape))
            if p < 1:
                raise ValueError('factor powers must be positive')
            if h == shape.m and p > 1:
                raise ValueError('the odd generator E_{} has no divided '
                                 'power {}'.format(h, p))
            clean.append(Factor(h, p))
        self.shape = shape
        self.factors = tuple(clean)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        return isinstance(other, MonomialWord) and \
            self.shape == other.shape and self.factors == other.factors

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.shape, self.factors))

    def __repr__(self):
        return 'MonomialWord({}, {!r})'.format(self.shape,
                                               [tuple(f) for f in self])

    def __str__(self):
        if not self.factors:
            return '1'
        return ' '.join('E{}'.format(h) if p == 1 else
                        'E{}^({})'.format(h, p) for h, p in self.factors)

    def apply(self, x):
        """Left-multiply x by the word (rightmost factor first)."""
        for h, p in reversed(self.factors):
            x = left_mult_divided_E(h, p, x)
        return x


def monomial_word(a):
    """Return the monomial word m_A for a strictly upper valid matrix.

    Entries are visited by decreasing column, then decreasing row; entry
    (i, j) contributes E_i^(a) E_{i+1}^(a) ... E_{j-1}^(a) with a = a_ij.

    Raises:
        ValueError: A is invalid or not strictly upper
    """
    if not a.is_valid() or not a.is_upper():
        raise ValueError('monomials are indexed by valid strictly upper '
                         'matrices, got {}'.format(a))
    factors = []
    size = a.shape.size
    for j in range(size, 0, -1):
        for i in range(j - 1, 0, -1):
            p = a.entry(i, j)
            if p:
                factors.extend(Factor(h, p) for h in range(i, j))
    return MonomialWord(a.shape, factors)


def eval_word(word, x=None):
    """Apply a word to x (default: the identity element)."""
    if x is None:
        x = AlgebraElement.identity(word.shape)
    return word.apply(x)


class PositivePart(object):
    """Memoized realization of U+ for one shape.

    Monomial expansions and bar images of basis elements are cached per
    matrix. The tables only grow, and every value is deterministic, so
    concurrent use can at worst repeat work.

    Attributes:
        shape: The SuperShape
        records: Canonical records by target matrix (filled by canonical)
        root_vectors: Root vectors by (a, b, c)
    """

    serre_norm_bound = 6

    _instances = {}
    _lock = threading.Lock()

    @classmethod
    def for_shape(cls, shape):
        """Return the shared instance for a shape."""
        part = cls._instances.get(shape)
        if part is None:
            with cls._lock:
                part = cls._instances.setdefault(shape, cls(shape))
        return part

    def __init__(self, shape):
        self.shape = shape
        self.records = {}
        self.root_vectors = {}
        self._expansions = {}
        self._bars = {}

    def monomial_expansion(self, a):
        """Return m_A = eval_word(monomial_word(A)) as an element.

        Raises:
            ValueError: The expansion is not unitriangular
        """
        expansion = self._expansions.get(a)
        if expansion is None:
            expansion = eval_word(monomial_word(a))
            key = a.sort_key()
            if expansion.coefficient(a) != 1 or any(
                    b.sort_key() >= key for b in expansion.terms if b != a):
                raise ValueError('monomial of {} is not unitriangular: '
                                 '{}'.format(a, expansion.to_text()))
            self._expansions[a] = expansion
        return expansion

    def transition_closure(self, a):
        """Close {A} under monomial supports.

        Returns:
            tuple: (basis, table) with basis sorted by increasing sort key and
            table[B] the dict {C: T[C, B]} with m_B = sum_C T[C, B] C(0).
        """
        seen = {a}
        stack = [a]
        while stack:
            b = stack.pop()
            for c in self.monomial_expansion(b).terms:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        basis = sorted(seen, key=SuperMatrix.sort_key)
        log.debug('closure of %s in %s: %d matrices', a, self.shape,
                  len(basis))
        return basis, {b: dict(self.monomial_expansion(b).terms)
                       for b in basis}

    def monomial_coordinates(self, x):
        """Coordinates of a plus side element in the monomial basis."""
        residual = dict(x.terms)
        coordinates = {}
        while residual:
            b = max(residual, key=SuperMatrix.sort_key)
            c = residual[b]
            coordinates[b] = c
            for d, t in self.monomial_expansion(b).terms.items():
                add_term(residual, d, -(c * t))
        return coordinates

    def from_monomial_coordinates(self, coordinates):
        terms = {}
        for b, c in coordinates.items():
            for d, t in self.monomial_expansion(b).terms.items():
                add_term(terms, d, c * t)
        return AlgebraElement._trusted(self.shape, PLUS, terms)

    def bar_basis(self, a):
        """Return bar(A(0)) for strictly upper A."""
        image = self._bars.get(a)
        if image is None:
            coordinates = self.monomial_coordinates(AlgebraElement.basis(a))
            image = self.from_monomial_coordinates(
                {b: c.bar() for b, c in coordinates.items()})
            self._bars[a] = image
        return image

    def bar_element(self, x):
        terms = {}
        for a, c in x.terms.items():
            for b, t in self.bar_basis(a).terms.items():
                add_term(terms, b, c.bar() * t)
        return AlgebraElement._trusted(self.shape, PLUS, terms)

    def mult(self, x, y):
        """Product of two plus side elements."""
        result = AlgebraElement.zero(self.shape)
        for b, c in self.monomial_coordinates(x).items():
            result = result + monomial_word(b).apply(y) * c
        return result


def part_for(shape):
    return PositivePart.for_shape(shape)


def tau_transpose(x):
    """Apply the anti-involution tau: A(0) -> A^t(0), coefficients kept."""
    return x.transposed()


def transition_closure(a):
    """Transition closure of a strictly upper matrix; see PositivePart."""
    return part_for(a.shape).transition_closure(a)


def bar_element(x):
    """Return the bar image of an element of U+ or U-."""
    if x.side == MINUS:
        return tau_transpose(part_for(x.shape).bar_element(tau_transpose(x)))
    return part_for(x.shape).bar_element(x)


def mult(x, y):
    """Return the product x y of two elements on the same side.

    Raises:
        ValueError: The shapes or sides differ
    """
    x._check(y)
    if x.side == MINUS:
        return tau_transpose(part_for(x.shape).mult(tau_transpose(y),
                                                    tau_transpose(x)))
    return part_for(x.shape).mult(x, y)


def weight(x):
    """Return the common degree sum a_ij (e_i - e_j) of the support.

    Raises:
        ValueError: x is zero or not homogeneous
    """
    weights = {a.weight() for a in x.terms}
    if len(weights) != 1:
        raise ValueError('element is not homogeneous (weights {})'.format(
            sorted(weights)))
    return weights.pop()
