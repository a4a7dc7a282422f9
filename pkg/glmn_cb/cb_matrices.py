"""Super matrices indexing every basis in the package.

A SuperShape (m|n) fixes the parity of the indices 1..m+n (even for i <= m,
odd otherwise). A SuperMatrix is a square matrix of naturals over a shape;
it is valid when every entry in a mixed position (one even index, one odd)
is 0 or 1. The module also holds the partial orders, the sign and hook
statistics and the exponent statistics consumed by the multiplication
formulas. Indices are 1-based throughout to match the formulas."""

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

import numbers
import re


class HookSumError(ValueError):
    """Raised by a_lambda when a weight is smaller than the hook sums."""


class SuperShape(object):
    """The pair (m|n) of a matrix superalgebra gl(m|n).

    Attributes:
        m: The number of even indices
        n: The number of odd indices
    """

    __slots__ = ('m', 'n')

    def __init__(self, m, n):
        """Create a shape.

        Raises:
            TypeError: m or n is not an integer
            ValueError: m or n is negative, or both are zero
        """
        if not isinstance(m, numbers.Integral) or \
                not isinstance(n, numbers.Integral):
            raise TypeError('m and n must be integers')
        if m < 0 or n < 0 or m + n < 1:
            raise ValueError('shape needs m, n >= 0 and m + n >= 1, '
                             'got ({}|{})'.format(m, n))
        self.m = int(m)
        self.n = int(n)

    @property
    def size(self):
        return self.m + self.n

    def indices(self):
        return range(1, self.size + 1)

    def check_index(self, i):
        if not 1 <= i <= self.size:
            raise ValueError('index {} out of range for {}'.format(i, self))

    def parity(self, i):
        """Return 0 for an even index (i <= m) and 1 for an odd one."""
        return 0 if i <= self.m else 1

    def v_sign(self, h):
        """Return s with v_h = v^s: 1 when h <= m, -1 otherwise."""
        return 1 if h <= self.m else -1

    def is_mixed(self, i, j):
        return self.parity(i) != self.parity(j)

    def dot(self, lam, j):
        """The signed dot product sum_i (-1)^parity(i) lam_i j_i."""
        return sum(l * x if i <= self.m else -l * x
                   for i, (l, x) in enumerate(zip(lam, j), 1))

    def __eq__(self, other):
        return isinstance(other, SuperShape) and \
            (self.m, self.n) == (other.m, other.n)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return 'SuperShape({}, {})'.format(self.m, self.n)

    def __str__(self):
        return '({}|{})'.format(self.m, self.n)


def _rows_from(shape, rows):
    size = shape.size
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if len(rows) != size or any(len(row) != size for row in rows):
        raise ValueError('a matrix of shape {} needs {} rows of length '
                         '{}'.format(shape, size, size))
    if any(x < 0 for row in rows for x in row):
        raise ValueError('matrix entries must be natural numbers')
    return rows


class SuperMatrix(object):
    """An immutable (m+n) x (m+n) matrix of naturals over a SuperShape.

    Invalid matrices (a mixed entry of 2 or more) can be built; use
    is_valid() to test them. Algebra code maps them to zero.

    Attributes:
        shape: The SuperShape
        rows: The entries as a tuple of row tuples
    """

    __slots__ = ('shape', 'rows', '_hash', '_corners')

    def __init__(self, shape, rows):
        """Create a matrix.

        Args:
            shape (SuperShape): The shape
            rows (sequence of sequences of int): The entries, row by row

        Raises:
            ValueError: Wrong dimensions or a negative entry
        """
        self.shape = shape
        self.rows = _rows_from(shape, rows)
        self._hash = None
        self._corners = None

    @classmethod
    def _trusted(cls, shape, rows):
        matrix = cls.__new__(cls)
        matrix.shape = shape
        matrix.rows = rows
        matrix._hash = None
        matrix._corners = None
        return matrix

    @classmethod
    def zero(cls, shape):
        return cls._trusted(shape, tuple((0,) * shape.size
                                         for _ in range(shape.size)))

    @classmethod
    def from_entries(cls, shape, entries):
        """Build a matrix from a {(i, j): value} dict with 1-based indices."""
        rows = [[0] * shape.size for _ in range(shape.size)]
        for (i, j), value in entries.items():
            shape.check_index(i)
            shape.check_index(j)
            rows[i - 1][j - 1] += value
        return cls(shape, rows)

    @classmethod
    def unit(cls, shape, i, j, value=1):
        """Return value * E_{i,j}."""
        return cls.from_entries(shape, {(i, j): value})

    @classmethod
    def diag(cls, shape, parts):
        """Return diag(parts)."""
        parts = tuple(parts)
        if len(parts) != shape.size:
            raise ValueError('diag needs {} parts'.format(shape.size))
        return cls.from_entries(shape, {(i, i): x
                                        for i, x in enumerate(parts, 1)})

    # Entries and arithmetic

    def entry(self, i, j):
        return self.rows[i - 1][j - 1]

    def nonzero_entries(self):
        """Yield ((i, j), value) over nonzero entries in row-major order."""
        for i, row in enumerate(self.rows, 1):
            for j, value in enumerate(row, 1):
                if value:
                    yield (i, j), value

    def _check_shape(self, other):
        if not isinstance(other, SuperMatrix):
            raise TypeError('expected a SuperMatrix, got {!r}'.format(other))
        if other.shape != self.shape:
            raise ValueError('shape mismatch: {} vs {}'.format(self.shape,
                                                               other.shape))

    def __add__(self, other):
        self._check_shape(other)
        return SuperMatrix._trusted(self.shape, tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._check_shape(other)
        return SuperMatrix(self.shape, [[a - b for a, b in zip(r1, r2)]
                                        for r1, r2 in zip(self.rows,
                                                          other.rows)])

    def shifted(self, changes):
        """Add {(i, j): delta} to the entries.

        Returns:
            SuperMatrix or None: None when an entry would become negative.
        """
        rows = [list(row) for row in self.rows]
        for (i, j), delta in changes.items():
            rows[i - 1][j - 1] += delta
            if rows[i - 1][j - 1] < 0:
                return None
        return SuperMatrix._trusted(self.shape,
                                    tuple(tuple(row) for row in rows))

    def transpose(self):
        return SuperMatrix._trusted(self.shape, tuple(zip(*self.rows)))

    @property
    def t(self):
        return self.transpose()

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(self.shape.size))

    def off_diagonal(self):
        return SuperMatrix._trusted(self.shape, tuple(
            tuple(0 if i == j else x for j, x in enumerate(row))
            for i, row in enumerate(self.rows)))

    def upper_part(self):
        return SuperMatrix._trusted(self.shape, tuple(
            tuple(x if j > i else 0 for j, x in enumerate(row))
            for i, row in enumerate(self.rows)))

    def lower_part(self):
        return SuperMatrix._trusted(self.shape, tuple(
            tuple(x if j < i else 0 for j, x in enumerate(row))
            for i, row in enumerate(self.rows)))

    # Membership

    def is_valid(self):
        """True iff every mixed-block entry is 0 or 1."""
        m = self.shape.m
        for i, row in enumerate(self.rows, 1):
            for j, value in enumerate(row, 1):
                if value > 1 and (i <= m) != (j <= m):
                    return False
        return True

    def is_upper(self):
        """True for strictly upper triangular matrices (M(m|n)+)."""
        return all(not x for i, row in enumerate(self.rows)
                   for j, x in enumerate(row) if j <= i)

    def is_lower(self):
        """True for strictly lower triangular matrices (M(m|n)-)."""
        return all(not x for i, row in enumerate(self.rows)
                   for j, x in enumerate(row) if j >= i)

    def is_off_diagonal(self):
        """True for matrices with zero diagonal (M(m|n)+-)."""
        return not any(self.diagonal())

    def is_zero(self):
        return not any(any(row) for row in self.rows)

    # Statistics

    def ro(self):
        return tuple(sum(row) for row in self.rows)

    def co(self):
        return tuple(sum(col) for col in zip(*self.rows))

    def size(self):
        return sum(sum(row) for row in self.rows)

    def norm(self):
        """The weighted sum of (j-i)(j-i+1)/2 (a_ij + a_ji) over i < j."""
        total = 0
        for (i, j), value in self.nonzero_entries():
            d = abs(j - i)
            total += d * (d + 1) // 2 * value
        return total

    def weight(self):
        """The root-lattice degree sum a_ij (e_i - e_j) as a tuple."""
        result = [0] * self.shape.size
        for (i, j), value in self.nonzero_entries():
            result[i - 1] += value
            result[j - 1] -= value
        return tuple(result)

    def corner_sums(self):
        """Return the corner-sum tables used by preceq.

        Returns:
            tuple: (upper, lower) dicts; upper[(s, t)] for s < t is the sum of
            a_ij over i <= s, j >= t and lower[(s, t)] for s > t is the sum
            over i >= s, j <= t.
        """
        if self._corners is None:
            size = self.shape.size
            upper = {}
            lower = {}
            for s in range(1, size + 1):
                for t in range(1, size + 1):
                    if s < t:
                        upper[(s, t)] = sum(self.rows[i][j]
                                            for i in range(s)
                                            for j in range(t - 1, size))
                    elif s > t:
                        lower[(s, t)] = sum(self.rows[i][j]
                                            for i in range(s - 1, size)
                                            for j in range(t))
            self._corners = (upper, lower)
        return self._corners

    def sort_key(self):
        """A linear extension of the strict order: (norm, entries)."""
        return (self.norm(), self.rows)

    # Comparison and encodings

    def __eq__(self, other):
        return isinstance(other, SuperMatrix) and \
            self.shape == other.shape and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def __repr__(self):
        return 'SuperMatrix({}, {})'.format(self.shape, format_matrix(self))

    def __str__(self):
        return format_matrix(self)

    def to_json(self):
        return {'m': self.shape.m, 'n': self.shape.n,
                'rows': [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data):
        """Inverse of to_json.

        Raises:
            ValueError: Missing or malformed fields
        """
        try:
            return cls(SuperShape(data['m'], data['n']), data['rows'])
        except (KeyError, TypeError) as error:
            raise ValueError('bad matrix encoding {!r}: {}'.format(data, error))

    def to_latex(self):
        """Render as an array; strictly upper matrices drop the lower half."""
        size = self.shape.size
        if self.is_upper() and size > 1:
            lines = []
            for i in range(size - 1):
                cells = ['' for _ in range(i)] + \
                    [str(x) for x in self.rows[i][i + 1:]]
                lines.append('&'.join(cells))
            columns = 'c' * (size - 1)
        else:
            lines = ['&'.join(str(x) for x in row) for row in self.rows]
            columns = 'c' * size
        return '\\left[\\begin{{array}}{{{}}}{}\\end{{array}}\\right]'.format(
            columns, '\\\\'.join(lines))


# Module level operations


def is_valid(a):
    return a.is_valid()


def ro(a):
    return a.ro()


def co(a):
    return a.co()


def size(a):
    return a.size()


def norm(a):
    return a.norm()


def preceq(b, a):
    """Return True if b precedes or equals a in the corner-sum order.

    Raises:
        ValueError: The shapes differ
    """
    a._check_shape(b)
    upper_b, lower_b = b.corner_sums()
    upper_a, lower_a = a.corner_sums()
    return all(upper_b[k] <= upper_a[k] for k in upper_a) and \
        all(lower_b[k] <= lower_a[k] for k in lower_a)


def preceq_rc(b, a):
    """preceq with equal row and column sums."""
    return b.ro() == a.ro() and b.co() == a.co() and preceq(b, a)


def _bar_parity(rows, m):
    # rows may carry negative diagonal entries (stable expansions)
    size = len(rows)
    total = 0
    for i in range(m, size):
        for j in range(m, size):
            if rows[i][j]:
                total += rows[i][j] * sum(rows[k][l] for k in range(m)
                                          for l in range(j + 1, size))
    return total % 2


def sign_bar(a):
    """Parity of the sum of a_ij a_kl over i > m >= k and m < j < l."""
    return _bar_parity(a.rows, a.shape.m)


def sign_hat(a):
    """Parity of the sum of a_ij a_kl over m < k < i and j < l."""
    rows = a.rows
    size = a.shape.size
    total = 0
    for k in range(a.shape.m, size):
        for i in range(k + 1, size):
            for j in range(size):
                if rows[i][j]:
                    total += rows[i][j] * sum(rows[k][j + 1:])
    return total % 2


def hooks(a):
    """The hook sums a_ii + sum_{j>i} (a_ij + a_ji)."""
    size = a.shape.size
    return tuple(a.rows[i][i] + sum(a.rows[i][j] + a.rows[j][i]
                                    for j in range(i + 1, size))
                 for i in range(size))


def a_lambda(a, lam):
    """Return A_lambda = A + diag(lambda - hooks(A)).

    Raises:
        HookSumError: lambda is not componentwise >= hooks(A)
    """
    lam = tuple(lam)
    hook = hooks(a)
    if len(lam) != len(hook) or any(l < h for l, h in zip(lam, hook)):
        raise HookSumError('hook sums exceed weight: {} vs {}'.format(
            hook, lam))
    return a.shifted({(i, i): l - h
                      for i, (l, h) in enumerate(zip(lam, hook), 1)})


def stat_sigma(a, k):
    """sigma_A(k): the sum of a_ij over i <= m, j > k."""
    m = a.shape.m
    return sum(a.rows[i][j] for i in range(m) for j in range(k, a.shape.size))


def stat_f_cap(a, h, k):
    """f_A(h, k) = sum_{j>=k} a_hj - (-1)^delta(m,h) sum_{j>k} a_{h+1,j}."""
    first = sum(a.rows[h - 1][k - 1:])
    second = sum(a.rows[h][k:])
    if h == a.shape.m:
        return first + second
    return first - second


def _cross(nu):
    total = 0
    running = 0
    for x in nu:
        total += running * x
        running += x
    return total


def _fh(rows, nu, h):
    size = len(rows)
    total = _cross(nu)
    for t in range(1, size + 1):
        if nu[t - 1]:
            total += nu[t - 1] * (sum(rows[h - 1][t - 1:]) - sum(rows[h][t:]))
    return total


def _gh(rows, nu, h):
    size = len(rows)
    total = _cross(nu)
    for t in range(1, size + 1):
        if nu[t - 1]:
            total += nu[t - 1] * (sum(rows[h][:t]) - sum(rows[h - 1][:t - 1]))
    return total


def _fm(rows, k, m):
    return sum(rows[m - 1][k - 1:]) + sum(rows[m][k:])


def _gm(rows, k, m):
    return sum(rows[m][:k]) + sum(rows[m - 1][:k - 1])


def stat_fh(nu, a, h):
    """f_h(nu, A) of the upper multiplication formula for h != m."""
    return _fh(a.rows, tuple(nu), h)


def stat_gh(nu, a, h):
    """g_h(nu, A) of the lower multiplication formula for h != m."""
    return _gh(a.rows, tuple(nu), h)


def stat_fm(k, a):
    """f_m(e_k, A) = sum_{j>=k} a_mj + sum_{j>k} a_{m+1,j}."""
    return _fm(a.rows, k, a.shape.m)


def stat_gm(k, a):
    """g_m(e_k, A) = sum_{j<=k} a_{m+1,j} + sum_{j<k} a_mj."""
    return _gm(a.rows, k, a.shape.m)


# Enumeration


def _compositions(length, p, bound):
    if length == 0:
        if p == 0:
            yield ()
        return
    top = p if bound is None else min(p, bound[0])
    rest = None if bound is None else bound[1:]
    for first in range(top, -1, -1):
        for tail in _compositions(length - 1, p - first, rest):
            yield (first,) + tail


def compositions(length, p, bound=None):
    """List the compositions of p with the given number of parts.

    Same order and bound semantics as enumerate_compositions.
    """
    if p < 0:
        return []
    return list(_compositions(length, p,
                              None if bound is None else tuple(bound)))


def enumerate_compositions(shape, p, bound=None):
    """List the compositions of p with m+n parts.

    Args:
        shape (SuperShape): Fixes the number of parts
        p (int): The size
        bound (sequence of int): Optional componentwise upper bound

    Returns:
        list: Tuples in lexicographically decreasing order.
    """
    if p < 0:
        return []
    if bound is not None:
        bound = tuple(bound)
    return list(_compositions(shape.size, p, bound))


def _fill(shape, cells, index, remaining, cap, rows):
    if index == len(cells):
        if remaining is None or remaining == 0:
            yield SuperMatrix(shape, rows)
        return
    i, j, weight = cells[index]
    limit = 1 if shape.is_mixed(i, j) else cap
    if remaining is not None:
        limit = remaining if limit is None else min(limit, remaining)
    value = 0
    while limit is None or value <= limit:
        rows[i - 1][j - 1] = value
        rest = None if remaining is None else remaining - value * weight
        if rest is not None and rest < 0:
            break
        for matrix in _fill(shape, cells, index + 1, rest, cap, rows):
            yield matrix
        value += 1
    rows[i - 1][j - 1] = 0


def enumerate_upper(shape, norm_max=None, entry_max=None):
    """Yield the strictly upper valid matrices with norm and entry bounds.

    Mixed entries are capped at 1 regardless of entry_max.

    Raises:
        ValueError: Neither bound is given
    """
    if norm_max is None and entry_max is None:
        raise ValueError('enumerate_upper needs norm_max or entry_max')
    cells = [(i, j, (j - i) * (j - i + 1) // 2)
             for i in shape.indices() for j in shape.indices() if i < j]
    rows = [[0] * shape.size for _ in range(shape.size)]
    for matrix in _fill(shape, cells, 0, None, entry_max, rows) \
            if norm_max is None else \
            _bounded(shape, cells, norm_max, entry_max, rows):
        yield matrix


def _bounded(shape, cells, norm_max, entry_max, rows):
    # every norm from 0 to norm_max, each reached exactly once
    for total in range(norm_max + 1):
        for matrix in _fill(shape, cells, 0, total, entry_max, rows):
            yield matrix


def enumerate_level(shape, r):
    """Yield all valid matrices with entry sum r (the basis of S(m|n, r))."""
    cells = [(i, j, 1) for i in shape.indices() for j in shape.indices()]
    rows = [[0] * shape.size for _ in range(shape.size)]
    for matrix in _fill(shape, cells, 0, r, None, rows):
        yield matrix


# Compact text form

_TERM = re.compile(r'^(?:(\d+|[A-Za-z_]\w*?)\s*\*?\s*)?E\s*\[\s*(\d+)\s*,'
                   r'\s*(\d+)\s*\]$')


def format_matrix(a):
    """Render as a sum like `2E[1,2]+E[1,3]`; the zero matrix is `0`."""
    pieces = []
    for (i, j), value in a.nonzero_entries():
        prefix = '' if value == 1 else str(value)
        pieces.append('{}E[{},{}]'.format(prefix, i, j))
    return '+'.join(pieces) if pieces else '0'


def parse_matrix(text, shape, values=None):
    """Parse the compact text form.

    Args:
        text (str): For example `aE[1,2]+E[1,3]+fE[3,4]`; empty or `0` is the
            zero matrix
        shape (SuperShape): The shape
        values (dict): Integer substitutions for symbolic multiplicities

    Returns:
        SuperMatrix: The parsed matrix (validity is not checked).

    Raises:
        ValueError: Malformed term, unknown symbol or index out of range
    """
    values = values or {}
    entries = {}
    text = text.strip()
    if text in ('', '0'):
        return SuperMatrix.zero(shape)
    for raw in text.split('+'):
        term = raw.strip()
        match = _TERM.match(term)
        if not match:
            raise ValueError('cannot parse matrix term {!r}'.format(term))
        coefficient, i, j = match.groups()
        if coefficient is None:
            count = 1
        elif coefficient.isdigit():
            count = int(coefficient)
        elif coefficient in values:
            count = int(values[coefficient])
        else:
            raise ValueError('no value given for {!r} in {!r}'.format(
                coefficient, term))
        i, j = int(i), int(j)
        shape.check_index(i)
        shape.check_index(j)
        entries[(i, j)] = entries.get((i, j), 0) + count
    return SuperMatrix.from_entries(shape, entries)
