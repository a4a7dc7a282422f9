"""Hook partitions and semistandard supertableaux.

Entries 1..m are even and m+1..m+n are odd. A filling is semistandard when
rows and columns weakly increase, no even entry repeats down a column and
no odd entry repeats along a row. Partitions with pi_{m+1} <= n (the
(m|n) hook) are exactly those with such a filling.

Basic Usage::

    shape = SuperShape(2, 1)
    pi = SuperPartition((2, 1), shape)
    print(t_pi(pi).rows, pi_tilde(pi))
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

from glmn_cb.cb_matrices import enumerate_compositions

log = logging.getLogger(__name__)


def partitions(r, largest=None):
    """Yield the partitions of r in decreasing lexicographic order."""
    if largest is None:
        largest = r
    if r == 0:
        yield ()
        return
    for first in range(min(r, largest), 0, -1):
        for rest in partitions(r - first, first):
            yield (first,) + rest


class SuperPartition(object):
    """A partition read against an (m|n) shape.

    Attributes:
        parts: Tuple of weakly decreasing positive integers
        shape: The SuperShape
    """

    def __init__(self, parts, shape):
        """Create a partition.

        Raises:
            ValueError: parts is not weakly decreasing and positive
        """
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts) or \
                any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError('{} is not a partition'.format(parts))
        self.parts = parts
        self.shape = shape

    @property
    def size(self):
        return sum(self.parts)

    def part(self, i):
        """The i-th part (1-based), 0 past the end."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def in_hook(self):
        """True iff pi_{m+1} <= n."""
        return self.part(self.shape.m + 1) <= self.shape.n

    def conjugate(self):
        return SuperPartition([sum(1 for x in self.parts if x > c)
                               for c in range(self.part(1))], self.shape)

    def cells(self):
        """Cells (row, column), 0-based, in row-major order."""
        return [(i, j) for i, x in enumerate(self.parts) for j in range(x)]

    def __eq__(self, other):
        return isinstance(other, SuperPartition) and \
            self.parts == other.parts and self.shape == other.shape

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.parts, self.shape))

    def __repr__(self):
        return 'SuperPartition({}, {})'.format(self.parts, self.shape)


class SuperTableau(object):
    """A filling of a SuperPartition with entries in 1..m+n.

    Attributes:
        partition: The SuperPartition
        rows: Tuple of row tuples
    """

    def __init__(self, partition, rows):
        rows = tuple(tuple(row) for row in rows)
        if tuple(len(row) for row in rows) != partition.parts:
            raise ValueError('filling {} does not have shape {}'.format(
                rows, partition.parts))
        self.partition = partition
        self.rows = rows

    def content(self):
        """Multiplicity of each entry 1..m+n."""
        counts = [0] * self.partition.shape.size
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def is_semistandard(self):
        m = self.partition.shape.m
        for row in self.rows:
            for a, b in zip(row, row[1:]):
                if a > b or (a == b and a > m):
                    return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            for a, b in zip(upper, lower):
                if a > b or (a == b and a <= m):
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, SuperTableau) and \
            self.partition == other.partition and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.partition, self.rows))

    def __repr__(self):
        return 'SuperTableau({})'.format(self.rows)


def _fillings(partition, content=None):
    shape = partition.shape
    m = shape.m
    size = shape.size
    cells = partition.cells()
    grid = [[0] * x for x in partition.parts]
    remaining = None if content is None else list(content)

    def backtrack(index):
        if index == len(cells):
            yield SuperTableau(partition, grid)
            return
        i, j = cells[index]
        low = 1
        left = grid[i][j - 1] if j else None
        up = grid[i - 1][j] if i else None
        if left is not None:
            low = max(low, left + 1 if left > m else left)
        if up is not None:
            low = max(low, up + 1 if up <= m else up)
        for value in range(low, size + 1):
            if remaining is not None:
                if not remaining[value - 1]:
                    continue
                remaining[value - 1] -= 1
            grid[i][j] = value
            for tableau in backtrack(index + 1):
                yield tableau
            grid[i][j] = 0
            if remaining is not None:
                remaining[value - 1] += 1

    return backtrack(0)


def enumerate_ssyt(partition, content):
    """List the semistandard supertableaux of a shape and content.

    Args:
        partition (SuperPartition): The shape pi
        content (sequence of int): The content mu, m+n entries

    Returns:
        list: SuperTableau objects in lexicographic row-reading order.

    Raises:
        ValueError: |mu| != |pi| or mu has the wrong length
    """
    content = tuple(content)
    if len(content) != partition.shape.size:
        raise ValueError('content needs {} entries, got {}'.format(
            partition.shape.size, content))
    if sum(content) != partition.size:
        raise ValueError('content {} does not have size {}'.format(
            content, partition.size))
    return list(_fillings(partition, content))


def _check_hook(partition):
    if not partition.in_hook:
        raise ValueError('{} is outside the {} hook'.format(
            partition.parts, partition.shape))


def pi_tilde(partition):
    """Return (pi_1, ..., pi_m | conjugate of (pi_{m+1}, ...)).

    Raises:
        ValueError: pi is outside the hook
    """
    _check_hook(partition)
    m = partition.shape.m
    n = partition.shape.n
    even = tuple(partition.part(i) for i in range(1, m + 1))
    tail = partition.parts[m:]
    odd = tuple(sum(1 for x in tail if x > c) for c in range(n))
    return even + odd


def t_pi(partition):
    """Return the unique semistandard tableau of shape pi and content pi~.

    Raises:
        ValueError: pi is outside the hook, or the tableau is not unique
    """
    found = enumerate_ssyt(partition, pi_tilde(partition))
    if len(found) != 1:
        raise ValueError('{} tableaux of shape {} and content {}'.format(
            len(found), partition.parts, pi_tilde(partition)))
    return found[0]


def dominates(lam, mu):
    """Return True if every partial sum of lam is >= that of mu.

    Raises:
        ValueError: The sizes differ
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError('dominance needs equal sizes: {} vs {}'.format(
            lam, mu))
    length = max(len(lam), len(mu))
    lam = lam + (0,) * (length - len(lam))
    mu = mu + (0,) * (length - len(mu))
    left = right = 0
    for a, b in zip(lam, mu):
        left += a
        right += b
        if left < right:
            return False
    return True


def count_tableaux(partition):
    """Count semistandard supertableaux of shape pi over all contents.

    Returns:
        tuple: (total, breakdown) where breakdown maps each content with at
        least one tableau to its count.
    """
    breakdown = {}
    for tableau in _fillings(partition):
        content = tableau.content()
        breakdown[content] = breakdown.get(content, 0) + 1
    total = sum(breakdown.values())
    log.debug('%s: %d tableaux over %d contents', partition, total,
              len(breakdown))
    return total, breakdown


def hook_partitions(shape, r):
    """The partitions of r with pi_{m+1} <= n."""
    return [p for p in (SuperPartition(parts, shape)
                        for parts in partitions(r)) if p.in_hook]


def contents(shape, r):
    """All contents of size r for the shape."""
    return enumerate_compositions(shape, r)
