"""Level-independent expansion of E_h(0, r) A(j, r).

For a zero-diagonal A the product E_h(0, r) A(j, r) is a combination of
spanning elements B(j', r) whose coefficients do not depend on r. This
module computes that combination once, symbolically in the diagonal, as
numerators over the common denominator 1 - v^t (t = -2 for h <= m and
t = 2 otherwise), and checks it against the level r formulas.
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

from glmn_cb.cb_laurent import ONE, v_power, gauss_int
from glmn_cb.cb_matrices import SuperMatrix, _bar_parity, _fh, _fm
from glmn_cb.uplus.cb_uplus import add_term
from glmn_cb.schur.cb_schur import (SchurElement, odd_sign_sum, span_element,
                                    left_mult_E)

log = logging.getLogger(__name__)


def _with_diagonal(rows, mu):
    rows = [list(row) for row in rows]
    for i, x in enumerate(mu):
        rows[i][i] += x
    return rows


def _shifted_rows(rows, h, k):
    rows = [list(row) for row in rows]
    rows[h - 1][k - 1] += 1
    rows[h][k - 1] -= 1
    return rows


def _unit(size, i):
    return tuple(1 if t == i else 0 for t in range(size))


class StableExpansion(object):
    """E_h(0, r) A(j, r) = sum (numerator / denominator) B(j', r).

    Attributes:
        target: The zero-diagonal matrix A
        j: The weight vector of A(j, r)
        h: The generator index
        denominator: 1 - v^t
        terms: dict (B, j') -> numerator
        obstructions: Terms whose sign depends on the diagonal, which the
            family B(j', r) cannot express
    """

    def __init__(self, target, j, h, denominator):
        self.target = target
        self.j = tuple(j)
        self.h = h
        self.denominator = denominator
        self.terms = {}
        self.obstructions = []

    def evaluate(self, r):
        """Return the expansion at level r as a SchurElement."""
        total = SchurElement.zero(self.target.shape, r)
        for (b, j), numerator in self.terms.items():
            total = total + span_element(b, j, r) * numerator
        return total.exact_divide(self.denominator)

    def items(self):
        return sorted(self.terms.items(),
                      key=lambda item: (item[0][0].sort_key(), item[0][1]),
                      reverse=True)

    def to_json(self):
        return {'target': self.target.to_json(), 'j': list(self.j),
                'h': self.h, 'denominator': self.denominator.to_json(),
                'terms': [{'matrix': b.to_json(), 'j': list(j),
                           'numerator': c.to_json()}
                          for (b, j), c in self.items()],
                'obstructions': self.obstructions}


def stable_expansion(a, j, h):
    """Compute the level-independent expansion of E_h(0, r) A(j, r).

    Args:
        a (SuperMatrix): A valid matrix with zero diagonal
        j (sequence of int): Weight vector
        h (int): Generator index, 1 <= h < m+n

    Returns:
        StableExpansion: The expansion.

    Raises:
        ValueError: A has a nonzero diagonal or is invalid, or h is out of
            range
    """
    shape = a.shape
    size = shape.size
    m = shape.m
    if not a.is_off_diagonal() or not a.is_valid():
        raise ValueError('stable expansions need a valid zero-diagonal '
                         'matrix, got {}'.format(a))
    if not 1 <= h < size:
        raise ValueError('generator index {} out of range for {}'.format(
            h, shape))
    j = tuple(j)
    s = shape.v_sign(h)
    t = -2 * s
    denominator = ONE - v_power(t)
    expansion = StableExpansion(a, j, h, denominator)
    rows = a.rows
    zero = (0,) * size
    for k in range(1, size + 1):
        if k != h + 1 and rows[h][k - 1] < 1:
            continue
        off = _shifted_rows(rows, h, k)
        for i in range(size):
            off[i][i] = 0
        b = SuperMatrix(shape, off)
        if not b.is_valid():
            log.debug('stable E_%d on %s: dropped invalid %s', h, a, b)
            continue
        shift = _unit(size, h - 1) if k == h else \
            tuple(-x for x in _unit(size, h)) if k == h + 1 else zero

        def exponent(mu):
            full = _with_diagonal(rows, mu)
            stat = _fm(full, k, m) if h == m else \
                _fh(full, _unit(size, k - 1), h)
            return shape.dot(mu, j) + s * stat

        def parity(mu):
            full = _with_diagonal(rows, mu)
            total = _bar_parity(full, m) + \
                _bar_parity(_shifted_rows(full, h, k), m)
            if h == m:
                total += odd_sign_sum(full, k, m)
            return total % 2

        base = exponent(zero)
        slopes = [exponent(_unit(size, i)) - base for i in range(size)]
        flips = [(parity(_unit(size, i)) - parity(zero)) % 2
                 for i in range(size)]
        if any(flips):
            expansion.obstructions.append({'matrix': b.to_json(), 'k': k,
                                           'parity': flips})
            log.debug('stable E_%d on %s: sign of %s depends on the '
                      'diagonal', h, a, b)
            continue
        sign = -1 if parity(zero) else 1
        if k == h:
            # [[mu_h + 1]] = (1 - v^(t (mu_h + 1))) / (1 - v^t)
            pieces = [(sign, 0, 0), (-sign, t, t)]
        else:
            bracket = gauss_int(rows[h - 1][k - 1] + 1, t) * denominator
            pieces = [(bracket * sign, 0, 0)]
        for scalar, offset, extra in pieces:
            slope = list(slopes)
            slope[h - 1] += extra
            constant = base + offset - sum(c * x for c, x in
                                           zip(slope, shift))
            weight = tuple(c if i < m else -c for i, c in enumerate(slope))
            add_term(expansion.terms, (b, weight),
                     v_power(constant) * scalar)
    return expansion


class StabilizationReport(object):
    """Outcome of verify_stabilization.

    Attributes:
        expansion: The StableExpansion
        levels: dict r -> True when the expansion matches the level r product
    """

    def __init__(self, expansion):
        self.expansion = expansion
        self.levels = {}

    @property
    def passed(self):
        return not self.expansion.obstructions and all(self.levels.values())

    def to_json(self):
        return {'passed': self.passed, 'expansion': self.expansion.to_json(),
                'levels': {str(r): ok for r, ok in sorted(self.levels.items())}}


def verify_stabilization(a, j, h, r_list):
    """Check that one expansion reproduces E_h(0, r) A(j, r) for every r.

    Raises:
        ValueError: Some r is below |A| + 1
    """
    r_list = list(r_list)
    for r in r_list:
        if r < a.size() + 1:
            raise ValueError('level {} is below |A| + 1 = {}'.format(
                r, a.size() + 1))
    expansion = stable_expansion(a, j, h)
    report = StabilizationReport(expansion)
    for r in r_list:
        direct = left_mult_E(h, 1, r, span_element(a, j, r))
        report.levels[r] = direct == expansion.evaluate(r)
        if not report.levels[r]:
            log.debug('stabilization of %s, h=%d fails at r=%d', a, h, r)
    return report
