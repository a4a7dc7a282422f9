"""Quantum root vectors, PBW monomials and the defining relations of U+.

Root vectors are built by q-commutators of simple generators. The PBW
element E_A is the ordered product of their divided powers and must equal
A(0). serre_check verifies the commutation, Serre and odd relations as
operators on a span of basis elements.
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

from glmn_cb.cb_laurent import v_power, sym_int, sym_factorial
from glmn_cb.cb_matrices import SuperMatrix, enumerate_upper
from glmn_cb.uplus.cb_uplus import (AlgebraElement,
                                    left_mult_divided_E, part_for, mult,
                                    tau_transpose)

log = logging.getLogger(__name__)


def supercommutator(x, y, parity_x, parity_y, product=None):
    """Return [x, y] = xy - (-1)^(parity_x parity_y) yx.

    Args:
        x: Left element
        y: Right element
        parity_x (int): 0 for even, 1 for odd
        parity_y (int): 0 for even, 1 for odd
        product (callable): Multiplication; defaults to mult on U+ or U-
    """
    product = product or mult
    sign = -1 if parity_x * parity_y % 2 else 1
    return product(x, y) - product(y, x) * sign


def root_vector(shape, a, b, c=None):
    """Return the quantum root vector E_{a,b}.

    For a < b, E_{a,b} = E_{a,c}E_{c,b} - v_c^-1 E_{c,b}E_{a,c} with a < c < b;
    for a > b, E_{a,b} = E_{a,c}E_{c,b} - v_c E_{c,b}E_{a,c} with b < c < a.
    Adjacent indices give the generators themselves.

    Args:
        shape (SuperShape): The shape
        a (int): Row index
        b (int): Column index
        c (int): Intermediate index; defaults to a+1 (a < b) or a-1 (a > b)

    Raises:
        ValueError: a == b, an index out of range or c not strictly between
    """
    shape.check_index(a)
    shape.check_index(b)
    if a == b:
        raise ValueError('root vectors need a != b')
    if abs(a - b) == 1:
        return AlgebraElement.basis(SuperMatrix.unit(shape, a, b))
    if c is None:
        c = a + 1 if a < b else a - 1
    if not min(a, b) < c < max(a, b):
        raise ValueError('intermediate index {} is not between {} and '
                         '{}'.format(c, a, b))
    part = part_for(shape)
    key = (a, b, c)
    vector = part.root_vectors.get(key)
    if vector is None:
        left = root_vector(shape, a, c)
        right = root_vector(shape, c, b)
        exponent = -shape.v_sign(c) if a < b else shape.v_sign(c)
        vector = mult(left, right) - mult(right, left) * v_power(exponent)
        part.root_vectors[key] = vector
    return vector


def _divided_root_power(shape, i, j, p, x):
    vector = root_vector(shape, i, j)
    for _ in range(p):
        x = mult(vector, x)
    return x.exact_divide(sym_factorial(p))


def pbw_order(a):
    """Nonzero entries of A as ((i, j), value), by decreasing j then i."""
    return sorted(a.nonzero_entries(), key=lambda item: (-item[0][1],
                                                         -item[0][0]))


def pbw(a):
    """Return the PBW element E_A (or F_A for strictly lower A).

    Raises:
        ValueError: A is not strictly triangular, or an odd root vector
            carries a divided power above 1
    """
    if not a.is_upper():
        if not a.is_lower():
            raise ValueError('pbw needs a strictly triangular matrix, got '
                             '{}'.format(a))
        return tau_transpose(pbw(a.t))
    shape = a.shape
    for (i, j), value in a.nonzero_entries():
        if value > 1 and shape.is_mixed(i, j):
            raise ValueError('odd root vector E_{{{},{}}} has no divided '
                             'power {}'.format(i, j, value))
    x = AlgebraElement.identity(shape)
    for (i, j), value in reversed(pbw_order(a)):
        x = _divided_root_power(shape, i, j, value, x)
    return x


class RelationReport(object):
    """Outcome of a relation check (serre_check and the level-r checks).

    Attributes:
        shape: The checked shape
        bound: The bound of the test span (a norm, or a level r)
        checked: dict relation name -> number of basis vectors tested
        failures: list of dicts with relation, witness and residual
    """

    def __init__(self, shape, bound):
        self.shape = shape
        self.bound = bound
        self.checked = {}
        self.failures = []

    @property
    def passed(self):
        return not self.failures

    def record(self, relation, witness, residual):
        self.checked[relation] = self.checked.get(relation, 0) + 1
        if residual:
            log.debug('%s fails on %s: %s', relation, witness,
                      residual.to_text())
            self.failures.append({'relation': relation,
                                  'witness': witness.to_json(),
                                  'residual': residual.to_text()})

    def to_json(self):
        return {'m': self.shape.m, 'n': self.shape.n,
                'bound': self.bound, 'passed': self.passed,
                'checked': self.checked, 'failures': self.failures}


def _apply(x, *word):
    # word is read left to right, the rightmost generator acts first
    for h in reversed(word):
        x = left_mult_divided_E(h, 1, x)
    return x


def serre_check(shape, norm_bound=None):
    """Check the E-side relations on all A(0) with norm at most norm_bound.

    Relations: E_h E_k = E_k E_h for |h-k| > 1; the quantum Serre relation
    for h != m and k = h +- 1; E_m^2 = 0; and, when m, n >= 2, the odd
    relation [E_m, [E_{m-1}, [E_m, E_{m+1}]]] = 0 in expanded form.

    Returns:
        RelationReport: report.passed is True when nothing failed.
    """
    if norm_bound is None:
        norm_bound = part_for(shape).serre_norm_bound
    report = RelationReport(shape, norm_bound)
    size = shape.size
    m = shape.m
    two = sym_int(2)
    v = v_power(1)
    v_inv = v_power(-1)
    for a in enumerate_upper(shape, norm_max=norm_bound):
        x = AlgebraElement.basis(a)
        for h in range(1, size):
            for k in range(h + 2, size):
                report.record('commute E{}E{}'.format(h, k), a,
                              _apply(x, h, k) - _apply(x, k, h))
            if h == m:
                continue
            for k in (h - 1, h + 1):
                if 1 <= k < size:
                    residual = _apply(x, h, h, k) - \
                        _apply(x, h, k, h) * two + _apply(x, k, h, h)
                    report.record('serre E{}E{}'.format(h, k), a, residual)
        if 1 <= m < size:
            report.record('odd square E{}'.format(m), a, _apply(x, m, m))
        if m >= 2 and size - m >= 2:
            def y_of(z):
                return _apply(z, m - 1, m, m + 1) - \
                    _apply(z, m - 1, m + 1, m) * v - \
                    _apply(z, m, m + 1, m - 1) * v_inv + \
                    _apply(z, m + 1, m, m - 1)
            residual = _apply(y_of(x), m) + y_of(_apply(x, m))
            report.record('odd quartic', a, residual)
    log.debug('serre_check %s: %s', shape, report.checked)
    return report
