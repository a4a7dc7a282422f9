"""Bar involution, the basis Xi_A and PBW products at level r.

SchurLevel holds, for one (shape, r), the bar-invariant spanning family

    F_M = +- eta_r(m-_{A-}) eta_r(m+_{A+}) [diag(co(M))]

with A+- the strict upper and lower parts of M. Each F_M is [M] plus
terms lower in the row-and-column-preserving order. Bar acts by
conjugating coordinates in this family, and Xi_A is the triangular
bar-invariant solve against it.
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
import threading

from glmn_cb.cb_laurent import LaurentPolynomial, ZERO, ONE, antisym_solve
from glmn_cb.cb_matrices import (SuperMatrix, enumerate_compositions,
                                 enumerate_level, sign_bar, hooks, a_lambda,
                                 preceq_rc)
from glmn_cb.uplus.cb_uplus import (AlgebraElement, add_term, monomial_word,
                                    part_for)
from glmn_cb.uplus.cb_canonical import canonical
from glmn_cb.schur.cb_schur import (SchurElement, span_element, eta_r,
                                    left_mult_idempotent,
                                    right_mult_idempotent, apply_plus_word,
                                    apply_minus_word)

log = logging.getLogger(__name__)


class ClosureError(ValueError):
    """Raised when a spanning family element is not unitriangular."""


class SchurLevel(object):
    """Memoized bar involution and Xi basis of S(m|n, r).

    Attributes:
        shape: The SuperShape
        r: The level
        max_level: Largest level accepted (class wide; the CLI reads
            GLMN_CB_MAX_LEVEL)
    """

    max_level = 6

    _instances = {}
    _lock = threading.Lock()

    @classmethod
    def for_level(cls, shape, r):
        """Return the shared instance for (shape, r)."""
        level = cls._instances.get((shape, r))
        if level is None:
            with cls._lock:
                level = cls._instances.setdefault((shape, r), cls(shape, r))
        return level

    def __init__(self, shape, r):
        """Create the level.

        Raises:
            ValueError: r is negative or above max_level
        """
        if not 0 <= r <= self.max_level:
            raise ValueError('level {} outside 0..{} (raise max_level to '
                             'go further)'.format(r, self.max_level))
        self.shape = shape
        self.r = r
        self._family = {}
        self._leads = {}
        self._bars = {}
        self._xi = {}

    def basis(self):
        return list(enumerate_level(self.shape, self.r))

    def _check(self, x):
        if x.shape != self.shape or x.r != self.r:
            raise ValueError('element of {} level {} used in {} level '
                             '{}'.format(x.shape, x.r, self.shape, self.r))

    def family_element(self, matrix):
        """Return the spanning family element F_M.

        F_M is m_L m_U [diag co(M)] for the lower and upper parts L, U of M,
        scaled by its leading coefficient, which must be 1 or -1; that sign
        is kept for multiply.

        Raises:
            ValueError: M is invalid or not of level r
            ClosureError: F_M is not [M] plus lower terms
        """
        element = self._family.get(matrix)
        if element is not None:
            return element
        if not matrix.is_valid() or matrix.size() != self.r or \
                matrix.shape != self.shape:
            raise ValueError('{} is not a basis matrix of {} level '
                             '{}'.format(matrix, self.shape, self.r))
        upper = matrix.upper_part()
        lower = matrix.lower_part()
        element = SchurElement.basis(SuperMatrix.diag(self.shape,
                                                      matrix.co()))
        element = apply_plus_word(monomial_word(upper), element)
        element = apply_minus_word(monomial_word(lower.t), element)
        lead = element.coefficient(matrix)
        if lead not in (1, -1):
            raise ClosureError('family element of {} has leading coefficient '
                               '{}'.format(matrix, lead))
        if lead == -1:
            element = -element
        key = matrix.sort_key()
        for b in element.terms:
            if b != matrix and b.sort_key() >= key:
                raise ClosureError('family element of {} reaches {}'.format(
                    matrix, b))
        self._family[matrix] = element
        self._leads[matrix] = lead
        return element

    def family_coordinates(self, x):
        """Coordinates of x in the spanning family."""
        self._check(x)
        residual = dict(x.terms)
        coordinates = {}
        while residual:
            b = max(residual, key=SuperMatrix.sort_key)
            c = residual[b]
            coordinates[b] = c
            for d, t in self.family_element(b).terms.items():
                add_term(residual, d, -(c * t))
        return coordinates

    def _combine(self, coordinates, conjugate=False):
        terms = {}
        for b, c in coordinates.items():
            if conjugate:
                c = c.bar()
            for d, t in self.family_element(b).terms.items():
                add_term(terms, d, c * t)
        return SchurElement._trusted(self.shape, self.r, terms)

    def bar_basis(self, matrix):
        image = self._bars.get(matrix)
        if image is None:
            element = SchurElement._trusted(self.shape, self.r,
                                            {matrix: ONE})
            image = self._combine(self.family_coordinates(element), True)
            self._bars[matrix] = image
        return image

    def bar_schur(self, x):
        """Return the bar image of a level r element."""
        self._check(x)
        return self._combine(self.family_coordinates(x), True)

    def closure(self, matrix):
        """All matrices reachable through family element supports, sorted
        by increasing sort key."""
        seen = {matrix}
        stack = [matrix]
        while stack:
            b = stack.pop()
            for c in self.family_element(b).terms:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return sorted(seen, key=SuperMatrix.sort_key)

    def canonical_xi(self, matrix):
        """Return Xi_M: bar invariant, [M] plus v^-1 Z[v^-1] lower terms.

        Raises:
            NotBarAntisymmetricError: The bar images are inconsistent
        """
        xi = self._xi.get(matrix)
        if xi is not None:
            return xi
        basis = self.closure(matrix)
        solved = {matrix: ONE}
        for d in reversed(basis):
            if d == matrix:
                continue
            r = ZERO
            for b, p in solved.items():
                beta = self.bar_basis(b).coefficient(d)
                if beta:
                    r = r + beta * p.bar()
            p = antisym_solve(r)
            if p:
                solved[d] = p
        xi = SchurElement._trusted(self.shape, self.r, solved)
        self._xi[matrix] = xi
        log.debug('Xi of %s: %d terms over a closure of %d', matrix,
                  len(solved), len(basis))
        return xi

    def multiply(self, x, y):
        """Return the product x y in S(m|n, r)."""
        self._check(x)
        self._check(y)
        result = SchurElement.zero(self.shape, self.r)
        for b, c in self.family_coordinates(x).items():
            z = left_mult_idempotent(b.co(), y)
            z = apply_plus_word(monomial_word(b.upper_part()), z)
            z = apply_minus_word(monomial_word(b.lower_part().t), z)
            self.family_element(b)
            result = result + z * (c * self._leads[b])
        return result


def level(shape, r):
    return SchurLevel.for_level(shape, r)


def bar_schur(x):
    """Return the bar image of x in S(m|n, r)."""
    return level(x.shape, x.r).bar_schur(x)


def canonical_xi(matrix, r=None):
    """Return Xi_A for a basis matrix of level r (default |A|).

    Raises:
        ValueError: r differs from |A|
    """
    if r is None:
        r = matrix.size()
    if r != matrix.size():
        raise ValueError('Xi_{} lives at level {}, not {}'.format(
            matrix, matrix.size(), r))
    return level(matrix.shape, r).canonical_xi(matrix)


def multiply(x, y):
    """Return x y in S(m|n, r)."""
    return level(x.shape, x.r).multiply(x, y)


def pbw_product(a, lam, r):
    """Return A-(0, r) [diag(lambda)] A+(0, r).

    Args:
        a (SuperMatrix): A matrix with zero diagonal
        lam (sequence of int): A composition of r
        r (int): The level

    Raises:
        ValueError: A has a nonzero diagonal or lambda is not a composition
            of r
    """
    if not a.is_off_diagonal():
        raise ValueError('pbw_product needs a zero diagonal, got {}'.format(a))
    shape = a.shape
    zero = (0,) * shape.size
    y = left_mult_idempotent(lam, span_element(a.upper_part(), zero, r))
    lower = a.lower_part()
    part = part_for(shape)
    result = SchurElement.zero(shape, r)
    for b, c in part.monomial_coordinates(
            AlgebraElement.basis(lower.t)).items():
        result = result + apply_minus_word(monomial_word(b), y) * c
    return result


def check_pbw_product(a, lam, r):
    """Check the leading term of pbw_product.

    With lambda >= hooks(A) the product must be (-1)^sign_bar(A_lambda)
    [A_lambda] plus terms strictly below A_lambda with the same margins;
    otherwise no term may have off-diagonal part A.

    Returns:
        list: Problem descriptions; empty when the check passes.
    """
    product = pbw_product(a, lam, r)
    lam = tuple(lam)
    problems = []
    if all(l >= h for l, h in zip(lam, hooks(a))):
        lead = a_lambda(a, lam)
        expected = LaurentPolynomial.constant((-1) ** sign_bar(lead))
        if product.coefficient(lead) != expected:
            problems.append('coefficient of [{}] is {}, expected {}'.format(
                lead, product.coefficient(lead), expected))
        for b in product.terms:
            if b != lead and not preceq_rc(b, lead):
                problems.append('[{}] is not below [{}]'.format(b, lead))
    else:
        for b in product.terms:
            if b.off_diagonal() == a:
                problems.append('[{}] appears although {} is not >= '
                                '{}'.format(b, lam, hooks(a)))
    return problems


class XiSumReport(object):
    """Outcome of verify_thm54.

    Attributes:
        target: The strictly lower matrix A
        r: The level
        checks: list of dicts, one per lambda >= hooks(A)
        sum_ok: Whether c_A equals the signed sum of the Xi elements
    """

    def __init__(self, target, r):
        self.target = target
        self.r = r
        self.checks = []
        self.sum_ok = True

    @property
    def passed(self):
        return self.sum_ok and all(check['ok'] for check in self.checks)

    def to_json(self):
        return {'target': self.target.to_json(), 'r': self.r,
                'passed': self.passed, 'sum_ok': self.sum_ok,
                'checks': self.checks}


def verify_thm54(a, r):
    """Compare eta_r(C_A) [diag(lambda)] with Xi_{A_lambda} for lower A.

    For each lambda >= hooks(A), (-1)^sign_bar(A_lambda) eta_r(C_A)
    [diag(lambda)] must equal Xi_{A_lambda}, and eta_r(C_A) must be the
    signed sum of all of them.

    Raises:
        ValueError: A is not strictly lower or |A| > r
    """
    if not a.is_lower():
        raise ValueError('verify_thm54 needs a strictly lower matrix, got '
                         '{}'.format(a))
    if a.size() > r:
        raise ValueError('|{}| exceeds the level {}'.format(a, r))
    report = XiSumReport(a, r)
    c_a = eta_r(canonical(a).element(), r)
    hook = hooks(a)
    total = SchurElement.zero(a.shape, r)
    for lam in enumerate_compositions(a.shape, r):
        if any(l < h for l, h in zip(lam, hook)):
            continue
        matrix = a_lambda(a, lam)
        sign = (-1) ** sign_bar(matrix)
        left = right_mult_idempotent(c_a, lam) * sign
        xi = canonical_xi(matrix, r)
        total = total + xi * sign
        check = {'lambda': list(lam), 'ok': left == xi}
        if left != xi:
            check['left'] = left.to_text()
            check['xi'] = xi.to_text()
        report.checks.append(check)
    if total != c_a:
        report.sum_ok = False
        log.debug('verify_thm54 %s r=%d: sum %s vs %s', a, r, total.to_text(),
                  c_a.to_text())
    return report
