"""Canonical basis elements C_A of U+ and U-.

canonical() runs the triangular bar-invariance solve over the transition
closure of A. du_algorithm() runs the iterative monomial correction, which
subtracts bar-invariant multiples of lower monomials, and also records
which multiples it used.

Basic Usage::

    record = canonical(parse_matrix('E[1,3]', SuperShape(2, 1)))
    print(record.to_text())
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

from glmn_cb.cb_laurent import (LaurentPolynomial, ZERO, antisym_solve,
                                y_decompose)
from glmn_cb.cb_matrices import SuperMatrix, preceq
from glmn_cb.uplus.cb_uplus import (AlgebraElement, PLUS, MINUS, add_term,
                                    part_for, bar_element, terms_to_json,
                                    terms_from_json)

log = logging.getLogger(__name__)


def _sorted_items(terms):
    return sorted(terms.items(), key=lambda item: item[0].sort_key(),
                  reverse=True)


def _coerced(terms):
    return {b: LaurentPolynomial.coerce(c) for b, c in terms.items()}


def latex_coefficient(c):
    """Render c in bracket notation when it is +-v^e [k], plainly otherwise."""
    exponents = sorted(c.terms)
    values = set(c.terms.values())
    if len(exponents) > 1 and len(values) == 1 and values.pop() in (1, -1) \
            and all(b - a == 2 for a, b in zip(exponents, exponents[1:])):
        sign = '-' if c.terms[exponents[0]] < 0 else ''
        center = (exponents[0] + exponents[-1]) // 2
        shift = '' if center == 0 else 'v^{{{}}}'.format(center)
        return '{}{}[{}]'.format(sign, shift, len(exponents))
    return c.to_latex()


class CanonicalRecord(object):
    """The canonical basis element C_A with its expansion data.

    Attributes:
        target: The matrix A
        side: 'plus' or 'minus'
        expansion: dict B -> p_{B,A}, with p_{A,A} = 1
        witness: dict B -> coefficient y_B of the monomial correction
            C_A = m_A - sum_B y_B m_B, or None when not computed
        y_parity_failures: Matrices where a strict bar-invariant split of the
            correction coefficient did not exist
    """

    def __init__(self, target, expansion, witness=None, side=None,
                 y_parity_failures=()):
        self.target = target
        self.side = side or (PLUS if target.is_upper() else MINUS)
        self.expansion = _coerced(expansion)
        self.witness = None if witness is None else _coerced(witness)
        self.y_parity_failures = list(y_parity_failures)

    @property
    def shape(self):
        return self.target.shape

    def element(self):
        """Return C_A as an AlgebraElement."""
        return AlgebraElement(self.shape, self.side, self.expansion)

    def transposed(self):
        """Apply tau: the record of the transposed target on the other side."""
        side = MINUS if self.side == PLUS else PLUS
        witness = None if self.witness is None else \
            {b.t: c for b, c in self.witness.items()}
        return CanonicalRecord(self.target.t,
                               {b.t: c for b, c in self.expansion.items()},
                               witness, side,
                               [b.t for b in self.y_parity_failures])

    def __eq__(self, other):
        return isinstance(other, CanonicalRecord) and \
            self.target == other.target and self.side == other.side and \
            self.expansion == other.expansion and \
            self.witness == other.witness

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'CanonicalRecord({}, {})'.format(self.target, self.to_text())

    def to_text(self):
        return ' + '.join('({})*({})'.format(c, b)
                          for b, c in _sorted_items(self.expansion))

    def to_latex(self):
        pieces = []
        for b, c in _sorted_items(self.expansion):
            scalar = '' if c == 1 else latex_coefficient(c)
            pieces.append('{}{}(\\mathbf{{0}})'.format(scalar, b.to_latex()))
        return 'C_{{{}}} = {}'.format(self.target.to_latex(),
                                      ' + '.join(pieces))

    def to_json(self):
        data = {'m': self.shape.m, 'n': self.shape.n, 'side': self.side,
                'target': self.target.to_json(),
                'expansion': terms_to_json(_sorted_items(self.expansion)),
                'witness': None}
        if self.witness is not None:
            data['witness'] = terms_to_json(_sorted_items(self.witness))
        if self.y_parity_failures:
            data['y_parity_failures'] = [b.to_json()
                                         for b in self.y_parity_failures]
        return data

    @classmethod
    def from_json(cls, data):
        """Inverse of to_json.

        Raises:
            ValueError: Malformed record
        """
        try:
            witness = data.get('witness')
            return cls(SuperMatrix.from_json(data['target']),
                       terms_from_json(data['expansion']),
                       None if witness is None else terms_from_json(witness),
                       data['side'],
                       [SuperMatrix.from_json(b)
                        for b in data.get('y_parity_failures', [])])
        except (KeyError, TypeError, AttributeError) as error:
            raise ValueError('bad canonical record: {}'.format(error))


def _check_target(a):
    if not isinstance(a, SuperMatrix):
        raise TypeError('expected a SuperMatrix, got {!r}'.format(a))
    if not a.is_valid():
        raise ValueError('invalid matrix {} (mixed entry above 1)'.format(a))
    if not (a.is_upper() or a.is_lower()):
        raise ValueError('canonical basis elements are indexed by strictly '
                         'upper or strictly lower matrices, got {}'.format(a))


def canonical(a):
    """Return the canonical basis element C_A.

    Args:
        a (SuperMatrix): Strictly upper (U+) or strictly lower (U-) and valid

    Returns:
        CanonicalRecord: The expansion sum_B p_{B,A} B(0).

    Raises:
        ValueError: Bad target
        NotBarAntisymmetricError: The bar images are inconsistent
    """
    _check_target(a)
    if not a.is_upper():
        return canonical(a.t).transposed()
    part = part_for(a.shape)
    record = part.records.get(a)
    if record is not None:
        return record
    basis, _ = part.transition_closure(a)
    solved = {a: LaurentPolynomial.constant(1)}
    for d in reversed(basis):
        if d == a:
            continue
        r = ZERO
        for b, p in solved.items():
            beta = part.bar_basis(b).coefficient(d)
            if beta:
                r = r + beta * p.bar()
        p = antisym_solve(r)
        if p:
            solved[d] = p
    record = CanonicalRecord(a, solved)
    part.records[a] = record
    log.debug('canonical %s: %d terms over a closure of %d', a, len(solved),
              len(basis))
    return record


def _not_negative(c):
    return any(k >= 0 for k in c.terms)


def du_algorithm(a, strict=False):
    """Build C_A by correcting m_A with bar-invariant multiples of monomials.

    The largest support matrix B != A whose coefficient is not in
    v^-1 Z[v^-1] is fixed by subtracting gY m_B, where gY is the
    bar-invariant part of its coefficient, until none is left.

    Args:
        a (SuperMatrix): Strictly upper or strictly lower valid matrix
        strict (bool): If set, a coefficient with an odd constant term (no
            split of the form h + bar(h)) stops the correction and the
            result of canonical() is returned without a witness

    Returns:
        CanonicalRecord: Expansion, witness and any parity failures.
    """
    _check_target(a)
    if not a.is_upper():
        return du_algorithm(a.t, strict).transposed()
    part = part_for(a.shape)
    terms = dict(part.monomial_expansion(a).terms)
    witness = {}
    failures = []
    while True:
        candidates = [b for b, c in terms.items()
                      if b != a and _not_negative(c)]
        if not candidates:
            break
        b = max(candidates, key=SuperMatrix.sort_key)
        g = terms[b]
        if g.constant_term % 2:
            failures.append(b)
            log.debug('du_algorithm %s: coefficient %s at %s has an odd '
                      'constant term', a, g, b)
            if strict:
                log.warning('du_algorithm %s: stopped at the odd constant '
                            'term at %s', a, b)
                fallback = canonical(a)
                return CanonicalRecord(a, fallback.expansion, None, PLUS,
                                       failures)
        g_y = y_decompose(g, strict=False)[0]
        add_term(witness, b, g_y)
        for d, t in part.monomial_expansion(b).terms.items():
            add_term(terms, d, -(g_y * t))
    if failures:
        log.info('du_algorithm %s: odd constant terms kept whole at %s', a,
                 ', '.join(str(b) for b in failures))
    return CanonicalRecord(a, terms, witness, PLUS, failures)


def check_canonical(record):
    """Test the defining properties of a canonical record.

    Returns:
        list: Descriptions of violated properties; empty when all hold.
    """
    problems = []
    target = record.target
    if record.expansion.get(target) != 1:
        problems.append('leading coefficient of {} is not 1'.format(target))
    for b, c in record.expansion.items():
        if b == target:
            continue
        if _not_negative(c):
            problems.append('coefficient {} at {} is not in v^-1 Z[v^-1]'
                            .format(c, b))
        if not preceq(b, target):
            problems.append('{} does not precede {}'.format(b, target))
    element = record.element()
    if bar_element(element) != element:
        problems.append('C_{} is not bar invariant'.format(target))
    return problems