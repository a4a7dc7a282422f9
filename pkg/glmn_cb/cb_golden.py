"""Known canonical bases of U+(gl_{2|1}) and U+(gl_{2|2}) as checkable data.

Each GoldenCase carries a target matrix, the expected expansion
C_A = sum_B p_{B,A} B(0) and the expected monomial form
C_A = sum_k c_k m_k with explicit generator words. check_case compares both
against canonical() and du_algorithm().

gl(2|2) matrices are written [a b d; c e; f], that is
aE[1,2] + bE[1,3] + dE[1,4] + cE[2,3] + eE[2,4] + fE[3,4].

Basic Usage::

    report = verify_gl22(a_max=2, f_max=2)
    print(report.passed, report.to_json())
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
import functools
import logging

from glmn_cb.cb_laurent import LaurentPolynomial, ONE, v_power, sym_int
from glmn_cb.cb_matrices import SuperShape, SuperMatrix
from glmn_cb.uplus.cb_uplus import Factor, MonomialWord, eval_word
from glmn_cb.uplus.cb_canonical import canonical, du_algorithm

log = logging.getLogger(__name__)

GL21 = SuperShape(2, 1)
GL22 = SuperShape(2, 2)

GoldenCase = collections.namedtuple(
    'GoldenCase', ['label', 'target', 'expansion', 'monomials'])


def _v(k):
    return v_power(k)


def _word(shape, *factors):
    # E^(0) factors are dropped
    return MonomialWord(shape, [Factor(h, p) for h, p in factors if p])


def _m21(a, b, c):
    return SuperMatrix.from_entries(GL21, {(1, 2): a, (1, 3): b, (2, 3): c})


def _m22(a, b, d, c, e, f):
    return SuperMatrix.from_entries(GL22, {(1, 2): a, (1, 3): b, (1, 4): d,
                                           (2, 3): c, (2, 4): e, (3, 4): f})


def gl21_cases(a):
    """The four families of U+(gl_{2|1}) canonical elements at one a."""
    w = functools.partial(_word, GL21)
    return [
        GoldenCase('E1^(a)', _m21(a, 0, 0), {_m21(a, 0, 0): ONE},
                   [(ONE, w((1, a)))]),
        GoldenCase('E2 E1^(a)', _m21(a, 0, 1), {_m21(a, 0, 1): ONE},
                   [(ONE, w((2, 1), (1, a)))]),
        GoldenCase('E1 E2 E1^(a)', _m21(a, 1, 0),
                   {_m21(a, 1, 0): ONE, _m21(a + 1, 0, 1): _v(-a - 1)},
                   [(ONE, w((1, 1), (2, 1), (1, a))),
                    (-sym_int(a), w((2, 1), (1, a + 1)))]),
        GoldenCase('E2 E1 E2 E1^(a)', _m21(a, 1, 1), {_m21(a, 1, 1): ONE},
                   [(ONE, w((2, 1), (1, 1), (2, 1), (1, a)))]),
    ]


def _branch(a, f):
    """Correction term shared by the three-way split on a against f."""
    if a <= f:
        return 'a', sym_int(f - a + 1)
    if f == a - 1:
        return 'b', LaurentPolynomial()
    return 'c', -sym_int(a - f - 1)


def gl22_cases(a, f):
    """The canonical elements of U+(gl_{2|2}) with corner entries a and f.

    One case is returned for each of the fifteen patterns of the 0/1 block;
    the a-dependent cases pick their branch from a and f.
    """
    w = functools.partial(_word, GL22)
    A = _m22
    branch, extra = _branch(a, f)
    twist = 2 * sym_int(a) * sym_int(f + 2)
    cases = [
        GoldenCase('(0)', A(a, 0, 0, 0, 0, f), {A(a, 0, 0, 0, 0, f): ONE},
                   [(ONE, w((3, f), (1, a)))]),
        GoldenCase('(1)', A(a, 0, 0, 1, 0, f), {A(a, 0, 0, 1, 0, f): ONE},
                   [(ONE, w((3, f), (2, 1), (1, a)))]),
        GoldenCase('(2)', A(a, 1, 0, 0, 0, f),
                   {A(a, 1, 0, 0, 0, f): ONE,
                    A(a + 1, 0, 0, 1, 0, f): _v(-a - 1)},
                   [(ONE, w((3, f), (1, 1), (2, 1), (1, a))),
                    (-sym_int(a), w((3, f), (2, 1), (1, a + 1)))]),
        GoldenCase('(3)', A(a, 0, 0, 0, 1, f),
                   {A(a, 0, 0, 0, 1, f): ONE,
                    A(a, 0, 0, 1, 0, f + 1): -_v(-f - 1)},
                   [(ONE, w((3, f), (2, 1), (3, 1), (1, a))),
                    (-sym_int(f + 2), w((3, f + 1), (2, 1), (1, a)))]),
        GoldenCase('(4{})'.format(branch), A(a, 0, 1, 0, 0, f),
                   {A(a, 0, 1, 0, 0, f): ONE,
                    A(a + 1, 0, 0, 0, 1, f): _v(-a - 1),
                    A(a, 1, 0, 0, 0, f + 1): -_v(-f - 1),
                    A(a + 1, 0, 0, 1, 0, f + 1): -_v(-f - a - 2)},
                   [(ONE, w((3, f), (1, 1), (2, 1), (3, 1), (1, a))),
                    (-sym_int(a), w((3, f), (2, 1), (3, 1), (1, a + 1))),
                    (-sym_int(f + 2), w((3, f + 1), (1, 1), (2, 1), (1, a))),
                    (twist + extra - sym_int(a + 1) * sym_int(f + 1),
                     w((3, f + 1), (2, 1), (1, a + 1)))]),
        GoldenCase('(5)', A(a, 1, 0, 1, 0, f), {A(a, 1, 0, 1, 0, f): ONE},
                   [(ONE, w((3, f), (2, 1), (1, 1), (2, 1), (1, a)))]),
        GoldenCase('(6)', A(a, 0, 0, 1, 1, f), {A(a, 0, 0, 1, 1, f): ONE},
                   [(ONE, w((3, f), (2, 1), (3, 1), (2, 1), (1, a)))]),
        GoldenCase('(7)', A(a, 1, 0, 0, 1, f),
                   {A(a, 1, 0, 0, 1, f): ONE,
                    A(a + 1, 0, 0, 1, 1, f): _v(-a - 1),
                    A(a, 1, 0, 1, 0, f + 1): -_v(-f - 1)},
                   [(ONE, w((3, f), (2, 1), (3, 1), (1, 1), (2, 1), (1, a))),
                    (-sym_int(a),
                     w((3, f), (2, 1), (3, 1), (2, 1), (1, a + 1))),
                    (-sym_int(f + 2),
                     w((3, f + 1), (2, 1), (1, 1), (2, 1), (1, a)))]),
    ]
    if a == 0:
        cases.append(GoldenCase(
            '(8a)', A(0, 0, 1, 1, 0, f),
            {A(0, 0, 1, 1, 0, f): ONE,
             A(0, 1, 0, 0, 1, f): _v(-1),
             A(1, 0, 0, 1, 1, f): _v(-2)},
            [(ONE, w((3, f), (1, 1), (2, 1), (3, 1), (2, 1)))]))
    else:
        cases.append(GoldenCase(
            '(8b)', A(a, 0, 1, 1, 0, f),
            {A(a, 0, 1, 1, 0, f): ONE,
             A(a, 1, 0, 0, 1, f): _v(-1),
             A(a + 1, 0, 0, 1, 1, f): _v(-a) + _v(-a - 2)},
            [(ONE, w((3, f), (1, 1), (2, 1), (3, 1), (2, 1), (1, a))),
             (-sym_int(a - 1),
              w((3, f), (2, 1), (3, 1), (2, 1), (1, a + 1)))]))
    cases.extend([
        GoldenCase('(9)', A(a, 1, 1, 0, 0, f),
                   {A(a, 1, 1, 0, 0, f): ONE,
                    A(a + 1, 0, 1, 1, 0, f): _v(-a - 1),
                    A(a + 1, 1, 0, 0, 1, f): _v(-a - 2),
                    A(a + 2, 0, 0, 1, 1, f): _v(-2 * a - 4)},
                   [(ONE, w((3, f), (1, 1), (2, 1), (3, 1), (1, 1), (2, 1),
                            (1, a))),
                    (-sym_int(a), w((3, f), (1, 1), (2, 1), (3, 1), (2, 1),
                                    (1, a + 1))),
                    (-sym_int(a + 1), w((3, f), (2, 1), (3, 1), (1, 1),
                                        (2, 1), (1, a + 1))),
                    (sym_int(a + 1) ** 2, w((3, f), (2, 1), (3, 1), (2, 1),
                                            (1, a + 2)))]),
        GoldenCase('(10)', A(a, 1, 0, 1, 1, f), {A(a, 1, 0, 1, 1, f): ONE},
                   [(ONE, w((3, f), (2, 1), (3, 1), (2, 1), (1, 1), (2, 1),
                            (1, a)))]),
        GoldenCase('(11)', A(a, 1, 1, 1, 0, f),
                   {A(a, 1, 1, 1, 0, f): ONE,
                    A(a + 1, 1, 0, 1, 1, f): _v(-a - 1)},
                   [(ONE, w((3, f), (1, 1), (2, 1), (3, 1), (2, 1), (1, 1),
                            (2, 1), (1, a))),
                    (-sym_int(a), w((3, f), (2, 1), (3, 1), (2, 1), (1, 1),
                                    (2, 1), (1, a + 1)))]),
        GoldenCase('(12)', A(a, 0, 1, 1, 1, f),
                   {A(a, 0, 1, 1, 1, f): ONE,
                    A(a, 1, 0, 1, 1, f + 1): _v(-f - 1)},
                   [(ONE, w((3, f), (2, 1), (3, 1), (1, 1), (2, 1), (3, 1),
                            (2, 1), (1, a))),
                    (sym_int(f + 2), w((3, f + 1), (2, 1), (3, 1), (2, 1),
                                       (1, 1), (2, 1), (1, a)))]),
        GoldenCase('(13{})'.format(branch), A(a, 1, 1, 0, 1, f),
                   {A(a, 1, 1, 0, 1, f): ONE,
                    A(a, 1, 1, 1, 0, f + 1): _v(-f - 1),
                    A(a + 1, 0, 1, 1, 1, f): _v(-a - 1),
                    A(a + 1, 1, 0, 1, 1, f + 1): _v(-f - a - 2)},
                   [(ONE, w((3, f), (2, 1), (3, 1), (1, 1), (2, 1), (3, 1),
                            (1, 1), (2, 1), (1, a))),
                    (sym_int(f + 2), w((3, f + 1), (1, 1), (2, 1), (3, 1),
                                       (2, 1), (1, 1), (2, 1), (1, a))),
                    (-sym_int(a), w((3, f), (2, 1), (3, 1), (1, 1), (2, 1),
                                    (3, 1), (2, 1), (1, a + 1))),
                    (-(twist + extra), w((3, f + 1), (2, 1), (3, 1), (2, 1),
                                         (1, 1), (2, 1), (1, a + 1)))]),
        GoldenCase('(14)', A(a, 1, 1, 1, 1, f), {A(a, 1, 1, 1, 1, f): ONE},
                   [(ONE, w((3, f), (2, 1), (3, 1), (1, 1), (2, 1), (3, 1),
                            (2, 1), (1, 1), (2, 1), (1, a)))]),
    ])
    return cases


def _clean(terms):
    clean = {}
    for b, c in terms.items():
        c = LaurentPolynomial.coerce(c)
        if c:
            clean[b] = c
    return clean


def _difference(expected, found):
    keys = sorted(set(expected) | set(found), key=SuperMatrix.sort_key,
                  reverse=True)
    zero = LaurentPolynomial()
    return ['{}: expected {}, found {}'.format(b, expected.get(b, zero),
                                               found.get(b, zero))
            for b in keys if expected.get(b, zero) != found.get(b, zero)]


def check_case(case, parity_hits=None):
    """Compare one GoldenCase with the computed canonical basis.

    Three things are checked: the triangular solve, the monomial
    correction algorithm and the monomial form of the case. Matrices where
    the correction met an odd constant term are not problems; they are
    appended to parity_hits when a list is given.

    Returns:
        list: Problem descriptions; empty when the case matches.
    """
    expected = _clean(case.expansion)
    problems = []
    record = canonical(case.target)
    for line in _difference(expected, _clean(record.expansion)):
        problems.append('canonical ' + line)
    corrected = du_algorithm(case.target)
    for line in _difference(expected, _clean(corrected.expansion)):
        problems.append('du_algorithm ' + line)
    if parity_hits is not None:
        parity_hits.extend(corrected.y_parity_failures)
    total = None
    for coefficient, word in case.monomials:
        term = eval_word(word) * coefficient
        total = term if total is None else total + term
    if total is not None and total != record.element():
        problems.append('monomial form differs from C_A: {}'.format(
            (total - record.element()).to_text()))
    if problems:
        log.debug('golden %s at %s: %s', case.label, case.target, problems)
    return problems


class GoldenReport(object):
    """Outcome of a golden table run.

    Attributes:
        table: 'gl21' or 'gl22'
        checked: Number of cases compared
        failures: list of dicts with label, target and problems
        odd_constants: list of dicts with label, values, target and the
            matrices where du_algorithm met an odd constant term; recorded,
            never a failure
    """

    def __init__(self, table):
        self.table = table
        self.checked = 0
        self.failures = []
        self.odd_constants = []

    @property
    def passed(self):
        return not self.failures

    def run(self, case, **values):
        self.checked += 1
        hits = []
        problems = check_case(case, hits)
        if problems:
            self.failures.append({'label': case.label, 'values': values,
                                  'target': case.target.to_json(),
                                  'problems': problems})
        if hits:
            self.odd_constants.append({'label': case.label, 'values': values,
                                       'target': case.target.to_json(),
                                       'matrices': [b.to_json()
                                                    for b in hits]})

    def to_json(self):
        return {'table': self.table, 'passed': self.passed,
                'checked': self.checked, 'failures': self.failures,
                'odd_constants': self.odd_constants}


def verify_gl21(a_max=6):
    """Check the U+(gl_{2|1}) table for a = 0..a_max."""
    report = GoldenReport('gl21')
    for a in range(a_max + 1):
        for case in gl21_cases(a):
            report.run(case, a=a)
    log.debug('gl21 golden table: %d cases, %d failures, %d with odd '
              'constants', report.checked, len(report.failures),
              len(report.odd_constants))
    return report


def verify_gl22(a_max=3, f_max=3):
    """Check the U+(gl_{2|2}) table for a <= a_max and f <= f_max."""
    report = GoldenReport('gl22')
    for a in range(a_max + 1):
        for f in range(f_max + 1):
            for case in gl22_cases(a, f):
                report.run(case, a=a, f=f)
    log.debug('gl22 golden table: %d cases, %d failures, %d with odd '
              'constants', report.checked, len(report.failures),
              len(report.odd_constants))
    return report
