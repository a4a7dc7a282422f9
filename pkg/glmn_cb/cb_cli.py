"""The glmn-cb command line tool.

Computes canonical basis elements of U(gl_{m|n})+-, runs the verification
suites and manages the record cache. Every command prints JSON (indent 4)
unless --format asks for text or LaTeX, and exits with 0 on success, 1 when
a check fails and 2 on bad input.

Basic Usage::

    glmn-cb canonical --m 2 --n 1 --matrix "E[1,3]"
    glmn-cb verify golden-gl22 --a-max 3 --f-max 3
    glmn-cb -v schur xi --m 2 --n 1 --matrix "E[2,1]+E[1,1]"
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

import argparse
import concurrent.futures
import json
import logging
import os
import sys

from glmn_cb.cb_matrices import (SuperShape, SuperMatrix, parse_matrix,
                                 enumerate_upper, enumerate_level,
                                 enumerate_compositions)
from glmn_cb.uplus.cb_uplus import AlgebraElement
from glmn_cb.uplus.cb_canonical import (CanonicalRecord, canonical,
                                        du_algorithm, check_canonical)
from glmn_cb.uplus.cb_pbw import pbw, serre_check
from glmn_cb.schur.cb_schur import SchurElement, ef_commutator_check
from glmn_cb.schur.cb_xi import (SchurLevel, canonical_xi, multiply,
                                 verify_thm54, check_pbw_product)
from glmn_cb.schur.cb_stable import verify_stabilization
from glmn_cb.cb_tableaux import SuperPartition, count_tableaux, \
    enumerate_ssyt
from glmn_cb.cb_golden import verify_gl21, verify_gl22
from glmn_cb.cb_cache import RecordCache

log = logging.getLogger(__name__)

CACHE_ENV = 'GLMN_CB_CACHE_DIR'
MAX_LEVEL_ENV = 'GLMN_CB_MAX_LEVEL'


def _emit(data):
    print(json.dumps(data, indent=4))


def _shape(args):
    return SuperShape(args.m, args.n)


def _values(pairs):
    values = {}
    for pair in pairs or []:
        name, sep, value = pair.partition('=')
        if not sep or not value.strip().lstrip('-').isdigit():
            raise ValueError('--let expects name=integer, got {!r}'.format(
                pair))
        values[name.strip()] = int(value)
    return values


def _matrix(args, text=None):
    return parse_matrix(args.matrix if text is None else text, _shape(args),
                        _values(getattr(args, 'let', None)))


def _integers(text):
    try:
        return tuple(int(x) for x in text.split(',') if x.strip())
    except ValueError:
        raise ValueError('expected comma separated integers, got '
                         '{!r}'.format(text))


# canonical


def _canonical_job(job):
    m, n, rows, witness, cache_dir = job
    target = SuperMatrix(SuperShape(m, n), rows)
    if cache_dir:
        return RecordCache(cache_dir).canonical(target, witness).to_json()
    record = du_algorithm(target) if witness else canonical(target)
    return record.to_json()


def cmd_canonical(args):
    shape = _shape(args)
    if args.all_upto_norm is not None:
        if args.all_upto_norm < 0:
            raise ValueError('--all-upto-norm must be nonnegative')
        targets = list(enumerate_upper(shape, norm_max=args.all_upto_norm,
                                       entry_max=args.entry_max))
    else:
        targets = [_matrix(args)]
    for target in targets:
        if not target.is_valid():
            raise ValueError('invalid matrix {} (mixed entry above 1)'.format(
                target))
    cache_dir = args.cache_dir
    jobs = [(shape.m, shape.n, target.rows, args.witness, cache_dir)
            for target in targets]
    if args.jobs > 1 and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor(args.jobs) as executor:
            results = list(executor.map(_canonical_job, jobs))
    else:
        results = [_canonical_job(job) for job in jobs]
    records = [CanonicalRecord.from_json(data) for data in results]
    if args.format == 'json':
        _emit(results[0] if args.all_upto_norm is None else results)
    else:
        for record in records:
            print(record.to_latex() if args.format == 'latex' else
                  '{}: {}'.format(record.target, record.to_text()))
    return 0


# verify


def verify_pbw(shape, entry_max):
    """Check pbw(A) == A(0) on all A with entries at most entry_max."""
    failures = []
    checked = 0
    for a in enumerate_upper(shape, entry_max=entry_max):
        checked += 1
        element = pbw(a)
        if element != AlgebraElement.basis(a):
            failures.append({'target': a.to_json(),
                             'pbw': element.to_text()})
    return {'m': shape.m, 'n': shape.n, 'entry_max': entry_max,
            'checked': checked, 'passed': not failures, 'failures': failures}


def verify_axioms(shape, entry_max):
    """check_canonical plus du_algorithm agreement on all bounded A."""
    failures = []
    checked = 0
    for a in enumerate_upper(shape, entry_max=entry_max):
        checked += 1
        record = canonical(a)
        problems = check_canonical(record)
        if du_algorithm(a).expansion != record.expansion:
            problems.append('du_algorithm disagrees with the triangular '
                            'solve')
        if problems:
            failures.append({'target': a.to_json(), 'problems': problems})
    return {'m': shape.m, 'n': shape.n, 'entry_max': entry_max,
            'checked': checked, 'passed': not failures, 'failures': failures}


def verify_thm54_all(shape, r):
    """verify_thm54 and check_pbw_product for every lower A with |A| <= r."""
    reports = []
    pbw_failures = []
    for upper in enumerate_upper(shape, entry_max=r):
        if upper.size() > r:
            continue
        a = upper.t
        reports.append(verify_thm54(a, r))
        for lam in enumerate_compositions(shape, r):
            problems = check_pbw_product(a, lam, r)
            if problems:
                pbw_failures.append({'target': a.to_json(),
                                     'lambda': list(lam),
                                     'problems': problems})
    passed = all(report.passed for report in reports) and not pbw_failures
    return {'m': shape.m, 'n': shape.n, 'r': r, 'passed': passed,
            'checked': len(reports),
            'failures': [report.to_json() for report in reports
                         if not report.passed],
            'pbw_product_failures': pbw_failures}


def _zero_diagonal(shape, max_size):
    for s in range(max_size + 1):
        for a in enumerate_level(shape, s):
            if a.is_off_diagonal():
                yield a


def verify_stab_all(shape, targets, hs, j, r_min, count=3):
    """verify_stabilization over targets and generators at r, r+1, ..."""
    reports = []
    for a in targets:
        r = a.size() + 1 if r_min is None else r_min
        for h in hs:
            reports.append(verify_stabilization(a, j, h, range(r, r + count)))
    return {'m': shape.m, 'n': shape.n, 'checked': len(reports),
            'passed': all(report.passed for report in reports),
            'failures': [report.to_json() for report in reports
                         if not report.passed]}


def cmd_verify(args):
    suite = args.suite
    if suite == 'golden-gl21':
        result = verify_gl21(args.a_max).to_json()
    elif suite == 'golden-gl22':
        result = verify_gl22(args.a_max, args.f_max).to_json()
    elif suite == 'pbw':
        result = verify_pbw(_shape(args), args.entry_max)
        if args.axioms:
            result['axioms'] = verify_axioms(_shape(args), args.entry_max)
            result['passed'] = result['passed'] and \
                result['axioms']['passed']
    elif suite == 'serre':
        shape = _shape(args)
        report = serre_check(shape, args.norm_max)
        result = report.to_json()
        if args.r is not None:
            levels = [ef_commutator_check(shape, r).to_json()
                      for r in range(1, args.r + 1)]
            result['levels'] = levels
            result['passed'] = report.passed and \
                all(level['passed'] for level in levels)
    elif suite == 'thm54':
        result = verify_thm54_all(_shape(args), args.r)
    else:
        shape = _shape(args)
        targets = [_matrix(args)] if args.matrix is not None else \
            list(_zero_diagonal(shape, args.max_size))
        hs = [args.h] if args.h is not None else range(1, shape.size)
        j = _integers(args.j) if args.j else (0,) * shape.size
        result = verify_stab_all(shape, targets, hs, j, args.r)
    _emit(result)
    return 0 if result['passed'] else 1


# cache


def cmd_cache(args):
    if not args.cache_dir:
        raise ValueError('no cache directory: pass --cache-dir or set '
                         '{}'.format(CACHE_ENV))
    cache = RecordCache(args.cache_dir)
    if args.action == 'clear':
        _emit({'directory': cache.directory, 'removed': cache.clear()})
    else:
        _emit(cache.info())
    return 0


# schur


def _print_schur(x, fmt):
    if fmt == 'json':
        _emit(x.to_json())
    elif fmt == 'latex':
        print(x.to_latex())
    else:
        print(x.to_text())


def cmd_schur(args):
    shape = _shape(args)
    if args.action == 'mult':
        left = _matrix(args, args.left)
        right = _matrix(args, args.right)
        if left.size() != right.size():
            raise ValueError('[{}] and [{}] are at different levels'.format(
                left, right))
        _print_schur(multiply(SchurElement.basis(left),
                              SchurElement.basis(right)), args.format)
        return 0
    if args.action == 'xi':
        _print_schur(canonical_xi(_matrix(args), args.r), args.format)
        return 0
    if args.action == 'verify-thm54':
        report = verify_thm54(_matrix(args), args.r)
    else:
        j = _integers(args.j) if args.j else (0,) * shape.size
        a = _matrix(args)
        r = a.size() + 1 if args.r is None else args.r
        report = verify_stabilization(a, j, args.h, range(r, r + 3))
    _emit(report.to_json())
    return 0 if report.passed else 1


# tableaux


def cmd_tableaux(args):
    shape = _shape(args)
    partition = SuperPartition(_integers(args.shape), shape)
    if args.content:
        found = enumerate_ssyt(partition, _integers(args.content))
        _emit({'shape': list(partition.parts), 'count': len(found),
               'tableaux': [[list(row) for row in t.rows] for t in found]})
        return 0
    total, breakdown = count_tableaux(partition)
    _emit({'shape': list(partition.parts), 'in_hook': partition.in_hook,
           'total': total,
           'contents': [{'content': list(mu), 'count': c}
                        for mu, c in sorted(breakdown.items(), reverse=True)]})
    return 0


def _add_shape(parser, m=2, n=1):
    parser.add_argument('--m', type=int, default=m,
                        help='number of even indices (default {})'.format(m))
    parser.add_argument('--n', type=int, default=n,
                        help='number of odd indices (default {})'.format(n))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='glmn-cb',
        description='Canonical bases of U(gl_{m|n}) and quantum Schur '
                    'superalgebras',
        epilog='Matrices are written like "aE[1,2]+E[1,3]"; symbols are '
               'given with --let a=2. Set {} for a default cache '
               'directory.'.format(CACHE_ENV))
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log debug output to stderr')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    sub = commands.add_parser('canonical', help='compute C_A')
    _add_shape(sub)
    target = sub.add_mutually_exclusive_group(required=True)
    target.add_argument('--matrix', help='the matrix A')
    target.add_argument('--all-upto-norm', type=int, metavar='N',
                        help='every strictly upper A with norm at most N')
    sub.add_argument('--entry-max', type=int, default=None,
                     help='cap on even entries for --all-upto-norm')
    sub.add_argument('--let', action='append', metavar='NAME=VALUE',
                     help='value of a symbolic multiplicity')
    sub.add_argument('--format', choices=('json', 'latex', 'text'),
                     default='json')
    sub.add_argument('--witness', action='store_true',
                     help='include the monomial correction data')
    sub.add_argument('--cache-dir', default=os.environ.get(CACHE_ENV),
                     help='record cache directory')
    sub.add_argument('--jobs', type=int, default=1,
                     help='worker processes for enumerations')
    sub.set_defaults(handler=cmd_canonical)

    sub = commands.add_parser('verify', help='run a verification suite')
    suites = sub.add_subparsers(dest='suite')
    suites.required = True
    suite = suites.add_parser('golden-gl21', help='the gl(2|1) table')
    suite.add_argument('--a-max', type=int, default=6)
    suite = suites.add_parser('golden-gl22', help='the gl(2|2) table')
    suite.add_argument('--a-max', type=int, default=3)
    suite.add_argument('--f-max', type=int, default=3)
    suite = suites.add_parser('pbw', help='E_A == A(0)')
    _add_shape(suite, 2, 2)
    suite.add_argument('--entry-max', type=int, default=2)
    suite.add_argument('--axioms', action='store_true',
                       help='also check the canonical basis axioms')
    suite = suites.add_parser('serre', help='defining relations')
    _add_shape(suite)
    suite.add_argument('--norm-max', type=int, default=None,
                       help='norm bound of the test span')
    suite.add_argument('--r', type=int, default=None,
                       help='also check [E_h, F_h] at levels 1..r')
    suite = suites.add_parser('thm54', help='C_A against the Xi basis')
    _add_shape(suite)
    suite.add_argument('--r', type=int, required=True)
    suite = suites.add_parser('stab', help='r-independence of E_h A(j)')
    _add_shape(suite)
    suite.add_argument('--matrix', default=None,
                       help='zero-diagonal A (default: all with |A| <= '
                            '--max-size)')
    suite.add_argument('--let', action='append', metavar='NAME=VALUE')
    suite.add_argument('--max-size', type=int, default=2)
    suite.add_argument('--h', type=int, default=None)
    suite.add_argument('--j', default=None, help='weight, e.g. "1,0,-1"')
    suite.add_argument('--r', type=int, default=None,
                       help='first level (default |A| + 1)')
    sub.set_defaults(handler=cmd_verify)

    sub = commands.add_parser('cache', help='inspect or clear the cache')
    sub.add_argument('action', choices=('info', 'clear'))
    sub.add_argument('--cache-dir', default=os.environ.get(CACHE_ENV))
    sub.set_defaults(handler=cmd_cache)

    sub = commands.add_parser('schur', help='quantum Schur superalgebra')
    actions = sub.add_subparsers(dest='action')
    actions.required = True
    action = actions.add_parser('mult', help='[A][B]')
    _add_shape(action)
    action.add_argument('--left', required=True)
    action.add_argument('--right', required=True)
    action.add_argument('--format', choices=('json', 'latex', 'text'),
                        default='json')
    action = actions.add_parser('xi', help='the canonical element Xi_A')
    _add_shape(action)
    action.add_argument('--matrix', required=True)
    action.add_argument('--r', type=int, default=None)
    action.add_argument('--format', choices=('json', 'latex', 'text'),
                        default='json')
    action = actions.add_parser('verify-thm54', help='one lower A')
    _add_shape(action)
    action.add_argument('--matrix', required=True)
    action.add_argument('--r', type=int, required=True)
    action = actions.add_parser('verify-stab', help='one (A, h, j)')
    _add_shape(action)
    action.add_argument('--matrix', required=True)
    action.add_argument('--h', type=int, required=True)
    action.add_argument('--j', default=None)
    action.add_argument('--r', type=int, default=None)
    for action in actions.choices.values():
        action.add_argument('--let', action='append', metavar='NAME=VALUE')
    sub.set_defaults(handler=cmd_schur)

    sub = commands.add_parser('tableaux', help='semistandard supertableaux')
    counts = sub.add_subparsers(dest='action')
    counts.required = True
    action = counts.add_parser('count', help='count tableaux of a shape')
    _add_shape(action)
    action.add_argument('--shape', required=True, help='partition, e.g. 3,1')
    action.add_argument('--content', default=None,
                        help='list the tableaux of this content instead')
    sub.set_defaults(handler=cmd_tableaux)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose
                        else logging.WARNING)
    max_level = os.environ.get(MAX_LEVEL_ENV)
    try:
        if max_level:
            try:
                SchurLevel.max_level = int(max_level)
            except ValueError:
                raise ValueError('{} must be an integer, got {!r}'.format(
                    MAX_LEVEL_ENV, max_level))
        return args.handler(args)
    except ValueError as error:
        log.debug('command failed', exc_info=True)
        sys.stderr.write('error: {}\n'.format(error))
        return 2


if __name__ == '__main__':
    sys.exit(main())
