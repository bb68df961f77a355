"""Generator of identity verification over parameter grids.

Every check compares independent computation paths (enumeration, bijections,
closed forms, recurrences, series coefficients) and reports failures as data.
"""
import time
import traceback
from collections import namedtuple
from multiprocessing import Pool

from .. import config
from ..util import Info, PartitionError, DomainError, ConsistencyError, drain
from . import partition as pt
from . import bijections as bj
from . import counting
from . import series

SUITES = ('franklin', 'theorem1', 'beck', 'perimeter', 'regular')


class VerificationReport(namedtuple('VerificationReport', [
        'check', 'grid', 'status', 'counterexample', 'witnesses_checked',
        'failures', 'elapsed'])):
    """Outcome of one suite; status is "fail" iff counterexample is set."""
    __slots__ = ()

    @property
    def passed(self):
        return self.status == 'pass'

    def to_record(self):
        """Data row without timing."""
        return {
            'command': 'verify',
            'params': {'suite': self.check, **self.grid},
            'check': self.check,
            'status': self.status,
            'witnesses_checked': self.witnesses_checked,
            'failures': self.failures,
            'counterexample': self.counterexample,
            'template': 'report.txt',
            }


class ConjectureScan(namedtuple('ConjectureScan', [
        'r', 'M_max', 'margins', 'first_violation', 'first_strict_gap',
        'witness', 'cross_checked_through'])):
    """h_r(M) − g_r(M) for M = 1..M_max."""
    __slots__ = ()

    def to_record(self):
        return {
            'command': 'conjecture',
            'params': {'r': self.r, 'm_max': self.M_max},
            'first_violation': self.first_violation,
            'first_strict_gap': self.first_strict_gap,
            'witness': self.witness,
            'cross_checked_through': self.cross_checked_through,
            'margins': list(self.margins),
            'template': 'scan.txt',
            }


class _Tally:
    """Witness and failure accumulator for one grid point."""
    def __init__(self):
        self.witnesses = 0
        self.failures = []

    def check(self, label, params, witness=True, **values):
        """Record one identity: all given values must be equal."""
        if witness:
            self.witnesses += 1
        it = iter(values.values())
        first = next(it)
        if any(v != first for v in it):
            self.failures.append({**params, 'check': label, **values})

    def fail(self, label, params, **details):
        self.failures.append({**params, 'check': label, **details})

    def result(self):
        return self.witnesses, self.failures


#########################################################################
# Grid point workers (module level so that a process pool can pickle them)
#########################################################################

def _franklin_point(args):
    n, r, j_max = args
    tally = _Tally()
    o_hist, d_hist = counting.franklin_histogram(n, r)
    for j in range(j_max + 1):
        tally.check('franklin', {'n': n, 'r': r, 'j': j}, O=o_hist[j], D=d_hist[j])
    tally.check('franklin_total', {'n': n, 'r': r}, witness=False,
        O=sum(o_hist.values()), D=sum(d_hist.values()), p=pt.partition_count(n))
    return tally.result()


def _theorem1_point(args):
    n, r = args
    tally = _Tally()
    alpha, beta = counting.refined_classes(n, r)
    for u in sorted(set(alpha) | set(beta)):
        params = {'n': n, 'r': r, 'u': u}
        domain = alpha.get(u, [])
        codomain = set(beta.get(u, []))
        tally.check('theorem1_count', params, alpha=len(domain), beta=len(codomain))

        images = set()
        for p in domain:
            try:
                q = bj.theorem1_map(p, r)
                back = bj.theorem1_inv(q, r)
            except (PartitionError, ConsistencyError) as exc:
                tally.fail('theorem1_map', params, partition=p, error=str(exc))
                continue
            if q not in codomain:
                tally.fail('theorem1_class', params, partition=p, image=q)
            if back != p:
                tally.fail('theorem1_inverse', params, partition=p, image=q, inverse=back)
            images.add(q)
        tally.check('theorem1_injective', params, witness=False,
            domain=len(domain), images=len(images))
    return tally.result()


def _beck_point(n):
    tally = _Tally()
    a, b, o1, d1 = counting.beck_totals(n)
    tally.check('beck', {'n': n}, a_minus_b=a - b, O1=o1, D1=d1)
    return tally.result()


def _perimeter_point(args):
    M, bound = args
    params = {'M': M}
    tally = _Tally()
    table = counting.perimeter_table(M, bound=bound)
    coeff = {name: series.series_coeffs(series.gf_catalog(name), M)[M - 1]
        for name in ('g', 'h', 'g1', 'h1', 'g_minus_h', 'fib')}
    rec = {name: series.recurrence_sequence(name, M)[M - 1]
        for name in series.RECURRENCE_NAMES}

    conv = {}
    if M >= 2:
        conv = {name: series.fib_convolution(name, M)
            for name in series.FIB_CONVOLUTION_NAMES}

    tally.check('g', params, enumeration=table.g, series=coeff['g'],
        closed_form=series.closed_form('g', M), recurrence=rec['g'],
        **({'cfib1': conv['cfib1']} if conv else {}))
    tally.check('h', params, enumeration=table.h, series=coeff['h'],
        closed_form=series.closed_form('h', M), recurrence=rec['h'],
        **({'cfib2': conv['cfib2']} if conv else {}))
    tally.check('g1', params, enumeration=table.g1, h1=table.h1,
        series=coeff['g1'], closed_form=series.closed_form('g1', M),
        recurrence=rec['g1'], recurrence_h1=rec['h1'],
        **({'cfib3': conv['cfib3']} if conv else {}))
    tally.check('g_minus_h', params, enumeration=table.g - table.h,
        index_sum=table.index_sum, g1_no_one=table.g1_no_one,
        series=coeff['g_minus_h'], closed_form=series.closed_form('index_sum', M),
        **({'cfib4': conv['cfib4']} if conv else {}))
    tally.check('euler', params, odd=table.odd_count,
        distinct=table.distinct_count, fibonacci=pt.fibonacci(M), series=coeff['fib'])

    row = series.perimeter_q_row(M)
    tally.check('t_row', params, enumeration=table.t_row,
        q_row={n: c for n, c in enumerate(row) if c})

    # fu_tang carries H(M) onto G(M)
    images = set()
    for p in pt.enumerate_by_perimeter(M, pt.DISTINCT, bound=bound):
        try:
            q = bj.fu_tang(p)
            back = bj.fu_tang_inv(q)
        except (PartitionError, ConsistencyError) as exc:
            tally.fail('fu_tang', params, partition=p, error=str(exc))
            continue
        if pt.perimeter(q) != M or any(v % 2 == 0 for v in q):
            tally.fail('fu_tang_class', params, partition=p, image=q)
        if back != p:
            tally.fail('fu_tang_inverse', params, partition=p, image=q, inverse=back)
        images.add(q)
    tally.check('fu_tang_bijective', params, images=len(images), odd=table.odd_count)

    # profile laws and outer hooks, one pass over all words
    odd_law = distinct_law = g1_law = hooks = 0
    per_leg = [0] * M
    for w in pt.iter_profile_words(M):
        p = pt.from_profile(w)
        mults = pt.multiplicities(p)
        evens = sum(1 for v, _ in mults if v % 2 == 0)
        odd_law += pt.is_odd_profile(w) == (evens == 0)
        distinct_law += pt.is_distinct_profile(w) == all(m == 1 for _, m in mults)
        g1_law += (pt.even_prefix_count(w) == 1) == (evens == 1)

        inner, M_hook, j = pt.remove_outer_hook(p)
        try:
            hooks += M_hook == M and pt.add_outer_hook(inner, M, j) == p
        except PartitionError:
            pass
        per_leg[j] += 1

    total = 1 << (M - 1)
    tally.check('profile_laws', params, words=total, odd=odd_law,
        distinct=distinct_law, g1=g1_law)
    tally.check('outer_hooks', params, words=total, round_trips=hooks)
    tally.check('outer_hook_legs', params,
        enumeration=per_leg,
        q_binomial=[series.q_binomial(M - 1, j)(1) for j in range(M)])
    return tally.result(), (table.g, table.h, table.g1, table.h1)


def _regular_point(args):
    M, r, bound = args
    tally = _Tally()
    g_r = series.series_coeffs(series.gf_catalog('g_r', r), M)[M - 1]
    h_r = series.series_coeffs(series.gf_catalog('h_r', r), M)[M - 1]
    g, h, _ = counting.regular_perimeter_counts(M, r, bound=bound)
    tally.check('h_r', {'M': M, 'r': r}, enumeration=h, series=h_r)
    tally.check('g_r', {'M': M, 'r': r}, enumeration=g, series=g_r)
    for d in range(1, r):
        gd = counting.regular_perimeter_counts(M, r, d, bound=bound)[2]
        s = series.series_coeffs(series.gf_catalog('g_r_d', r, d), M)[M - 1]
        tally.check('g_r_d', {'M': M, 'r': r, 'd': d}, enumeration=gd, series=s)
    return tally.result()


#########################################################################
# Suites
#########################################################################

class SuiteChecker:
    """Base class of a verification suite.

    Subclasses implement _points() and the matching worker; grid points are
    evaluated in grid order, optionally on a process pool, and merged in
    that order.
    """
    name = None

    def __init__(self, threads=1, fail_fast=False):
        self.threads = max(1, threads)
        self.fail_fast = fail_fast

    @staticmethod
    def _require(name, value, low, high=None):
        """Raise DomainError unless low ≤ value (≤ high)."""
        if value < low:
            raise DomainError(f'{name}={value} must be ≥ {low}')
        if high is not None and value > high:
            raise DomainError(f'{name}={value} exceeds the exhaustive bound {high}; '
                'use the series checks for larger perimeters')

    def _require_moduli(self, r_set):
        if not r_set:
            raise DomainError('r_set must not be empty')
        for r in r_set:
            self._require('r', r, 2)

    @property
    def grid(self):
        raise NotImplementedError

    def run(self):
        start = time.time()
        self.cnt_witnesses = 0
        self.cnt_failures = 0
        self.counterexample = None

        yield Info('info', f'Checking {self.name} over {self._describe_grid()}...')
        yield from self._check()

        report = VerificationReport(
            check=self.name,
            grid=self.grid,
            status='fail' if self.counterexample else 'pass',
            counterexample=self.counterexample,
            witnesses_checked=self.cnt_witnesses,
            failures=self.cnt_failures,
            elapsed=time.time() - start,
            )
        if report.passed:
            yield Info('info', f'{self.name}: pass ({report.witnesses_checked} witnesses)', data=report)
        else:
            yield Info('error', f'{self.name}: FAIL ({report.failures} failures, '
                f'{report.witnesses_checked} witnesses)', data=report)

    def _describe_grid(self):
        return ', '.join(f'{k}={v}' for k, v in self.grid.items())

    def _map(self, worker, points):
        if self.threads == 1 or len(points) < 2:
            yield from map(worker, points)
            return
        with Pool(processes=min(self.threads, len(points))) as pool:
            yield from pool.imap(worker, points)

    def _merge(self, result):
        """Fold one grid point result in; return False to stop early."""
        witnesses, failures = result
        self.cnt_witnesses += witnesses
        for failure in failures:
            self.cnt_failures += 1
            if self.counterexample is None:
                self.counterexample = failure
        return not (self.fail_fast and self.cnt_failures)

    def _run_points(self, worker, points):
        for point, result in zip(points, self._map(worker, points)):
            failed = self.cnt_failures
            cont = self._merge(result)
            yield Info('debug', f'{self.name}: checked {point}')
            if self.cnt_failures > failed:
                yield Info('error', f'{self.name}: mismatch at {self.counterexample_repr(result)}')
            if not cont:
                yield Info('warn', f'{self.name}: stopped at the first failure')
                return

    @staticmethod
    def counterexample_repr(result):
        failure = result[1][0]
        return ', '.join(f'{k}={v}' for k, v in failure.items())

    def _check(self):
        raise NotImplementedError


class FranklinChecker(SuiteChecker):
    name = 'franklin'

    def __init__(self, n_max, r_set, j_max, **kwargs):
        super().__init__(**kwargs)
        self._require('n_max', n_max, 0)
        self._require_moduli(r_set)
        self._require('j_max', j_max, 0)
        self.n_max = n_max
        self.r_set = sorted(r_set)
        self.j_max = j_max

    @property
    def grid(self):
        return {'n_max': self.n_max, 'r_set': self.r_set, 'j_max': self.j_max}

    def _check(self):
        points = [(n, r, self.j_max) for n in range(self.n_max + 1) for r in self.r_set]
        yield from self._run_points(_franklin_point, points)


class Theorem1Checker(SuiteChecker):
    name = 'theorem1'

    def __init__(self, n_max, r_set, **kwargs):
        super().__init__(**kwargs)
        self._require('n_max', n_max, 0)
        self._require_moduli(r_set)
        self.n_max = n_max
        self.r_set = sorted(r_set)

    @property
    def grid(self):
        return {'n_max': self.n_max, 'r_set': self.r_set}

    def _check(self):
        points = [(n, r) for n in range(self.n_max + 1) for r in self.r_set]
        yield from self._run_points(_theorem1_point, points)


class BeckChecker(SuiteChecker):
    name = 'beck'

    def __init__(self, n_max, **kwargs):
        super().__init__(**kwargs)
        self._require('n_max', n_max, 0)
        self.n_max = n_max

    @property
    def grid(self):
        return {'n_max': self.n_max}

    def _check(self):
        yield from self._run_points(_beck_point, list(range(self.n_max + 1)))


class PerimeterChecker(SuiteChecker):
    """Enumerated perimeter tables against every formula, then formulas
    against each other well past the enumeration range."""
    name = 'perimeter'

    def __init__(self, M_max_enum, M_max_series, bound=counting.PERIMETER_BOUND, **kwargs):
        super().__init__(**kwargs)
        self._require('m_max_enum', M_max_enum, 1, bound)
        self._require('m_max_series', M_max_series, 1)
        self.M_max_enum = M_max_enum
        self.M_max_series = M_max_series
        self.bound = bound

    @property
    def grid(self):
        return {'m_max_enum': self.M_max_enum, 'm_max_series': self.M_max_series}

    def _check(self):
        points = [(M, self.bound) for M in range(1, self.M_max_enum + 1)]
        sequences = {name: [0] for name in ('g', 'h', 'g1', 'h1')}
        for point, (result, values) in zip(points, self._map(_perimeter_point, points)):
            failed = self.cnt_failures
            cont = self._merge(result)
            yield Info('debug', f'perimeter: checked M={point[0]}')
            if self.cnt_failures > failed:
                yield Info('error', f'perimeter: mismatch at {self.counterexample_repr(result)}')
            if not cont:
                yield Info('warn', 'perimeter: stopped at the first failure')
                return
            for name, value in zip(sequences, values):
                sequences[name].append(value)

        for name, values in sequences.items():
            M = series.shared_denominator_recurrence(values)
            tally = _Tally()
            tally.check('shared_recurrence', {'name': name}, first_failure=M, expected=None)
            if not self._merge(tally.result()):
                return

        yield Info('info', f'perimeter: formulas up to M={self.M_max_series}...')
        if not self._merge(self._check_series()):
            yield Info('warn', 'perimeter: stopped at the first failure')

    def _check_series(self):
        tally = _Tally()
        N = self.M_max_series
        coeff = {name: series.series_coeffs(series.gf_catalog(name), N)
            for name in ('g', 'h', 'g1', 'h1', 'g_minus_h')}
        rec = {name: series.recurrence_sequence(name, N) for name in series.RECURRENCE_NAMES}
        cfib = dict(zip(('g', 'h', 'g1', 'g_minus_h'), series.FIB_CONVOLUTION_NAMES))
        closed = {'g': 'g', 'h': 'h', 'g1': 'g1', 'g_minus_h': 'index_sum'}

        for M in range(2, N + 1):
            for name in ('g', 'h', 'g1', 'g_minus_h'):
                values = {
                    'series': coeff[name][M - 1],
                    'closed_form': series.closed_form(closed[name], M),
                    'convolution': series.fib_convolution(cfib[name], M),
                    }
                if name == 'g_minus_h':
                    values['recurrence'] = rec['g'][M - 1] - rec['h'][M - 1]
                else:
                    values['recurrence'] = rec[name][M - 1]
                if name == 'g1':
                    values['series_h1'] = coeff['h1'][M - 1]
                    values['recurrence_h1'] = rec['h1'][M - 1]
                tally.check(name, {'M': M}, **values)
        return tally.result()


class RegularChecker(SuiteChecker):
    """r-regular perimeter counts against their generating functions."""
    name = 'regular'

    def __init__(self, M_max_enum, r_set, M_max_series, bound=counting.PERIMETER_BOUND, **kwargs):
        super().__init__(**kwargs)
        self._require('m_max_enum', M_max_enum, 1, bound)
        self._require_moduli(r_set)
        self._require('m_max_series', M_max_series, 1)
        self.M_max_enum = M_max_enum
        self.r_set = sorted(r_set)
        self.M_max_series = M_max_series
        self.bound = bound

    @property
    def grid(self):
        return {'m_max_enum': self.M_max_enum, 'r_set': self.r_set,
            'm_max_series': self.M_max_series}

    def _check(self):
        points = [(M, r, self.bound) for M in range(1, self.M_max_enum + 1) for r in self.r_set]
        yield from self._run_points(_regular_point, points)
        if self.fail_fast and self.cnt_failures:
            return

        yield Info('info', f'regular: shifts and reductions up to M={self.M_max_series}...')
        self._merge(self._check_series())

    def _check_series(self):
        tally = _Tally()
        N = self.M_max_series
        fib = series.series_coeffs(series.gf_catalog('fib'), N)
        one_minus_z = series.ONE - series.X

        for r in self.r_set:
            shifted = [series.series_coeffs(series.gf_catalog('g_r_d', r, d), N)
                for d in range(1, r)]
            for d in range(2, r):
                for M in range(2, N + 1):
                    tally.check('g_r_d_shift', {'M': M, 'r': r, 'd': d},
                        g_r_d=shifted[d - 1][M - 1], previous=shifted[d - 2][M - 2])

            cancelled = series.cancel_common_factor(series.gf_catalog('h_r_raw', r), one_minus_z)
            tally.check('h_r_raw', {'r': r}, cancelled=str(cancelled),
                h_r=str(series.gf_catalog('h_r', r)))

        if 2 in self.r_set:
            h_2 = series.series_coeffs(series.gf_catalog('h_r', 2), N)
            g_2 = series.series_coeffs(series.gf_catalog('g_r', 2), N)
            g_2_1 = series.series_coeffs(series.gf_catalog('g_r_d', 2, 1), N)
            for M in range(1, N + 1):
                tally.check('r2_fibonacci', {'M': M}, h_2=h_2[M - 1], g_2=g_2[M - 1],
                    g_2_1=g_2_1[M - 1], fibonacci=fib[M - 1])
        return tally.result()


#########################################################################
# Public operations
#########################################################################

def _defaults(**kwargs):
    conf = config['verify']
    return {k: conf[k] if v is None else v for k, v in kwargs.items()}


def verify_franklin(n_max=None, r_set=None, j_max=None, *, threads=1, fail_fast=False):
    """|O(n;r,j)| = |D(n;r,j)| over the grid, and Σ_j |O(n;r,j)| = p(n)."""
    args = _defaults(franklin_n_max=n_max, r_set=r_set, j_max=j_max)
    return drain(FranklinChecker(args['franklin_n_max'], args['r_set'], args['j_max'],
        threads=threads, fail_fast=fail_fast).run())


def verify_theorem1(n_max=None, r_set=None, *, threads=1, fail_fast=False):
    """α_u = β_u, and theorem1_map is a class-correct bijection inverted by theorem1_inv."""
    args = _defaults(theorem1_n_max=n_max, r_set=r_set)
    return drain(Theorem1Checker(args['theorem1_n_max'], args['r_set'],
        threads=threads, fail_fast=fail_fast).run())


def verify_beck(n_max=None, *, threads=1, fail_fast=False):
    """a(n) − b(n) = |O(n;2,1)| = |D(n;2,1)|."""
    args = _defaults(beck_n_max=n_max)
    return drain(BeckChecker(args['beck_n_max'], threads=threads, fail_fast=fail_fast).run())


def verify_perimeter(M_max_enum=None, M_max_series=None, *, threads=1, fail_fast=False,
        bound=None):
    args = _defaults(perimeter_m_enum=M_max_enum, perimeter_m_series=M_max_series)
    if bound is None:
        bound = config['enumerate']['perimeter_bound']
    return drain(PerimeterChecker(args['perimeter_m_enum'], args['perimeter_m_series'],
        bound=bound, threads=threads, fail_fast=fail_fast).run())


def verify_regular(M_max_enum=None, r_set=None, M_max_series=None, *, threads=1,
        fail_fast=False, bound=None):
    args = _defaults(regular_m_enum=M_max_enum, r_set=r_set, regular_m_series=M_max_series)
    if bound is None:
        bound = config['enumerate']['perimeter_bound']
    return drain(RegularChecker(args['regular_m_enum'], args['r_set'], args['regular_m_series'],
        bound=bound, threads=threads, fail_fast=fail_fast).run())


def conjecture_scan(r, M_max, M_cross=None, bound=None):
    """Margins h_r(M) − g_r(M) from series recurrences.

    Margins are cross-checked against enumeration for M ≤ M_cross.

    Raises:
        DomainError: r < 2 or M_max < 1.
        ConsistencyError: series and enumeration disagree.
    """
    if M_cross is None:
        M_cross = config['conjecture']['m_cross']
    if bound is None:
        bound = config['enumerate']['perimeter_bound']
    if M_max < 1:
        raise DomainError(f'M_max={M_max} must be ≥ 1')

    g = series.series_coeffs(series.gf_catalog('g_r', r), M_max)
    h = series.series_coeffs(series.gf_catalog('h_r', r), M_max)
    margins = tuple(b - a for a, b in zip(g, h))

    cross = min(M_cross, M_max, bound)
    for M in range(1, cross + 1):
        g_enum, h_enum, _ = counting.regular_perimeter_counts(M, r, bound=bound)
        if (g_enum, h_enum) != (g[M - 1], h[M - 1]):
            raise ConsistencyError(f'r={r}, M={M}: series gives g_r={g[M - 1]}, h_r={h[M - 1]} '
                f'but enumeration gives g_r={g_enum}, h_r={h_enum}')

    first_violation = next((M for M, m in enumerate(margins, 1) if m < 0), None)
    first_strict_gap = next((M for M, m in enumerate(margins, 1) if m > 0), None)
    witness = None
    if first_strict_gap is not None:
        M = first_strict_gap
        witness = {'M': M, 'g_r': g[M - 1], 'h_r': h[M - 1]}

    return ConjectureScan(r, M_max, margins, first_violation, first_strict_gap,
        witness, cross)


def scan_all(r_max=None, M_max=None, M_cross=None):
    """Yield one report-bearing Info per r in 2..r_max."""
    conf = config['conjecture']
    r_max = conf['r_max'] if r_max is None else r_max
    M_max = conf['m_max'] if M_max is None else M_max
    M_cross = conf['m_cross'] if M_cross is None else M_cross
    if r_max < 2:
        raise DomainError(f'r_max={r_max} must be ≥ 2')

    for r in range(2, r_max + 1):
        yield Info('debug', f'Scanning r={r} up to M={M_max}...')
        scan = conjecture_scan(r, M_max, M_cross)
        if scan.first_violation is not None:
            yield Info('error', f'r={r}: g_r(M) > h_r(M) at M={scan.first_violation}', data=scan)
        elif scan.first_strict_gap is None:
            yield Info('info', f'r={r}: g_r(M) = h_r(M) for all M ≤ {M_max}', data=scan)
        else:
            w = scan.witness
            yield Info('info', f'r={r}: g_r(M) ≤ h_r(M) for all M ≤ {M_max}; first strict gap '
                f'at M={w["M"]} (g_r={w["g_r"]}, h_r={w["h_r"]})', data=scan)


def make_checker(suite, grid=None, threads=1, fail_fast=False):
    """Build the checker of a suite, grid values falling back to config."""
    grid = grid or {}
    conf = config['verify']

    def get(key, conf_key=None):
        value = grid.get(key)
        return conf[conf_key or key] if value is None else value

    kwargs = {'threads': threads, 'fail_fast': fail_fast}
    if suite == 'franklin':
        return FranklinChecker(get('n_max', 'franklin_n_max'), get('r_set'), get('j_max'), **kwargs)
    if suite == 'theorem1':
        return Theorem1Checker(get('n_max', 'theorem1_n_max'), get('r_set'), **kwargs)
    if suite == 'beck':
        return BeckChecker(get('n_max', 'beck_n_max'), **kwargs)

    bound = config['enumerate']['perimeter_bound']
    if suite == 'perimeter':
        return PerimeterChecker(get('m_max_enum', 'perimeter_m_enum'),
            get('m_max_series', 'perimeter_m_series'), bound=bound, **kwargs)
    if suite == 'regular':
        return RegularChecker(get('m_max_enum', 'regular_m_enum'), get('r_set'),
            get('m_max_series', 'regular_m_series'), bound=bound, **kwargs)
    raise DomainError(f'unknown suite "{suite}"')


def run(suites=None, grid=None, threads=None, fail_fast=None):
    """Run the selected suites in fixed order.

    Args:
        suites: iterable of suite names, "all" or None for every suite.
        grid: per-suite overrides, e.g. {'perimeter': {'m_max_enum': 10}}.
    """
    start = time.time()
    if threads is None:
        threads = config['parallel']['threads']
    if fail_fast is None:
        fail_fast = config['verify']['fail_fast']

    if not suites or suites == 'all' or 'all' in suites:
        selected = SUITES
    else:
        unknown = set(suites) - set(SUITES)
        if unknown:
            raise DomainError(f'unknown suite "{sorted(unknown)[0]}"')
        selected = [s for s in SUITES if s in suites]

    # out-of-range grid values raise here, before any suite runs
    grid = grid or {}
    checkers = [make_checker(suite, grid.get(suite), threads=threads, fail_fast=fail_fast)
        for suite in selected]

    cnt_fail = 0
    for suite, checker in zip(selected, checkers):
        try:
            for info in checker.run():
                if isinstance(info.data, VerificationReport) and not info.data.passed:
                    cnt_fail += 1
                yield info
        except Exception as exc:
            traceback.print_exc()
            cnt_fail += 1
            yield Info('critical', f'{suite}: {exc}', exc=exc)

        yield Info('info', '----------------------------------------------------------------------')

    yield Info('info', f'{len(selected) - cnt_fail} of {len(selected)} suites passed.')

    elapsed = time.time() - start
    yield Info('info', f'Time spent: {elapsed} seconds.')
