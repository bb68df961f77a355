"""Brute-force counters over exhaustive enumeration.

These never touch generating-function code; they are the ground truth the
series and formulas are verified against.
"""
from collections import Counter, namedtuple
from multiprocessing import Pool

from ..util import DomainError
from .partition import (
    ConstraintSpec, ANY, multiplicities, enumerate_by_size, enumerate_by_perimeter,
    )

# largest perimeter scanned exhaustively unless configured otherwise
PERIMETER_BOUND = 24


def _check_r(r):
    if r < 2:
        raise DomainError(f'r={r} must be ≥ 2')


#########################################################################
# Size-indexed classes
#########################################################################

def classify_franklin(p, r):
    """Return (j_O, j_D): part values divisible by r, part values repeated ≥ r times."""
    j_o = j_d = 0
    for v, m in multiplicities(p):
        if v % r == 0:
            j_o += 1
        if m >= r:
            j_d += 1
    return j_o, j_d


def franklin_histogram(n, r):
    """Counters j -> |O(n;r,j)| and j -> |D(n;r,j)| from one enumeration pass."""
    _check_r(r)
    o_hist = Counter()
    d_hist = Counter()
    for p in enumerate_by_size(n):
        j_o, j_d = classify_franklin(p, r)
        o_hist[j_o] += 1
        d_hist[j_d] += 1
    return o_hist, d_hist


def franklin_counts(n, r, j):
    """(|O(n;r,j)|, |D(n;r,j)|)."""
    if j < 0:
        raise DomainError(f'j={j} must be ≥ 0')
    o_hist, d_hist = franklin_histogram(n, r)
    return o_hist[j], d_hist[j]


def refined_key(p, r):
    """Return (u_O, u_D) for the refined classes, None where p is outside.

    u_O: multiplicity of the unique part value divisible by r.
    u_D: the unique part value repeated at least r times.
    """
    special_o = []
    special_d = []
    for v, m in multiplicities(p):
        if v % r == 0:
            special_o.append(m)
        if m >= r:
            special_d.append(v)
    u_o = special_o[0] if len(special_o) == 1 else None
    u_d = special_d[0] if len(special_d) == 1 else None
    return u_o, u_d


def refined_classes(n, r):
    """Map u -> list of members of O_u(n;r,1) and of D_u(n;r,1)."""
    _check_r(r)
    alpha = {}
    beta = {}
    for p in enumerate_by_size(n):
        u_o, u_d = refined_key(p, r)
        if u_o is not None:
            alpha.setdefault(u_o, []).append(p)
        if u_d is not None:
            beta.setdefault(u_d, []).append(p)
    return alpha, beta


def refined_counts(n, r, u):
    """(α_u^{(r)}(n), β_u^{(r)}(n))."""
    if u < 1:
        raise DomainError(f'u={u} must be ≥ 1')
    _check_r(r)
    a = b = 0
    for p in enumerate_by_size(n):
        u_o, u_d = refined_key(p, r)
        a += u_o == u
        b += u_d == u
    return a, b


def beck_totals(n):
    """(a(n), b(n), |O(n;2,1)|, |D(n;2,1)|).

    a(n) and b(n) total the parts over odd-part and distinct-part partitions.
    """
    a = b = o1 = d1 = 0
    for p in enumerate_by_size(n):
        mults = multiplicities(p)
        evens = sum(1 for v, _ in mults if v % 2 == 0)
        repeats = sum(1 for _, m in mults if m >= 2)
        if evens == 0:
            a += len(p)
        elif evens == 1:
            o1 += 1
        if repeats == 0:
            b += len(p)
        elif repeats == 1:
            d1 += 1
    return a, b, o1, d1


#########################################################################
# Perimeter-indexed classes
#########################################################################

PerimeterTable = namedtuple('PerimeterTable', [
    'M', 'g', 'h', 'g1', 'h1', 'index_sum', 'g1_no_one', 't_row',
    'odd_count', 'distinct_count',
    ])
PerimeterTable.__doc__ = """Statistics accumulated over all perimeter-M partitions.

g, h: total parts over odd-part / distinct-part partitions
g1: partitions with exactly one even part value (any multiplicity)
h1: partitions with exactly one part value repeated, all others once
index_sum: sum of m2_index over odd-part partitions
g1_no_one: members of the g1 class without a part 1
t_row: size -> number of partitions of that size
odd_count, distinct_count: |G(M)| and |H(M)|
"""


def _scan_words(args):
    """Accumulate table fields over word numbers start..stop-1."""
    M, start, stop = args
    width = M - 1
    g = h = g1 = h1 = index_sum = g1_no_one = odd_count = distinct_count = 0
    t_row = Counter()

    for k in range(start, stop):
        # walk the middle bits MSB first, then the closing 0
        parts = []
        ones = 1
        for shift in range(width - 1, -1, -1):
            if (k >> shift) & 1:
                ones += 1
            else:
                parts.append(ones)
        parts.append(ones)

        # parts are ascending here
        length = len(parts)
        t_row[sum(parts)] += 1

        evens = repeats = 0
        prev = None
        run = 0
        for v in parts:
            if v == prev:
                run += 1
                if run == 2:
                    repeats += 1
            else:
                run = 1
                prev = v
                if v % 2 == 0:
                    evens += 1

        if evens == 0:
            odd_count += 1
            g += length
            index_sum += length - 1 - parts[-1] // 2
        elif evens == 1:
            g1 += 1
            if parts[0] != 1:
                g1_no_one += 1

        if repeats == 0:
            distinct_count += 1
            h += length
        elif repeats == 1:
            h1 += 1

    return PerimeterTable(M, g, h, g1, h1, index_sum, g1_no_one, t_row,
        odd_count, distinct_count)


def _merge_tables(M, tables):
    fields = dict.fromkeys(('g', 'h', 'g1', 'h1', 'index_sum', 'g1_no_one',
        'odd_count', 'distinct_count'), 0)
    t_row = Counter()
    for table in tables:
        for key in fields:
            fields[key] += getattr(table, key)
        t_row.update(table.t_row)
    return PerimeterTable(M=M, t_row=dict(sorted(t_row.items())), **fields)


def split_range(total, chunks):
    """Split range(total) into at most `chunks` contiguous (start, stop) pairs."""
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    ranges = []
    start = 0
    for i in range(chunks):
        stop = start + step + (1 if i < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def perimeter_table(M, threads=1, bound=PERIMETER_BOUND):
    """One pass over all 2^(M−1) perimeter-M partitions.

    Args:
        threads: worker processes; the word range is split into contiguous
            chunks and merged in chunk order.
        bound: exhaustive limit on M (None: no limit).
    """
    if M < 1:
        raise DomainError(f'perimeter M={M} must be ≥ 1')
    if bound is not None and M > bound:
        raise DomainError(f'perimeter M={M} exceeds the exhaustive bound {bound}; use series instead')

    jobs = [(M, start, stop) for start, stop in split_range(1 << (M - 1), threads)]
    if len(jobs) == 1:
        tables = [_scan_words(jobs[0])]
    else:
        with Pool(processes=len(jobs)) as pool:
            tables = pool.map(_scan_words, jobs)
    return _merge_tables(M, tables)


def regular_perimeter_counts(M, r, d=None, bound=PERIMETER_BOUND):
    """(g_r(M), h_r(M), g_r^{(d)}(M)); the last is None when d is None."""
    _check_r(r)
    if d is not None and not 1 <= d < r:
        raise DomainError(f'd={d} must satisfy 1 ≤ d < r={r}')

    g = h = gd = 0
    for p in enumerate_by_perimeter(M, bound=bound):
        mults = multiplicities(p)
        if all(v % r for v, _ in mults):
            g += 1
        if all(m < r for _, m in mults):
            h += 1
        if d is not None and all(v % r == d for v, _ in mults):
            gd += 1
    return g, h, (gd if d is not None else None)


def class_members(M, c=ANY, bound=PERIMETER_BOUND):
    """List the perimeter-M partitions admitted by c."""
    return list(enumerate_by_perimeter(M, c, bound=bound))


def g1_class(M, bound=PERIMETER_BOUND):
    """G₁(M): exactly one even part value, all other parts odd."""
    return class_members(M, ConstraintSpec(divisible_values=(2, 1, None)), bound=bound)


def h1_class(M, bound=PERIMETER_BOUND):
    """H₁(M): exactly one part value repeated, all others distinct."""
    return class_members(M, ConstraintSpec(repeated_values=(2, 1, None)), bound=bound)
