"""Partitions, their profile words, partition classes and enumeration.

A partition is stored largest part first. Its profile word records the walk
along the boundary of the Ferrers diagram from the south-west corner to the
north-east corner: "1" for a step right and "0" for a step up, e.g.

    (6,6,3,2,2,1) <-> 101001011100
"""
from bisect import bisect_right
from collections import Counter, namedtuple
from itertools import groupby

from ..util import EncodingError, DomainError, PreconditionError, format_partition


class Partition(tuple):
    """An immutable, non-increasing tuple of positive integers."""
    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise EncodingError(f'part #{i + 1} ({part!r}) is not a positive integer')
            if i and part > parts[i - 1]:
                raise EncodingError(f'part #{i + 1} ({part}) is larger than part #{i} ({parts[i - 1]})')
        return super().__new__(cls, parts)

    def __repr__(self):
        return f'{type(self).__name__}({tuple(self)!r})'

    def __str__(self):
        return format_partition(self)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    @property
    def largest(self):
        return self[0] if self else 0

    @property
    def perimeter(self):
        return perimeter(self)


EMPTY = Partition()


def _sorted_partition(parts):
    return tuple.__new__(Partition, sorted(parts, reverse=True))


#########################################################################
# Multiplicity view and multiset operations
#########################################################################

class MultiplicityView(tuple):
    """(value, multiplicity) pairs with values strictly decreasing."""
    __slots__ = ()

    def __new__(cls, pairs):
        pairs = tuple((int(v), int(m)) for v, m in pairs)
        for i, (v, m) in enumerate(pairs):
            if v < 1 or m < 1:
                raise EncodingError(f'pair ({v}, {m}) is not a positive (value, multiplicity) pair')
            if i and v >= pairs[i - 1][0]:
                raise EncodingError(f'part values must strictly decrease: {pairs[i - 1][0]} then {v}')
        return super().__new__(cls, pairs)

    @property
    def size(self):
        return sum(v * m for v, m in self)

    def multiplicity(self, value):
        for v, m in self:
            if v == value:
                return m
        return 0

    def to_partition(self):
        return tuple.__new__(Partition, (v for v, m in self for _ in range(m)))


def multiplicities(p):
    return tuple.__new__(MultiplicityView, ((v, len(list(g))) for v, g in groupby(p)))


def from_multiplicities(pairs):
    return MultiplicityView(pairs).to_partition()


def union(p, q):
    """Multiset union of two partitions."""
    return _sorted_partition(tuple(p) + tuple(q))


#########################################################################
# Scalar statistics
#########################################################################

def perimeter(p):
    """Largest hook length: λ₁ + ℓ(λ) − 1, and 0 for the empty partition."""
    if not p:
        return 0
    return p[0] + len(p) - 1


def m2_index(p):
    """ℓ(λ) − 1 − ⌊λ₁/2⌋; may be negative.

    Raises:
        DomainError: p is empty.
    """
    if not p:
        raise DomainError('index is undefined for the empty partition')
    return len(p) - 1 - p[0] // 2


def fibonacci(M):
    """F_M with F_{-1} = 1, F_0 = 0, F_1 = 1."""
    if M < -1:
        raise DomainError(f'Fibonacci index {M} is below -1')
    if M == -1:
        return 1
    a, b = 0, 1
    for _ in range(M):
        a, b = b, a + b
    return a


#########################################################################
# Profile words
#########################################################################

def to_profile(p):
    """Encode a partition as its boundary word."""
    digits = []
    width = 0
    for value, group in groupby(reversed(p)):
        digits.append('1' * (value - width))
        digits.append('0' * len(list(group)))
        width = value
    return ''.join(digits)


def check_profile(w):
    """Raise EncodingError unless w is empty or a 0/1 word from 1 to 0."""
    if not w:
        return
    bad = next((i for i, d in enumerate(w) if d not in '01'), None)
    if bad is not None:
        raise EncodingError(f'digit #{bad + 1} ({w[bad]!r}) of "{w}" is not 0 or 1')
    if w[0] != '1':
        raise EncodingError(f'profile word "{w}" must start with 1')
    if w[-1] != '0':
        raise EncodingError(f'profile word "{w}" must end with 0')


def from_profile(w):
    """Decode a boundary word into a partition.

    Raises:
        EncodingError: w is non-empty and does not start with 1 and end with 0.
    """
    check_profile(w)
    parts = []
    width = 0
    for d in w:
        if d == '1':
            width += 1
        else:
            parts.append(width)
    parts.reverse()
    return tuple.__new__(Partition, parts)


def is_odd_profile(w):
    """Every prefix ending in 0 holds an odd number of 1s."""
    ones = 0
    for d in w:
        if d == '1':
            ones += 1
        elif ones % 2 == 0:
            return False
    return True


def is_distinct_profile(w):
    return '00' not in w


def even_prefix_count(w):
    """Number of runs of 0s preceded by an even number of 1s, i.e. the
    number of distinct even part values."""
    count = 0
    ones = 0
    prev = None
    for d in w:
        if d == '1':
            ones += 1
        elif prev == '1' and ones % 2 == 0:
            count += 1
        prev = d
    return count


#########################################################################
# Outer hooks
#########################################################################

def add_outer_hook(p, M, j):
    """Wrap p (≤ j parts, each ≤ M−j−1) in a hook of arm M−j and leg j.

    The result has perimeter M, size |p|+M and j+1 parts.
    """
    if M < 1 or not 0 <= j <= M - 1:
        raise DomainError(f'need M ≥ 1 and 0 ≤ j ≤ M−1, got M={M}, j={j}')
    if len(p) > j:
        raise PreconditionError(f'partition {format_partition(p)} has {len(p)} parts, more than j={j}')
    if p and p[0] > M - j - 1:
        raise PreconditionError(f'part {p[0]} exceeds the box width M−j−1={M - j - 1}')
    parts = [M - j] + [v + 1 for v in p] + [1] * (j - len(p))
    return tuple.__new__(Partition, parts)


def remove_outer_hook(p):
    """Inverse of add_outer_hook; returns (inner, M, j)."""
    if not p:
        raise DomainError('the empty partition has no outer hook')
    M = perimeter(p)
    j = len(p) - 1
    inner = tuple.__new__(Partition, (v - 1 for v in p[1:] if v > 1))
    return inner, M, j


#########################################################################
# Partition classes
#########################################################################

class ConstraintSpec(namedtuple('ConstraintSpec', [
        'odd', 'distinct', 'regular', 'mult_below',
        'divisible_values', 'repeated_values', 'congruent',
        'perimeter', 'size', 'no_ones'])):
    """A conjunction of partition class predicates.

    Fields (None/False means "no condition"):
        odd: all parts odd
        distinct: all parts distinct
        regular: r, no part divisible by r
        mult_below: r, every multiplicity below r
        divisible_values: (r, j, u) exactly j part values divisible by r;
            if u is not None, each of them occurs exactly u times
        repeated_values: (r, j, u) exactly j part values occur at least r
            times; if u is not None (j must be 1) that value equals u
        congruent: (d, r) all parts ≡ d (mod r)
        perimeter: M
        size: n
        no_ones: no part equal to 1
    """
    __slots__ = ()

    def __new__(cls, odd=False, distinct=False, regular=None, mult_below=None,
            divisible_values=None, repeated_values=None, congruent=None,
            perimeter=None, size=None, no_ones=False):
        if regular is not None and regular < 2:
            raise DomainError(f'regular: r={regular} must be ≥ 2')
        if mult_below is not None and mult_below < 2:
            raise DomainError(f'mult_below: r={mult_below} must be ≥ 2')
        for name, value in (('divisible_values', divisible_values), ('repeated_values', repeated_values)):
            if value is None:
                continue
            r, j, u = value
            if r < 2:
                raise DomainError(f'{name}: r={r} must be ≥ 2')
            if j < 0:
                raise DomainError(f'{name}: j={j} must be ≥ 0')
            if u is not None and u < 1:
                raise DomainError(f'{name}: u={u} must be ≥ 1')
        if repeated_values is not None and repeated_values[2] is not None and repeated_values[1] != 1:
            raise DomainError('repeated_values: a fixed value u requires j=1')
        if congruent is not None:
            d, r = congruent
            if r < 2 or not 1 <= d < r:
                raise DomainError(f'congruent: need r ≥ 2 and 1 ≤ d < r, got d={d}, r={r}')
        if perimeter is not None and perimeter < 1:
            raise DomainError(f'perimeter: M={perimeter} must be ≥ 1')
        if size is not None and size < 0:
            raise DomainError(f'size: n={size} must be ≥ 0')
        return super().__new__(cls, bool(odd), bool(distinct), regular, mult_below,
            None if divisible_values is None else tuple(divisible_values),
            None if repeated_values is None else tuple(repeated_values),
            None if congruent is None else tuple(congruent),
            perimeter, size, bool(no_ones))

    def admits(self, p):
        if self.size is not None and sum(p) != self.size:
            return False
        if self.perimeter is not None and perimeter(p) != self.perimeter:
            return False
        if self.odd and any(v % 2 == 0 for v in p):
            return False
        if self.no_ones and p and p[-1] == 1:
            return False
        if self.regular is not None and any(v % self.regular == 0 for v in p):
            return False
        if self.congruent is not None:
            d, r = self.congruent
            if any(v % r != d for v in p):
                return False

        if not (self.distinct or self.mult_below or self.divisible_values or self.repeated_values):
            return True

        counts = Counter(p)
        if self.distinct and any(m > 1 for m in counts.values()):
            return False
        if self.mult_below is not None and any(m >= self.mult_below for m in counts.values()):
            return False
        if self.divisible_values is not None:
            r, j, u = self.divisible_values
            found = [m for v, m in counts.items() if v % r == 0]
            if len(found) != j:
                return False
            if u is not None and any(m != u for m in found):
                return False
        if self.repeated_values is not None:
            r, j, u = self.repeated_values
            found = [v for v, m in counts.items() if m >= r]
            if len(found) != j:
                return False
            if u is not None and found != [u]:
                return False
        return True

    def describe(self):
        """Stable textual form, e.g. "odd;perimeter=5"."""
        terms = []
        for name, value in zip(self._fields, self):
            if value is None or value is False:
                continue
            if value is True:
                terms.append(name)
            elif isinstance(value, tuple):
                terms.append(f'{name}=' + ','.join('-' if v is None else str(v) for v in value))
            else:
                terms.append(f'{name}={value}')
        return ';'.join(terms)

    def _size_pruning(self):
        """Part-level filters safe to apply while generating."""
        conds = []
        if self.odd:
            conds.append(lambda k: k % 2 == 1)
        if self.regular is not None:
            r = self.regular
            conds.append(lambda k: k % r != 0)
        if self.congruent is not None:
            d, r = self.congruent
            conds.append(lambda k: k % r == d)
        if self.no_ones:
            conds.append(lambda k: k != 1)
        return conds


ANY = ConstraintSpec()

ODD = ConstraintSpec(odd=True)

DISTINCT = ConstraintSpec(distinct=True)


#########################################################################
# Enumeration
#########################################################################

def enumerate_by_size(n, c=ANY):
    """Yield every partition of n admitted by c, lexicographically decreasing."""
    if n < 0:
        raise DomainError(f'size n={n} must be ≥ 0')
    if c.size is not None and c.size != n:
        return
    conds = c._size_pruning()
    distinct = c.distinct
    allowed = [k for k in range(n + 1) if k and all(cond(k) for cond in conds)]
    def top(rest, cap):
        # index of the largest allowed part ≤ min(rest, cap), or -1
        return bisect_right(allowed, min(rest, cap)) - 1

    # one frame [rest, next candidate index] per part placed, plus the root
    parts = []
    stack = [[n, top(n, n)]]
    while stack:
        frame = stack[-1]
        rest, i = frame
        if rest == 0 or i < 0:
            if rest == 0:
                p = tuple.__new__(Partition, parts)
                if c.admits(p):
                    yield p
            stack.pop()
            if stack:
                parts.pop()
            continue
        k = allowed[i]
        frame[1] = i - 1
        parts.append(k)
        stack.append([rest - k, top(rest - k, k - 1 if distinct else k)])


def iter_profile_words(M):
    """Yield the 2^(M−1) perimeter-M words in increasing binary order."""
    if M < 1:
        raise DomainError(f'perimeter M={M} must be ≥ 1')
    width = M - 1
    for k in range(1 << width):
        yield '1' + (format(k, f'0{width}b') if width else '') + '0'


def enumerate_by_perimeter(M, c=ANY, bound=None):
    """Yield every perimeter-M partition admitted by c, in word order.

    Args:
        bound: refuse M beyond this exhaustive limit (None: no limit).
    """
    if bound is not None and M > bound:
        raise DomainError(f'perimeter M={M} exceeds the exhaustive bound {bound}; use series instead')
    if c.perimeter is not None and c.perimeter != M:
        return
    for w in iter_profile_words(M):
        p = from_profile(w)
        if c.admits(p):
            yield p


def partition_count(n):
    """p(n) by exhaustive enumeration."""
    return sum(1 for _ in enumerate_by_size(n))
