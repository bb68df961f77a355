"""Executable partition bijections.

- glaisher / glaisher_inv: r-regular partitions <-> partitions with every
  multiplicity below r, by base-r expansion of multiplicities.
- theorem1_map / theorem1_inv: the refined Franklin bijection for j=1,
  partitions whose unique part divisible by r is repeated exactly u times
  <-> partitions whose unique part repeated at least r times equals u.
- fu_tang / fu_tang_inv: a local rewrite of profile words carrying
  distinct-part partitions of perimeter M to odd-part partitions of
  perimeter M.
"""
from collections import Counter

from ..util import DomainError, PreconditionError, ConsistencyError, format_partition
from .partition import Partition, to_profile, from_profile, union, multiplicities


def _check_r(r):
    if r < 2:
        raise DomainError(f'r={r} must be ≥ 2')


def _as_partition(p):
    return p if isinstance(p, Partition) else Partition(p)


def glaisher(p, r):
    """Merge r equal parts into one part r times larger, digit by digit.

    A part a of multiplicity m = Σ m_i r^i becomes m_i copies of a·r^i.

    Raises:
        PreconditionError: some part is divisible by r.
    """
    _check_r(r)
    p = _as_partition(p)
    for v in p:
        if v % r == 0:
            raise PreconditionError(f'part {v} of {format_partition(p)} is divisible by r={r}')

    parts = []
    for a, m in multiplicities(p):
        scale = 1
        while m:
            m, digit = divmod(m, r)
            parts.extend([a * scale] * digit)
            scale *= r
    return union(parts, ())


def glaisher_inv(p, r):
    """Split each part a·r^i (a not divisible by r) into r^i copies of a.

    Raises:
        PreconditionError: some part occurs r or more times.
    """
    _check_r(r)
    p = _as_partition(p)
    for v, m in multiplicities(p):
        if m >= r:
            raise PreconditionError(f'part {v} of {format_partition(p)} occurs {m} ≥ r={r} times')

    parts = []
    for v in p:
        copies = 1
        while v % r == 0:
            v //= r
            copies *= r
        parts.extend([v] * copies)
    return union(parts, ())


def theorem1_map(p, r):
    """λ = μ ∪ ((rj)^u) maps to glaisher(μ) ∪ (u^{rj}).

    Raises:
        PreconditionError: p does not have exactly one part value divisible by r.
    """
    _check_r(r)
    p = _as_partition(p)
    special = [(v, m) for v, m in multiplicities(p) if v % r == 0]
    if len(special) != 1:
        values = ','.join(str(v) for v, _ in special) or 'none'
        raise PreconditionError(f'{format_partition(p)} must have exactly one part value '
            f'divisible by r={r} (found: {values})')

    rj, u = special[0]
    mu = Partition(v for v in p if v != rj)
    return union(glaisher(mu, r), (u,) * rj)


def theorem1_inv(p, r):
    """Inverse of theorem1_map.

    The part u repeated m_u = qr + s times (q ≥ 1, 0 ≤ s < r) loses qr of its
    copies, leaving ξ; the result is glaisher_inv(ξ) ∪ ((rq)^u).

    Raises:
        PreconditionError: p does not have exactly one part value repeated at
            least r times.
    """
    _check_r(r)
    p = _as_partition(p)
    special = [(v, m) for v, m in multiplicities(p) if m >= r]
    if len(special) != 1:
        values = ','.join(str(v) for v, _ in special) or 'none'
        raise PreconditionError(f'{format_partition(p)} must have exactly one part value '
            f'repeated at least r={r} times (found: {values})')

    u, m_u = special[0]
    q = m_u // r
    counts = Counter(p)
    counts[u] -= q * r
    xi = union(counts.elements(), ())
    return union(glaisher_inv(xi, r), (r * q,) * u)


def fu_tang(p):
    """Rewrite the profile word of a distinct-part partition.

    Position by position on the original word: the first digit stays 1, a 1
    after a 1 becomes 0, a 1 after a 0 stays 1, an internal 0 becomes 1 and
    the final 0 stays 0.

    Raises:
        PreconditionError: p has a repeated part.
    """
    p = _as_partition(p)
    for v, m in multiplicities(p):
        if m > 1:
            raise PreconditionError(f'part {v} of {format_partition(p)} is repeated {m} times')

    w = to_profile(p)
    last = len(w) - 1
    digits = []
    for i, d in enumerate(w):
        if i == 0:
            digits.append('1')
        elif i == last:
            digits.append('0')
        elif d == '0':
            digits.append('1')
        else:
            digits.append('1' if w[i - 1] == '0' else '0')
    return from_profile(''.join(digits))


def fu_tang_inv(p):
    """Rebuild the original word left to right from the image word.

    Raises:
        PreconditionError: p has an even part.
    """
    p = _as_partition(p)
    for v in p:
        if v % 2 == 0:
            raise PreconditionError(f'part {v} of {format_partition(p)} is even')

    c = to_profile(p)
    last = len(c) - 1
    digits = []
    for i, d in enumerate(c):
        if i == 0:
            digits.append('1')
        elif i == last:
            digits.append('0')
        elif digits[-1] == '1':
            digits.append('1' if d == '0' else '0')
        elif d == '1':
            digits.append('1')
        else:
            raise ConsistencyError(f'digit #{i + 1} of "{c}" has no preimage')
    return from_profile(''.join(digits))
