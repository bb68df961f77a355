"""Exact integer polynomials, rational power series and the closed forms,
recurrences and generating functions of fixed-perimeter statistics.

All arithmetic is on Python integers; nothing is ever rounded.
"""
import math
from collections import namedtuple

from ..util import DomainError, NormalizationError, ConsistencyError
from .partition import fibonacci


class IntPoly(tuple):
    """Dense integer polynomial, coefficient index = exponent.

    Canonical form has no trailing zero coefficient; the zero polynomial is
    the empty tuple and has degree -inf.
    """
    __slots__ = ()

    def __new__(cls, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        if exponent < 0:
            raise DomainError(f'negative exponent {exponent}')
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_terms(cls, terms):
        """Build from a mapping exponent -> coefficient."""
        if not terms:
            return cls()
        coeffs = [0] * (max(terms) + 1)
        for e, c in terms.items():
            coeffs[e] += c
        return cls(coeffs)

    def __repr__(self):
        return f'{type(self).__name__}({list(self)!r})'

    def __str__(self):
        if not self:
            return '0'
        terms = []
        for e, c in enumerate(self):
            if c == 0:
                continue
            mono = '' if e == 0 else 'q' if e == 1 else f'q^{e}'
            if mono and abs(c) == 1:
                coef = '-' if c < 0 else ''
            else:
                coef = str(c)
            terms.append(f'{coef}{mono}')
        return ' + '.join(terms).replace('+ -', '- ')

    @property
    def degree(self):
        return len(self) - 1 if self else -math.inf

    def coeff(self, k):
        return self[k] if 0 <= k < len(self) else 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = IntPoly([other])
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    __hash__ = tuple.__hash__

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self), len(other))
        return IntPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            if a:
                for j, b in enumerate(other):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError(f'negative power {n}')
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate at an integer (Horner)."""
        value = 0
        for c in reversed(self):
            value = value * x + c
        return value

    def shift(self, k):
        """Multiply by q^k."""
        if not self:
            return self
        return IntPoly([0] * k + list(self))

    def substitute_power(self, b):
        """Return p(q^b)."""
        if b < 1:
            raise DomainError(f'base exponent {b} must be ≥ 1')
        if b == 1 or not self:
            return self
        out = [0] * ((len(self) - 1) * b + 1)
        for e, c in enumerate(self):
            out[e * b] = c
        return IntPoly(out)

    def exact_div(self, divisor):
        """Divide exactly, working up from the constant term.

        Raises:
            ConsistencyError: the division leaves a remainder.
        """
        divisor = _as_poly(divisor)
        if not divisor:
            raise ConsistencyError('division by the zero polynomial')
        shift = next(i for i, c in enumerate(divisor) if c)
        if any(self.coeff(i) for i in range(shift)):
            raise ConsistencyError(f'{self} is not divisible by {divisor}')
        num = IntPoly(self[shift:])
        den = IntPoly(divisor[shift:])
        if not num:
            return IntPoly()
        qlen = len(num) - len(den) + 1
        if qlen < 1:
            raise ConsistencyError(f'{self} is not divisible by {divisor}')

        quotient = []
        for k in range(qlen):
            acc = num.coeff(k) - sum(den.coeff(i) * quotient[k - i]
                for i in range(1, min(k, len(den) - 1) + 1))
            q, rem = divmod(acc, den[0])
            if rem:
                raise ConsistencyError(f'{self} is not divisible by {divisor}')
            quotient.append(q)
        quotient = IntPoly(quotient)
        if quotient * den != num:
            raise ConsistencyError(f'{self} is not divisible by {divisor}')
        return quotient


def _as_poly(value):
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly([value])
    return IntPoly(value)


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


#########################################################################
# Rational series
#########################################################################

class RationalSeries(namedtuple('RationalSeries', ['numerator', 'denominator'])):
    """numerator / denominator with denominator constant term 1."""
    __slots__ = ()

    def __new__(cls, numerator, denominator):
        numerator = _as_poly(numerator)
        denominator = _as_poly(denominator)
        if denominator.coeff(0) != 1:
            raise NormalizationError(f'denominator {denominator} must have constant term 1 '
                f'(got {denominator.coeff(0)})')
        return super().__new__(cls, numerator, denominator)

    def iter_coefficients(self):
        """Yield c_0, c_1, ... forever."""
        num, den = self
        history = []
        k = 0
        while True:
            c = num.coeff(k) - sum(den[i] * history[k - i]
                for i in range(1, min(k, len(den) - 1) + 1))
            history.append(c)
            yield c
            k += 1

    def coefficients(self, N):
        """c_1 .. c_N."""
        out = []
        it = self.iter_coefficients()
        next(it)
        for _ in range(N):
            out.append(next(it))
        return out

    def __str__(self):
        return f'({self.numerator}) / ({self.denominator})'


def series_coeffs(s, N):
    """c_1 .. c_N of the formal expansion of s.

    Raises:
        NormalizationError: s is a (numerator, denominator) pair whose
            denominator does not start with 1.
    """
    if not isinstance(s, RationalSeries):
        s = RationalSeries(*s)
    return s.coefficients(N)


FIB_DEN = IntPoly([1, -1, -1])
FIB_DEN_SQ = FIB_DEN * FIB_DEN

CATALOG_NAMES = (
    'g', 'h', 'g1', 'h1', 'g_minus_h', 'h_r', 'g_r', 'g_r_d',
    'fib', 'fib_weighted', 'fib_self_convolution', 'h_r_raw',
    )

CATALOG_NEEDS_R = {'h_r', 'g_r', 'g_r_d', 'h_r_raw'}


def gf_catalog(name, r=None, d=None):
    """Generating function of a fixed-perimeter statistic, as an exact fraction.

    Raises:
        DomainError: unknown name or r, d out of range.
        ConsistencyError: the g_r fraction fails to cancel exactly.
    """
    if name in CATALOG_NEEDS_R:
        if r is None or r < 2:
            raise DomainError(f'{name} needs r ≥ 2 (got {r})')
    if name == 'g_r_d':
        if d is None or not 1 <= d < r:
            raise DomainError(f'g_r_d needs 1 ≤ d < r (got d={d}, r={r})')

    if name == 'g':
        return RationalSeries([0, 1, 0, -1], FIB_DEN_SQ)
    if name == 'h':
        return RationalSeries([0, 1, -1], FIB_DEN_SQ)
    if name in ('g1', 'h1', 'fib_self_convolution'):
        return RationalSeries([0, 0, 1], FIB_DEN_SQ)
    if name == 'g_minus_h':
        return RationalSeries([0, 0, 1, -1], FIB_DEN_SQ)
    if name == 'fib':
        return RationalSeries(X, FIB_DEN)
    if name == 'fib_weighted':
        return RationalSeries([0, 1, 0, 1], FIB_DEN_SQ)
    if name == 'h_r':
        return RationalSeries([0] + [1] * (r - 1), [1] + [-1] * r)
    if name == 'h_r_raw':
        return RationalSeries(X - IntPoly.monomial(r), ONE - 2 * X + IntPoly.monomial(r + 1))
    if name == 'g_r':
        one_minus = (ONE - X) ** (r - 1)
        top = one_minus - IntPoly.monomial(r - 1)
        numerator = X * top.exact_div(ONE - 2 * X)
        denominator = one_minus - IntPoly.monomial(r)
        return RationalSeries(numerator, denominator)
    if name == 'g_r_d':
        return RationalSeries(IntPoly.monomial(d), ONE - X - IntPoly.monomial(r))
    raise DomainError(f'unknown generating function "{name}"')


def cancel_common_factor(s, factor):
    """Divide numerator and denominator of s by factor exactly."""
    return RationalSeries(s.numerator.exact_div(factor), s.denominator.exact_div(factor))


#########################################################################
# Closed forms, recurrences and Fibonacci convolutions
#########################################################################

CLOSED_FORM_NAMES = ('g', 'h', 'g1', 'h1', 'index_sum')


def closed_form(name, M):
    """Evaluate the finite binomial sum for name at perimeter M."""
    if M < 1:
        raise DomainError(f'perimeter M={M} must be ≥ 1')
    comb = math.comb
    if name == 'g':
        return sum((M - 2 * n) * comb(M - n - 1, n) for n in range((M - 1) // 2 + 1))
    if name == 'h':
        return sum((j + 1) * comb(M - j - 1, j) for j in range((M - 1) // 2 + 1))
    if name in ('g1', 'h1'):
        return sum((k + 1) * comb(M - k - 1, k + 1) for k in range(M))
    if name == 'index_sum':
        return sum((M - 3 * n - 1) * comb(M - n - 1, n) for n in range((M - 1) // 2 + 1))
    raise DomainError(f'unknown closed form "{name}"')


RECURRENCE_NAMES = ('g', 'h', 'g1', 'h1')

# value at M=1; every sequence is 0 at M=0
RECURRENCE_START = {'g': 1, 'h': 1, 'g1': 0, 'h1': 0}


def recurrence_step(name, prev2, prev1, M):
    """f(M) = f(M−1) + f(M−2) + F_{M−1} (F_{M−2} for h)."""
    if M < 2:
        raise DomainError(f'recurrence needs M ≥ 2 (got {M})')
    if name in ('g', 'g1', 'h1'):
        return prev1 + prev2 + fibonacci(M - 1)
    if name == 'h':
        return prev1 + prev2 + fibonacci(M - 2)
    raise DomainError(f'unknown recurrence "{name}"')


def recurrence_sequence(name, M_max):
    """f(1) .. f(M_max) by iterating recurrence_step from f(0) = 0."""
    if name not in RECURRENCE_START:
        raise DomainError(f'unknown recurrence "{name}"')
    values = [0, RECURRENCE_START[name]]
    for M in range(2, M_max + 1):
        values.append(recurrence_step(name, values[-2], values[-1], M))
    return values[1:M_max + 1]


FIB_CONVOLUTION_NAMES = ('cfib1', 'cfib2', 'cfib3', 'cfib4')


def fib_convolution(name, M):
    """Fibonacci convolution expressions for g, h, g₁ = h₁ and g − h."""
    if M < 2:
        raise DomainError(f'convolution needs M ≥ 2 (got {M})')
    F = [0, 1]
    while len(F) <= M:
        F.append(F[-1] + F[-2])
    if name == 'cfib1':
        return F[M] + sum(F[k] * F[M - k] for k in range(1, M))
    if name == 'cfib2':
        return F[M] + sum(F[k] * F[M - 1 - k] for k in range(1, M - 1))
    if name == 'cfib3':
        return sum(F[k] * F[M - k] for k in range(1, M))
    if name == 'cfib4':
        return F[M - 1] + sum(F[k] * F[M - 2 - k] for k in range(1, M - 2))
    raise DomainError(f'unknown convolution "{name}"')


def shared_denominator_recurrence(values, start=4):
    """Check f(M) = 2f(M−1) + f(M−2) − 2f(M−3) − f(M−4) for M ≥ start.

    Args:
        values: f(0), f(1), ... as a sequence.

    Returns:
        the first M where the recurrence fails, or None.
    """
    for M in range(max(start, 4), len(values)):
        expected = 2 * values[M - 1] + values[M - 2] - 2 * values[M - 3] - values[M - 4]
        if values[M] != expected:
            return M
    return None


#########################################################################
# q-binomials
#########################################################################

def _q_binomial_row(m):
    """[m over j]_q for j = 0..m."""
    row = [ONE]
    for n in range(1, m + 1):
        new = [ONE]
        for j in range(1, n):
            new.append(row[j - 1] + row[j].shift(j))
        new.append(ONE)
        row = new
    return row


def q_binomial(m, j, base_exponent=1):
    """Gaussian binomial [m over j] in q^base_exponent."""
    if m < 0:
        raise DomainError(f'm={m} must be ≥ 0')
    if j < 0 or j > m:
        return ZERO
    return _q_binomial_row(m)[j].substitute_power(base_exponent)


def perimeter_q_row(M):
    """q^M Σ_j [M−1 over j]_q; the coefficient of q^n is t_n(M)."""
    if M < 1:
        raise DomainError(f'perimeter M={M} must be ≥ 1')
    total = ZERO
    for poly in _q_binomial_row(M - 1):
        total = total + poly
    return total.shift(M)
