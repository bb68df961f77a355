from unittest import mock
import unittest
import math
from partverify.util import DomainError, NormalizationError, ConsistencyError
from partverify.combinat import partition as pt
from partverify.combinat import series
from partverify.combinat.series import IntPoly, RationalSeries, ONE, X

class TestIntPoly(unittest.TestCase):
    def test_canonical(self):
        self.assertEqual(IntPoly([1, 2, 0, 0]), IntPoly([1, 2]))
        self.assertEqual(tuple(IntPoly([0, 0])), ())
        self.assertEqual(IntPoly().degree, -math.inf)
        self.assertEqual(IntPoly([1, 0, 3]).degree, 2)
        self.assertEqual(IntPoly([5]), 5)

    def test_ring(self):
        p = IntPoly([1, 1])
        self.assertEqual(p + 1, IntPoly([2, 1]))
        self.assertEqual(1 - p, IntPoly([0, -1]))
        self.assertEqual(p - p, IntPoly())
        self.assertEqual(p * p, IntPoly([1, 2, 1]))
        self.assertEqual(3 * p, IntPoly([3, 3]))
        self.assertEqual(p ** 3, IntPoly([1, 3, 3, 1]))
        self.assertEqual(p ** 0, ONE)
        self.assertEqual(-p, IntPoly([-1, -1]))
        self.assertEqual((1 - X - X * X) ** 2, IntPoly([1, -2, -1, 2, 1]))

    def test_evaluate(self):
        self.assertEqual(IntPoly([1, 2, 3])(2), 17)
        self.assertEqual(IntPoly()(5), 0)

    def test_substitute_power(self):
        self.assertEqual(IntPoly([1, 1, 1, 1]).substitute_power(2), IntPoly([1, 0, 1, 0, 1, 0, 1]))
        with self.assertRaises(DomainError):
            X.substitute_power(0)

    def test_shift(self):
        self.assertEqual(IntPoly([1, 2]).shift(2), IntPoly([0, 0, 1, 2]))

    def test_exact_div(self):
        self.assertEqual(IntPoly([1, -1, -1, 1]).exact_div(IntPoly([1, -1])), IntPoly([1, 0, -1]))
        self.assertEqual(IntPoly([0, 0, 2, 2]).exact_div(IntPoly([0, 1, 1])), IntPoly([0, 2]))
        self.assertEqual(IntPoly().exact_div(X), IntPoly())

    def test_exact_div_remainder(self):
        with self.assertRaises(ConsistencyError):
            IntPoly([1, 1]).exact_div(IntPoly([1, -2]))
        with self.assertRaises(ConsistencyError):
            IntPoly([1, 1]).exact_div(IntPoly([2]))
        with self.assertRaises(ConsistencyError):
            X.exact_div(IntPoly())

    def test_str(self):
        self.assertEqual(str(IntPoly([1, -1, 0, 2])), '1 - q + 2q^3')
        self.assertEqual(str(IntPoly()), '0')

class TestRationalSeries(unittest.TestCase):
    def test_series_coeffs(self):
        self.assertEqual(series.series_coeffs(([0, 1, -1], [1, -2, -1, 2, 1]), 8),
            [1, 1, 3, 5, 10, 18, 33, 59])
        self.assertEqual(series.series_coeffs(([0, 1], [1, -1, -1]), 8),
            [1, 1, 2, 3, 5, 8, 13, 21])
        self.assertEqual(series.series_coeffs(([0, 0, 1], [1, -2, -1, 2, 1]), 8),
            [0, 1, 2, 5, 10, 20, 38, 71])
        self.assertEqual(series.series_coeffs(([0, 1], [1]), 3), [1, 0, 0])
        self.assertEqual(series.series_coeffs(([0, 1], [1, -1]), 0), [])

    def test_normalization(self):
        with self.assertRaises(NormalizationError):
            RationalSeries([1], [2, 1])
        with self.assertRaises(NormalizationError):
            series.series_coeffs(([1], [0, 1]), 4)

class TestCatalog(unittest.TestCase):
    def test_entries(self):
        self.assertEqual(series.gf_catalog('g'), RationalSeries([0, 1, 0, -1], [1, -2, -1, 2, 1]))
        self.assertEqual(series.gf_catalog('g_r_d', 2, 1), RationalSeries([0, 1], [1, -1, -1]))
        self.assertEqual(series.gf_catalog('h_r', 3), RationalSeries([0, 1, 1], [1, -1, -1, -1]))

    def test_example_rows(self):
        self.assertEqual(series.series_coeffs(series.gf_catalog('g'), 8), [1, 2, 4, 8, 15, 28, 51, 92])
        self.assertEqual(series.series_coeffs(series.gf_catalog('h'), 8), [1, 1, 3, 5, 10, 18, 33, 59])
        self.assertEqual(series.series_coeffs(series.gf_catalog('h1'), 8), [0, 1, 2, 5, 10, 20, 38, 71])
        self.assertEqual(series.series_coeffs(series.gf_catalog('g_minus_h'), 8), [0, 1, 1, 3, 5, 10, 18, 33])

    def test_fib_entries(self):
        fib = [pt.fibonacci(M) for M in range(1, 21)]
        self.assertEqual(series.series_coeffs(series.gf_catalog('fib'), 20), fib)
        self.assertEqual(series.series_coeffs(series.gf_catalog('fib_weighted'), 20),
            [M * F for M, F in enumerate(fib, 1)])
        self.assertEqual(series.series_coeffs(series.gf_catalog('fib_self_convolution'), 20),
            [sum(pt.fibonacci(j) * pt.fibonacci(M - j) for j in range(M + 1)) for M in range(1, 21)])

    def test_regular_entries(self):
        self.assertEqual(series.series_coeffs(series.gf_catalog('g_r', 3), 4), [1, 2, 3, 5])
        self.assertEqual(series.series_coeffs(series.gf_catalog('h_r', 3), 4), [1, 2, 3, 6])
        for r in range(2, 7):
            raw = series.gf_catalog('h_r_raw', r)
            self.assertEqual(series.cancel_common_factor(raw, ONE - X), series.gf_catalog('h_r', r))

    def test_g_r_reduces_for_r2(self):
        self.assertEqual(series.gf_catalog('g_r', 2), RationalSeries([0, 1], [1, -1, -1]))

    def test_bad_arguments(self):
        with self.assertRaises(DomainError):
            series.gf_catalog('nonexist')
        with self.assertRaises(DomainError):
            series.gf_catalog('h_r')
        with self.assertRaises(DomainError):
            series.gf_catalog('h_r', 1)
        with self.assertRaises(DomainError):
            series.gf_catalog('g_r_d', 3, 3)

class TestClosedForms(unittest.TestCase):
    def test_closed_form(self):
        self.assertEqual(series.closed_form('g', 5), 15)
        self.assertEqual(series.closed_form('h', 5), 10)
        self.assertEqual(series.closed_form('g1', 5), 10)
        self.assertEqual(series.closed_form('h1', 5), 10)
        self.assertEqual(series.closed_form('index_sum', 4), 3)
        self.assertEqual(series.closed_form('index_sum', 1), 0)
        with self.assertRaises(DomainError):
            series.closed_form('g', 0)
        with self.assertRaises(DomainError):
            series.closed_form('nonexist', 3)

    def test_recurrence_step(self):
        self.assertEqual(series.recurrence_step('g', 4, 8, 5), 15)
        self.assertEqual(series.recurrence_step('h', 3, 5, 5), 10)
        self.assertEqual(series.recurrence_step('g1', 1, 2, 4), 5)
        with self.assertRaises(DomainError):
            series.recurrence_step('g', 0, 1, 1)

    def test_recurrence_sequence(self):
        self.assertEqual(series.recurrence_sequence('g', 8), [1, 2, 4, 8, 15, 28, 51, 92])
        self.assertEqual(series.recurrence_sequence('h', 8), [1, 1, 3, 5, 10, 18, 33, 59])
        self.assertEqual(series.recurrence_sequence('g1', 8), [0, 1, 2, 5, 10, 20, 38, 71])
        self.assertEqual(series.recurrence_sequence('h1', 1), [0])

    def test_recurrence_sequence_iterates_step(self):
        with mock.patch('partverify.combinat.series.recurrence_step', wraps=series.recurrence_step) as mock_step:
            values = series.recurrence_sequence('h', 6)

        self.assertEqual(values, [1, 1, 3, 5, 10, 18])
        self.assertEqual(mock_step.call_count, 5)
        mock_step.assert_any_call('h', 1, 1, 3)
        mock_step.assert_called_with('h', 5, 10, 6)

    def test_fib_convolution(self):
        self.assertEqual(series.fib_convolution('cfib1', 5), 15)
        self.assertEqual(series.fib_convolution('cfib2', 5), 10)
        self.assertEqual(series.fib_convolution('cfib3', 5), 10)
        self.assertEqual(series.fib_convolution('cfib4', 4), 3)
        with self.assertRaises(DomainError):
            series.fib_convolution('cfib1', 1)

    def test_four_way_agreement(self):
        N = 200
        g = series.series_coeffs(series.gf_catalog('g'), N)
        h = series.series_coeffs(series.gf_catalog('h'), N)
        g1 = series.series_coeffs(series.gf_catalog('g1'), N)
        rec_g = series.recurrence_sequence('g', N)
        rec_h = series.recurrence_sequence('h', N)
        rec_g1 = series.recurrence_sequence('g1', N)
        for M in range(2, N + 1, 7):
            self.assertEqual(g[M - 1], series.closed_form('g', M))
            self.assertEqual(g[M - 1], series.fib_convolution('cfib1', M))
            self.assertEqual(g[M - 1], rec_g[M - 1])
            self.assertEqual(h[M - 1], series.closed_form('h', M))
            self.assertEqual(h[M - 1], series.fib_convolution('cfib2', M))
            self.assertEqual(h[M - 1], rec_h[M - 1])
            self.assertEqual(g1[M - 1], series.closed_form('g1', M))
            self.assertEqual(g1[M - 1], series.fib_convolution('cfib3', M))
            self.assertEqual(g1[M - 1], rec_g1[M - 1])
            self.assertEqual(g[M - 1] - h[M - 1], series.closed_form('index_sum', M))
            self.assertEqual(g[M - 1] - h[M - 1], series.fib_convolution('cfib4', M))

    def test_shared_denominator_recurrence(self):
        g = [0] + series.recurrence_sequence('g', 30)
        self.assertIsNone(series.shared_denominator_recurrence(g))
        g[20] += 1
        self.assertEqual(series.shared_denominator_recurrence(g), 20)

class TestQPolynomials(unittest.TestCase):
    def test_q_binomial(self):
        self.assertEqual(series.q_binomial(4, 2), IntPoly([1, 1, 2, 1, 1]))
        self.assertEqual(series.q_binomial(7, 0), ONE)
        self.assertEqual(series.q_binomial(4, 1, 2), IntPoly([1, 0, 1, 0, 1, 0, 1]))
        self.assertEqual(series.q_binomial(3, 4), IntPoly())
        self.assertEqual(series.q_binomial(3, -1), IntPoly())
        with self.assertRaises(DomainError):
            series.q_binomial(-1, 0)

    def test_q_binomial_counts_box_partitions(self):
        m, j = 7, 3
        counts = [0] * (j * (m - j) + 1)
        for n in range(len(counts)):
            counts[n] = sum(1 for p in pt.enumerate_by_size(n)
                if len(p) <= j and (not p or p[0] <= m - j))
        self.assertEqual(list(series.q_binomial(m, j)), counts)

    def test_perimeter_q_row(self):
        row = series.perimeter_q_row(5)
        self.assertEqual([row.coeff(n) for n in range(5, 10)], [5, 3, 4, 3, 1])
        self.assertEqual(row.coeff(4), 0)
        self.assertEqual(row(1), 16)
        self.assertEqual(series.perimeter_q_row(1), X)
        self.assertEqual(series.perimeter_q_row(3)(1), 4)
        with self.assertRaises(DomainError):
            series.perimeter_q_row(0)

if __name__ == '__main__':
    unittest.main()
