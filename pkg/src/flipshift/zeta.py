"""Closed-form periodic-point counts and zeta functions for flip pairs.

The three bilinear-form counts, the generating function packaging them, the
classical zeta series of the shift alone, and the zeta series of the full
shift-plus-flip action.  The counting formulas are fast; the brute-force
oracle in ``shifts`` exists to test them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .flips import FlipPair
from .matrices import IntMatrix, bilinear, delta, mat_mul, mat_pow, trace
from .report import Report
from .series import TruncatedSeries, series_add, series_exp
from .shifts import DEFAULT_PERIOD_CAP, count_pmn_bruteforce


@dataclass(frozen=True)
class FlipCountTriple:
    """Counts (p_{2m-1,0}, p_{2m,0}, p_{2m,1}) for one value of m."""

    m: int
    p_odd: int
    p_even0: int
    p_even1: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p_odd, self.p_even0, self.p_even1)


def p_flip_counts(pair: FlipPair, m: int) -> FlipCountTriple:
    """The three flip-fixed counts for period block m, via bilinear forms.

    p_{2m-1,0} = dJ^T A^(m-1) dAJ,  p_{2m,0} = dJ^T A^m dJ,
    p_{2m,1}   = dJA^T A^(m-1) dAJ, where dM is the diagonal of M.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    a, j = pair.A, pair.J
    d_j = delta(j)
    d_aj = delta(mat_mul(a, j))
    d_ja = delta(mat_mul(j, a))
    am1 = mat_pow(a, m - 1)
    am = mat_mul(am1, a)
    return FlipCountTriple(
        m=m,
        p_odd=bilinear(d_j, am1, d_aj),
        p_even0=bilinear(d_j, am, d_j),
        p_even1=bilinear(d_ja, am1, d_aj),
    )


def generating_function(pair: FlipPair, order: int) -> TruncatedSeries:
    """G(t) = sum_m [ p_{2m-1,0} t^(2m-1) + (p_{2m,0}+p_{2m,1})/2 t^(2m) ]."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [Fraction(0)] * (order + 1)
    for m in range(1, order // 2 + 2):
        triple = p_flip_counts(pair, m)
        if 2 * m - 1 <= order:
            coeffs[2 * m - 1] = Fraction(triple.p_odd)
        if 2 * m <= order:
            coeffs[2 * m] = Fraction(triple.p_even0 + triple.p_even1, 2)
    return TruncatedSeries(order, tuple(coeffs))


def artin_mazur_zeta(a: IntMatrix, order: int) -> TruncatedSeries:
    """exp( sum_n trace(A^n)/n t^n ), truncated."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [Fraction(0)] * (order + 1)
    power = IntMatrix.identity(a.row_labels)
    for n in range(1, order + 1):
        power = mat_mul(power, a)
        coeffs[n] = Fraction(trace(power), n)
    return series_exp(TruncatedSeries(order, tuple(coeffs)))


def lind_zeta(pair: FlipPair, order: int) -> TruncatedSeries:
    """Zeta series of the shift-plus-flip action.

    Computed as exp( (1/2) sum_n p_n t^(2n)/n + G(t) ), which is the half
    power of the shift zeta at t^2 times exp(G) without ever taking a square
    root: halving the inner counting sum is exact.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [Fraction(0)] * (order + 1)
    power = IntMatrix.identity(pair.A.row_labels)
    for n in range(1, order // 2 + 1):
        power = mat_mul(power, pair.A)
        coeffs[2 * n] = Fraction(trace(power), 2 * n)
    half_inner = TruncatedSeries(order, tuple(coeffs))
    return series_exp(series_add(half_inner, generating_function(pair, order)))


def verify_prop31(pair: FlipPair, m_max: int,
                  cap: int = DEFAULT_PERIOD_CAP) -> Report:
    """Check the three count identities relating a flip to its shift-composed flip.

    Composing the flip with one shift power shifts the count index n by one,
    so each identity is checked on the brute-force oracle with shifted n.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    report = Report(title="shift-composed flip count identities")
    for m in range(1, m_max + 1):
        lhs = count_pmn_bruteforce(pair, 2 * m - 1, 0, cap=cap)
        rhs = count_pmn_bruteforce(pair, 2 * m - 1, 1, cap=cap)
        report.add(f"p({2 * m - 1},0) == p({2 * m - 1},0 of composed)", lhs == rhs,
                   f"{lhs} vs {rhs}")
        lhs = count_pmn_bruteforce(pair, 2 * m, 0, cap=cap)
        rhs = count_pmn_bruteforce(pair, 2 * m, 2, cap=cap)
        report.add(f"p({2 * m},0) == p({2 * m},1 of composed)", lhs == rhs,
                   f"{lhs} vs {rhs}")
        lhs = count_pmn_bruteforce(pair, 2 * m, 1, cap=cap)
        rhs = count_pmn_bruteforce(pair, 2 * m, 1, cap=cap)
        report.add(f"p({2 * m},1) == p({2 * m},0 of composed)", lhs == rhs,
                   f"{lhs} vs {rhs}")
    return report
