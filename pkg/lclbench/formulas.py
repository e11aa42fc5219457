# -*- coding: utf-8; -*-

"""Closed-form parameters and exponents.

Functions accept floats or :class:`fractions.Fraction`; the exponent formulas
stay exact for Fraction arguments.
"""

import math
from fractions import Fraction

from lclbench.exc import ParameterError

REGIMES = ('poly', 'logstar')
ROUNDINGS = ('half-up', 'ceil')


def _check_efficiency(delta, d):
    if d < 0 or delta - d - 1 < 1 or delta < 3:
        raise ParameterError('need delta >= 3 and 0 <= d <= delta - 2 (delta=%r, d=%r)'
                             % (delta, d))


def x_factor(delta, d):
    """Efficiency factor log(delta-d-1) / log(delta-1)."""
    _check_efficiency(delta, d)
    return math.log2(delta - d - 1) / math.log2(delta - 1)


def x_prime(delta, d):
    _check_efficiency(delta, d)
    return math.log2(delta - d + 1) / math.log2(delta - 1)


def params_from_rational(p, q):
    """Degree bound and d whose efficiency factor is exactly p/q."""
    if not 0 < p < q:
        raise ParameterError('need 0 < p < q, got p=%r q=%r' % (p, q))
    return 2 ** q + 1, 2 ** q - 2 ** p


def parse_rational(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParameterError('%r is not a rational number' % (text,))
    return value.numerator, value.denominator


def _geometric(x, count):
    return sum((2 - x) ** j for j in range(count))


def alpha_poly(x, k):
    if k < 1:
        raise ParameterError('k must be >= 1')
    return 1 / _geometric(x, k)


def alpha_seq_poly(x, k):
    a1 = alpha_poly(x, k)
    return [a1 * (2 - x) ** (i - 1) for i in range(1, k)]


def alpha_logstar(x, k):
    if k < 1:
        raise ParameterError('k must be >= 1')
    return 1 / (1 + (1 - x) * _geometric(x, k - 1))


def alpha_seq_logstar(x, k):
    a1 = alpha_logstar(x, k)
    return [a1 * (2 - x) ** (i - 1) for i in range(1, k)]


def alpha_seq(x, k, regime):
    if regime == 'poly':
        return alpha_seq_poly(x, k)
    if regime == 'logstar':
        return alpha_seq_logstar(x, k)
    raise ParameterError('unknown regime %r' % (regime,))


def iterated_log(n):
    """Applications of log2 until the value drops to <= 1."""
    if n < 1:
        raise ParameterError('log* needs n >= 1')
    count = 0
    value = n
    while value > 1:
        value = math.log2(value)
        count += 1
    return count


def round_half_up(value):
    return int(math.floor(value + 0.5))


def round_up(value):
    """Ceiling that ignores float noise just above an integer."""
    return int(math.ceil(value - 1e-9))


def lengths_from_exponents(n, alphas, regime='poly', rounding='half-up'):
    """Path lengths for a target size n; the last length absorbs rounding.

    ``rounding='ceil'`` rounds l_1..l_{k-1} up, the way the gamma schedules
    of the solvers round, so a length and its threshold never straddle one
    another as n grows. The last length is always rounded half up.
    """
    if regime not in REGIMES:
        raise ParameterError('unknown regime %r' % (regime,))
    if rounding not in ROUNDINGS:
        raise ParameterError('unknown rounding %r, expected one of %s'
                             % (rounding, ', '.join(ROUNDINGS)))
    if any(a <= 0 for a in alphas):
        raise ParameterError('exponents must be positive')
    if regime == 'poly':
        if sum(alphas) >= 1:
            raise ParameterError('exponents sum to %s >= 1' % (sum(alphas),))
        base = n
    else:
        base = iterated_log(n)
    to_int = round_up if rounding == 'ceil' else round_half_up
    lengths = [to_int(float(base) ** float(a)) for a in alphas]
    if any(l < 1 for l in lengths):
        raise ParameterError('length below 1 after rounding: %r' % (lengths,))
    product = 1
    for l in lengths:
        product *= l
    last = round_half_up(n / float(product))
    if last < 1:
        raise ParameterError('no room left for the top level (n=%d, lengths=%r)' % (n, lengths))
    return lengths + [last]


def logstar_gammas(n, k):
    """gamma_i = ceil(t ** 2**(i-1)) with t = (log* n) ** (1 / 2**(k-1))."""
    t = iterated_log(n) ** (1.0 / 2 ** (k - 1))
    return [max(1, round_up(t ** (2 ** (i - 1)))) for i in range(1, k)]


def poly_gammas(n, alphas):
    return [max(1, round_up(n ** float(a))) for a in alphas]


def gap_params(a, b, eps, max_c=64):
    """Smallest c giving delta, d with x = a/b exactly and x' - x < eps."""
    if not 0 < a < b:
        raise ParameterError('need 0 < a < b, got a=%r b=%r' % (a, b))
    for c in range(1, max_c + 1):
        delta = 2 ** (c * b) + 1
        d = 2 ** (c * b) - 2 ** (c * a)
        if x_prime(delta, d) - x_factor(delta, d) < eps:
            return delta, d, c
    raise ParameterError('no c <= %d brings the gap below %r' % (max_c, eps))


def density_params(lo, hi, k, regime='poly', max_q=16):
    """First p/q (smallest q, then p) with alpha_1(p/q) in [lo, hi]."""
    alpha = alpha_poly if regime == 'poly' else alpha_logstar
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            value = alpha(Fraction(p, q), k)
            if lo <= value <= hi:
                delta, d = params_from_rational(p, q)
                return p, q, delta, d
    raise ParameterError('no p/q with q <= %d puts alpha_1 into [%r, %r]' % (max_q, lo, hi))


def even_split_copies(w, ell, x):
    """Copies forced by w weight nodes split evenly over ell trees."""
    return w ** x * ell ** (1 - x)


def weight_tree_copy_bound(w, delta, d):
    return w ** x_factor(delta, d)


def copy_ball_bound(size, delta, d):
    return 6 * size ** x_factor(delta, d)


def augmented_copy_bound(w, delta, k):
    return w - (k - 1) - sum(w / float((delta - 1) ** i) for i in range(1, k))
