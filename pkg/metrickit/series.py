"""
Geometric series in the standard and p-adic metrics, in exact arithmetic

The convergence checks here are finite-window proxies: a finite prefix of a
sequence can never decide convergence, so cauchy_window_check only looks at
the tail half of the prefix it is given.
"""

import math
import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import List, Optional

from .errors import DivergenceError, InputError, ParameterError
from .padic import PAdicContext, as_rational, p_adic_abs, format_rational

logger = logging.getLogger(__name__)

# A series metric is None for the standard metric on Q, or a PAdicContext
STANDARD = None

def metric_label(metric):
    return 'standard' if metric is STANDARD else f'padic({metric.p})'

def parse_series_metric(name, p=None):
    """
    Build a series metric from a CLI-style name ('standard' or 'padic')
    """

    if name == 'standard':
        return STANDARD
    if name == 'padic':
        if p is None:
            raise ParameterError('The padic metric needs a prime')
        return PAdicContext(int(p))

    raise ParameterError(f'Unknown series metric: {name!r}')

def _absolute(metric, x):
    return abs(x) if metric is STANDARD else p_adic_abs(x, metric)

def _distance(metric, x, y):
    return _absolute(metric, x - y)

def _check_count(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParameterError(f'The number of terms must be a nonnegative integer, got {n!r}')

def geometric_partial_sum(x, n):
    """
    Sum of x^j for j = 0, ..., n (x^0 is 1, even for x = 0)
    """

    _check_count(n)
    x = as_rational(x)
    total, power = Fraction(0), Fraction(1)
    for j in range(n + 1):
        total += power
        power *= x

    return total

def geometric_identity_residual(x, n):
    """
    (1 - x) S_n - (1 - x^(n + 1)), which is exactly 0
    """

    x = as_rational(x)

    return (1 - x) * geometric_partial_sum(x, n) - (1 - x ** (n + 1))

def _check_convergent(x, metric):
    if x == 1:
        raise DivergenceError('The geometric series has no limit at x = 1')
    size = _absolute(metric, x)
    if size >= 1:
        bound = '|x|' if metric is STANDARD else f'|x|_{metric.p}'
        raise DivergenceError(f'{bound} = {format_rational(size)} >= 1: the geometric series does not converge in the {metric_label(metric)} metric')

def limit_error(x, n, metric=STANDARD):
    """
    Distance from S_n to 1 / (1 - x) in the chosen metric, exactly
    """

    _check_count(n)
    x = as_rational(x)
    _check_convergent(x, metric)

    return _distance(metric, geometric_partial_sum(x, n), 1 / (1 - x))

@dataclass
class PartialSumTrace():
    x: Fraction
    terms: int
    partial_sums: List[Fraction]
    metric: Optional[PAdicContext]
    distance_to_limit: List[Fraction]

    @property
    def limit(self):
        return 1 / (1 - self.x)

    def rows(self):
        return list(zip(range(self.terms + 1), self.partial_sums, self.distance_to_limit))

    def to_dict(self):
        return {
            'x'       : format_rational(self.x),
            'terms'   : self.terms,
            'metric'  : metric_label(self.metric),
            'limit'   : format_rational(self.limit),
            'rows'    : [
                {'k': k, 'partial_sum': format_rational(s), 'distance': format_rational(d)}
                    for k, s, d in self.rows()
            ]
        }

def partial_sum_trace(x, n, metric=STANDARD):
    """
    Partial sums S_0..S_n with their distances to the limit
    """

    _check_count(n)
    x = as_rational(x)
    _check_convergent(x, metric)

    limit = 1 / (1 - x)
    sums = []
    total, power = Fraction(0), Fraction(1)
    for k in range(n + 1):
        total += power
        power *= x
        sums.append(total)

    return PartialSumTrace(x, n, sums, metric, [_distance(metric, s, limit) for s in sums])

def _window_start(count):
    return math.ceil(count / 2)

def cauchy_window_check(terms, metric=STANDARD, epsilon=Fraction(1, 100)):
    """
    Check that the partial sums in the tail half of a finite prefix are
    pairwise closer than epsilon

    Returns
    -------
    (passed, pair) where pair is the first violating (i, j), i < j, of partial
    sum indices (0-based, S_i = a_0 + ... + a_i) or None
    """

    terms = [as_rational(a) for a in terms]
    if not terms:
        raise InputError('At least one term is required')
    epsilon = as_rational(epsilon)
    if epsilon <= 0:
        raise ParameterError(f'Epsilon must be positive, got {format_rational(epsilon)}')

    sums, total = [], Fraction(0)
    for a in terms:
        total += a
        sums.append(total)

    start = _window_start(len(sums))
    window = sums[start:]

    # in the standard metric the widest pair is (min, max)
    if metric is STANDARD and window and max(window) - min(window) < epsilon:
        return True, None

    for i in range(start, len(sums)):
        for j in range(i + 1, len(sums)):
            if _distance(metric, sums[i], sums[j]) >= epsilon:
                logger.debug(f'Cauchy window violated at ({i}, {j})')
                return False, (i, j)

    return True, None

def term_window_check(terms, metric=STANDARD, epsilon=Fraction(1, 100)):
    """
    Check that every term in the tail half of a finite prefix is smaller than
    epsilon in the chosen absolute value

    Returns
    -------
    (passed, index) with the first offending term index or None
    """

    terms = [as_rational(a) for a in terms]
    if not terms:
        raise InputError('At least one term is required')
    epsilon = as_rational(epsilon)
    if epsilon <= 0:
        raise ParameterError(f'Epsilon must be positive, got {format_rational(epsilon)}')

    for index in range(_window_start(len(terms)), len(terms)):
        if _absolute(metric, terms[index]) >= epsilon:
            return False, index

    return True, None
