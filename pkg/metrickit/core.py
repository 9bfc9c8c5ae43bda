"""
The metric axioms and the constructions every metric space supports: the
discrete metric, the snowflake transform, open balls and restriction to a
subset
"""

import math
import logging
import numpy as np
from dataclasses import dataclass, field
from typing import Any, List, Tuple

from .config import SETTINGS
from .errors import InputError, ParameterError
from .metrics import as_metric

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Violation():
    """
    One offending pair or triple: sample indices, the points, the distances
    involved and the amount by which the axiom fails
    """

    indices: Tuple[int, ...]
    points: Tuple[Any, ...]
    values: Tuple[Any, ...]
    defect: Any

    def to_dict(self):
        return {
            'indices' : list(self.indices),
            'points'  : [_describe(point) for point in self.points],
            'values'  : [_describe(value) for value in self.values],
            'defect'  : _describe(self.defect)
        }

def _describe(value):
    """
    JSON-friendly rendering of points and distances
    """

    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if hasattr(value, 'to_json'):
        return value.to_json()
    if hasattr(value, 'coords'):
        coords = value.coords
        return list(getattr(coords, 'coords', coords))
    if isinstance(value, (tuple, list)):
        return [_describe(item) for item in value]

    return str(value)

@dataclass
class AxiomReport():
    samples_tested: int
    tolerance: float
    nonneg_violations: List[Violation] = field(default_factory=list)
    identity_violations: List[Violation] = field(default_factory=list)
    symmetry_violations: List[Violation] = field(default_factory=list)
    triangle_violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self):
        return not (self.nonneg_violations or self.identity_violations or self.symmetry_violations or self.triangle_violations)

    @property
    def violation_count(self):
        return len(self.nonneg_violations) + len(self.identity_violations) + len(self.symmetry_violations) + len(self.triangle_violations)

    def merge(self, other):
        """
        Combine two reports (associative; violations keep their order)
        """

        return AxiomReport(
            self.samples_tested + other.samples_tested,
            max(self.tolerance, other.tolerance),
            self.nonneg_violations + other.nonneg_violations,
            self.identity_violations + other.identity_violations,
            self.symmetry_violations + other.symmetry_violations,
            self.triangle_violations + other.triangle_violations,
        )

    def to_dict(self):
        return {
            'samples_tested'      : self.samples_tested,
            'tolerance'           : self.tolerance,
            'passed'              : self.passed,
            'nonneg_violations'   : [v.to_dict() for v in self.nonneg_violations],
            'identity_violations' : [v.to_dict() for v in self.identity_violations],
            'symmetry_violations' : [v.to_dict() for v in self.symmetry_violations],
            'triangle_violations' : [v.to_dict() for v in self.triangle_violations],
        }

def _triangle_candidates(matrix, exact, tolerance):
    """
    Index triples (i, j, k) where d(i, k) - d(i, j) - d(j, k) may exceed the
    tolerance; floating metrics are decided here, exact ones are only
    filtered and then re-checked exactly by the caller
    """

    n = len(matrix)
    try:
        approx = np.array(matrix, dtype=float)
    except OverflowError:
        return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]

    defect = approx[:, None, :] - approx[:, :, None] - approx[None, :, :]
    if not exact:
        return [tuple(int(a) for a in index) for index in np.argwhere(defect > tolerance)]

    margin = 1e-9 * max(1.0, float(np.abs(approx).max()))

    return [tuple(int(a) for a in index) for index in np.argwhere(defect > -margin)]

def verify_metric_axioms(metric, sample, tolerance=None):
    """
    Check the metric axioms on every pair and ordered triple of a finite sample

    Keywords
    --------
    metric : MetricDescriptor or callable
        The metric under test
    sample : list
        Points of the metric's carrier (at most verification.max_sample)
    tolerance : float or None
        A violation is recorded when its defect exceeds this value; defaults
        to 0 for exact metrics and verification.tolerance otherwise
    """

    metric = as_metric(metric)
    sample = list(sample)
    if not sample:
        raise InputError('The sample must contain at least one point')
    if len(sample) > SETTINGS['verification']['max_sample']:
        raise ParameterError(f'Samples are capped at {SETTINGS["verification"]["max_sample"]} points, got {len(sample)}')
    if tolerance is None:
        tolerance = metric.default_tolerance
    if tolerance < 0:
        raise ParameterError(f'Tolerance must be nonnegative, got {tolerance}')

    points = [metric.validate(point) for point in sample]
    n = len(points)
    matrix = [[metric.evaluate(x, y) for y in points] for x in points]
    report = AxiomReport(n, tolerance)

    for i in range(n):
        for j in range(n):
            value = matrix[i][j]
            if -value > tolerance:
                report.nonneg_violations.append(Violation((i, j), (sample[i], sample[j]), (value,), -value))
            if i == j:
                if value > tolerance:
                    report.identity_violations.append(Violation((i, i), (sample[i], sample[i]), (value,), value))
            elif value <= tolerance:
                separation = metric.separation(points[i], points[j])
                if separation > tolerance:
                    report.identity_violations.append(Violation((i, j), (sample[i], sample[j]), (value,), separation))
            if i < j:
                asymmetry = abs(value - matrix[j][i])
                if asymmetry > tolerance:
                    report.symmetry_violations.append(Violation((i, j), (sample[i], sample[j]), (value, matrix[j][i]), asymmetry))

    for i, j, k in _triangle_candidates(matrix, metric.exact, tolerance):
        defect = matrix[i][k] - matrix[i][j] - matrix[j][k]
        if defect > tolerance:
            report.triangle_violations.append(
                Violation((i, j, k), (sample[i], sample[j], sample[k]), (matrix[i][k], matrix[i][j], matrix[j][k]), defect)
            )

    if not report.passed:
        logger.warning(f'{metric.name}: {report.violation_count} axiom violations on {n} points')
    else:
        logger.debug(f'{metric.name}: axioms hold on {n} points')

    return report

def discrete_distance(x, y):
    """
    1 between distinct tokens, 0 otherwise
    """

    return 0 if x == y else 1

def snowflake_distance(base, alpha):
    """
    base ** alpha, evaluated as exp(alpha log(base)) with 0 mapped to 0
    """

    if not 0 < alpha <= 1:
        raise ParameterError(f'Snowflake exponent must lie in (0, 1], got {alpha}')
    if base < 0:
        raise InputError(f'Distances are nonnegative, got {base}')
    if alpha == 1:
        return base
    if base == 0:
        return 0.0

    return math.exp(alpha * math.log(base))

def _power(base, exponent):
    """
    base ** exponent for base >= 0, with 0 ** e = 0 (e > 0) and overflow to inf
    """

    if base == 0:
        return 0.0 if exponent > 0 else 1.0
    if exponent == 1:
        return base
    try:
        return math.exp(exponent * math.log(base))
    except OverflowError:
        return math.inf

@dataclass(frozen=True)
class SnowflakeCheck():
    """
    (a + b)^alpha against a^alpha + b^alpha, plus the chained bound
    a + b <= (a^alpha + b^alpha) max(a, b)^(1 - alpha) <= (a^alpha + b^alpha)^(1 / alpha)
    """

    holds: bool
    defect: float
    lhs: float
    rhs: float
    sum_ab: float
    middle: float
    upper: float
    chain_holds: bool
    max_bound_holds: bool

def snowflake_inequality_holds(a, b, alpha, tolerance=0.0):
    """
    Check (a + b)^alpha <= a^alpha + b^alpha + tolerance

    The signed defect is lhs - rhs (nonpositive when the inequality holds).
    The chained bounds are compared with the tolerance scaled by their size.
    """

    if a < 0 or b < 0:
        raise InputError(f'Both arguments must be nonnegative, got {a} and {b}')
    if not 0 < alpha <= 1:
        raise ParameterError(f'Snowflake exponent must lie in (0, 1], got {alpha}')

    a, b = float(a), float(b)
    lhs = snowflake_distance(a + b, alpha)
    rhs = snowflake_distance(a, alpha) + snowflake_distance(b, alpha)
    defect = lhs - rhs

    sum_ab = a + b
    largest = max(a, b)
    middle = rhs * _power(largest, 1 - alpha) if alpha < 1 else rhs
    upper = _power(rhs, 1 / alpha)

    def _le(small, large):
        return small <= large + tolerance * max(1.0, abs(large))

    return SnowflakeCheck(
        holds=defect <= tolerance,
        defect=defect,
        lhs=lhs,
        rhs=rhs,
        sum_ab=sum_ab,
        middle=middle,
        upper=upper,
        chain_holds=_le(sum_ab, middle) and _le(middle, upper),
        max_bound_holds=_le(largest, upper),
    )

def open_ball(metric, center, radius, candidates):
    """
    The candidates y with d(center, y) < radius, in input order
    """

    metric = as_metric(metric)
    if not radius > 0:
        raise ParameterError(f'Radius must be positive, got {radius}')
    x = metric.validate(center)

    return [y for y in candidates if metric.evaluate(x, metric.validate(y)) < radius]

class FiniteMetricSpace():
    """
    A metric restricted to a finite subset of its carrier
    """

    def __init__(self, metric, points):
        self.metric = as_metric(metric)
        self.points = list(points)
        self._validated = [self.metric.validate(point) for point in self.points]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def distance(self, i, j):
        return self.metric.evaluate(self._validated[i], self._validated[j])

    def distance_matrix(self):
        n = len(self._validated)
        return [[self.distance(i, j) for j in range(n)] for i in range(n)]

    def verify(self, tolerance=None):
        return verify_metric_axioms(self.metric, self.points, tolerance)

def restrict(metric, subset):
    return FiniteMetricSpace(metric, subset)

def real_line_distance(x, y):
    """
    The standard metric |x - y| on the real line (exact on rationals)
    """

    return abs(x - y)

def real_abs_checks(x, y):
    """
    Whether |x y| = |x| |y| and |x + y| <= |x| + |y|
    """

    return abs(x * y) == abs(x) * abs(y) and abs(x + y) <= abs(x) + abs(y)
