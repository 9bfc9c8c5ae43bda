"""
Norms on R^n, the metrics they induce, and unit-ball geometry
"""

import math
import logging
import numpy as np
from fractions import Fraction
from dataclasses import dataclass
from typing import Tuple

from .config import SETTINGS
from .errors import InputError, DimensionError, ParameterError, SamplingError
from .utilities import make_rng

logger = logging.getLogger(__name__)

# Norm kinds
L1   = 'l1'
L2   = 'l2'
LINF = 'linf'
NORM_KINDS = (L1, L2, LINF)

@dataclass(frozen=True)
class Point():
    """
    A point of R^n with finite real coordinates
    """

    coords: Tuple[float, ...]

    def __post_init__(self):
        if len(self.coords) == 0:
            raise InputError('A point needs at least one coordinate')
        for value in self.coords:
            if isinstance(value, (Fraction, bool)) or not isinstance(value, (int, float, np.integer, np.floating)):
                raise InputError(f'{value!r} is not a real coordinate')
            if not math.isfinite(value):
                raise InputError(f'Coordinates must be finite, got {value!r}')
        object.__setattr__(self, 'coords', tuple(float(value) for value in self.coords))

    @classmethod
    def of(cls, values):
        if isinstance(values, cls):
            return values
        if isinstance(values, np.ndarray):
            values = values.tolist()
        try:
            return cls(tuple(values))
        except TypeError:
            raise InputError(f'{values!r} is not a coordinate sequence') from None

    @property
    def dim(self):
        return len(self.coords)

    @property
    def array(self):
        return np.array(self.coords, dtype=float)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

@dataclass(frozen=True)
class BallPolygon():
    """
    Boundary of a 2-D ball traced counterclockwise
    """

    metric_kind: str
    center: Point
    radius: float
    vertices: Tuple[Point, ...]

def _check_kind(kind):
    if kind not in NORM_KINDS:
        raise ParameterError(f'Unknown norm kind: {kind!r} (expected one of {", ".join(NORM_KINDS)})')

def _norm_of_array(kind, x):
    """
    Norm of a float array; the l2 norm is scaled by the largest magnitude
    before squaring so extreme coordinates neither overflow nor underflow
    """

    magnitudes = np.abs(x)
    if kind == L1:
        return float(magnitudes.sum())
    largest = float(magnitudes.max())
    if kind == LINF or largest == 0.0:
        return largest
    scaled = magnitudes / largest
    return largest * math.sqrt(float(np.dot(scaled, scaled)))

def norm(kind, x):
    """
    Return ||x||_1, ||x||_2 or ||x||_inf
    """

    _check_kind(kind)
    x = Point.of(x)

    return _norm_of_array(kind, x.array)

def distance(kind, x, y):
    """
    Metric induced by the norm: d(x, y) = ||x - y||
    """

    _check_kind(kind)
    x, y = Point.of(x), Point.of(y)
    if x.dim != y.dim:
        raise DimensionError(f'Dimension mismatch: {x.dim} != {y.dim}')

    return _norm_of_array(kind, x.array - y.array)

def homogeneity_defect(kind, t, x):
    """
    | ||t x|| - |t| ||x|| |
    """

    _check_kind(kind)
    x = Point.of(x)
    t = float(t)
    array = x.array

    # t x may leave the float range; scaling t by a power of two is exact
    exponent = 0
    with np.errstate(over='ignore'):
        scaled = t * array
    if not np.all(np.isfinite(scaled)):
        exponent = math.frexp(t)[1] + math.frexp(float(np.abs(array).max()))[1]
        t = math.ldexp(t, -exponent)
        scaled = t * array

    defect = abs(_norm_of_array(kind, scaled) - abs(t) * _norm_of_array(kind, array))
    with np.errstate(over='ignore'):
        return float(np.ldexp(defect, exponent))

def subadditivity_defect(kind, x, y):
    """
    ||x + y|| - ||x|| - ||y|| (nonpositive up to rounding for a norm)
    """

    x, y = Point.of(x), Point.of(y)
    if x.dim != y.dim:
        raise DimensionError(f'Dimension mismatch: {x.dim} != {y.dim}')

    return norm(kind, Point.of(x.array + y.array)) - norm(kind, x) - norm(kind, y)

def equivalence_bounds(x, y):
    """
    Return (d_inf, d_2, d_1, n * d_inf), which is nondecreasing for every pair
    """

    x, y = Point.of(x), Point.of(y)
    dinf = distance(LINF, x, y)

    return dinf, distance(L2, x, y), distance(L1, x, y), x.dim * dinf

def unit_ball_polygon(kind, center=(0.0, 0.0), radius=1.0, vertex_count=None):
    """
    Polygon tracing the boundary of the ball of the given radius

    Keywords
    --------
    vertex_count : int or None
        Number of vertices of the l2 approximation (at least 64)
    """

    _check_kind(kind)
    center = Point.of(center)
    if center.dim != 2:
        raise ParameterError(f'Ball polygons are drawn in the plane, got a center of dimension {center.dim}')
    radius = float(radius)
    if not radius > 0:
        raise ParameterError(f'Radius must be positive, got {radius}')

    cx, cy = center.coords
    if kind == L1:
        offsets = [(radius, 0.0), (0.0, radius), (-radius, 0.0), (0.0, -radius)]
    elif kind == LINF:
        offsets = [(radius, radius), (-radius, radius), (-radius, -radius), (radius, -radius)]
    else:
        if vertex_count is None:
            vertex_count = SETTINGS['vectors']['polygon_vertices']
        if vertex_count < 64:
            raise ParameterError(f'The round ball needs at least 64 vertices, got {vertex_count}')
        angles = 2 * np.pi * np.arange(vertex_count) / vertex_count
        offsets = [(radius * math.cos(a), radius * math.sin(a)) for a in angles]

    vertices = tuple(Point((cx + dx, cy + dy)) for dx, dy in offsets)

    return BallPolygon(kind, center, radius, vertices)

def sample_closed_ball(kind, dim, rng=None):
    """
    Draw a point of the closed unit ball by rejection from the cube [-1, 1]^n
    """

    _check_kind(kind)
    rng = make_rng(rng)
    for attempt in range(SETTINGS['vectors']['max_rejections']):
        candidate = rng.uniform(-1.0, 1.0, size=dim)
        if _norm_of_array(kind, candidate) <= 1.0:
            return Point.of(candidate)

    raise SamplingError(f'Rejection sampling of the {kind} ball in dimension {dim} did not terminate')

@dataclass
class ConvexityReport():
    kind: str
    trials: int
    convexity_violations: list
    symmetry_violations: list

    @property
    def passed(self):
        return not self.convexity_violations and not self.symmetry_violations

def check_convex_symmetric(kind, trials, seed=None, dim=2):
    """
    Test that the closed unit ball is convex and symmetric about the origin

    Keywords
    --------
    trials : int
        Number of random (x, y, t) draws
    seed : int
        Seed for the random generator
    dim : int
        Ambient dimension of the ball
    """

    _check_kind(kind)
    if trials < 1:
        raise ParameterError(f'At least one trial is required, got {trials}')

    rng = make_rng(seed)
    slack = 1.0 + SETTINGS['vectors']['convexity_slack']
    report = ConvexityReport(kind, trials, [], [])

    for trial in range(trials):
        x = sample_closed_ball(kind, dim, rng)
        y = sample_closed_ball(kind, dim, rng)
        t = float(rng.uniform(0.0, 1.0))
        combination = t * x.array + (1 - t) * y.array
        value = _norm_of_array(kind, combination)
        if value > slack:
            report.convexity_violations.append((x, y, t, value))
        reflected = _norm_of_array(kind, -x.array)
        if reflected > slack:
            report.symmetry_violations.append((x, reflected))

    if not report.passed:
        logger.warning(f'{kind} ball failed the convexity/symmetry check')

    return report
