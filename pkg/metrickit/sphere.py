"""
Great-circle distance on the unit sphere S^n in R^(n + 1)
"""

import math
import logging
import numpy as np
from dataclasses import dataclass

from .config import SETTINGS
from .errors import DimensionError, InputError, ParameterError, DegenerateConfigurationError, PreconditionError
from .utilities import make_rng
from .vectors import Point, L2, _norm_of_array

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class UnitVector():
    """
    A point of the unit sphere; coordinates are renormalized at construction
    """

    coords: Point

    def __post_init__(self):
        coords = Point.of(self.coords)
        length = _norm_of_array(L2, coords.array)
        if length == 0.0:
            raise InputError('The zero vector has no direction')
        if coords.dim < 2:
            raise DimensionError('The sphere needs an ambient dimension of at least 2')
        object.__setattr__(self, 'coords', Point.of(coords.array / length))

    @classmethod
    def of(cls, values):
        if isinstance(values, cls):
            return values
        return cls(Point.of(values))

    @property
    def dim(self):
        return self.coords.dim

    @property
    def array(self):
        return self.coords.array

    def __neg__(self):
        return UnitVector(Point.of(-self.array))

@dataclass(frozen=True)
class SliceExtremals():
    """
    The two points where the slice {w : d(y, w) = r} meets the great circle
    through x and y; u is the one nearer to x

    slice_radius is the geodesic radius r; the slice lies in the hyperplane
    through slice_center = cos(r) y with Euclidean radius sin(r)
    """

    u: UnitVector
    v: UnitVector
    slice_center: Point
    slice_radius: float

    @property
    def euclidean_radius(self):
        return math.sin(self.slice_radius)

def _pair(x, y):
    x, y = UnitVector.of(x), UnitVector.of(y)
    if x.dim != y.dim:
        raise DimensionError(f'Dimension mismatch: {x.dim} != {y.dim}')
    return x, y

def chord_distance(x, y):
    """
    Euclidean distance between two points of the sphere
    """

    x, y = _pair(x, y)

    return _norm_of_array(L2, x.array - y.array)

def geodesic_distance(x, y):
    """
    Length of the shorter great-circle arc, from sin(d / 2) = ||x - y|| / 2
    """

    x, y = _pair(x, y)
    if x.coords == y.coords:
        return 0.0
    if _norm_of_array(L2, x.array + y.array) <= SETTINGS['sphere']['antipodal_threshold']:
        return math.pi

    half_chord = _norm_of_array(L2, x.array - y.array) / 2

    return 2 * math.asin(min(max(half_chord, 0.0), 1.0))

def _orthonormal_frame(x, y):
    """
    Unit vector in the plane of x, y and 0, perpendicular to y, on the side of x
    """

    threshold = SETTINGS['sphere']['antipodal_threshold']
    residual = x.array - float(np.dot(x.array, y.array)) * y.array
    length = _norm_of_array(L2, residual)
    if length <= threshold:
        raise DegenerateConfigurationError('x = y or x = -y: the plane through x, y and 0 is not unique')

    return residual / length

def slice_extremal_points(x, y, r):
    """
    Intersect the slice {w : d(y, w) = r} with the great circle through x and y

    Parametrizing the circle as w(t) = cos(t) y + sin(t) e, with e the unit
    vector perpendicular to y on the side of x, the intersections are at t = r
    (nearer to x) and t = -r.
    """

    x, y = _pair(x, y)
    r = float(r)
    if not 0.0 < r < math.pi:
        raise ParameterError(f'The slice radius must lie in (0, pi), got {r}')

    e = _orthonormal_frame(x, y)
    u = UnitVector(Point.of(math.cos(r) * y.array + math.sin(r) * e))
    v = UnitVector(Point.of(math.cos(r) * y.array - math.sin(r) * e))

    return SliceExtremals(u, v, Point.of(math.cos(r) * y.array), r)

def slice_projection(x, y, r):
    """
    Orthogonal projection of x into the hyperplane {w : <w, y> = cos(r)}
    """

    x, y = _pair(x, y)
    shift = float(np.dot(x.array, y.array)) - math.cos(float(r))

    return Point.of(x.array - shift * y.array)

def sandwich_check(x, y, w, extremals, tolerance=None):
    """
    Whether ||x - u|| <= ||x - w|| <= ||x - v|| and the same for geodesic
    distances, for w on the slice described by the extremals
    """

    if tolerance is None:
        tolerance = SETTINGS['sphere']['tolerance']
    x, y = _pair(x, y)
    w = UnitVector.of(w)
    radius = geodesic_distance(y, w)
    if abs(radius - extremals.slice_radius) > tolerance:
        raise PreconditionError(f'w is at distance {radius} from y, not on the slice of radius {extremals.slice_radius}')

    for measure in (chord_distance, geodesic_distance):
        near = measure(x, extremals.u)
        middle = measure(x, w)
        far = measure(x, extremals.v)
        if not (near <= middle + tolerance and middle <= far + tolerance):
            logger.debug(f'{measure.__name__} sandwich failed: {near}, {middle}, {far}')
            return False

    return True

def random_unit_vector(dim, rng=None):
    """
    Normalized standard Gaussian vector in R^dim (rotation invariant)
    """

    rng = make_rng(rng)
    while True:
        candidate = rng.standard_normal(dim)
        if _norm_of_array(L2, candidate) > 0.0:
            return UnitVector(Point.of(candidate))

def random_slice_point(y, r, rng=None):
    """
    A random point w of the sphere with d(y, w) = r
    """

    y = UnitVector.of(y)
    rng = make_rng(rng)
    while True:
        direction = rng.standard_normal(y.dim)
        direction = direction - float(np.dot(direction, y.array)) * y.array
        length = _norm_of_array(L2, direction)
        if length > 1e-6:
            break

    return UnitVector(Point.of(math.cos(r) * y.array + math.sin(r) * direction / length))

def arc_polyline_length(x, y, segments):
    """
    Length of the polyline with equally spaced vertices on the shorter arc
    from x to y; bounded by the geodesic distance and converging to it
    """

    x, y = _pair(x, y)
    if segments < 1:
        raise ParameterError(f'At least one segment is required, got {segments}')

    angle = geodesic_distance(x, y)
    if angle == 0.0:
        return 0.0

    if angle == math.pi:
        # any half-circle will do: pick the axis least aligned with x
        axis = np.zeros(x.dim)
        axis[int(np.argmin(np.abs(x.array)))] = 1.0
        residual = axis - float(np.dot(axis, x.array)) * x.array
        e = residual / _norm_of_array(L2, residual)
    else:
        e = _orthonormal_frame(y, x)

    angles = np.linspace(0.0, angle, segments + 1)
    vertices = np.outer(np.cos(angles), x.array) + np.outer(np.sin(angles), e)
    steps = np.diff(vertices, axis=0)

    return float(sum(_norm_of_array(L2, step) for step in steps))
