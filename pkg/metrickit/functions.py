"""
Continuous piecewise-linear functions on [0, 1] with exact d_1 and d_inf
"""

import math
import numpy as np

from .config import SETTINGS
from .errors import InputError, DomainError, ParameterError
from .utilities import make_rng

D1   = 'd1'
DINF = 'dinf'

class PLFunction():
    """
    Linear interpolant of (breakpoint, value) pairs with breakpoints strictly
    increasing from 0 to 1
    """

    def __init__(self, breakpoints, values):
        """
        """

        try:
            breakpoints = tuple(float(b) for b in breakpoints)
            values = tuple(float(v) for v in values)
        except (TypeError, ValueError):
            raise InputError('Breakpoints and values must be real numbers') from None

        if len(breakpoints) < 2:
            raise InputError(f'A piecewise-linear function needs at least 2 breakpoints, got {len(breakpoints)}')
        if len(breakpoints) != len(values):
            raise InputError(f'{len(breakpoints)} breakpoints but {len(values)} values')
        if breakpoints[0] != 0.0 or breakpoints[-1] != 1.0:
            raise InputError(f'Breakpoints must start at 0 and end at 1, got {breakpoints[0]} and {breakpoints[-1]}')
        if any(b >= c for b, c in zip(breakpoints, breakpoints[1:])):
            raise InputError('Breakpoints must be strictly increasing')
        if not all(math.isfinite(v) for v in values):
            raise InputError('Values must be finite')

        self._breakpoints = breakpoints
        self._values = values

        return

    @property
    def breakpoints(self):
        return self._breakpoints

    @property
    def values(self):
        return self._values

    @classmethod
    def constant(cls, c):
        return cls((0.0, 1.0), (c, c))

    @classmethod
    def from_json(cls, document):
        """
        {"breakpoints": [...], "values": [...]}
        """

        try:
            return cls(document['breakpoints'], document['values'])
        except (KeyError, TypeError):
            raise InputError('A function document needs "breakpoints" and "values" lists') from None

    def to_json(self):
        return {'breakpoints': list(self._breakpoints), 'values': list(self._values)}

    def __eq__(self, other):
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._breakpoints == other._breakpoints and self._values == other._values

    def __hash__(self):
        return hash((self._breakpoints, self._values))

    def __repr__(self):
        return f'PLFunction(breakpoints={list(self._breakpoints)}, values={list(self._values)})'

def plf_eval(f, x):
    """
    Evaluate by linear interpolation (exact at breakpoints)
    """

    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f'{x} lies outside [0, 1]')

    return float(np.interp(x, f.breakpoints, f.values))

def plf_scale(f, c):
    return PLFunction(f.breakpoints, [float(c) * v for v in f.values])

def _difference_on_merged_grid(f, g):
    """
    f - g sampled on the sorted union of both breakpoint sets, where it is
    exactly piecewise linear
    """

    grid = np.union1d(f.breakpoints, g.breakpoints)
    difference = np.interp(grid, f.breakpoints, f.values) - np.interp(grid, g.breakpoints, g.values)

    return grid, difference

def d1_distance(f, g):
    """
    Integral of |f - g| over [0, 1], segment by segment in closed form
    """

    grid, h = _difference_on_merged_grid(f, g)
    widths = np.diff(grid)
    left, right = h[:-1], h[1:]
    a, b = np.abs(left), np.abs(right)

    # segments where f - g changes sign split into two triangles at the crossing
    crossing = (left * right) < 0
    total = np.where(a + b > 0, a + b, 1.0)
    areas = np.where(crossing, widths * (a * a + b * b) / (2 * total), widths * (a + b) / 2)

    return float(areas.sum())

def dinf_distance(f, g):
    """
    Maximum of |f - g|, attained at a merged breakpoint
    """

    grid, h = _difference_on_merged_grid(f, g)

    return float(np.abs(h).max())

def plf_norm(f, kind=DINF):
    """
    ||f||_1 or ||f||_inf as the distance to the zero function
    """

    zero = PLFunction.constant(0.0)
    if kind == D1:
        return d1_distance(f, zero)
    if kind == DINF:
        return dinf_distance(f, zero)

    raise ParameterError(f'Unknown function metric: {kind!r}')

def random_plf(rng=None, interior=None, scale=1.0):
    """
    Random PL function with up to `interior` interior breakpoints and values
    uniform in [-scale, scale]
    """

    rng = make_rng(rng)
    if interior is None:
        interior = int(rng.integers(0, SETTINGS['functions']['max_interior_breakpoints'], endpoint=True))
    inner = np.unique(rng.uniform(0.0, 1.0, size=interior))
    inner = inner[(inner > 0.0) & (inner < 1.0)]
    breakpoints = np.concatenate(([0.0], inner, [1.0]))
    values = rng.uniform(-scale, scale, size=len(breakpoints))

    return PLFunction(breakpoints.tolist(), values.tolist())
