"""
Seeded random samples from each metric's carrier
"""

import logging

from .config import SETTINGS
from .errors import ParameterError
from .metrics import MetricDescriptor, MetricKind, CallableMetric
from .utilities import make_rng
from . import padic, sphere, functions

logger = logging.getLogger(__name__)

# alphabet for discrete-metric tokens; repeats are allowed
TOKENS = tuple('abcdefghijklmnopqrstuvwxyz')

def sample_carrier(metric, count, rng=None, dim=2):
    """
    Draw `count` points from the carrier of a metric

    Keywords
    --------
    metric : MetricDescriptor or CallableMetric
        Callable metrics are sampled on the real line
    count : int
        Number of points
    rng : int, Generator or None
        Seed or generator
    dim : int
        Dimension used when the descriptor does not fix one
    """

    if count < 1:
        raise ParameterError(f'At least one sample point is required, got {count}')
    rng = make_rng(rng)
    logger.debug(f'Sampling {count} points for {metric!r}')

    if isinstance(metric, CallableMetric):
        scale = SETTINGS['vectors']['sample_range']
        return [float(value) for value in rng.uniform(-scale, scale, size=count)]

    if not isinstance(metric, MetricDescriptor):
        raise ParameterError(f'Cannot sample the carrier of {metric!r}')

    kind = metric.kind
    if kind == MetricKind.SNOWFLAKE:
        return sample_carrier(metric.inner, count, rng, dim)
    if kind in (MetricKind.VECTOR_L1, MetricKind.VECTOR_L2, MetricKind.VECTOR_LINF):
        scale = SETTINGS['vectors']['sample_range']
        size = metric.dim if metric.dim is not None else dim
        return [tuple(float(c) for c in row) for row in rng.uniform(-scale, scale, size=(count, size))]
    if kind == MetricKind.SPHERE_GEODESIC:
        size = metric.dim if metric.dim is not None else dim + 1
        return [sphere.random_unit_vector(size, rng) for index in range(count)]
    if kind == MetricKind.PADIC:
        return [padic.random_rational(rng) for index in range(count)]
    if kind == MetricKind.GRAPH:
        return [int(vertex) for vertex in rng.integers(0, metric.graph.vertex_count, size=count)]
    if kind in (MetricKind.FUNCTION_D1, MetricKind.FUNCTION_DINF):
        return [functions.random_plf(rng) for index in range(count)]

    return [TOKENS[int(index)] for index in rng.integers(0, len(TOKENS), size=count)]
