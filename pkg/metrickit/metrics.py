"""
Metric descriptors: which metric, on which carrier, with which parameters
"""

import enum
import math
import numbers
from fractions import Fraction
from dataclasses import dataclass
from typing import Optional

from . import vectors, padic, sphere, graphs, functions
from .errors import InputError, ParameterError

class MetricKind(enum.Enum):
    VECTOR_L1       = 'vector-l1'
    VECTOR_L2       = 'vector-l2'
    VECTOR_LINF     = 'vector-linf'
    DISCRETE        = 'discrete'
    PADIC           = 'padic'
    SPHERE_GEODESIC = 'sphere-geodesic'
    GRAPH           = 'graph'
    FUNCTION_D1     = 'function-d1'
    FUNCTION_DINF   = 'function-dinf'
    SNOWFLAKE       = 'snowflake-of'

_VECTOR_KINDS = {
    MetricKind.VECTOR_L1   : vectors.L1,
    MetricKind.VECTOR_L2   : vectors.L2,
    MetricKind.VECTOR_LINF : vectors.LINF,
}

_FUNCTION_KINDS = {
    MetricKind.FUNCTION_D1   : functions.d1_distance,
    MetricKind.FUNCTION_DINF : functions.dinf_distance,
}

# metrics whose values are exact (compared with tolerance 0)
_EXACT_KINDS = {MetricKind.DISCRETE, MetricKind.PADIC, MetricKind.GRAPH}

@dataclass(frozen=True)
class MetricDescriptor():
    """
    A named metric with its kind-specific parameters

    Keywords
    --------
    dim : int or None
        Ambient dimension for vector and sphere carriers (None accepts any)
    prime : int
        The prime of a padic metric
    graph : Graph
        The graph of a graph metric
    inner, alpha : MetricDescriptor, float
        The wrapped metric and exponent of a snowflake metric
    """

    name: str
    kind: MetricKind
    dim: Optional[int] = None
    prime: Optional[int] = None
    graph: Optional[graphs.Graph] = None
    inner: Optional['MetricDescriptor'] = None
    alpha: Optional[float] = None

    def __post_init__(self):
        if self.kind == MetricKind.PADIC:
            if self.prime is None:
                raise ParameterError('A padic metric needs a prime')
            padic.PAdicContext(self.prime)
        if self.kind == MetricKind.SNOWFLAKE:
            if self.inner is None or self.alpha is None:
                raise ParameterError('A snowflake metric needs an inner metric and an exponent')
            if not 0 < self.alpha <= 1:
                raise ParameterError(f'Snowflake exponent must lie in (0, 1], got {self.alpha}')
        if self.kind == MetricKind.GRAPH and self.graph is None:
            raise ParameterError('A graph metric needs a graph')
        if self.dim is not None and self.dim < 1:
            raise ParameterError(f'Dimension must be positive, got {self.dim}')

    # constructors

    @classmethod
    def vector(cls, norm_kind, dim=None):
        for kind, name in _VECTOR_KINDS.items():
            if name == norm_kind:
                return cls(kind.value if dim is None else f'{kind.value}[{dim}]', kind, dim=dim)
        raise ParameterError(f'Unknown norm kind: {norm_kind!r}')

    @classmethod
    def discrete(cls):
        return cls('discrete', MetricKind.DISCRETE)

    @classmethod
    def padic(cls, prime):
        return cls(f'padic({prime})', MetricKind.PADIC, prime=prime)

    @classmethod
    def sphere(cls, dim=None):
        name = 'sphere-geodesic' if dim is None else f'sphere-geodesic[S^{dim - 1}]'
        return cls(name, MetricKind.SPHERE_GEODESIC, dim=dim)

    @classmethod
    def on_graph(cls, g, name='graph'):
        return cls(name, MetricKind.GRAPH, graph=g)

    @classmethod
    def function(cls, kind):
        for metric_kind in _FUNCTION_KINDS:
            if metric_kind.value == f'function-{kind}':
                return cls(metric_kind.value, metric_kind)
        raise ParameterError(f'Unknown function metric: {kind!r}')

    @classmethod
    def snowflake(cls, inner, alpha):
        return cls(f'snowflake-of({inner.name}, {alpha})', MetricKind.SNOWFLAKE, inner=inner, alpha=alpha)

    # carrier

    @property
    def exact(self):
        """
        Whether distances are exact (rationals or integers)
        """

        if self.kind == MetricKind.SNOWFLAKE:
            return self.alpha == 1 and self.inner.exact
        if self.kind == MetricKind.GRAPH:
            return not self.graph.weighted
        return self.kind in _EXACT_KINDS

    @property
    def default_tolerance(self):
        from .config import SETTINGS
        return 0 if self.exact else SETTINGS['verification']['tolerance']

    def validate(self, x):
        """
        Coerce a point into the carrier or raise InputError
        """

        kind = self.kind
        if kind == MetricKind.SNOWFLAKE:
            return self.inner.validate(x)
        if kind in _VECTOR_KINDS:
            if isinstance(x, (Fraction, str)):
                raise InputError(f'{x!r} is not a point of R^n')
            if isinstance(x, numbers.Real):
                x = (x,)
            point = vectors.Point.of(x)
            if self.dim is not None and point.dim != self.dim:
                raise InputError(f'{self.name} expects points of dimension {self.dim}, got {point.dim}')
            return point
        if kind == MetricKind.SPHERE_GEODESIC:
            if isinstance(x, (Fraction, str, numbers.Real)):
                raise InputError(f'{x!r} is not a point of a sphere')
            point = sphere.UnitVector.of(x)
            if self.dim is not None and point.dim != self.dim:
                raise InputError(f'{self.name} expects unit vectors in R^{self.dim}, got R^{point.dim}')
            return point
        if kind == MetricKind.PADIC:
            return padic.as_rational(x)
        if kind == MetricKind.GRAPH:
            self.graph._check_vertex(x)
            return x
        if kind in _FUNCTION_KINDS:
            if not isinstance(x, functions.PLFunction):
                raise InputError(f'{x!r} is not a piecewise-linear function')
            return x
        try:
            hash(x)
        except TypeError:
            raise InputError(f'{x!r} is not a hashable token') from None
        return x

    def evaluate(self, x, y):
        """
        Distance between two points already validated for the carrier
        """

        kind = self.kind
        if kind in _VECTOR_KINDS:
            return vectors.distance(_VECTOR_KINDS[kind], x, y)
        if kind == MetricKind.SPHERE_GEODESIC:
            return sphere.geodesic_distance(x, y)
        if kind == MetricKind.PADIC:
            return padic.p_adic_distance(x, y, padic.PAdicContext(self.prime))
        if kind == MetricKind.GRAPH:
            if self.graph.weighted:
                return graphs.weighted_graph_distance(self.graph, x, y)
            return graphs.graph_distance(self.graph, x, y)
        if kind in _FUNCTION_KINDS:
            return _FUNCTION_KINDS[kind](x, y)
        if kind == MetricKind.SNOWFLAKE:
            from .core import snowflake_distance
            return snowflake_distance(self.inner.evaluate(x, y), self.alpha)

        from .core import discrete_distance
        return discrete_distance(x, y)

    def separation(self, x, y):
        """
        How far apart two carrier points are as objects (not as a distance):
        largest coordinate difference for real carriers, 0 or infinity for
        exact ones
        """

        kind = self.kind
        if kind == MetricKind.SNOWFLAKE:
            return self.inner.separation(x, y)
        if kind in _VECTOR_KINDS:
            return float(max(abs(a - b) for a, b in zip(x, y)))
        if kind == MetricKind.SPHERE_GEODESIC:
            return float(max(abs(a - b) for a, b in zip(x.coords, y.coords)))
        if kind in _FUNCTION_KINDS:
            return functions.dinf_distance(x, y)

        return 0 if x == y else math.inf

class CallableMetric():
    """
    Wraps a bare distance function (for example a pseudo-metric
    counterexample) so it can be run through the axiom verifier
    """

    exact = False

    def __init__(self, function, name=None, exact=False):
        self.function = function
        self.name = name if name is not None else getattr(function, '__name__', 'callable')
        self.exact = exact

    @property
    def default_tolerance(self):
        from .config import SETTINGS
        return 0 if self.exact else SETTINGS['verification']['tolerance']

    def validate(self, x):
        return x

    def evaluate(self, x, y):
        return self.function(x, y)

    def separation(self, x, y):
        return 0 if x == y else math.inf

def as_metric(metric):
    """
    Accept a MetricDescriptor or any distance callable
    """

    if isinstance(metric, (MetricDescriptor, CallableMetric)):
        return metric
    if callable(metric):
        return CallableMetric(metric)

    raise InputError(f'{metric!r} is neither a metric descriptor nor a distance function')

def metric_distance(metric, x, y):
    """
    Validate two points against the carrier and return their distance
    """

    metric = as_metric(metric)

    return metric.evaluate(metric.validate(x), metric.validate(y))
