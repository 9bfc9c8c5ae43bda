class MetricError(Exception):
    """
    Root of every error raised by this package
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)

class InputError(MetricError):
    """Malformed input, or a point that does not belong to the metric's carrier"""
    pass

class DimensionError(InputError):
    pass

class DomainError(InputError):
    pass

class PreconditionError(InputError):
    pass

class ParameterError(MetricError):
    """A parameter (radius, exponent, prime, count) is out of range"""
    pass

class DivergenceError(ParameterError):
    pass

class DegenerateConfigurationError(ParameterError):
    pass

class SamplingError(MetricError):
    pass

class GraphError(MetricError):
    pass

class DisconnectedGraphError(GraphError):
    pass

class InvalidVertexError(GraphError):
    pass

class MissingWeightError(GraphError):
    pass

class ConfigurationError(MetricError):
    pass

class CampaignError(MetricError):
    """A worker process failed or dead-locked"""
    pass
