"""
Command-line surface: distance queries, verification campaigns, ball
pictures, series tables and the sphere slice demo

Exit codes: 0 success, 1 a property violation was found, 2 usage or input
error.
"""

import re
import sys
import json
import logging
import argparse
import pathlib as pl
from dataclasses import dataclass
from fractions import Fraction

from . import config
from .campaigns import run_campaign
from .errors import MetricError
from .fixtures import COUNTEREXAMPLES
from .functions import PLFunction, d1_distance, dinf_distance
from .graphs import Graph, graph_distance, weighted_graph_distance, random_connected_graph
from .metrics import MetricDescriptor, CallableMetric, metric_distance
from .padic import parse_rational, format_rational
from .series import partial_sum_trace, parse_series_metric, metric_label
from .sphere import UnitVector, slice_extremal_points
from .svg import ball_to_svg
from .utilities import format_real
from .vectors import unit_ball_polygon, NORM_KINDS

logger = logging.getLogger(__name__)

EXIT_SUCCESS   = 0
EXIT_VIOLATION = 1
EXIT_USAGE     = 2

@dataclass
class CommandResult():
    exit_code: int
    payload: str

class InputParsingError(MetricError):
    pass

_TOKEN_PATTERN = re.compile(r'\[[^\]]*\]|[^\s\[\]]+')

def _format_value(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return str(value)
    return format_real(value)

def _json_value(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    return value

def _parse_vector(text):
    """
    "[1, 2]", "1,2" or "1 2" into a list of floats
    """

    text = text.strip()
    try:
        if text.startswith('['):
            values = json.loads(text)
        else:
            values = [float(item) for item in re.split(r'[,\s]+', text) if item]
    except ValueError:
        raise InputParsingError(f'{text!r} is not a coordinate list') from None
    if not isinstance(values, list):
        raise InputParsingError(f'{text!r} is not a coordinate list')

    return values

def _parse_points(text):
    """
    Split inline points: bracketed vectors or bare scalars/tokens
    """

    tokens = _TOKEN_PATTERN.findall(text)
    points = []
    for token in tokens:
        if token.startswith('['):
            points.append(_parse_vector(token))
        else:
            points.append(token)

    return points

def _read_json(source):
    """
    Parse a JSON document from a file path, or inline when it looks like JSON
    """

    text = source.strip()
    if not text.startswith('{'):
        try:
            text = pl.Path(source).read_text()
        except OSError as error:
            raise InputParsingError(f'Failed to read {source}: {error}') from None
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise InputParsingError(f'{source} is not valid JSON: {error}') from None
    if not isinstance(document, dict):
        raise InputParsingError(f'{source} must hold a JSON object, got {type(document).__name__}')

    return document

def _coerce_point(metric, raw):
    """
    Turn a parsed token into a carrier point for the metric
    """

    inner = metric.inner if metric.inner is not None else metric
    if inner.name.startswith('padic'):
        return parse_rational(raw)
    if inner.name == 'discrete':
        return raw if not isinstance(raw, list) else tuple(raw)
    if isinstance(raw, str):
        try:
            return [float(raw)]
        except ValueError:
            raise InputParsingError(f'{raw!r} is not a real number') from None
    if isinstance(raw, (int, float)):
        return [float(raw)]

    return raw

def _build_metric(args):
    name = args.metric
    if name in NORM_KINDS:
        metric = MetricDescriptor.vector(name)
    elif name == 'discrete':
        metric = MetricDescriptor.discrete()
    elif name == 'padic':
        if args.p is None:
            raise InputParsingError('--p is required for the padic metric')
        metric = MetricDescriptor.padic(args.p)
    elif name == 'sphere':
        metric = MetricDescriptor.sphere()
    else:
        raise InputParsingError(f'Unknown metric: {name}')

    if getattr(args, 'alpha', None) is not None:
        metric = MetricDescriptor.snowflake(metric, args.alpha)

    return metric

def cmd_dist(args):
    """
    Distance between two points under a shipped metric
    """

    metric = _build_metric(args)
    if args.file is not None:
        raw_points = _read_json(args.file).get('points')
        if not isinstance(raw_points, list):
            raise InputParsingError(f'{args.file} has no "points" list')
    elif args.points is not None:
        raw_points = _parse_points(args.points)
    else:
        raise InputParsingError('Give the points with --points or --file')
    if len(raw_points) != 2:
        raise InputParsingError(f'Exactly two points are required, got {len(raw_points)}')

    x, y = (_coerce_point(metric, raw) for raw in raw_points)
    value = metric_distance(metric, x, y)

    if args.format == 'json':
        payload = json.dumps({'metric': metric.name, 'distance': _json_value(value)})
    else:
        payload = _format_value(value)

    return CommandResult(EXIT_SUCCESS, payload)

def _verify_metric(args):
    name = args.metric
    if name in COUNTEREXAMPLES:
        if args.alpha is not None:
            raise InputParsingError(f'--alpha cannot be applied to the {name} counterexample')
        return CallableMetric(COUNTEREXAMPLES[name], name=name)
    if name in NORM_KINDS:
        metric = MetricDescriptor.vector(name, args.dim)
    elif name == 'discrete':
        metric = MetricDescriptor.discrete()
    elif name == 'padic':
        if args.p is None:
            raise InputParsingError('--p is required for the padic metric')
        metric = MetricDescriptor.padic(args.p)
    elif name == 'sphere':
        metric = MetricDescriptor.sphere(args.dim + 1)
    elif name in ('function-d1', 'function-dinf'):
        metric = MetricDescriptor.function(name.split('-')[1])
    elif name == 'graph':
        if args.graph is not None:
            g = Graph.from_json(_read_json(args.graph))
        else:
            g = random_connected_graph(args.vertices, args.seed)
        metric = MetricDescriptor.on_graph(g)
    else:
        raise InputParsingError(f'Unknown metric: {name}')

    if args.alpha is not None:
        metric = MetricDescriptor.snowflake(metric, args.alpha)

    return metric

def _describe_violation(kind, violation):
    points = ', '.join(str(p) for p in violation.points)
    values = ', '.join(_format_value(v) for v in violation.values)
    return f'  {kind} at indices {list(violation.indices)}: points ({points}); distances ({values}); defect {_format_value(violation.defect)}'

def cmd_verify(args):
    """
    Seeded axiom-verification campaign
    """

    if args.samples < 1:
        raise InputParsingError(f'--samples must be at least 1, got {args.samples}')
    if args.seeds < 1:
        raise InputParsingError(f'--seeds must be at least 1, got {args.seeds}')

    metric = _verify_metric(args)
    seeds = list(range(args.seed, args.seed + args.seeds))
    campaign = run_campaign(metric, seeds, args.samples, args.tolerance, args.workers, args.dim)
    report = campaign.report

    if args.format == 'json':
        payload = json.dumps(campaign.to_dict(), default=str)
    else:
        lines = [
            f'metric: {campaign.metric}',
            f'samples: {campaign.samples} per seed, seeds {seeds[0]}..{seeds[-1]}',
            f'tolerance: {report.tolerance}',
            f'nonnegativity violations: {len(report.nonneg_violations)}',
            f'identity violations: {len(report.identity_violations)}',
            f'symmetry violations: {len(report.symmetry_violations)}',
            f'triangle violations: {len(report.triangle_violations)}',
        ]
        for kind, violations in [
            ('nonnegativity', report.nonneg_violations),
            ('identity', report.identity_violations),
            ('symmetry', report.symmetry_violations),
            ('triangle', report.triangle_violations)]:
            for violation in violations[:args.show]:
                lines.append(_describe_violation(kind, violation))
        lines.append('result: ' + ('PASSED' if report.passed else 'FAILED'))
        payload = '\n'.join(lines)

    return CommandResult(EXIT_SUCCESS if report.passed else EXIT_VIOLATION, payload)

def cmd_ball(args):
    """
    Draw the ball of a norm in the plane as SVG
    """

    polygon = unit_ball_polygon(args.metric, _parse_vector(args.center), args.radius)
    document = ball_to_svg(polygon)

    if args.out is not None:
        try:
            pl.Path(args.out).write_text(document)
        except OSError as error:
            raise InputParsingError(f'Failed to write {args.out}: {error}') from None
        payload = json.dumps({'out': str(args.out), 'vertices': len(polygon.vertices)}) if args.format == 'json' else f'wrote {args.out}'
    elif args.format == 'json':
        payload = json.dumps({
            'metric'   : polygon.metric_kind,
            'center'   : list(polygon.center.coords),
            'radius'   : polygon.radius,
            'vertices' : [list(vertex.coords) for vertex in polygon.vertices],
        })
    else:
        payload = document.rstrip('\n')

    return CommandResult(EXIT_SUCCESS, payload)

def cmd_series(args):
    """
    Table of geometric partial sums and their distances to the limit
    """

    metric = parse_series_metric(args.metric, args.p)
    trace = partial_sum_trace(parse_rational(args.x), args.n, metric)

    if args.format == 'json':
        payload = json.dumps(trace.to_dict())
    else:
        rows = [('k', 'S_k', f'd(S_k, {format_rational(trace.limit)})')]
        rows += [(str(k), format_rational(s), format_rational(d)) for k, s, d in trace.rows()]
        widths = [max(len(row[column]) for row in rows) for column in range(3)]
        lines = [f'x = {format_rational(trace.x)}, metric = {metric_label(metric)}']
        lines += ['  '.join(cell.rjust(width) for cell, width in zip(row, widths)) for row in rows]
        payload = '\n'.join(lines)

    return CommandResult(EXIT_SUCCESS, payload)

def cmd_graph_dist(args):
    """
    Path distance between two vertices of a graph read from JSON
    """

    g = Graph.from_json(_read_json(args.graph))
    if args.weighted:
        value = weighted_graph_distance(g, args.source, args.target)
    else:
        value = graph_distance(g, args.source, args.target)

    if args.format == 'json':
        payload = json.dumps({'source': args.source, 'target': args.target, 'weighted': args.weighted, 'distance': value})
    else:
        payload = _format_value(value)

    return CommandResult(EXIT_SUCCESS, payload)

def cmd_fn_dist(args):
    """
    d_1 or d_inf between two piecewise-linear functions
    """

    f = PLFunction.from_json(_read_json(args.f))
    g = PLFunction.from_json(_read_json(args.g))
    value = d1_distance(f, g) if args.metric == 'd1' else dinf_distance(f, g)

    if args.format == 'json':
        payload = json.dumps({'metric': args.metric, 'distance': value})
    else:
        payload = format_real(value)

    return CommandResult(EXIT_SUCCESS, payload)

def cmd_extremals(args):
    """
    The two points where a slice around y meets the great circle through x and y
    """

    x = UnitVector.of(_parse_vector(args.x))
    y = UnitVector.of(_parse_vector(args.y))
    extremals = slice_extremal_points(x, y, args.r)
    document = {
        'u'            : list(extremals.u.coords.coords),
        'v'            : list(extremals.v.coords.coords),
        'slice_center' : list(extremals.slice_center.coords),
        'slice_radius' : extremals.slice_radius,
    }

    if args.format == 'json':
        payload = json.dumps(document)
    else:
        payload = '\n'.join(f'{key}: {value}' for key, value in document.items())

    return CommandResult(EXIT_SUCCESS, payload)

def build_parser():
    """
    """

    parser = argparse.ArgumentParser(prog='metrickit', description='Metric-space toolkit')
    parser.add_argument('--config', default=None, help='YAML settings file')
    parser.add_argument('--verbose', action='store_true', help='Debug logging on stderr')
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add(name, handler, help):
        subparser = subparsers.add_parser(name, help=help)
        subparser.add_argument('--format', choices=('text', 'json'), default='text')
        subparser.set_defaults(handler=handler)
        return subparser

    dist = add('dist', cmd_dist, 'Distance between two points')
    dist.add_argument('--metric', required=True, choices=NORM_KINDS + ('discrete', 'padic', 'sphere'))
    dist.add_argument('--p', type=int, default=None)
    dist.add_argument('--alpha', type=float, default=None, help='Snowflake exponent in (0, 1]')
    dist.add_argument('--points', default=None, help='Two inline points, e.g. "[1,2] [4,6]" or "0 1/2"')
    dist.add_argument('--file', default=None, help='JSON file {"points": [...]}')

    verify = add('verify', cmd_verify, 'Verify the metric axioms on random samples')
    verify.add_argument('--metric', required=True, choices=NORM_KINDS + ('discrete', 'padic', 'sphere', 'function-d1', 'function-dinf', 'graph') + tuple(COUNTEREXAMPLES))
    verify.add_argument('--dim', type=int, default=2, help='R^dim for vector metrics, S^dim for the sphere')
    verify.add_argument('--p', type=int, default=None)
    verify.add_argument('--alpha', type=float, default=None)
    verify.add_argument('--graph', default=None, help='JSON graph file (random connected graph otherwise)')
    verify.add_argument('--vertices', type=int, default=8, help='Size of the random graph')
    verify.add_argument('--samples', type=int, default=None)
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--seeds', type=int, default=1, help='Number of consecutive seeds')
    verify.add_argument('--tolerance', type=float, default=None)
    verify.add_argument('--workers', type=int, default=None)
    verify.add_argument('--show', type=int, default=5, help='Violations printed per axiom')

    ball = add('ball', cmd_ball, 'SVG picture of a ball in the plane')
    ball.add_argument('--metric', required=True, choices=NORM_KINDS)
    ball.add_argument('--center', default='0,0')
    ball.add_argument('--radius', type=float, default=1.0)
    ball.add_argument('--out', default=None, help='SVG file (stdout otherwise)')

    series = add('series', cmd_series, 'Geometric partial sums and limit distances')
    series.add_argument('--x', required=True, help='Rational ratio a/b')
    series.add_argument('--n', type=int, required=True)
    series.add_argument('--metric', choices=('standard', 'padic'), default='standard')
    series.add_argument('--p', type=int, default=None)

    graph = add('graph-dist', cmd_graph_dist, 'Path distance in a graph')
    graph.add_argument('--graph', required=True, help='JSON graph file')
    graph.add_argument('--source', type=int, required=True)
    graph.add_argument('--target', type=int, required=True)
    graph.add_argument('--weighted', action='store_true')

    fn = add('fn-dist', cmd_fn_dist, 'Distance between piecewise-linear functions')
    fn.add_argument('--f', required=True, help='JSON file or inline JSON')
    fn.add_argument('--g', required=True, help='JSON file or inline JSON')
    fn.add_argument('--metric', choices=('d1', 'dinf'), default='d1')

    extremals = add('extremals', cmd_extremals, 'Sphere slice extremal points')
    extremals.add_argument('--x', required=True)
    extremals.add_argument('--y', required=True)
    extremals.add_argument('--r', type=float, required=True)

    return parser

def run(argv=None):
    """
    Parse arguments and dispatch; returns a CommandResult
    """

    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)

    try:
        if args.config is not None:
            config.apply_settings(args.config)
        if getattr(args, 'samples', 0) is None:
            args.samples = config.SETTINGS['verification']['default_samples']
        return args.handler(args)
    except (MetricError, ValueError, OSError) as error:
        logger.debug('Command failed', exc_info=True)
        return CommandResult(EXIT_USAGE, f'error: {error}')

def main(argv=None):
    result = run(argv)
    stream = sys.stdout if result.exit_code != EXIT_USAGE else sys.stderr
    print(result.payload, file=stream)

    return result.exit_code

if __name__ == '__main__':
    sys.exit(main())
