import io
import json
import math
import yaml
import tempfile
import contextlib
import pathlib as pl
import unittest as ut

from metrickit import cli

settings_filepath = str(pl.Path(__file__).parent.joinpath('fixtures/acceptance-settings.yml'))
with open(settings_filepath, 'r') as stream:
    acceptance_settings = yaml.load(stream, Loader=yaml.FullLoader)['acceptance_settings']

L1_PATH   = acceptance_settings['svg']['l1_path']
LINF_PATH = acceptance_settings['svg']['linf_path']

GRAPH = {'n': 4, 'edges': [[0, 1], [1, 2], [2, 3], [0, 3]], 'weights': {'0-1': 1.0, '1-2': 1.0, '2-3': 1.0, '0-3': 5.0}}

class TestDistanceCommands(ut.TestCase):
    """
    """

    def test_vector_distance(self):
        result = cli.run(['dist', '--metric', 'l1', '--points', '[1,2] [4,6]'])
        self.assertEqual((result.exit_code, result.payload), (0, '7'))

    def test_padic_distance_is_exact(self):
        result = cli.run(['dist', '--metric', 'padic', '--p', '2', '--points', '0 2'])
        self.assertEqual((result.exit_code, result.payload), (0, '1/2'))
        result = cli.run(['dist', '--metric', 'padic', '--p', '3', '--points', '1/3 0', '--format', 'json'])
        self.assertEqual(json.loads(result.payload), {'metric': 'padic(3)', 'distance': '3'})

    def test_antipodal_distance(self):
        result = cli.run(['dist', '--metric', 'sphere', '--points', '[1,0,0] [-1,0,0]'])
        self.assertEqual((result.exit_code, result.payload), (0, '3.141592653589793'))

    def test_snowflake_distance(self):
        result = cli.run(['dist', '--metric', 'discrete', '--alpha', '0.5', '--points', 'a b', '--format', 'json'])
        self.assertEqual(json.loads(result.payload)['distance'], 1.0)

    def test_points_file(self):
        with tempfile.TemporaryDirectory() as directory:
            filepath = pl.Path(directory).joinpath('points.json')
            filepath.write_text(json.dumps({'points': [[0, 0], [3, 4]]}))
            result = cli.run(['dist', '--metric', 'l2', '--file', str(filepath)])
        self.assertEqual((result.exit_code, result.payload), (0, '5'))

    def test_bad_input_exits_with_2(self):
        for argv in [
            ['dist', '--metric', 'l1', '--points', '[1,2] [1,2,3]'],
            ['dist', '--metric', 'l1', '--points', '[1,2]'],
            ['dist', '--metric', 'padic', '--points', '0 2'],
            ['dist', '--metric', 'padic', '--p', '4', '--points', '0 2'],
            ['dist', '--metric', 'padic', '--p', '2', '--points', '0.5 2'],
            ['dist', '--metric', 'l1', '--file', '/nonexistent/points.json'],
            ]:
            self.assertEqual(cli.run(argv).exit_code, 2, argv)

    def test_points_file_must_hold_an_object(self):
        with tempfile.TemporaryDirectory() as directory:
            for index, document in enumerate([[[1, 2], [4, 6]], 3, 'points']):
                filepath = pl.Path(directory).joinpath(f'points-{index}.json')
                filepath.write_text(json.dumps(document))
                result = cli.run(['dist', '--metric', 'l1', '--file', str(filepath)])
                self.assertEqual(result.exit_code, 2, document)
                self.assertIn('JSON object', result.payload)

    def test_unknown_metric_is_a_usage_error(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                cli.run(['dist', '--metric', 'l7', '--points', '0 1'])
        self.assertEqual(context.exception.code, 2)

    def test_graph_distance(self):
        with tempfile.TemporaryDirectory() as directory:
            filepath = pl.Path(directory).joinpath('graph.json')
            filepath.write_text(json.dumps(GRAPH))
            unweighted = cli.run(['graph-dist', '--graph', str(filepath), '--source', '0', '--target', '3'])
            weighted = cli.run(['graph-dist', '--graph', str(filepath), '--source', '0', '--target', '3', '--weighted'])
            missing = cli.run(['graph-dist', '--graph', str(filepath), '--source', '0', '--target', '9'])
        self.assertEqual(unweighted.payload, '1')
        self.assertEqual(weighted.payload, '3')
        self.assertEqual(missing.exit_code, 2)

    def test_function_distance(self):
        f = json.dumps({'breakpoints': [0, 1], 'values': [0, 1]})
        g = json.dumps({'breakpoints': [0, 1], 'values': [0, 0]})
        self.assertEqual(cli.run(['fn-dist', '--f', f, '--g', g, '--metric', 'd1']).payload, '0.5')
        self.assertEqual(cli.run(['fn-dist', '--f', f, '--g', g, '--metric', 'dinf']).payload, '1')

class TestVerifyCommand(ut.TestCase):
    """
    """

    def test_linf_passes(self):
        result = cli.run(['verify', '--metric', 'linf', '--samples', '50', '--seed', '1'])
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.payload.endswith('result: PASSED'))

    def test_squared_difference_fails(self):
        result = cli.run(['verify', '--metric', 'squared-euclid-fixture', '--samples', '10', '--seed', '1'])
        self.assertEqual(result.exit_code, 1)
        self.assertIn('triangle at indices', result.payload)
        self.assertTrue(result.payload.endswith('result: FAILED'))

    def test_alpha_is_rejected_for_counterexamples(self):
        result = cli.run(['verify', '--metric', 'squared-euclid-fixture', '--alpha', '0.5', '--samples', '10'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('--alpha', result.payload)

    def test_padic_passes_with_zero_tolerance(self):
        result = cli.run(['verify', '--metric', 'padic', '--p', '7', '--samples', '50', '--tolerance', '0', '--format', 'json'])
        self.assertEqual(result.exit_code, 0)
        document = json.loads(result.payload)
        self.assertTrue(document['passed'])
        self.assertEqual(document['tolerance'], 0)

    def test_seeds_and_workers(self):
        inline = cli.run(['verify', '--metric', 'graph', '--samples', '20', '--seeds', '3', '--format', 'json'])
        parallel = cli.run(['verify', '--metric', 'graph', '--samples', '20', '--seeds', '3', '--workers', '2', '--format', 'json'])
        self.assertEqual(inline.exit_code, 0)
        self.assertEqual(inline.payload, parallel.payload)
        self.assertEqual(json.loads(inline.payload)['seeds'], [0, 1, 2])

    def test_output_is_deterministic(self):
        argv = ['verify', '--metric', 'sphere', '--dim', '3', '--samples', '30', '--seed', '5']
        self.assertEqual(cli.run(argv).payload, cli.run(argv).payload)

    def test_sample_count_must_be_positive(self):
        self.assertEqual(cli.run(['verify', '--metric', 'l1', '--samples', '0']).exit_code, 2)

class TestBallCommand(ut.TestCase):
    """
    """

    def test_golden_balls(self):
        diamond = cli.run(['ball', '--metric', 'l1', '--radius', '1'])
        square = cli.run(['ball', '--metric', 'linf', '--radius', '1'])
        self.assertIn(f'd="{L1_PATH}"', diamond.payload)
        self.assertIn(f'd="{LINF_PATH}"', square.payload)

    def test_round_ball_vertices(self):
        result = cli.run(['ball', '--metric', 'l2', '--format', 'json'])
        document = json.loads(result.payload)
        self.assertGreaterEqual(len(document['vertices']), 64)

    def test_writing_to_a_file(self):
        with tempfile.TemporaryDirectory() as directory:
            filepath = pl.Path(directory).joinpath('ball.svg')
            result = cli.run(['ball', '--metric', 'l1', '--center', '1,1', '--radius', '2', '--out', str(filepath)])
            self.assertEqual(result.exit_code, 0)
            self.assertTrue(filepath.read_text().startswith('<?xml'))
            unwritable = cli.run(['ball', '--metric', 'l1', '--out', str(pl.Path(directory).joinpath('missing', 'ball.svg'))])
        self.assertEqual(unwritable.exit_code, 2)

    def test_bad_radius(self):
        self.assertEqual(cli.run(['ball', '--metric', 'l1', '--radius', '-1']).exit_code, 2)

class TestSeriesCommand(ut.TestCase):
    """
    """

    def test_padic_table(self):
        result = cli.run(['series', '--x', '2', '--n', '3', '--metric', 'padic', '--p', '2'])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.payload.splitlines()[-1].split(), ['3', '15', '1/16'])

    def test_standard_table(self):
        result = cli.run(['series', '--x', '1/2', '--n', '10', '--format', 'json'])
        self.assertEqual(json.loads(result.payload)['rows'][-1]['distance'], '1/1024')

    def test_divergent_ratio(self):
        result = cli.run(['series', '--x', '2', '--n', '5', '--metric', 'standard'])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('does not converge', result.payload)

class TestExtremalsCommand(ut.TestCase):
    """
    """

    def test_extremals(self):
        result = cli.run(['extremals', '--x', '[1,0,0]', '--y', '[0,0,1]', '--r', '0.5', '--format', 'json'])
        document = json.loads(result.payload)
        self.assertAlmostEqual(document['u'][0], math.sin(0.5), places=12)
        self.assertAlmostEqual(document['v'][0], -math.sin(0.5), places=12)
        self.assertEqual(document['slice_radius'], 0.5)

    def test_degenerate_configuration(self):
        self.assertEqual(cli.run(['extremals', '--x', '[0,0,1]', '--y', '[0,0,1]', '--r', '0.5']).exit_code, 2)

class TestMain(ut.TestCase):
    """
    """

    def test_main_prints_the_payload(self):
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            code = cli.main(['dist', '--metric', 'linf', '--points', '[1,2] [4,6]'])
        self.assertEqual((code, stdout.getvalue()), (0, '4\n'))

    def test_errors_go_to_stderr(self):
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            code = cli.main(['series', '--x', '1', '--n', '2'])
        self.assertEqual(code, 2)
        self.assertEqual(stdout.getvalue(), '')
        self.assertTrue(stderr.getvalue().startswith('error:'))

if __name__ == '__main__':
    ut.main()
