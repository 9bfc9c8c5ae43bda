import math
import yaml
import numpy as np
import pathlib as pl
import unittest as ut

from metrickit import vectors
from metrickit.errors import InputError, DimensionError, ParameterError

settings_filepath = str(pl.Path(__file__).parent.joinpath('fixtures/acceptance-settings.yml'))
with open(settings_filepath, 'r') as stream:
    acceptance_settings = yaml.load(stream, Loader=yaml.FullLoader)['acceptance_settings']

N_PAIRS          = acceptance_settings['vectors']['pairs']
EQUIVALENCE_SLACK = acceptance_settings['vectors']['slack']
CONVEXITY_TRIALS = acceptance_settings['vectors']['convexity_trials']
DIMENSIONS       = acceptance_settings['axioms']['vector_dims']

class TestNormsAndDistances(ut.TestCase):
    """
    """

    def test_distances_on_the_worked_example(self):
        x, y = (1, 2), (4, 6)
        self.assertEqual(vectors.distance(vectors.L1, x, y), 7.0)
        self.assertEqual(vectors.distance(vectors.L2, x, y), 5.0)
        self.assertEqual(vectors.distance(vectors.LINF, x, y), 4.0)

        return

    def test_norm_of_zero_vector(self):
        for kind in vectors.NORM_KINDS:
            self.assertEqual(vectors.norm(kind, (0.0, 0.0, 0.0)), 0.0)

    def test_l2_norm_does_not_overflow(self):
        self.assertAlmostEqual(vectors.norm(vectors.L2, (3e200, 4e200)) / 1e200, 5.0)
        self.assertAlmostEqual(vectors.norm(vectors.L2, (3e-200, 4e-200)) / 1e-200, 5.0)

    def test_dimension_mismatch_is_rejected(self):
        with self.assertRaises(DimensionError):
            vectors.distance(vectors.L1, (1, 2), (1, 2, 3))

    def test_bad_points_are_rejected(self):
        for bad in [(), (math.nan, 1.0), (math.inf,), ('a', 1.0), (True, 1.0)]:
            with self.assertRaises(InputError):
                vectors.Point.of(bad)

    def test_unknown_norm_kind(self):
        with self.assertRaises(ParameterError):
            vectors.norm('l3', (1.0,))

    def test_homogeneity_and_subadditivity(self):
        """
        ||t x|| = |t| ||x|| and ||x + y|| <= ||x|| + ||y|| on random input
        """

        rng = np.random.default_rng(11)
        for trial in range(500):
            dim = int(rng.integers(1, 9))
            x = rng.uniform(-10, 10, size=dim)
            y = rng.uniform(-10, 10, size=dim)
            t = float(rng.uniform(-5, 5))
            for kind in vectors.NORM_KINDS:
                scale = max(1.0, vectors.norm(kind, x))
                self.assertLessEqual(vectors.homogeneity_defect(kind, t, x), 1e-12 * scale * 5)
                self.assertLessEqual(vectors.subadditivity_defect(kind, x, y), 1e-12 * 20)

        return

    def test_homogeneity_when_the_scaled_point_overflows(self):
        for t in [1e300, -1e300]:
            for kind in vectors.NORM_KINDS:
                defect = vectors.homogeneity_defect(kind, t, (1e10, 1.0))
                self.assertTrue(math.isfinite(defect))
                self.assertLessEqual(defect, 1e-12 * 1e300 * 1e10)
        self.assertEqual(vectors.homogeneity_defect(vectors.L1, 0, (1e308, 1.0)), 0.0)

    def test_equivalence_bounds(self):
        """
        d_inf <= d_2 <= d_1 <= n d_inf on random pairs in every dimension
        """

        rng = np.random.default_rng(3)
        for trial in range(N_PAIRS):
            dim = DIMENSIONS[trial % len(DIMENSIONS)]
            x = rng.uniform(-10, 10, size=dim)
            y = rng.uniform(-10, 10, size=dim)
            dinf, d2, d1, upper = vectors.equivalence_bounds(x, y)
            slack = EQUIVALENCE_SLACK * max(1.0, upper)
            self.assertLessEqual(dinf, d2 + slack)
            self.assertLessEqual(d2, d1 + slack)
            self.assertLessEqual(d1, upper + slack)

        return

class TestUnitBalls(ut.TestCase):
    """
    """

    def test_diamond_vertices(self):
        polygon = vectors.unit_ball_polygon(vectors.L1)
        self.assertEqual(
            [vertex.coords for vertex in polygon.vertices],
            [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)]
        )

    def test_square_corners(self):
        polygon = vectors.unit_ball_polygon(vectors.LINF, center=(1, -1), radius=2)
        self.assertEqual(
            [vertex.coords for vertex in polygon.vertices],
            [(3.0, 1.0), (-1.0, 1.0), (-1.0, -3.0), (3.0, -3.0)]
        )

    def test_round_ball_vertices_lie_on_the_circle(self):
        polygon = vectors.unit_ball_polygon(vectors.L2, radius=2.5)
        self.assertGreaterEqual(len(polygon.vertices), 64)
        for vertex in polygon.vertices:
            self.assertAlmostEqual(vectors.norm(vectors.L2, vertex), 2.5, places=12)

    def test_ball_preconditions(self):
        with self.assertRaises(ParameterError):
            vectors.unit_ball_polygon(vectors.L1, center=(0, 0, 0))
        with self.assertRaises(ParameterError):
            vectors.unit_ball_polygon(vectors.L1, radius=0)
        with self.assertRaises(ParameterError):
            vectors.unit_ball_polygon(vectors.L2, vertex_count=16)

    def test_closed_ball_samples_stay_inside(self):
        rng = np.random.default_rng(5)
        for kind in vectors.NORM_KINDS:
            for dim in (1, 2, 5):
                point = vectors.sample_closed_ball(kind, dim, rng)
                self.assertEqual(point.dim, dim)
                self.assertLessEqual(vectors.norm(kind, point), 1.0)

    def test_balls_are_convex_and_symmetric(self):
        for kind in vectors.NORM_KINDS:
            for dim in (2, 3):
                report = vectors.check_convex_symmetric(kind, CONVEXITY_TRIALS, seed=dim, dim=dim)
                self.assertTrue(report.passed)
                self.assertEqual(report.trials, CONVEXITY_TRIALS)

        with self.assertRaises(ParameterError):
            vectors.check_convex_symmetric(vectors.L1, 0)

        return

if __name__ == '__main__':
    ut.main()
