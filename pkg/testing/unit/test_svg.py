import re
import yaml
import pathlib as pl
import unittest as ut

from metrickit import svg, vectors

settings_filepath = str(pl.Path(__file__).parent.joinpath('fixtures/acceptance-settings.yml'))
with open(settings_filepath, 'r') as stream:
    acceptance_settings = yaml.load(stream, Loader=yaml.FullLoader)['acceptance_settings']

L1_PATH   = acceptance_settings['svg']['l1_path']
LINF_PATH = acceptance_settings['svg']['linf_path']
VIEW_BOX  = acceptance_settings['svg']['view_box']

def path_of(document):
    return re.search(r'<path class="ball" d="([^"]*)"', document).group(1)

class TestBallRendering(ut.TestCase):
    """
    """

    def test_golden_diamond(self):
        document = svg.ball_to_svg(vectors.unit_ball_polygon(vectors.L1))
        self.assertEqual(path_of(document), L1_PATH)
        self.assertIn(f'viewBox="{VIEW_BOX}"', document)

    def test_golden_square(self):
        document = svg.ball_to_svg(vectors.unit_ball_polygon(vectors.LINF))
        self.assertEqual(path_of(document), LINF_PATH)

    def test_round_ball_is_a_closed_polygon(self):
        document = svg.ball_to_svg(vectors.unit_ball_polygon(vectors.L2))
        commands = path_of(document).split(' ')
        self.assertEqual(commands[0], 'M')
        self.assertEqual(commands[-1], 'Z')
        self.assertEqual(commands.count('L'), 63)

    def test_output_is_deterministic(self):
        polygon = vectors.unit_ball_polygon(vectors.L2, center=(0.5, -2), radius=3)
        self.assertEqual(svg.ball_to_svg(polygon), svg.ball_to_svg(polygon))
        self.assertTrue(svg.ball_to_svg(polygon).startswith('<?xml version="1.0" encoding="UTF-8"?>'))
        self.assertNotIn('-0.000000', svg.ball_to_svg(polygon))

    def test_view_box_follows_the_center(self):
        document = svg.ball_to_svg(vectors.unit_ball_polygon(vectors.LINF, center=(1, 2), radius=2))
        self.assertIn('viewBox="-2.000000 -5.000000 6.000000 6.000000"', document)

    def test_decimals(self):
        document = svg.ball_to_svg(vectors.unit_ball_polygon(vectors.L1), decimals=0)
        self.assertEqual(path_of(document), 'M 1,0 L 0,-1 L -1,0 L 0,1 Z')

if __name__ == '__main__':
    ut.main()
