"""
Static SVG rendering of ball polygons
"""

from .config import SETTINGS

def _fmt(value, decimals):
    """
    Fixed-point number; anything that would print as -0 prints as 0
    """

    if abs(value) < 0.5 * 10 ** -decimals:
        value = 0.0
    return f'{value:.{decimals}f}'

def ball_to_svg(polygon, decimals=None, margin=None):
    """
    Render a BallPolygon as an SVG 1.1 document: the closed boundary path plus
    the coordinate axes, in a [-margin r, margin r]^2 view around the center

    The y axis is flipped so the picture has the usual orientation.
    """

    if decimals is None:
        decimals = SETTINGS['svg']['decimals']
    if margin is None:
        margin = SETTINGS['svg']['margin']

    def fmt(value):
        return _fmt(value, decimals)

    cx, cy = polygon.center.coords
    half = margin * polygon.radius
    left, top, side = cx - half, -cy - half, 2 * half

    commands = []
    for index, vertex in enumerate(polygon.vertices):
        x, y = vertex.coords
        commands.append(f'{"M" if index == 0 else "L"} {fmt(x)},{fmt(-y)}')
    commands.append('Z')

    stroke = fmt(side / 300)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="300" height="300" viewBox="{fmt(left)} {fmt(top)} {fmt(side)} {fmt(side)}">',
        f'  <title>{polygon.metric_kind} ball, center ({fmt(cx)}, {fmt(cy)}), radius {fmt(polygon.radius)}</title>',
        f'  <line class="axis" x1="{fmt(left)}" y1="{fmt(0.0)}" x2="{fmt(left + side)}" y2="{fmt(0.0)}" stroke="gray" stroke-width="{stroke}"/>',
        f'  <line class="axis" x1="{fmt(0.0)}" y1="{fmt(top)}" x2="{fmt(0.0)}" y2="{fmt(top + side)}" stroke="gray" stroke-width="{stroke}"/>',
        f'  <path class="ball" d="{" ".join(commands)}" fill="none" stroke="black" stroke-width="{stroke}"/>',
        '</svg>',
        ''
    ]

    return '\n'.join(lines)
