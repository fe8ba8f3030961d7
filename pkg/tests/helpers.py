"""Shared test utilities, chiefly an independent recount oracle for curves.

``brute_ecc`` rebuilds the curve definition from scratch: for every
candidate threshold it literally counts the vertices and edges present in
the sublevel complex.  It shares no code with the implementation under
test beyond the graph container, so agreement between the two is a real
check rather than a tautology.
"""

from __future__ import annotations

import random
from fractions import Fraction

from eccplane.geom import Direction, PlaneGraph, Point


def brute_ecc(g: PlaneGraph, direction: Direction) -> list[tuple[Fraction, int]]:
    """Breakpoints of the curve along ``direction`` by direct recounting."""
    heights = [p.x * direction.dx + p.y * direction.dy for p in g.vertices]

    def chi_at(h: Fraction) -> int:
        verts = sum(1 for hv in heights if hv <= h)
        edges = sum(1 for i, j in g.edges if heights[i] <= h and heights[j] <= h)
        return verts - edges

    breakpoints: list[tuple[Fraction, int]] = []
    previous = 0
    for h in sorted(set(heights)):
        value = chi_at(h)
        if value != previous:
            breakpoints.append((h, value))
            previous = value
    return breakpoints


def random_direction(rng: random.Random, span: int = 9) -> Direction:
    while True:
        dx = rng.randint(-span, span)
        dy = rng.randint(-span, span)
        if (dx, dy) != (0, 0):
            return Direction(dx, dy)


def path_gadget(center, a, b) -> PlaneGraph:
    """Three vertices with the center (index 0) joined to the other two."""
    return PlaneGraph([Point(*center), Point(*a), Point(*b)], [(0, 1), (0, 2)])


def quadrant_point(rng: random.Random, q: int, span: int = 50) -> tuple[int, int]:
    """A random integer offset strictly inside quadrant ``q``."""
    x = rng.randint(1, span)
    y = rng.randint(1, span)
    if q in (2, 3):
        x = -x
    if q in (3, 4):
        y = -y
    return (x, y)
