"""Degree-two vertices: which directions can see them.

A degree-2 vertex is witnessed from a direction only when both of its
neighbors lie strictly on the same side of its level line, so the set of
witnessing directions is a pair of antipodal open arcs bounded by the rays
perpendicular to the two neighbor offsets.  Where the neighbors sit
relative to the vertex (same quadrant, adjacent quadrants, or diagonally
opposite ones) decides how many of the four cardinal directions fall
inside those arcs: four, exactly two, or none.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .ecc import delta_chi
from .geom import CARDINALS, Direction, PlaneGraph, quadrant


class Deg2Tag(Enum):
    SAME_QUADRANT = "same-quadrant"
    NEIGHBORING_QUADRANTS = "neighboring-quadrants"
    OPPOSITE_QUADRANTS = "opposite-quadrants"


@dataclass(frozen=True)
class Deg2Config:
    tag: Deg2Tag
    quadrants: tuple[int, int]  # neighbor quadrants relative to the vertex


def _require_degree_two(g: PlaneGraph, v: int) -> tuple[int, int]:
    nbrs = g.neighbors(v)
    if len(nbrs) != 2:
        raise ValueError(f"vertex {v} has degree {len(nbrs)}, expected 2")
    return nbrs


def classify_deg2(g: PlaneGraph, v: int) -> Deg2Config:
    """Quadrant configuration of a degree-2 vertex's neighbors.

    Quadrants are taken relative to the vertex itself; general position
    keeps neighbors off the quadrant boundaries.
    """
    a, b = _require_degree_two(g, v)
    qa = quadrant(g.vertices[a], g.vertices[v])
    qb = quadrant(g.vertices[b], g.vertices[v])
    if qa == qb:
        tag = Deg2Tag.SAME_QUADRANT
    elif (qa - qb) % 4 == 2:
        tag = Deg2Tag.OPPOSITE_QUADRANTS
    else:
        tag = Deg2Tag.NEIGHBORING_QUADRANTS
    return Deg2Config(tag, (qa, qb))


def predicted_cardinal_witnesses(cfg: Deg2Config) -> frozenset[Direction]:
    """Cardinal directions that witness a degree-2 vertex in this configuration.

    Same quadrant: every cardinal.  Neighboring quadrants: the two cardinals
    parallel to the axis whose sign the neighbors share (shared y-sign means
    both neighbors sit below or both above every horizontal line through the
    vertex, so the vertical directions see them together).  Opposite
    quadrants: none.
    """
    if cfg.tag is Deg2Tag.SAME_QUADRANT:
        return frozenset(CARDINALS)
    if cfg.tag is Deg2Tag.OPPOSITE_QUADRANTS:
        return frozenset()
    qs = frozenset(cfg.quadrants)
    if qs in ({1, 4}, {2, 3}):  # shared x-sign
        return frozenset({Direction(1, 0), Direction(-1, 0)})
    return frozenset({Direction(0, 1), Direction(0, -1)})


def cardinal_witness_profile(g: PlaneGraph, v: int) -> frozenset[Direction]:
    """The cardinals from which vertex ``v`` is actually witnessed, measured
    with the local jump oracle.  Works for any degree."""
    return frozenset(c for c in CARDINALS if delta_chi(g, v, c) != 0)


def is_acute(g: PlaneGraph, v: int) -> bool:
    """True iff the angle between the two edges at a degree-2 vertex is
    strictly less than a right angle (exact dot-product sign test)."""
    a, b = _require_degree_two(g, v)
    pv, pa, pb = g.vertices[v], g.vertices[a], g.vertices[b]
    dot = (pa.x - pv.x) * (pb.x - pv.x) + (pa.y - pv.y) * (pb.y - pv.y)
    return dot > 0


@dataclass(frozen=True)
class Arc:
    """Open arc of directions swept counterclockwise from ``start`` to
    ``end`` (always less than a half turn), with the sign of the curve jump
    seen from inside it."""

    start: Direction
    end: Direction
    sign: int

    def contains(self, s: Direction) -> bool:
        return self.start.cross(s) > 0 and s.cross(self.end) > 0


@dataclass(frozen=True)
class ArcSet:
    """The witnessing directions of a degree-2 vertex: two antipodal open
    arcs, one where the curve drops (both neighbors below), one where it
    rises (both above)."""

    arcs: tuple[Arc, ...]

    def contains(self, s: Direction) -> bool:
        return any(arc.contains(s) for arc in self.arcs)

    def sign_at(self, s: Direction) -> int:
        for arc in self.arcs:
            if arc.contains(s):
                return arc.sign
        return 0


def witness_arcs(g: PlaneGraph, v: int) -> ArcSet:
    """Exact witnessing arcs for a degree-2 vertex.

    The decreasing arc is the open cone of rays [s] with s.o1 < 0 and
    s.o2 < 0 for the neighbor offsets o1, o2; its edges are the
    perpendiculars of the offsets, oriented to point into the cone's
    closure.  The increasing arc is its antipodal image.
    """
    a, b = _require_degree_two(g, v)
    pv = g.vertices[v]
    o1 = Direction(g.vertices[a].x - pv.x, g.vertices[a].y - pv.y)
    o2 = Direction(g.vertices[b].x - pv.x, g.vertices[b].y - pv.y)
    # Offsets are never parallel (that would be a collinear triple), so each
    # perpendicular has a definite side.
    b1 = o1.perp()
    if b1.dot(o2) > 0:
        b1 = -b1
    b2 = o2.perp()
    if b2.dot(o1) > 0:
        b2 = -b2
    if b1.cross(b2) > 0:
        lo, hi = b1, b2
    else:
        lo, hi = b2, b1
    falling = Arc(lo, hi, -1)
    rising = Arc(-lo, -hi, +1)
    return ArcSet((falling, rising))


def arc_measure(arcs: ArcSet) -> float:
    """Total angular measure of the arcs in radians.

    Floating point, for reporting only; membership tests stay exact.
    """
    total = 0.0
    for arc in arcs.arcs:
        cross = float(arc.start.cross(arc.end))
        dot = float(arc.start.dot(arc.end))
        total += math.atan2(cross, dot)
    return total
