"""Recover the vertex set of a plane graph from six Euler curves.

The four cardinal curves give the lists of x- and y-coordinates: a vertex
whose degree is not 2 is always witnessed from at least one direction of
each antipodal pair, so the union of the east witness heights with the
negated west witness heights is exactly the set of vertex x-coordinates,
and likewise north/south for y.  A fifth and sixth curve along a tilted
direction then disambiguate which row goes with which column.

The tilt is chosen so shearing by it keeps columns separated: with slope
t = (minimum column gap) / (2 * row extent), the sheared height x + t*y
of every grid point stays within half a gap of its own column, so each
observed height pins down a unique column and then solves exactly for
the row.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .ecc import StepFunction, compute_ecc, witness_heights
from .errors import (
    CountMismatchError,
    Degree2PresentError,
    NoColumnMatchError,
    NoRowMatchError,
)
from .geom import (
    CARDINALS,
    EAST,
    NORTH,
    SOUTH,
    WEST,
    Direction,
    PlaneGraph,
    Point,
    Scalar,
)


@dataclass(frozen=True)
class CardinalLines:
    """Vertical and horizontal witness-line coordinates, strictly sorted."""

    xs: tuple[Scalar, ...]
    ys: tuple[Scalar, ...]


@dataclass(frozen=True)
class ReconstructionInput:
    """Six (direction, curve) pairs: the four cardinals plus an antipodal
    tilted pair whose positive member has the form (1, t) with t > 0."""

    pairs: tuple[tuple[Direction, StepFunction], ...]

    def __post_init__(self):
        if len(self.pairs) != 6:
            raise ValueError(f"expected 6 curves, got {len(self.pairs)}")
        rays = [d.canonical() for d, _ in self.pairs]
        if len(set(rays)) != 6:
            raise ValueError("duplicate directions among the six curves")
        cardinals = set(CARDINALS)
        extra = [r for r in rays if r not in cardinals]
        if len(extra) != 2:
            raise ValueError("need all four cardinal directions exactly once")
        a, b = extra
        if not a.same_ray(-b):
            raise ValueError("the two non-cardinal directions must be antipodal")
        tilt = a if a.dx > 0 else b
        if tilt.dx <= 0 or tilt.dy <= 0:
            raise ValueError("tilted direction must have the form (1, t), t > 0")

    def curve(self, d: Direction) -> StepFunction:
        key = d.canonical()
        for direction, f in self.pairs:
            if direction.canonical() == key:
                return f
        raise KeyError(f"no curve for direction {d}")

    @property
    def third(self) -> Direction:
        for d, _ in self.pairs:
            c = d.canonical()
            if c not in CARDINALS and c.dx > 0:
                return d
        raise AssertionError("validated input always has a tilted direction")


def _axis(pos: StepFunction, neg: StepFunction) -> tuple[Scalar, ...]:
    values = set(witness_heights(pos))
    values.update(-h for h in witness_heights(neg))
    return tuple(sorted(values))


def cardinal_witness_lines(
    pairs: tuple[tuple[Direction, StepFunction], ...]
) -> CardinalLines:
    """Merge the four cardinal curves into column and row coordinate lists.

    Heights along west are negated x-values (and south negated y-values),
    so each axis is the union of one curve's witness heights with the
    negation of its opposite's.
    """
    by_ray = {d.canonical(): f for d, f in pairs}
    if set(by_ray) != set(CARDINALS) or len(pairs) != 4:
        raise ValueError("expected exactly the four cardinal directions")
    return CardinalLines(
        xs=_axis(by_ray[EAST], by_ray[WEST]),
        ys=_axis(by_ray[NORTH], by_ray[SOUTH]),
    )


def select_third_direction(lines: CardinalLines) -> Direction:
    """Tilted direction (1, t) whose heights separate grid columns.

    t = delta / (2 H) where delta is the smallest gap between consecutive
    x-values and H the full y-extent, so t * H = delta / 2 < delta: a line
    of constant height drifts less than one column gap over the whole
    vertical range and therefore meets at most one grid column.  With a
    single vertex any tilt works; (1, 1) is returned then.
    """
    xs, ys = lines.xs, lines.ys
    if not xs or not ys:
        raise ValueError("cannot pick a direction for an empty vertex set")
    if len(xs) != len(ys):
        raise CountMismatchError(f"{len(xs)} x-values but {len(ys)} y-values")
    if len(xs) == 1:
        return Direction(1, 1)
    delta = min(b - a for a, b in zip(xs, xs[1:]))
    extent = ys[-1] - ys[0]
    return Direction(1, Fraction(delta, 2 * extent))


def match_heights(
    lines: CardinalLines, t: Scalar, heights: list[Scalar]
) -> list[Point]:
    """Pair each sheared height x + t*y with its grid point.

    Requires |t| * (y-extent) < min column gap so that the window
    [h - t*ymax, h - t*ymin] around each height contains at most one
    column; the row then solves exactly as (h - x) / t.
    """
    xs, ys = lines.xs, lines.ys
    if t == 0:
        raise ValueError("matching direction must not be horizontal")
    if len(xs) > 1:
        delta = min(b - a for a, b in zip(xs, xs[1:]))
        if abs(t) * (ys[-1] - ys[0]) >= delta:
            raise ValueError("third direction too steep: sheared columns overlap")
    row_set = set(ys)
    points = []
    for h in heights:
        a = h - t * ys[-1]
        b = h - t * ys[0]
        lo, hi = (a, b) if a <= b else (b, a)
        i = bisect_left(xs, lo)
        if i == len(xs) or xs[i] > hi:
            raise NoColumnMatchError(f"no column within [{lo}, {hi}] for height {h}")
        x = xs[i]
        y = (h - x) / t
        if y not in row_set:
            raise NoRowMatchError(
                f"height {h} matches column {x} but row {y} is not in the row set"
            )
        points.append(Point(x, y))
    return points


def reconstruct_vertices(inp: ReconstructionInput) -> tuple[Point, ...]:
    """Recover the vertex set from the six curves, sorted by (x, y).

    Raises NoColumnMatchError / NoRowMatchError when a tilted height fails
    to land on the coordinate grid (what a degree-2 vertex typically
    produces) and CountMismatchError when the recovered point count
    disagrees with the column count.
    """
    cardinal_pairs = tuple(
        (d, f) for d, f in inp.pairs if d.canonical() in CARDINALS
    )
    lines = cardinal_witness_lines(cardinal_pairs)
    if len(lines.xs) != len(lines.ys):
        raise CountMismatchError(
            f"{len(lines.xs)} x-values but {len(lines.ys)} y-values"
        )
    third = inp.third
    pos = inp.curve(third)
    neg = inp.curve(-third)
    t = third.dy / third.dx
    scaled = set(h / third.dx for h in witness_heights(pos))
    scaled.update(-h / third.dx for h in witness_heights(neg))
    matched = match_heights(lines, t, sorted(scaled))
    result = sorted(set(matched), key=lambda p: (p.x, p.y))
    if len(result) != len(lines.xs):
        raise CountMismatchError(
            f"matched {len(result)} points for {len(lines.xs)} columns"
        )
    return tuple(result)


def reconstruct_from_graph(g: PlaneGraph) -> tuple[Point, ...]:
    """End-to-end pipeline: compute the six curves of ``g`` and recover its
    vertex set from them alone.  The graph must be free of degree-2
    vertices for the cardinal curves to expose every coordinate."""
    deg2 = [v for v in range(len(g.vertices)) if g.degree(v) == 2]
    if deg2:
        raise Degree2PresentError(deg2)
    cardinal_pairs = tuple((d, compute_ecc(g, d)) for d in CARDINALS)
    third = select_third_direction(cardinal_witness_lines(cardinal_pairs))
    inp = ReconstructionInput(
        cardinal_pairs
        + ((third, compute_ecc(g, third)), (-third, compute_ecc(g, -third)))
    )
    return reconstruct_vertices(inp)
