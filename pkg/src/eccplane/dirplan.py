"""Direction plans: three witnessing directions per vertex.

A plan assigns every vertex three pairwise non-parallel directions from
which it is witnessed.  Observing the graph from a direction yields the
full set of witness lines of that direction — one level line per
witnessed vertex — so the plan induces an arrangement of up to 3n * n
lines.  A good plan makes that arrangement concur three-or-more-at-a-
point only at the vertices themselves, so the vertex set can be read off
as the triple points.

Construction proposes directions from regions that are guaranteed to
witness a vertex of the given degree (any direction for an isolated
vertex, the neighbor-above half-plane for degree one, a both-neighbors-
below cone for anything higher — the degree-2 witness arcs can be
arbitrarily thin, so uniform sampling alone could stall).  A candidate is
rejected if any line it contributes would pass through an existing
crossing away from a vertex.  The verifier is an independent brute force
over all line pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ecc import delta_chi, vertex_heights, witnessed_vertices
from .errors import ExhaustedTriesError, HeightTieError, ParseError
from .geom import Direction, PlaneGraph, Point, format_scalar, parse_scalar

# A line a*x + b*y = c with coprime integer coefficients, normalized so the
# first nonzero of (a, b) is positive.  Level lines of antipodal directions
# at opposite heights map to the same triple.
Line = tuple[int, int, int]


def witness_line(v: Point, s: Direction) -> Line:
    """Canonical form of the level line of ``s`` through ``v``."""
    cs = s.canonical()
    a, b = int(cs.dx), int(cs.dy)
    c = Fraction(a * v.x + b * v.y)
    a, b, cn = a * c.denominator, b * c.denominator, c.numerator
    g = gcd(gcd(abs(a), abs(b)), abs(cn))
    a, b, cn = a // g, b // g, cn // g
    if a < 0 or (a == 0 and b < 0):
        a, b, cn = -a, -b, -cn
    return (a, b, cn)


def line_intersection(p: Line, q: Line) -> tuple[Fraction, Fraction] | None:
    """Intersection point of two lines, or None when parallel."""
    a1, b1, c1 = p
    a2, b2, c2 = q
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return (Fraction(c1 * b2 - c2 * b1, det), Fraction(a1 * c2 - a2 * c1, det))


def _point_key(x: Fraction, y: Fraction) -> tuple[int, int, int]:
    """Canonical homogeneous key (xn, yn, d) with d > 0 and gcd 1."""
    d = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    xn = x.numerator * (d // x.denominator)
    yn = y.numerator * (d // y.denominator)
    g = gcd(gcd(abs(xn), abs(yn)), d)
    return (xn // g, yn // g, d // g)


def _intersection_key(p: Line, q: Line) -> tuple[int, int, int] | None:
    """Canonical homogeneous intersection key, avoiding Fraction overhead
    in the all-pairs loops."""
    a1, b1, c1 = p
    a2, b2, c2 = q
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    xn = c1 * b2 - c2 * b1
    yn = a1 * c2 - a2 * c1
    if det < 0:
        det, xn, yn = -det, -xn, -yn
    g = gcd(gcd(abs(xn), abs(yn)), det)
    if g > 1:
        return (xn // g, yn // g, det // g)
    return (xn, yn, det)


@dataclass(frozen=True)
class DirectionPlan:
    """Per-vertex direction triples, indexed like the graph's vertices."""

    triples: tuple[tuple[Direction, Direction, Direction], ...]


def direction_witness_lines(g: PlaneGraph, s: Direction) -> set[Line]:
    """Every witness line seen when observing ``g`` from ``s``: the level
    line through each witnessed vertex."""
    return {witness_line(g.vertices[u], s) for u in witnessed_vertices(g, s)}


def all_witness_lines(g: PlaneGraph, plan: DirectionPlan) -> list[Line]:
    """The deduplicated arrangement induced by every direction of the plan."""
    seen: set[Direction] = set()
    lines: set[Line] = set()
    for triple in plan.triples:
        for s in triple:
            ray = s.canonical()
            if ray in seen:
                continue
            seen.add(ray)
            lines |= direction_witness_lines(g, ray)
    return sorted(lines)


def _offset(g: PlaneGraph, v: int, u: int) -> Direction:
    pv, pu = g.vertices[v], g.vertices[u]
    return Direction(pu.x - pv.x, pu.y - pv.y)


def _propose(g: PlaneGraph, v: int, rng: random.Random, spread: int) -> Direction:
    """Draw a direction from a region that witnesses ``v``.

    Isolated vertices accept anything.  A degree-1 vertex needs its
    neighbor strictly above, so we combine the offset with its
    perpendicular using a positive first coefficient.  For degree >= 2 we
    drop a random pair of neighbors strictly below the vertex: the curve
    then jumps by 1 - (number below) <= -1.  The both-below cone is the
    positive span of the two offset perpendiculars oriented into it, and
    it is never empty because no two offsets are opposite rays (that
    would be a collinear triple).  For degree 2 this cone is exactly the
    falling witness arc.
    """
    nbrs = g.neighbors(v)
    if len(nbrs) == 0:
        while True:
            a, b = rng.randint(-spread, spread), rng.randint(-spread, spread)
            if (a, b) != (0, 0):
                return Direction(a, b)
    if len(nbrs) == 1:
        o = _offset(g, v, nbrs[0])
        a, b = rng.randint(1, spread), rng.randint(-spread, spread)
        return Direction(a * o.dx - b * o.dy, a * o.dy + b * o.dx)
    i, j = rng.sample(nbrs, 2)
    o1, o2 = _offset(g, v, i), _offset(g, v, j)
    b1 = o1.perp()
    if b1.dot(o2) > 0:
        b1 = -b1
    b2 = o2.perp()
    if b2.dot(o1) > 0:
        b2 = -b2
    a, c = rng.randint(1, spread), rng.randint(1, spread)
    s = Direction(a * b1.dx + c * b2.dx, a * b1.dy + c * b2.dy)
    # The antipodal ray puts the pair strictly above instead; for degree 2
    # that always witnesses too, for higher degrees the caller's jump check
    # sorts it out.
    if rng.random() < 0.5:
        return -s
    return s


def _spread(attempt: int) -> int:
    return 8 << min(attempt // 16, 12)


def sample_witnessing_direction(
    g: PlaneGraph, v: int, seed: int = 0, max_tries: int = 500
) -> Direction:
    """A seeded direction with pairwise-distinct vertex heights from which
    ``v`` is witnessed.  The proposal window doubles as tries accumulate."""
    rng = random.Random(seed)
    n = len(g.vertices)
    for attempt in range(max_tries):
        s = _propose(g, v, rng, _spread(attempt)).canonical()
        if len(set(vertex_heights(g, s))) != n:
            continue
        if delta_chi(g, v, s) != 0:
            return s
    raise ExhaustedTriesError(
        f"no witnessing direction for vertex {v} after {max_tries} tries",
        vertex=v,
    )


def select_3n_directions(
    g: PlaneGraph, seed: int = 0, max_tries: int = 10_000
) -> DirectionPlan:
    """Construct a plan whose arrangement has triple points exactly at the
    vertices of ``g``.

    Vertices are processed in index order; each accepted direction
    contributes its whole witness-line family.  A candidate is rejected if
    it is parallel to a direction already in the vertex's triple, ties two
    vertex heights, fails to witness its vertex, or contributes a line
    that crosses two accumulated lines at the same non-vertex point (which
    would create a stray triple point).  Raises ExhaustedTriesError naming
    the vertex when its budget runs out.
    """
    rng = random.Random(seed)
    n = len(g.vertices)
    vertex_keys = {_point_key(p.x, p.y) for p in g.vertices}
    accepted: list[Line] = []
    accepted_set: set[Line] = set()
    triples = []
    for v in range(n):
        triple: list[Direction] = []
        for slot in range(3):
            for attempt in range(max_tries):
                s = _propose(g, v, rng, _spread(attempt)).canonical()
                if any(s.parallel(u) for u in triple):
                    continue
                if len(set(vertex_heights(g, s))) != n:
                    continue
                if delta_chi(g, v, s) == 0:
                    continue
                family = direction_witness_lines(g, s)
                fresh = [line for line in family if line not in accepted_set]
                clean = True
                for line in fresh:
                    crossings = set()
                    for other in accepted:
                        q = _intersection_key(line, other)
                        if q is None or q in vertex_keys:
                            continue
                        if q in crossings:
                            clean = False
                            break
                        crossings.add(q)
                    if not clean:
                        break
                if not clean:
                    continue
                accepted.extend(fresh)
                accepted_set.update(fresh)
                triple.append(s)
                break
            else:
                raise ExhaustedTriesError(
                    f"no acceptable direction for vertex {v} "
                    f"(slot {slot + 1} of 3) after {max_tries} tries",
                    vertex=v,
                )
        triples.append(tuple(triple))
    return DirectionPlan(tuple(triples))


@dataclass
class ArrangementReport:
    """Outcome of verifying a plan against its graph.

    ``passed`` requires the triple points to be exactly the vertices and
    no structural problems (non-witnessing or parallel directions inside a
    triple, height ties)."""

    passed: bool
    triple_points: tuple[Point, ...]
    spurious: tuple[Point, ...]
    missing: tuple[Point, ...]
    problems: list[str]


def verify_plan(g: PlaneGraph, plan: DirectionPlan) -> ArrangementReport:
    """Brute-force check of a plan, independent of how it was built.

    Recomputes every direction's full witness-line family, intersects all
    line pairs of the deduplicated arrangement, and flags points lying on
    three or more lines (distinct concurrent lines are automatically
    pairwise non-parallel).  Passes iff those points are exactly the
    vertices and every direction witnesses its own vertex.
    """
    problems: list[str] = []
    n = len(g.vertices)
    if len(plan.triples) != n:
        problems.append(f"plan covers {len(plan.triples)} vertices, graph has {n}")
        return ArrangementReport(False, (), (), tuple(g.vertices), problems)
    for v, triple in enumerate(plan.triples):
        if len(triple) != 3:
            problems.append(f"vertex {v} has {len(triple)} directions, not 3")
            continue
        for k, s in enumerate(triple):
            for u in triple[k + 1 :]:
                if s.parallel(u):
                    problems.append(
                        f"vertex {v} has parallel directions {s} and {u}"
                    )
            try:
                if delta_chi(g, v, s) == 0:
                    problems.append(f"direction {s} does not witness vertex {v}")
            except HeightTieError as exc:
                problems.append(f"direction {s} at vertex {v}: {exc}")
    try:
        lines = all_witness_lines(g, plan)
    except HeightTieError as exc:
        problems.append(f"arrangement not well defined: {exc}")
        return ArrangementReport(False, (), (), tuple(g.vertices), problems)
    counts: dict[tuple[int, int, int], int] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            q = _intersection_key(lines[i], lines[j])
            if q is not None:
                counts[q] = counts.get(q, 0) + 1
    # m concurrent lines contribute m*(m-1)/2 pairs, so >= 3 pairs means at
    # least three lines through the point.
    triple_keys = {q for q, k in counts.items() if k >= 3}
    vertex_keys = {_point_key(p.x, p.y) for p in g.vertices}

    def to_points(keys: set[tuple[int, int, int]]) -> list[Point]:
        pts = [Point(Fraction(xn, d), Fraction(yn, d)) for xn, yn, d in keys]
        return sorted(pts, key=lambda p: (p.x, p.y))

    triple_points = to_points(triple_keys)
    spurious = to_points(triple_keys - vertex_keys)
    missing = to_points(vertex_keys - triple_keys)
    for p in spurious:
        problems.append(
            f"stray triple point at ({format_scalar(p.x)}, {format_scalar(p.y)})"
        )
    for p in missing:
        problems.append(
            f"vertex ({format_scalar(p.x)}, {format_scalar(p.y)}) "
            "is not a triple point"
        )
    return ArrangementReport(
        passed=not problems,
        triple_points=tuple(triple_points),
        spurious=tuple(spurious),
        missing=tuple(missing),
        problems=problems,
    )


def format_plan(plan: DirectionPlan) -> str:
    """One line per vertex: index then three dx dy pairs."""
    rows = [f"# plan for {len(plan.triples)} vertices"]
    for v, triple in enumerate(plan.triples):
        parts = [str(v)]
        for s in triple:
            cs = s.canonical()
            parts.append(format_scalar(cs.dx))
            parts.append(format_scalar(cs.dy))
        rows.append(" ".join(parts))
    return "\n".join(rows) + "\n"


def parse_plan(text: str) -> DirectionPlan:
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 7:
            raise ParseError(
                f"line {lineno}: expected vertex index and three direction "
                f"pairs, got {len(fields)} fields"
            )
        try:
            index = int(fields[0])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad vertex index {fields[0]!r}") from exc
        if index != len(triples):
            raise ParseError(
                f"line {lineno}: vertex index {index} out of order "
                f"(expected {len(triples)})"
            )
        values = [parse_scalar(f) for f in fields[1:]]
        try:
            triple = tuple(Direction(values[k], values[k + 1]) for k in (0, 2, 4))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        triples.append(triple)
    if not triples:
        raise ParseError("plan file has no vertex rows")
    return DirectionPlan(tuple(triples))
