"""Direction plans: line canonicalization, guided sampling, plan
construction, and the brute-force arrangement verifier."""

import random
from fractions import Fraction

import pytest

from eccplane.dirplan import (
    DirectionPlan,
    all_witness_lines,
    direction_witness_lines,
    format_plan,
    line_intersection,
    parse_plan,
    sample_witnessing_direction,
    select_3n_directions,
    verify_plan,
    witness_line,
)
from eccplane.ecc import delta_chi, vertex_heights, witnessed_vertices
from eccplane.errors import ExhaustedTriesError, ParseError
from eccplane.gen import GenConfig, fig1_trick, generate
from eccplane.geom import EAST, NORTH, Direction, PlaneGraph, Point

EDGE = PlaneGraph([(0, 0), (1, 2)], [(0, 1)])


class TestWitnessLine:
    def test_axis_lines(self):
        assert witness_line(Point(3, 5), EAST) == (1, 0, 3)
        assert witness_line(Point(3, 5), NORTH) == (0, 1, 5)

    def test_clears_denominators(self):
        assert witness_line(Point(Fraction(3, 2), 7), EAST) == (2, 0, 3)
        assert witness_line(Point(Fraction(1, 3), Fraction(1, 2)), Direction(1, 1)) == (6, 6, 5)

    def test_antipodal_directions_share_the_line(self):
        p = Point(2, -3)
        for s in (Direction(1, 2), Direction(5, -1), NORTH):
            assert witness_line(p, s) == witness_line(p, -s)

    def test_sign_normalization(self):
        line = witness_line(Point(0, 4), Direction(0, -1))
        assert line == (0, 1, 4)
        assert witness_line(Point(-1, 0), Direction(-2, 0)) == (1, 0, -1)

    def test_scaling_direction_is_irrelevant(self):
        p = Point(Fraction(5, 4), Fraction(-2, 3))
        assert witness_line(p, Direction(3, 9)) == witness_line(p, Direction(1, 3))


class TestLineIntersection:
    def test_parallel_is_none(self):
        assert line_intersection((1, 2, 0), (2, 4, 5)) is None
        assert line_intersection((1, 0, 1), (1, 0, 1)) is None

    def test_axis_crossing(self):
        assert line_intersection((1, 0, 3), (0, 1, 5)) == (3, 5)

    def test_fractional_crossing(self):
        q = line_intersection((1, 1, 1), (1, -1, 0))
        assert q == (Fraction(1, 2), Fraction(1, 2))


class TestFamilies:
    def test_edge_family_east(self):
        # Only the lower endpoint is witnessed from the east.
        assert direction_witness_lines(EDGE, EAST) == {(1, 0, 0)}

    def test_family_is_parallel_and_complete(self):
        g = generate(GenConfig(n=7, seed=3))
        s = Direction(3, 1)
        lines = direction_witness_lines(g, s)
        # One line per witnessed vertex, all with normal parallel to s.
        assert len(lines) == len(witnessed_vertices(g, s))
        assert all(a * s.dy == b * s.dx for a, b, _ in lines)

    def test_all_witness_lines_dedupes_directions(self):
        plan = DirectionPlan(((Direction(1, 1), Direction(2, 2), Direction(1, 0)),))
        g = PlaneGraph([(3, 5)], [])
        lines = all_witness_lines(g, plan)
        assert lines == sorted({(1, 1, 8), (1, 0, 3)})


class TestSampling:
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_isolated_vertex(self, seed):
        g = PlaneGraph([(3, 5), (0, 0)], [])
        s = sample_witnessing_direction(g, 0, seed=seed)
        assert delta_chi(g, 0, s) != 0

    def test_each_degree_class(self):
        g = generate(GenConfig(n=9, seed=12))
        n = len(g.vertices)
        for v in range(n):
            s = sample_witnessing_direction(g, v, seed=v)
            assert delta_chi(g, v, s) != 0
            assert len(set(vertex_heights(g, s))) == n

    def test_deterministic(self):
        g = generate(GenConfig(n=6, seed=4))
        a = sample_witnessing_direction(g, 2, seed=17)
        b = sample_witnessing_direction(g, 2, seed=17)
        assert a == b

    def test_exhaustion_names_the_vertex(self):
        g = PlaneGraph([(3, 5)], [])
        with pytest.raises(ExhaustedTriesError) as info:
            sample_witnessing_direction(g, 0, max_tries=0)
        assert info.value.vertex == 0
        assert info.value.code == "EXHAUSTED_TRIES"


class TestSelectAndVerify:
    @pytest.mark.parametrize("n,seed", [(1, 0), (3, 1), (5, 9), (8, 2)])
    def test_small_graphs_pass(self, n, seed):
        g = generate(GenConfig(n=n, seed=seed))
        plan = select_3n_directions(g, seed=seed)
        assert len(plan.triples) == n
        for triple in plan.triples:
            assert len(triple) == 3
            assert not triple[0].parallel(triple[1])
            assert not triple[0].parallel(triple[2])
            assert not triple[1].parallel(triple[2])
        report = verify_plan(g, plan)
        assert report.passed and not report.problems
        assert report.spurious == () and report.missing == ()
        assert set(report.triple_points) == set(g.vertices)

    def test_deterministic(self):
        g = generate(GenConfig(n=5, seed=8))
        assert select_3n_directions(g, seed=3) == select_3n_directions(g, seed=3)

    def test_verifier_rejects_short_plan(self):
        g = PlaneGraph([(0, 0), (1, 2)], [(0, 1)])
        plan = DirectionPlan(((Direction(1, 1), Direction(1, 0), Direction(0, 1)),))
        report = verify_plan(g, plan)
        assert not report.passed
        assert report.missing == tuple(g.vertices)

    def test_verifier_rejects_parallel_triple(self):
        g = PlaneGraph([(3, 5)], [])
        plan = DirectionPlan(((Direction(1, 1), Direction(2, 2), Direction(1, 0)),))
        report = verify_plan(g, plan)
        assert not report.passed
        assert any("parallel" in p for p in report.problems)

    def test_verifier_flags_unwitnessed_vertex(self):
        # Vertex 1 of the single edge is blind from the east; only two
        # lines pass through it, so it goes missing from the arrangement.
        g = EDGE
        plan = DirectionPlan(
            (
                (EAST, NORTH, Direction(1, 1)),
                (EAST, Direction(0, -1), Direction(-1, 0)),
            )
        )
        report = verify_plan(g, plan)
        assert not report.passed
        assert any("witness" in p for p in report.problems)
        assert report.spurious == ()
        assert report.missing == (Point(1, 2),)
        assert report.triple_points == (Point(0, 0),)


class TestNaiveTiltBackfires:
    def test_spurious_triple_point(self):
        # Hand-built plan for the two-edge gadget: every direction honestly
        # witnesses its vertex, but the tilt picked for the fourth vertex
        # lines up with two other families and fakes a crossing at a point
        # where there is no vertex at all.
        g = fig1_trick()
        naive = DirectionPlan(
            (
                (Direction(1, 0), Direction(0, -1), Direction(1, -1)),
                (Direction(4, 5), Direction(5, 6), Direction(-3, -4)),
                (Direction(0, 1), Direction(-1, 0), Direction(-1, 1)),
                (Direction(1, 3), Direction(1, 0), Direction(0, 1)),
                (Direction(-1, 0), Direction(0, -1), Direction(1, -1)),
            )
        )
        for v, triple in enumerate(naive.triples):
            for s in triple:
                assert delta_chi(g, v, s) != 0
        report = verify_plan(g, naive)
        assert not report.passed
        assert report.missing == ()
        assert Point(-2, -2) in report.spurious
        assert report.spurious == (
            Point(-4, 1),
            Point(-4, 3),
            Point(-2, -3),
            Point(-2, -2),
            Point(2, -3),
            Point(2, -2),
            Point(2, Fraction(-5, 3)),
            Point(6, -3),
        )

    def test_construction_avoids_the_trap(self):
        g = fig1_trick()
        plan = select_3n_directions(g, seed=0)
        report = verify_plan(g, plan)
        assert report.passed
        assert set(report.triple_points) == set(g.vertices)


class TestPlanFormat:
    def test_round_trip(self):
        g = generate(GenConfig(n=4, seed=6))
        plan = select_3n_directions(g, seed=1)
        text = format_plan(plan)
        assert parse_plan(text) == plan
        assert format_plan(parse_plan(text)) == text

    def test_header_comment(self):
        plan = DirectionPlan(((EAST, NORTH, Direction(1, 1)),))
        text = format_plan(plan)
        assert text.startswith("# plan for 1 vertices\n")
        assert "0 1 0 0 1 1 1" in text

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "0 1 0 0 1\n",
            "1 1 0 0 1 1 1\n",
            "0 1 0 0 1 1 1\n0 1 0 0 1 1 1\n",
            "x 1 0 0 1 1 1\n",
            "0 1 0 0 0 1 1\n",
        ],
    )
    def test_parse_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_plan(bad)
