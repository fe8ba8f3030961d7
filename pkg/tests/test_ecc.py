"""Curve computation against an independent recount oracle, plus the step
function container and the text format."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eccplane.ecc import (
    StepFunction,
    WitnessLineSet,
    compute_ecc,
    delta_chi,
    format_ecc,
    lower_star_height,
    parse_ecc,
    vertex_heights,
    witness_heights,
    witnessed_vertices,
)
from eccplane.errors import HeightTieError, ParseError
from eccplane.gen import GenConfig, generate
from eccplane.geom import EAST, NORTH, Direction, PlaneGraph, Point
from helpers import brute_ecc, random_direction

EDGE = PlaneGraph([(0, 0), (1, 2)], [(0, 1)])
TRIANGLE = PlaneGraph([(0, 0), (1, 2), (2, 1)], [(0, 1), (0, 2), (1, 2)])
PATH = PlaneGraph([(0, 0), (1, 2), (2, Fraction(1, 2))], [(0, 1), (1, 2)])


class TestStepFunction:
    def test_value_lookup(self):
        f = StepFunction(((0, 1), (2, 0)))
        assert f.value_at(-1) == 0
        assert f.value_at(0) == 1
        assert f.value_at(1) == 1
        assert f.value_at(2) == 0
        assert f.value_at(100) == 0
        assert f.final_value == 0
        assert len(f) == 2

    def test_empty(self):
        f = StepFunction(())
        assert f.value_at(0) == 0 and f.final_value == 0

    def test_heights_must_increase(self):
        with pytest.raises(ValueError):
            StepFunction(((1, 1), (1, 2)))
        with pytest.raises(ValueError):
            StepFunction(((2, 1), (1, 2)))

    def test_values_must_change(self):
        with pytest.raises(ValueError):
            StepFunction(((0, 1), (1, 1)))
        with pytest.raises(ValueError):
            StepFunction(((0, 0),))


class TestLowerStar:
    def test_vertex_height(self):
        assert lower_star_height(1, EDGE, EAST) == 1

    def test_edge_takes_the_max(self):
        assert lower_star_height((0, 1), EDGE, EAST) == 1
        assert lower_star_height((0, 1), EDGE, Direction(-1, 0)) == 0


class TestComputeEcc:
    def test_single_edge_east(self):
        f = compute_ecc(EDGE, EAST)
        assert f.breakpoints == ((Fraction(0), 1),)

    def test_triangle_north(self):
        # The apex arrives with both of its edges: one vertex minus two
        # edges nets -1, so the curve steps 1 then 0.
        f = compute_ecc(TRIANGLE, NORTH)
        assert f.breakpoints == ((Fraction(0), 1), (Fraction(2), 0))

    def test_final_value_is_euler_characteristic(self):
        for g in (EDGE, TRIANGLE, PATH):
            for s in (EAST, NORTH, Direction(3, -2)):
                assert compute_ecc(g, s).final_value == g.euler_characteristic()

    def test_matches_recount_oracle_on_random_graphs(self):
        rng = random.Random(20260825)
        checked = 0
        while checked < 60:
            n = rng.randint(2, 10)
            g = generate(GenConfig(n=n, seed=rng.randrange(1 << 30)))
            s = random_direction(rng)
            if len(set(vertex_heights(g, s))) != n:
                continue
            f = compute_ecc(g, s)
            assert list(f.breakpoints) == brute_ecc(g, s)
            checked += 1

    @given(st.integers(min_value=1, max_value=10_000), st.integers(min_value=1, max_value=60))
    def test_positive_rescale_keeps_witnesses(self, num, den):
        k = Fraction(num, den)
        s = Direction(3, -2)
        scaled = Direction(3 * k, -2 * k)
        assert witnessed_vertices(PATH, s) == witnessed_vertices(PATH, scaled)
        assert witness_heights(compute_ecc(PATH, scaled)) == [
            k * h for h in witness_heights(compute_ecc(PATH, s))
        ]


class TestDeltaChi:
    def test_edge_endpoints_east(self):
        assert delta_chi(EDGE, 0, EAST) == 1
        assert delta_chi(EDGE, 1, EAST) == 0

    def test_degree_three_vertex(self):
        # Two of the three neighbors lie west of the center, so two edges
        # arrive with it: 1 - 2.
        g = PlaneGraph(
            [(0, 0), (-3, -1), (-1, -2), (2, 3), (5, -4)],
            [(0, 1), (0, 2), (0, 3)],
        )
        assert delta_chi(g, 0, EAST) == -1
        assert delta_chi(g, 0, Direction(-1, 0)) == 0

    def test_tie_raises(self):
        g = PlaneGraph([(0, 0), (1, -1)], [(0, 1)])
        with pytest.raises(HeightTieError):
            delta_chi(g, 0, Direction(1, 1))

    def test_sum_of_jumps_is_final_value(self):
        rng = random.Random(7)
        for _ in range(20):
            g = generate(GenConfig(n=rng.randint(2, 9), seed=rng.randrange(1 << 30)))
            s = random_direction(rng)
            try:
                total = sum(delta_chi(g, v, s) for v in range(len(g)))
            except HeightTieError:
                continue
            assert total == g.euler_characteristic()


class TestWitnessedVertices:
    def test_path_east(self):
        assert witnessed_vertices(PATH, EAST) == {0}

    def test_path_north(self):
        assert witnessed_vertices(PATH, NORTH) == {0, 1, 2}

    def test_agrees_with_delta_chi(self):
        rng = random.Random(99)
        for _ in range(20):
            g = generate(GenConfig(n=rng.randint(2, 9), seed=rng.randrange(1 << 30)))
            s = random_direction(rng)
            try:
                w = witnessed_vertices(g, s)
            except HeightTieError:
                continue
            assert w == {v for v in range(len(g)) if delta_chi(g, v, s) != 0}

    def test_tie_raises_even_between_strangers(self):
        g = PlaneGraph([(0, 0), (2, -2), (1, 5)], [])
        with pytest.raises(HeightTieError):
            witnessed_vertices(g, Direction(1, 1))


class TestWitnessLineSet:
    def test_from_ecc(self):
        w = WitnessLineSet.from_ecc(NORTH, compute_ecc(TRIANGLE, NORTH))
        assert w.direction == NORTH
        assert w.heights == (Fraction(0), Fraction(2))

    def test_heights_must_increase(self):
        with pytest.raises(ValueError):
            WitnessLineSet(EAST, (1, 1))


class TestEccFormat:
    def test_round_trip_bit_exact(self):
        f = compute_ecc(PATH, Direction(2, Fraction(1, 3)))
        text = format_ecc(Direction(2, Fraction(1, 3)), f)
        direction, parsed = parse_ecc(text)
        assert direction == Direction(2, Fraction(1, 3))
        assert parsed == f
        assert format_ecc(direction, parsed) == text

    def test_parse_tolerates_comments_and_blanks(self):
        text = "# direction 0 1\n\n# noise\n0 1\n2 0\n"
        direction, f = parse_ecc(text)
        assert direction == NORTH
        assert f.breakpoints == ((Fraction(0), 1), (Fraction(2), 0))

    @pytest.mark.parametrize(
        "bad",
        [
            "0 1\n",  # no direction header
            "# direction 1\n0 1\n",
            "# direction 0 1\n0\n",
            "# direction 0 1\n0 x\n",
            "# direction 0 1\n1 1\n0 2\n",  # heights out of order
            "# direction 0 1\n0 1\n1 1\n",  # value fails to change
        ],
    )
    def test_parse_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_ecc(bad)
