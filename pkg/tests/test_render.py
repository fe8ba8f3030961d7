"""SVG rendering sanity: structure, clipping, and overlays."""

import pytest

from eccplane.dirplan import select_3n_directions
from eccplane.gen import GenConfig, generate
from eccplane.geom import Direction, PlaneGraph
from eccplane.render import RenderSpec, _clip_line, render_svg


class TestClipLine:
    def test_vertical(self):
        seg = _clip_line((1, 0, 0), (-1.0, -1.0, 1.0, 1.0))
        assert seg == ((0.0, -1.0), (0.0, 1.0))

    def test_misses_box(self):
        assert _clip_line((1, 0, 5), (-1.0, -1.0, 1.0, 1.0)) is None

    def test_diagonal(self):
        seg = _clip_line((1, -1, 0), (0.0, 0.0, 2.0, 2.0))
        assert seg == ((0.0, 0.0), (2.0, 2.0))


class TestRenderSvg:
    def test_bad_spec_rejected(self):
        with pytest.raises(ValueError):
            RenderSpec(width=0)

    def test_plain_graph(self):
        g = generate(GenConfig(n=6, seed=9))
        svg = render_svg(g)
        assert svg.startswith("<svg ")
        assert svg.rstrip().endswith("</svg>")
        assert svg.count("<circle") == 6
        assert svg.count('stroke="black"') == len(g.edges)

    def test_direction_overlay_draws_lines(self):
        g = PlaneGraph([(0, 0), (1, 2)], [(0, 1)])
        plain = render_svg(g)
        with_lines = render_svg(g, directions=(Direction(0, 1),))
        assert with_lines.count("<line") > plain.count("<line")

    def test_plan_overlay_marks_triples(self):
        g = generate(GenConfig(n=3, seed=2))
        plan = select_3n_directions(g, seed=1)
        svg = render_svg(g, plan=plan)
        # Vertex dots plus one ring per triple point.
        assert svg.count("<circle") == 6
        assert svg.count('fill="none"') == 3

    def test_hide_everything(self):
        g = PlaneGraph([(0, 0), (1, 2)], [(0, 1)])
        spec = RenderSpec(show_vertices=False, show_edges=False, show_triple_points=False)
        svg = render_svg(g, spec)
        assert "<circle" not in svg and "<line" not in svg
