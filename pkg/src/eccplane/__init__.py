"""Euler characteristic curves of plane graphs, and vertex-set
reconstruction of degree-2-free graphs from six of them."""

from .deg2 import (
    Arc,
    ArcSet,
    Deg2Config,
    Deg2Tag,
    arc_measure,
    cardinal_witness_profile,
    classify_deg2,
    is_acute,
    predicted_cardinal_witnesses,
    witness_arcs,
)
from .dirplan import (
    ArrangementReport,
    DirectionPlan,
    all_witness_lines,
    format_plan,
    parse_plan,
    sample_witnessing_direction,
    select_3n_directions,
    verify_plan,
)
from .ecc import (
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
from .errors import (
    CountMismatchError,
    Degree2PresentError,
    EccPlaneError,
    ExhaustedRejectsError,
    ExhaustedTriesError,
    GeneralPositionError,
    HeightTieError,
    NoColumnMatchError,
    NoRowMatchError,
    ParseError,
    PlanarityError,
)
from .gen import GenConfig, fixture, generate
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
    format_graph,
    format_scalar,
    height,
    parse_graph,
    parse_scalar,
    quadrant,
    validate_general_position,
    validate_planarity,
)
from .reconstruct import (
    CardinalLines,
    ReconstructionInput,
    cardinal_witness_lines,
    reconstruct_from_graph,
    reconstruct_vertices,
    select_third_direction,
)
from .render import RenderSpec, render_svg

__version__ = "0.1.0"
