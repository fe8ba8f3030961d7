"""Exception hierarchy with stable machine-parsable codes.

The CLI prints ``CODE: detail`` on one line and exits nonzero; library
callers catch the classes.
"""


class EccPlaneError(Exception):
    code = "ERROR"


class ParseError(EccPlaneError):
    code = "PARSE"


class GeneralPositionError(EccPlaneError):
    """Raised when an operation refuses to run on a graph that fails the
    distinct-coordinate / no-collinear-triple assumptions."""

    code = "GENERAL_POSITION"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class PlanarityError(EccPlaneError):
    code = "PLANARITY"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class HeightTieError(EccPlaneError):
    """Two vertices share a height in the chosen direction, so whether the
    change in the curve belongs to one vertex or the other is undefined."""

    code = "HEIGHT_TIE"


class Degree2PresentError(EccPlaneError):
    code = "DEG2_PRESENT"

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"degree-2 vertices present: {list(self.vertices)}")


class NoColumnMatchError(EccPlaneError):
    code = "NO_MATCH"


class NoRowMatchError(EccPlaneError):
    code = "NO_MATCH"


class CountMismatchError(EccPlaneError):
    code = "COUNT_MISMATCH"


class ExhaustedTriesError(EccPlaneError):
    code = "EXHAUSTED_TRIES"

    def __init__(self, message, vertex=None):
        self.vertex = vertex
        super().__init__(message)


class ExhaustedRejectsError(EccPlaneError):
    code = "EXHAUSTED_TRIES"
