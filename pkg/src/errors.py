"""
Mapper Errors
Exception hierarchy shared by every mapping stage
"""


class MappingError(ValueError):
    """Base class for all mapping failures"""


class LatticeError(MappingError):
    """Coordinate out of bounds or of the wrong position class"""


class GeometryError(MappingError):
    """Invalid geometric description of a logical qubit"""


class GeometryParseError(GeometryError):
    """
    Syntax or validation error tied to a position in the input document

    Attributes:
        line: 1-based line number (0 when unknown)
        column: 1-based column number (0 when unknown)
    """

    def __init__(self, message, line=0, column=0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        if self.line:
            return f"{self.line}:{self.column}: {self.message}"
        return self.message


class GraphError(MappingError):
    """Illegal cycle-graph mutation"""


class TubeMappingError(MappingError):
    """Tube traversal could not complete"""


class SheetFindingError(MappingError):
    """Sub-sheet search exceeded its traversal bound"""


class EmissionError(MappingError):
    """Instruction stream could not be produced (e.g. colliding defects)"""
