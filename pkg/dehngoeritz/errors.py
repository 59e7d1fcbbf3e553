"""Errors raised while building and comparing knot diagram matrices."""


class DehnGoeritzError(Exception):
    """Base class for errors raised by dehngoeritz."""

    exit_code = 1


class DiagramInputError(DehnGoeritzError, ValueError):
    """Error for diagram input text that cannot describe a knot diagram."""

    exit_code = 2


class MalformedRecordError(DiagramInputError):
    """Error for a crossing record with the wrong arity or a non-integer label."""

    pass


class BadIncidenceError(DiagramInputError):
    """Error for an edge label that does not appear exactly twice."""

    pass


class NotPlanarKnotError(DiagramInputError):
    """Error for a crossing map that is not a planar one-component knot diagram."""

    pass


class PreconditionError(DehnGoeritzError, ValueError):
    """Error for an operation called on arguments outside its domain."""

    exit_code = 3


class NotPrimeDiagramError(PreconditionError):
    """Error for a sign-solving reconstruction requested on a non-prime diagram."""

    pass


class NotTwoIncidentError(PreconditionError):
    """Error for an unshaded column that meets the selected rows other than twice."""

    pass


class DisconnectedConstraintsError(PreconditionError):
    """Error for a sign constraint graph with more than one component."""

    pass


class NotPrimeModulusError(PreconditionError):
    """Error for a coloring modulus that is not a prime number."""

    pass


class BadModulusError(PreconditionError):
    """Error for a coloring modulus smaller than 2."""

    pass


class ColumnOutOfRangeError(PreconditionError, IndexError):
    """Error for a matrix column index outside the matrix."""

    pass


class IndexOutOfRangeError(PreconditionError, IndexError):
    """Error for a row, region or crossing index outside its range."""

    pass


class NotSquareError(PreconditionError):
    """Error for a determinant requested of a non-square matrix."""

    pass


class BadOrderingError(PreconditionError):
    """Error for a region ordering that is not a shaded-first permutation."""

    pass


class InvariantError(DehnGoeritzError, RuntimeError):
    """Error for a broken internal invariant; indicates a bug or inconsistent inputs."""

    exit_code = 4


class NoProperColoringError(InvariantError):
    """Error for a region adjacency graph that is not bipartite."""

    pass


class InconsistentInputsError(InvariantError):
    """Error for a Dehn matrix and index table built from different diagrams."""

    pass


class InconsistentSignsError(InvariantError):
    """Error for a parity conflict found while propagating row signs."""

    pass


class SymmetrizeFailedError(InvariantError):
    """Error for a stack of rows that no re-signing makes symmetric."""

    pass


class AsymmetricMagnitudesError(InvariantError):
    """Error for rows whose left block is not symmetric in absolute value."""

    pass


class DeterminantMismatchError(InvariantError):
    """Error for reduced Goeritz determinants that depend on the deleted index."""

    pass
