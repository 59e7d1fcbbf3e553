"""Goeritz matrices built directly from the shaded regions, and the knot determinant."""

from __future__ import annotations

import json
import logging
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, root_validator

from dehngoeritz.errors import (
    DeterminantMismatchError,
    InconsistentInputsError,
    IndexOutOfRangeError,
)
from dehngoeritz.intmat import IntMatrix, det_exact
from dehngoeritz.pdcode import Checkerboard, Diagram, GoeritzIndexTable, RegionSet

logger = logging.getLogger(__name__)


class GoeritzMatrix(BaseModel):
    r"""
    The full (pre-)Goeritz matrix of a checkerboard-colored diagram.

    :param matrix:
        symmetric ``b x b`` matrix; entry ``(j, k)`` for ``j != k`` is the
        sum of the Goeritz indices of the crossings where shaded regions
        ``j`` and ``k`` meet, and each diagonal entry makes its row sum to zero

    :param shaded_regions:
        the region index of each row and column
    """

    matrix: IntMatrix
    shaded_regions: Tuple[int, ...]

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def symmetric_with_zero_row_sums(cls, values):
        matrix: IntMatrix = values["matrix"]
        if not matrix.is_square or matrix.rows != len(values["shaded_regions"]):
            raise ValueError("Goeritz matrix needs one row and column per shaded region")
        if not matrix.is_symmetric():
            raise ValueError("Goeritz matrix must be symmetric")
        if any(matrix.row_sums()):
            raise ValueError("every row of a Goeritz matrix must sum to zero")
        return values

    @property
    def b(self) -> int:
        return self.matrix.rows

    def as_dict(self) -> Dict[str, Any]:
        return {
            "matrix": self.matrix.as_list(),
            "shaded_regions": list(self.shaded_regions),
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> GoeritzMatrix:
        return cls(
            matrix=IntMatrix.from_rows(data["matrix"], cols=len(data["shaded_regions"])),
            shaded_regions=data["shaded_regions"],
        )

    def to_csv(self) -> str:
        return self.matrix.to_csv()

    def __str__(self):
        return str(self.matrix)


def goeritz_matrix(
    diagram: Diagram,
    regions: RegionSet,
    board: Checkerboard,
    indices: GoeritzIndexTable,
) -> GoeritzMatrix:
    """
    Build the Goeritz matrix from the crossings joining shaded regions.

    A crossing whose two shaded corners belong to the same region adds
    nothing off the diagonal.
    """
    if len(indices) != diagram.crossing_count:
        raise InconsistentInputsError(
            f"{len(indices)} Goeritz indices for {diagram.crossing_count} crossings"
        )
    b = board.b
    entries: List[List[int]] = [[0] * b for _ in range(b)]
    for x in range(diagram.crossing_count):
        j, k = (
            board.column_of(region)
            for region in regions.corners_at(x)
            if board.is_shaded(region)
        )
        if j != k:
            entries[j][k] += indices[x]
            entries[k][j] += indices[x]
    for j in range(b):
        entries[j][j] = -sum(entries[j][k] for k in range(b) if k != j)
    return GoeritzMatrix(
        matrix=IntMatrix.from_rows(entries, cols=b),
        shaded_regions=board.ordering[:b],
    )


def reduced(g: GoeritzMatrix, k: Optional[int] = None) -> IntMatrix:
    """
    Delete row and column ``k``.

    :param k:
        index of the shaded region to delete; defaults to the last one
    """
    if k is None:
        k = g.b - 1
    if not 0 <= k < g.b:
        raise IndexOutOfRangeError(f"no row {k} in a {g.b}x{g.b} Goeritz matrix")
    return g.matrix.delete(row=k, col=k)


def knot_determinant(g: GoeritzMatrix) -> int:
    """
    Find the knot determinant, ``|det|`` of a reduced Goeritz matrix.

    Every deletion index is tried, and they must all agree.
    """
    found = {abs(det_exact(reduced(g, k))) for k in range(g.b)}
    if len(found) != 1:
        raise DeterminantMismatchError(
            f"reduced Goeritz determinants depend on the deleted row: {sorted(found)}"
        )
    return found.pop()
