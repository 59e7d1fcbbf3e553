"""The Dehn coloring matrix of a knot diagram."""

from __future__ import annotations

import json
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, root_validator

from dehngoeritz.errors import ColumnOutOfRangeError
from dehngoeritz.intmat import IntMatrix, Vector
from dehngoeritz.pdcode import Checkerboard, Diagram, RegionSet

logger = logging.getLogger(__name__)

# Coefficient of the region in each corner: corners 1 and 2 lie on the
# side of the over-strand holding the outgoing under edge.
CORNER_COEFFICIENTS = (-1, 1, 1, -1)


class DehnMatrix(BaseModel):
    r"""
    Coefficient matrix of the Dehn coloring equations, one row per crossing.

    :param matrix:
        the ``c x (c + 2)`` integer matrix

    :param col_region:
        the region index of each column; the first ``b`` columns are the
        shaded regions

    :param row_crossing:
        the crossing index of each row

    :param b:
        number of shaded regions
    """

    matrix: IntMatrix
    col_region: Tuple[int, ...]
    row_crossing: Tuple[int, ...]
    b: int

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def rows_are_dehn_relations(cls, values):
        matrix: IntMatrix = values["matrix"]
        if len(values["col_region"]) != matrix.cols:
            raise ValueError("col_region needs one region per column")
        if len(values["row_crossing"]) != matrix.rows:
            raise ValueError("row_crossing needs one crossing per row")
        if not 1 <= values["b"] < max(matrix.cols, 2):
            raise ValueError(f"shaded column count {values['b']} is out of range")
        for i in range(matrix.rows):
            row = matrix.row(i)
            if any(v not in (-1, 0, 1) for v in row):
                raise ValueError(f"row {i} has an entry outside -1, 0, 1: {row}")
            if sum(row):
                raise ValueError(f"row {i} does not sum to zero: {row}")
            if sum(1 for v in row if v) not in (2, 4):
                raise ValueError(f"row {i} must have 2 or 4 nonzero entries: {row}")
        return values

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols

    def row(self, i: int) -> Vector:
        return self.matrix.row(i)

    def column(self, j: int) -> Vector:
        return self.matrix.column(j)

    def shaded_indicator(self) -> Vector:
        """Return the vector with 1 on shaded columns and 0 elsewhere."""
        return tuple(int(j < self.b) for j in range(self.cols))

    def scrambled(self, order: Sequence[int], signs: Optional[Sequence[int]] = None) -> DehnMatrix:
        """
        Reorder the rows and multiply each by a sign.

        Row ``i`` of the result is row ``order[i]`` of this matrix times ``signs[i]``.
        """
        return DehnMatrix(
            matrix=self.matrix.take_rows(order, signs),
            col_region=self.col_region,
            row_crossing=tuple(self.row_crossing[i] for i in order),
            b=self.b,
        )

    def as_dict(self) -> Dict[str, Any]:
        return {
            "matrix": self.matrix.as_list(),
            "col_region": list(self.col_region),
            "row_crossing": list(self.row_crossing),
            "b": self.b,
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> DehnMatrix:
        return cls(
            matrix=IntMatrix.from_rows(data["matrix"], cols=len(data["col_region"])),
            col_region=data["col_region"],
            row_crossing=data["row_crossing"],
            b=data["b"],
        )

    @classmethod
    def from_json(cls, text: str) -> DehnMatrix:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        return self.matrix.to_csv()

    def __str__(self):
        return str(self.matrix)


def dehn_matrix(diagram: Diagram, regions: RegionSet, board: Checkerboard) -> DehnMatrix:
    """
    Build the Dehn coloring matrix with the shaded columns first.

    At each crossing the two corner regions on one side of the over-strand
    get ``+1`` and the two on the other side get ``-1``. A region filling
    two corners of a crossing gets the sum of their coefficients.
    """
    rows: List[List[int]] = []
    for x in range(diagram.crossing_count):
        row = [0] * regions.region_count
        for region, coefficient in zip(regions.corners_at(x), CORNER_COEFFICIENTS):
            row[board.column_of(region)] += coefficient
        rows.append(row)
    logger.debug("built %dx%d Dehn matrix", len(rows), regions.region_count)
    return DehnMatrix(
        matrix=IntMatrix.from_rows(rows, cols=regions.region_count),
        col_region=board.ordering,
        row_crossing=tuple(range(diagram.crossing_count)),
        b=board.b,
    )


def select_rows(dehn: DehnMatrix, j: int) -> List[Tuple[int, int]]:
    """
    Find the rows with a nonzero entry in column ``j``.

    :returns:
        ``(row, entry)`` pairs in row order
    """
    if not 0 <= j < dehn.cols:
        raise ColumnOutOfRangeError(f"no column {j} in a matrix with {dehn.cols} columns")
    return [(i, dehn.matrix[i, j]) for i in range(dehn.rows) if dehn.matrix[i, j]]
