"""Run the whole pipeline on one diagram."""

from __future__ import annotations

from typing import Optional, Sequence

from pydantic import BaseModel

from dehngoeritz.dehn import DehnMatrix, dehn_matrix
from dehngoeritz.goeritz import GoeritzMatrix, goeritz_matrix, knot_determinant
from dehngoeritz.pdcode import (
    Checkerboard,
    Diagram,
    GoeritzIndexTable,
    RegionSet,
    checkerboard,
    faces,
    goeritz_indices,
    is_prime_diagram,
)


class Analysis(BaseModel):
    """A diagram with its regions, coloring, indices and both matrices."""

    diagram: Diagram
    regions: RegionSet
    board: Checkerboard
    indices: GoeritzIndexTable
    dehn: DehnMatrix
    goeritz: GoeritzMatrix

    class Config:
        frozen = True

    @property
    def is_prime(self) -> bool:
        return is_prime_diagram(self.diagram, self.regions)

    def determinant(self) -> int:
        return knot_determinant(self.goeritz)


def analyze(
    diagram: Diagram, shade: Optional[int] = None, order: Optional[Sequence[int]] = None
) -> Analysis:
    """
    Find the regions, checkerboard coloring, Goeritz indices and matrices of a diagram.

    :param shade:
        a region to put in the shaded class

    :param order:
        an optional column order, shaded regions first
    """
    regions = faces(diagram)
    board = checkerboard(diagram, regions, shade=shade, order=order)
    indices = goeritz_indices(diagram, regions, board)
    return Analysis(
        diagram=diagram,
        regions=regions,
        board=board,
        indices=indices,
        dehn=dehn_matrix(diagram, regions, board),
        goeritz=goeritz_matrix(diagram, regions, board, indices),
    )
