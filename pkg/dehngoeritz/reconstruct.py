"""
Recover the Goeritz matrix from the Dehn coloring matrix.

Two methods are provided. :func:`reconstruct_with_indices` signs each row
by the Goeritz index of its crossing. :func:`reconstruct_algebraically`
needs only the matrix itself: the signs are forced by requiring the
unshaded columns to cancel, and the result is symmetrized row by row.
The second method works for prime diagrams and fixes the matrix up to a
global sign.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, StrictInt, root_validator, validator

from dehngoeritz.dehn import DehnMatrix, select_rows
from dehngoeritz.errors import (
    AsymmetricMagnitudesError,
    ColumnOutOfRangeError,
    DisconnectedConstraintsError,
    InconsistentInputsError,
    InconsistentSignsError,
    IndexOutOfRangeError,
    NotPrimeDiagramError,
    NotTwoIncidentError,
    SymmetrizeFailedError,
)
from dehngoeritz.intmat import IntMatrix, Vector
from dehngoeritz.pdcode import Diagram, GoeritzIndexTable, RegionSet, is_prime_diagram

logger = logging.getLogger(__name__)

INDEXED = "indexed"
ALGEBRAIC = "algebraic"


class SignAssignment(BaseModel):
    r"""
    Signs applied to the rows selected for one shaded column.

    :param column:
        the shaded column the rows were selected for

    :param signs:
        sign for each selected row

    :param anchor:
        the row whose sign was fixed first, or None when the signs came
        from Goeritz indices
    """

    column: int
    signs: Dict[int, StrictInt]
    anchor: Optional[int] = None

    @validator("signs")
    def signs_are_units(cls, value):
        if any(sign not in (-1, 1) for sign in value.values()):
            raise ValueError("row signs must be -1 or 1")
        return value

    @root_validator(skip_on_failure=True)
    def anchor_is_selected(cls, values):
        anchor = values.get("anchor")
        if anchor is not None and anchor not in values["signs"]:
            raise ValueError(f"anchor row {anchor} is not among the selected rows")
        return values

    def flipped(self) -> SignAssignment:
        """Return the other valid assignment, with every sign negated."""
        return SignAssignment(
            column=self.column,
            signs={row: -sign for row, sign in self.signs.items()},
            anchor=self.anchor,
        )

    def as_dict(self) -> Dict[str, Any]:
        return {
            "column": self.column,
            "anchor": self.anchor,
            "signs": {str(row): sign for row, sign in sorted(self.signs.items())},
        }


class ReconstructionResult(BaseModel):
    r"""
    A matrix rebuilt from signed sums of Dehn matrix rows.

    :param full:
        one row per shaded column, one column per region

    :param b:
        number of shaded regions

    :param method:
        ``"indexed"`` or ``"algebraic"``

    :param sign_fixed:
        whether the global sign is canonical rather than an arbitrary choice

    :param assignments:
        the row signs used for each shaded column

    :param row_signs:
        signs applied to the output rows when symmetrizing

    :param raw_row_signs:
        symmetrizing signs before normalization, keeping the first row as solved
    """

    full: IntMatrix
    b: int
    method: str
    sign_fixed: bool
    assignments: Tuple[SignAssignment, ...] = ()
    row_signs: Tuple[int, ...] = ()
    raw_row_signs: Tuple[int, ...] = ()

    @root_validator(skip_on_failure=True)
    def one_row_per_shaded_column(cls, values):
        if values["full"].rows != values["b"]:
            raise ValueError("a reconstruction has one row per shaded region")
        return values

    @property
    def left(self) -> IntMatrix:
        """The ``b x b`` block over the shaded columns."""
        return self.full.left_block(self.b)

    @property
    def right_block_zero(self) -> bool:
        return all(
            v == 0 for i in range(self.full.rows) for v in self.full.row(i)[self.b :]
        )

    def as_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "matrix": self.full.as_list(),
            "left": self.left.as_list(),
            "sign_fixed": self.sign_fixed,
            "right_block_zero": self.right_block_zero,
            "assignments": [assignment.as_dict() for assignment in self.assignments],
            "row_signs": list(self.row_signs),
            "raw_row_signs": list(self.raw_row_signs),
        }


def _signed_sum(dehn: DehnMatrix, signs: Mapping[int, int]) -> Vector:
    total = [0] * dehn.cols
    for row, sign in signs.items():
        for j, v in enumerate(dehn.row(row)):
            total[j] += sign * v
    return tuple(total)


def reconstruct_with_indices(
    dehn: DehnMatrix, indices: GoeritzIndexTable
) -> ReconstructionResult:
    """
    Rebuild the Goeritz matrix using the Goeritz index of every crossing.

    For shaded column ``j``, each row meeting column ``j`` is signed so its
    ``j``-th entry becomes the negative of its crossing's Goeritz index, and
    the signed rows are summed. Output rows run over the shaded columns only.

    :returns:
        a result whose left block is the Goeritz matrix and whose other
        columns are zero
    """
    if any(not 0 <= x < len(indices) for x in dehn.row_crossing) or (
        dehn.rows != len(indices)
    ):
        raise InconsistentInputsError(
            f"{len(indices)} Goeritz indices do not match a Dehn matrix with {dehn.rows} rows"
        )
    rows: List[Vector] = []
    assignments = []
    for j in range(dehn.b):
        signs = {
            row: -indices[dehn.row_crossing[row]] * value
            for row, value in select_rows(dehn, j)
        }
        assignments.append(SignAssignment(column=j, signs=signs))
        rows.append(_signed_sum(dehn, signs))
    full = IntMatrix.from_rows(rows, cols=dehn.cols)
    result = ReconstructionResult(
        full=full,
        b=dehn.b,
        method=INDEXED,
        sign_fixed=True,
        assignments=tuple(assignments),
    )
    if not result.right_block_zero:
        raise InconsistentInputsError(
            "signed rows left nonzero unshaded entries; "
            "the index table does not belong to this Dehn matrix"
        )
    return result


def solve_column_signs(
    dehn: DehnMatrix,
    j: int,
    anchor: Optional[int] = None,
    anchor_sign: int = 1,
) -> Tuple[SignAssignment, Vector]:
    """
    Find the row signs that cancel every unshaded column, for shaded column ``j``.

    Two selected rows are linked when both are nonzero in one unshaded
    column, and their signs must make that column cancel. Signs spread
    breadth-first from the anchor.

    :param anchor:
        the row whose sign is fixed first; defaults to the lowest selected row

    :param anchor_sign:
        the sign given to the anchor row

    :returns:
        the sign assignment and the summed row, which is zero on every
        unshaded column
    """
    if not 0 <= j < dehn.b:
        raise ColumnOutOfRangeError(f"column {j} is not one of the {dehn.b} shaded columns")
    if anchor_sign not in (-1, 1):
        raise ValueError(f"anchor sign must be -1 or 1, not {anchor_sign}")
    selected = [row for row, _ in select_rows(dehn, j)]
    if not selected:
        return SignAssignment(column=j, signs={}), (0,) * dehn.cols
    if anchor is None:
        anchor = selected[0]
    elif anchor not in selected:
        raise IndexOutOfRangeError(f"anchor row {anchor} is not nonzero in column {j}")

    graph = nx.Graph()
    graph.add_nodes_from(selected)
    constraints = []
    for k in range(dehn.b, dehn.cols):
        hits = [row for row in selected if dehn.matrix[row, k]]
        if not hits:
            continue
        if len(hits) != 2:
            raise NotTwoIncidentError(
                f"unshaded column {k} is nonzero in {len(hits)} of the rows "
                f"selected for column {j}: {hits}"
            )
        first, second = hits
        relation = -dehn.matrix[first, k] * dehn.matrix[second, k]
        graph.add_edge(first, second, relation=relation)
        constraints.append((first, second, k, relation))
    if not nx.is_connected(graph):
        raise DisconnectedConstraintsError(
            f"the sign constraints for column {j} fall into "
            f"{nx.number_connected_components(graph)} groups"
        )

    signs = {anchor: anchor_sign}
    for parent, child in nx.bfs_edges(graph, anchor):
        signs[child] = signs[parent] * graph.edges[parent, child]["relation"]
    for first, second, k, relation in constraints:
        if signs[second] != signs[first] * relation:
            raise InconsistentSignsError(
                f"rows {first} and {second} cannot both cancel in column {k}"
            )
    logger.debug("column %d signs %s", j, signs)
    return SignAssignment(column=j, signs=signs, anchor=anchor), _signed_sum(dehn, signs)


class RowSigns(BaseModel):
    r"""
    Signs that make a stack of rows symmetric on its left block.

    :param raw:
        the solution keeping the first row as given

    :param signs:
        the normalized solution, making the first nonzero entry of the
        first row positive
    """

    raw: Tuple[int, ...]
    signs: Tuple[int, ...]


def symmetrize(rows: Sequence[Sequence[int]]) -> RowSigns:
    """
    Find per-row signs ``e`` with ``e[j] * rows[j][k] == e[k] * rows[k][j]``.

    Only the left ``len(rows) x len(rows)`` block is examined. The signs
    spread over the graph linking ``j`` and ``k`` whenever
    ``rows[j][k]`` is nonzero.
    """
    size = len(rows)
    for j in range(size):
        for k in range(j):
            if abs(rows[j][k]) != abs(rows[k][j]):
                raise AsymmetricMagnitudesError(
                    f"|rows[{j}][{k}]| = {abs(rows[j][k])} but |rows[{k}][{j}]| = {abs(rows[k][j])}"
                )
    if not size:
        return RowSigns(raw=(), signs=())

    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    for j in range(size):
        for k in range(j + 1, size):
            if rows[j][k]:
                same = (rows[j][k] > 0) == (rows[k][j] > 0)
                graph.add_edge(j, k, relation=1 if same else -1)
    if not nx.is_connected(graph):
        raise DisconnectedConstraintsError(
            "the shaded regions do not form one connected adjacency graph"
        )

    raw = {0: 1}
    for parent, child in nx.bfs_edges(graph, 0):
        raw[child] = raw[parent] * graph.edges[parent, child]["relation"]
    for j, k, relation in graph.edges.data("relation"):
        if raw[k] != raw[j] * relation:
            raise InconsistentSignsError(f"rows {j} and {k} cannot be made symmetric")

    ordered = tuple(raw[j] for j in range(size))
    leading = next((v for v in rows[0][:size] if v), 0)
    normalized = tuple(-e for e in ordered) if leading < 0 else ordered
    logger.debug("symmetrizing signs %s", normalized)
    return RowSigns(raw=ordered, signs=normalized)


def reconstruct_algebraically(
    dehn: DehnMatrix,
    diagram: Diagram,
    regions: RegionSet,
    anchors: Optional[Mapping[int, int]] = None,
    normalize: bool = True,
) -> ReconstructionResult:
    """
    Rebuild the Goeritz matrix, up to sign, from the Dehn matrix alone.

    :param diagram:
        the diagram ``dehn`` was built from; it must pass
        :func:`~dehngoeritz.pdcode.is_prime_diagram`

    :param anchors:
        optional anchor row for each shaded column

    :param normalize:
        if True, choose the global sign so the first nonzero entry of the
        first row is positive; otherwise keep the first row as solved

    :returns:
        a result whose left block is the Goeritz matrix or its negative
    """
    if dehn.rows != diagram.crossing_count or dehn.cols != regions.region_count:
        raise InconsistentInputsError(
            f"a {dehn.rows}x{dehn.cols} Dehn matrix does not belong to a diagram "
            f"with {diagram.crossing_count} crossings"
        )
    if not is_prime_diagram(diagram, regions):
        raise NotPrimeDiagramError(
            "the algebraic reconstruction needs a prime diagram; use the indexed method"
        )
    anchors = anchors or {}
    stray = sorted(j for j in anchors if not 0 <= j < dehn.b)
    if stray:
        raise ColumnOutOfRangeError(
            f"anchors given for columns {stray}, but only columns 0..{dehn.b - 1} are shaded"
        )
    assignments = []
    rows = []
    for j in range(dehn.b):
        assignment, row = solve_column_signs(dehn, j, anchor=anchors.get(j))
        assignments.append(assignment)
        rows.append(row)

    try:
        found = symmetrize(rows)
    except (AsymmetricMagnitudesError, InconsistentSignsError) as error:
        raise SymmetrizeFailedError(str(error)) from error
    chosen = found.signs if normalize else found.raw
    full = IntMatrix.from_rows(
        [[e * v for v in row] for e, row in zip(chosen, rows)], cols=dehn.cols
    )
    if not full.left_block(dehn.b).is_symmetric():
        raise SymmetrizeFailedError("re-signed rows are still not symmetric")
    return ReconstructionResult(
        full=full,
        b=dehn.b,
        method=ALGEBRAIC,
        sign_fixed=normalize,
        assignments=tuple(assignments),
        row_signs=found.signs,
        raw_row_signs=found.raw,
    )
