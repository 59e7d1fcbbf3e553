"""Dehn colorings modulo n and their link to the knot determinant."""

from __future__ import annotations

import json
import logging
from typing import Any, Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, StrictInt, root_validator, validator

from dehngoeritz.analysis import Analysis, analyze
from dehngoeritz.dehn import DehnMatrix
from dehngoeritz.intmat import (
    Vector,
    kernel_mod_p,
    rank_mod_p,
    require_prime,
    smith_normal_form,
)
from dehngoeritz.pdcode import Diagram

logger = logging.getLogger(__name__)

TRIVIAL = "trivial"
CHECKERBOARD = "checkerboard"
ESSENTIAL = "essential"


def classify(vector: Vector, b: int, modulus: int) -> str:
    """
    Name the kind of a coloring given column by column.

    A coloring constant on the shaded columns and constant on the rest is
    in the span of the constant and checkerboard colorings.
    """
    residues = [v % modulus for v in vector]
    if len(set(residues)) <= 1:
        return TRIVIAL
    if len(set(residues[:b])) == 1 and len(set(residues[b:])) == 1:
        return CHECKERBOARD
    return ESSENTIAL


class DehnColoring(BaseModel):
    r"""
    An assignment of residues to regions satisfying every Dehn equation.

    :param colors:
        residue of each region, indexed by region

    :param modulus:
        the modulus ``p >= 2``

    :param kind:
        ``"trivial"``, ``"checkerboard"`` or ``"essential"``
    """

    colors: Tuple[StrictInt, ...]
    modulus: int
    kind: str

    @validator("modulus")
    def modulus_at_least_two(cls, value):
        if value < 2:
            raise ValueError(f"modulus must be at least 2, not {value}")
        return value

    @root_validator(skip_on_failure=True)
    def colors_are_residues(cls, values):
        if any(not 0 <= c < values["modulus"] for c in values["colors"]):
            raise ValueError("colors must be residues modulo the modulus")
        return values

    def satisfies(self, dehn: DehnMatrix) -> bool:
        """Check every Dehn equation modulo the modulus."""
        by_column = [self.colors[region] for region in dehn.col_region]
        return all(
            sum(v * c for v, c in zip(dehn.row(i), by_column)) % self.modulus == 0
            for i in range(dehn.rows)
        )


def _to_coloring(dehn: DehnMatrix, vector: Vector, p: int) -> DehnColoring:
    colors = [0] * dehn.cols
    for column, region in enumerate(dehn.col_region):
        colors[region] = vector[column] % p
    return DehnColoring(colors=tuple(colors), modulus=p, kind=classify(vector, dehn.b, p))


def coloring_space(dehn: DehnMatrix, p: int) -> List[DehnColoring]:
    """
    Find a basis of the Dehn colorings modulo a prime.

    :returns:
        colorings whose span is every solution of the Dehn equations mod ``p``
    """
    return [_to_coloring(dehn, vector, p) for vector in kernel_mod_p(dehn.matrix, p)]


def is_dehn_p_colorable(dehn: DehnMatrix, p: int) -> bool:
    """Whether some Dehn coloring mod ``p`` is neither trivial nor checkerboard."""
    return len(kernel_mod_p(dehn.matrix, p)) > 2


def count_colorings(dehn: DehnMatrix, n: int) -> int:
    """Count the Dehn colorings modulo any ``n >= 2``."""
    return smith_normal_form(dehn.matrix).count_kernel_mod(n)


def is_dehn_colorable_mod(dehn: DehnMatrix, n: int) -> bool:
    """
    Whether some Dehn coloring mod ``n`` is neither trivial nor checkerboard.

    Trivial and checkerboard colorings together number ``n ** 2``.
    """
    return count_colorings(dehn, n) > n * n


class DivisibilityReport(BaseModel):
    """Whether Dehn colorability and divisibility of the determinant agree for one modulus."""

    modulus: int
    colorable: bool
    divides_determinant: bool
    determinant: int
    kernel_dimension: Optional[int] = None

    @property
    def agree(self) -> bool:
        return self.colorable == self.divides_determinant

    def as_dict(self) -> Dict[str, Any]:
        result = self.dict()
        result["agree"] = self.agree
        return result


def determinant_divisibility_check(
    diagram: Diagram, p: int, shade: Optional[int] = None
) -> DivisibilityReport:
    """
    Compare Dehn ``p``-colorability with ``p`` dividing the knot determinant.

    The two always agree for knots; a disagreement is logged as an error.
    """
    require_prime(p)
    analysis = analyze(diagram, shade=shade)
    return _divisibility(analysis, p)


def _divisibility(analysis: Analysis, p: int) -> DivisibilityReport:
    dimension = len(kernel_mod_p(analysis.dehn.matrix, p))
    determinant = analysis.determinant()
    report = DivisibilityReport(
        modulus=p,
        colorable=dimension > 2,
        divides_determinant=determinant % p == 0,
        determinant=determinant,
        kernel_dimension=dimension,
    )
    if not report.agree:
        logger.error(
            "Dehn %d-colorability (%s) disagrees with determinant %d for %s",
            p,
            report.colorable,
            determinant,
            analysis.diagram,
        )
    return report


def kernel_dimensions(analysis: Analysis, p: int) -> Tuple[int, int]:
    """
    Return the kernel dimensions mod ``p`` of the Dehn matrix and the full Goeritz matrix.

    For a knot diagram the first is one more than the second.
    """
    require_prime(p)
    dehn = analysis.dehn.matrix
    goeritz = analysis.goeritz.matrix
    return (
        dehn.cols - rank_mod_p(dehn, p),
        goeritz.cols - rank_mod_p(goeritz, p),
    )


class ModulusRow(BaseModel):
    """One line of a coloring report."""

    modulus: int
    colorings: int
    dehn_kernel_dimension: Optional[int] = None
    goeritz_kernel_dimension: Optional[int] = None
    colorable: bool
    divides_determinant: bool


class ColoringReport(BaseModel):
    """Colorability of one diagram for several moduli."""

    name: Optional[str] = None
    determinant: int
    rows: List[ModulusRow]

    def as_dict(self) -> Dict[str, Any]:
        return self.dict()

    def as_json(self) -> str:
        return json.dumps(self.as_dict())


def coloring_report(analysis: Analysis, moduli: Iterable[int]) -> ColoringReport:
    """
    Tabulate colorings for each modulus.

    Prime moduli also report kernel dimensions; composite moduli are
    counted from the Smith normal form.
    """
    determinant = analysis.determinant()
    rows = []
    for n in moduli:
        count = count_colorings(analysis.dehn, n)
        row = ModulusRow(
            modulus=n,
            colorings=count,
            colorable=count > n * n,
            divides_determinant=determinant % n == 0,
        )
        try:
            require_prime(n)
        except ValueError:
            pass
        else:
            dehn_dim, goeritz_dim = kernel_dimensions(analysis, n)
            row = row.copy(
                update={
                    "dehn_kernel_dimension": dehn_dim,
                    "goeritz_kernel_dimension": goeritz_dim,
                    "colorable": dehn_dim > 2,
                }
            )
            if row.colorable != row.divides_determinant:
                logger.error(
                    "Dehn %d-colorability disagrees with determinant %d", n, determinant
                )
        rows.append(row)
    return ColoringReport(name=analysis.diagram.name, determinant=determinant, rows=rows)
