"""Exact integer matrices: determinant, rank and kernel mod p, Smith normal form."""

from __future__ import annotations

import csv
import io
from math import gcd
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, StrictInt, root_validator, validator
from sympy import Matrix, ZZ, isprime
from sympy.matrices.normalforms import invariant_factors

from dehngoeritz.errors import BadModulusError, NotPrimeModulusError, NotSquareError

Vector = Tuple[int, ...]


class IntMatrix(BaseModel):
    r"""
    A dense matrix of arbitrary-precision integers.

    :param rows:
        number of rows

    :param cols:
        number of columns

    :param entries:
        the entries in row-major order, ``rows * cols`` of them
    """

    rows: int
    cols: int
    entries: Tuple[StrictInt, ...] = ()

    class Config:
        frozen = True

    @validator("rows", "cols")
    def dimension_not_negative(cls, value):
        if value < 0:
            raise ValueError(f"matrix dimension must not be negative, not {value}")
        return value

    @root_validator(skip_on_failure=True)
    def entries_fill_matrix(cls, values):
        expected = values["rows"] * values["cols"]
        if len(values["entries"]) != expected:
            raise ValueError(
                f"a {values['rows']}x{values['cols']} matrix needs {expected} entries, "
                f"not {len(values['entries'])}"
            )
        return values

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None
    ) -> IntMatrix:
        """
        Build a matrix from a list of rows.

        :param cols:
            width of the matrix; only needed when ``rows`` is empty
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError(f"every row must have {cols} entries: {list(row)}")
        return cls(
            rows=len(rows), cols=cols, entries=tuple(v for row in rows for v in row)
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows=rows, cols=cols, entries=(0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(
            rows=size,
            cols=size,
            entries=tuple(int(i == j) for i in range(size) for j in range(size)),
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) is outside a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} is outside a matrix with {self.rows} rows")
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} is outside a matrix with {self.cols} columns")
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        """Return the entries as a list of mutable row lists."""
        return [list(self.row(i)) for i in range(self.rows)]

    def as_list(self) -> List[List[int]]:
        """Return the matrix as an array of arrays for JSON output."""
        return self.to_rows()

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [list(self.column(j)) for j in range(self.cols)], cols=self.rows
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(
            rows=self.rows, cols=self.cols, entries=tuple(-v for v in self.entries)
        )

    def delete(self, row: Optional[int] = None, col: Optional[int] = None) -> IntMatrix:
        """Return a copy without the given row and/or column."""
        kept = [
            [v for j, v in enumerate(self.row(i)) if j != col]
            for i in range(self.rows)
            if i != row
        ]
        width = self.cols - (1 if col is not None else 0)
        return IntMatrix.from_rows(kept, cols=width)

    def take_rows(self, indices: Sequence[int], signs: Optional[Sequence[int]] = None) -> IntMatrix:
        """Return the rows at ``indices``, in that order, each times its sign."""
        if signs is None:
            signs = [1] * len(indices)
        return IntMatrix.from_rows(
            [[s * v for v in self.row(i)] for i, s in zip(indices, signs)], cols=self.cols
        )

    def left_block(self, width: int) -> IntMatrix:
        return IntMatrix.from_rows(
            [list(self.row(i)[:width]) for i in range(self.rows)], cols=width
        )

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def row_sums(self) -> Vector:
        return tuple(sum(self.row(i)) for i in range(self.rows))

    def to_csv(self) -> str:
        """Return the entries as CSV, one line per row."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerows(self.to_rows())
        return out.getvalue()

    def __str__(self):
        if not self.rows:
            return f"<empty {self.rows}x{self.cols} matrix>"
        width = max(len(str(v)) for v in self.entries) if self.entries else 1
        return "\n".join(
            " ".join(str(v).rjust(width) for v in self.row(i)) for i in range(self.rows)
        )


def require_prime(p: int) -> int:
    """Return ``p`` if it is a prime number, or raise NotPrimeModulusError."""
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise NotPrimeModulusError(f"modulus must be a prime number, not {p!r}")
    return p


def det_exact(a: IntMatrix) -> int:
    """
    Find the determinant by fraction-free (Bareiss) elimination.

    Every division in the elimination is exact, so the computation never
    leaves the integers. The determinant of the 0x0 matrix is 1.
    """
    if not a.is_square:
        raise NotSquareError(f"determinant needs a square matrix, not {a.rows}x{a.cols}")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _row_reduce_mod_p(a: IntMatrix, p: int) -> Tuple[List[List[int]], List[int]]:
    """Bring ``a`` to reduced row echelon form over GF(p); return it with its pivot columns."""
    m = [[v % p for v in row] for row in a.to_rows()]
    pivots: List[int] = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        pivot = next((i for i in range(r, a.rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inverse = pow(m[r][c], -1, p)
        m[r] = [v * inverse % p for v in m[r]]
        for i in range(a.rows):
            factor = m[i][c]
            if i != r and factor:
                m[i] = [(vi - factor * vr) % p for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank_mod_p(a: IntMatrix, p: int) -> int:
    """Find the rank of ``a`` over the field with ``p`` elements."""
    require_prime(p)
    _, pivots = _row_reduce_mod_p(a, p)
    return len(pivots)


def kernel_mod_p(a: IntMatrix, p: int) -> List[Vector]:
    """
    Find a basis of the null space of ``a`` over the field with ``p`` elements.

    :param p:
        a prime modulus

    :returns:
        one vector per free column of the reduced echelon form, with entries
        in ``0..p-1``. The vectors are linearly independent and span
        every ``v`` with ``a·v ≡ 0 (mod p)``.
    """
    require_prime(p)
    m, pivots = _row_reduce_mod_p(a, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        vector = [0] * a.cols
        vector[free] = 1
        for i, c in enumerate(pivots):
            vector[c] = -m[i][free] % p
        basis.append(tuple(vector))
    return basis


class SmithForm(BaseModel):
    r"""
    Invariant factors of an integer matrix.

    :param rows:
        rows of the original matrix

    :param cols:
        columns of the original matrix

    :param invariant_factors:
        ``min(rows, cols)`` nonnegative diagonal entries
        ``d_1 | d_2 | ...``, zeros last
    """

    rows: int
    cols: int
    invariant_factors: Tuple[StrictInt, ...]

    class Config:
        frozen = True

    @validator("invariant_factors")
    def factors_form_divisibility_chain(cls, value):
        nonzero = [d for d in value if d]
        if any(d < 0 for d in value):
            raise ValueError("invariant factors must be nonnegative")
        if value[: len(nonzero)] != tuple(nonzero):
            raise ValueError("zero invariant factors must come last")
        for smaller, larger in zip(nonzero, nonzero[1:]):
            if larger % smaller:
                raise ValueError(f"{smaller} does not divide {larger}")
        return value

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d)

    @property
    def torsion(self) -> Tuple[int, ...]:
        """Factors greater than 1: the torsion of the cokernel."""
        return tuple(d for d in self.invariant_factors if d > 1)

    def nonzero_product(self) -> int:
        product = 1
        for d in self.invariant_factors:
            if d:
                product *= d
        return product

    def count_kernel_mod(self, n: int) -> int:
        """Count vectors ``v`` in ``(Z/n)^cols`` with ``a·v ≡ 0 (mod n)``, for any ``n >= 2``."""
        if isinstance(n, bool) or not isinstance(n, int) or n < 2:
            raise BadModulusError(f"modulus must be an integer of at least 2, not {n!r}")
        count = n ** (self.cols - len(self.invariant_factors))
        for d in self.invariant_factors:
            count *= gcd(d, n)
        return count


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """
    Find the invariant factors of ``a`` over the integers.

    Transforming matrices are not computed.
    """
    size = min(a.rows, a.cols)
    if size == 0:
        return SmithForm(rows=a.rows, cols=a.cols, invariant_factors=())
    found = invariant_factors(Matrix(a.to_rows()), domain=ZZ)
    nonzero = sorted(abs(int(d)) for d in found if int(d))
    factors = tuple(nonzero) + (0,) * (size - len(nonzero))
    return SmithForm(rows=a.rows, cols=a.cols, invariant_factors=factors)
