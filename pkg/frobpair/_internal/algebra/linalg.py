"""dense linear algebra over F_p. matrices are lists of rows of ints in `[0, p)`"""

from __future__ import annotations

from typing import TYPE_CHECKING

from typing_extensions import TypeAlias

from frobpair._internal.errors import SingularMatrixError, UserError

if TYPE_CHECKING:
    from collections.abc import Sequence

Matrix: TypeAlias = "list[list[int]]"


def _copy(matrix: Sequence[Sequence[int]], p: int) -> Matrix:
    return [[value % p for value in row] for row in matrix]


def _check_square(matrix: Sequence[Sequence[int]]) -> int:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise UserError("matrix is not square")
    return size


def identity(size: int) -> Matrix:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def row_echelon(matrix: Sequence[Sequence[int]], p: int) -> tuple[Matrix, list[int]]:
    """reduced row echelon form and the pivot columns"""
    rows = _copy(matrix, p)
    pivots: list[int] = []
    columns = len(rows[0]) if rows else 0
    rank = 0
    for column in range(columns):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][column]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = pow(rows[rank][column], -1, p)
        rows[rank] = [value * inverse % p for value in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][column]:
                factor = rows[r][column]
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], rows[rank])]
        pivots.append(column)
        rank += 1
    return rows, pivots


def rank(matrix: Sequence[Sequence[int]], p: int) -> int:
    return len(row_echelon(matrix, p)[1])


def kernel_basis(matrix: Sequence[Sequence[int]], p: int, columns: int | None = None) -> Matrix:
    """basis of `{v : matrix * v = 0}`, one vector per free column"""
    if columns is None:
        columns = len(matrix[0]) if matrix else 0
    reduced, pivots = row_echelon(matrix, p) if matrix else ([], [])
    basis: Matrix = []
    for free in (c for c in range(columns) if c not in pivots):
        vector = [0] * columns
        vector[free] = 1
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free] % p
        basis.append(vector)
    return basis


def determinant(matrix: Sequence[Sequence[int]], p: int) -> int:
    size = _check_square(matrix)
    rows = _copy(matrix, p)
    result = 1
    for column in range(size):
        pivot = next((r for r in range(column, size) if rows[r][column]), None)
        if pivot is None:
            return 0
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            result = -result
        result = result * rows[column][column] % p
        inverse = pow(rows[column][column], -1, p)
        for r in range(column + 1, size):
            factor = rows[r][column] * inverse % p
            if factor:
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], rows[column])]
    return result % p


def inverse(matrix: Sequence[Sequence[int]], p: int) -> Matrix:
    """:raises SingularMatrixError: if the determinant vanishes mod p"""
    size = _check_square(matrix)
    augmented = [list(row) + identity_row for row, identity_row in zip(matrix, identity(size))]
    reduced, pivots = row_echelon(augmented, p)
    if pivots[:size] != list(range(size)):
        raise SingularMatrixError(f"matrix is singular mod {p}")
    return [row[size:] for row in reduced]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> Matrix:
    columns = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, column)) % p for column in columns] for row in a]


def mat_vec(matrix: Sequence[Sequence[int]], vector: Sequence[int], p: int) -> list[int]:
    return [sum(x * y for x, y in zip(row, vector)) % p for row in matrix]


def mat_pow(matrix: Sequence[Sequence[int]], n: int, p: int) -> Matrix:
    result = identity(_check_square(matrix))
    base = _copy(matrix, p)
    while n:
        if n & 1:
            result = mat_mul(result, base, p)
        n >>= 1
        if n:
            base = mat_mul(base, base, p)
    return result
