"""
Exact rational matrices, rank computation and rank-1 factorization.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionError, RankError
from .rational import ONE, ZERO, Vector, dot, to_fraction


@dataclass(frozen=True)
class RatMatrix:
    """Immutable m x n matrix of Fractions stored row-major."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "RatMatrix":
        grid = [[to_fraction(v) for v in row] for row in rows]
        if not grid:
            raise DimensionError("matrix needs at least one row")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionError("ragged matrix rows")
        return cls(len(grid), width, tuple(v for row in grid for v in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def outer(cls, a: Sequence[Fraction], b: Sequence[Fraction]) -> "RatMatrix":
        """The matrix a·bᵀ."""
        return cls(len(a), len(b), tuple(ai * bj for ai in a for bj in b))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {index} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> "RatMatrix":
        return self.transpose()

    def _check_same_shape(self, other: "RatMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(p + q for p, q in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(p - q for p, q in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(-p for p in self.entries))

    def scale(self, q: Any) -> "RatMatrix":
        q = to_fraction(q)
        return RatMatrix(self.rows, self.cols, tuple(q * p for p in self.entries))

    def matvec(self, v: Sequence[Fraction]) -> Vector:
        """M·v."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} against {self.cols} columns")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def vecmat(self, v: Sequence[Fraction]) -> Vector:
        """vᵀ·M, returned as a vector of length cols."""
        if len(v) != self.rows:
            raise DimensionError(f"vector of length {len(v)} against {self.rows} rows")
        return tuple(dot(v, self.column(j)) for j in range(self.cols))

    def bilinear(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """xᵀ·M·y."""
        return dot(x, self.matvec(y))

    def row_sums(self) -> Vector:
        return tuple(sum(self.row(i), ZERO) for i in range(self.rows))

    def column_sums(self) -> Vector:
        return tuple(sum(self.column(j), ZERO) for j in range(self.cols))

    def is_zero(self) -> bool:
        return all(p == 0 for p in self.entries)


def _integer_rows(M: RatMatrix) -> List[List[int]]:
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    result = []
    for i in range(M.rows):
        row = M.row(i)
        lcm = 1
        for p in row:
            lcm = lcm * p.denominator // gcd(lcm, p.denominator)
        result.append([int(p * lcm) for p in row])
    return result


def matrix_rank(M: RatMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    grid = _integer_rows(M)
    rows, cols = M.rows, M.cols
    rank = 0
    prev_pivot = 1
    for col in range(cols):
        if rank == rows:
            break
        pivot_row = next((r for r in range(rank, rows) if grid[r][col] != 0), None)
        if pivot_row is None:
            continue
        grid[rank], grid[pivot_row] = grid[pivot_row], grid[rank]
        pivot = grid[rank][col]
        for r in range(rank + 1, rows):
            factor = grid[r][col]
            grid[r] = [
                (pivot * grid[r][k] - factor * grid[rank][k]) // prev_pivot
                for k in range(cols)
            ]
        prev_pivot = pivot
        rank += 1
    return rank


@dataclass(frozen=True)
class RankOneFactorization:
    """Vectors a (length m) and b (length n) with a·bᵀ equal to the factored matrix."""

    a: Vector
    b: Vector

    def product(self) -> RatMatrix:
        return RatMatrix.outer(self.a, self.b)


def factor_rank_one(M: RatMatrix) -> RankOneFactorization:
    """
    Factor a rank-1 matrix as a·bᵀ.

    The pivot is the first nonzero entry M[i0][j0] in row-major order;
    a is column j0 and b is row i0 divided by the pivot.
    """
    pivot_index = next((k for k, p in enumerate(M.entries) if p != 0), None)
    if pivot_index is None:
        raise RankError("zero matrix has no rank-1 factorization", rank=0)
    i0, j0 = divmod(pivot_index, M.cols)
    pivot = M.entries[pivot_index]
    a = M.column(j0)
    b = tuple(p / pivot for p in M.row(i0))
    if RatMatrix.outer(a, b) != M:
        raise RankError("matrix has rank at least 2", rank=matrix_rank(M))
    return RankOneFactorization(a=a, b=b)


def shift_columns(A: RatMatrix, b: Sequence[Fraction]) -> RatMatrix:
    """A − 1·bᵀ: subtract b_j from every entry of column j."""
    if len(b) != A.cols:
        raise DimensionError(f"shift vector of length {len(b)} against {A.cols} columns")
    return A - RatMatrix.outer((ONE,) * A.rows, b)


def solve_linear_system(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], nvars: int
) -> Optional[Vector]:
    """
    Solve rows·z = rhs by Gauss-Jordan elimination.

    Returns the unique solution, or None when the system is inconsistent or
    does not determine z uniquely.
    """
    aug = [list(r) + [c] for r, c in zip(rows, rhs)]
    r = 0
    for col in range(nvars):
        pivot = next((k for k in range(r, len(aug)) if aug[k][col] != 0), None)
        if pivot is None:
            return None
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        if pv != 1:
            aug[r] = [v / pv for v in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][col] != 0:
                f = aug[k][col]
                aug[k] = [vk - f * vr for vk, vr in zip(aug[k], aug[r])]
        r += 1
    # leftover rows must read 0 = 0
    if any(aug[k][nvars] != 0 for k in range(r, len(aug))):
        return None
    return tuple(aug[k][nvars] for k in range(nvars))


def row_reduce(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[Tuple[List[List[Fraction]], List[Fraction]]]:
    """
    Reduce an equality system to an independent set of rows.

    Returns None if the system is inconsistent.
    """
    aug = [list(r) + [c] for r, c in zip(rows, rhs)]
    width = len(aug[0]) - 1 if aug else 0
    r = 0
    for col in range(width):
        pivot = next((k for k in range(r, len(aug)) if aug[k][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [v / pv for v in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][col] != 0:
                f = aug[k][col]
                aug[k] = [vk - f * vr for vk, vr in zip(aug[k], aug[r])]
        r += 1
    if any(aug[k][width] != 0 for k in range(r, len(aug))):
        return None
    return [row[:width] for row in aug[:r]], [row[width] for row in aug[:r]]
