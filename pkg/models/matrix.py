# =============================================================================
# models/matrix.py
# =============================================================================
# Purpose:
# Exact integer matrices. Entries are Python ints; arithmetic goes through
# numpy arrays of dtype=object so nothing ever overflows or rounds.
# =============================================================================

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, model_validator


class IntMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: int
    cols: int

    # Row-major
    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _dimensions_match(self) -> "IntMatrix":
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entry grid does not match {self.rows}x{self.cols}")
        return self

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: list[list[int]] | tuple) -> "IntMatrix":
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(rows=len(grid), cols=len(grid[0]) if grid else 0, entries=grid)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "IntMatrix":
        rows, cols = array.shape
        grid = tuple(tuple(int(array[i, j]) for j in range(cols)) for i in range(rows))
        return cls(rows=rows, cols=cols, entries=grid)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows=rows, cols=cols, entries=tuple((0,) * cols for _ in range(rows)))

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------
    def to_array(self) -> np.ndarray:
        array = np.empty((self.rows, self.cols), dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return IntMatrix.from_array(self.to_array().dot(other.to_array()))

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_array(self.to_array().T)

    def power(self, exponent: int) -> "IntMatrix":
        """Non-negative powers by repeated squaring."""
        if exponent < 0:
            raise ValueError("use inverse() for negative powers")
        result = IntMatrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(sympy.Matrix(self.entries).det())

    def inverse(self) -> "IntMatrix":
        """Inverse of a unimodular matrix."""
        if self.determinant() not in (1, -1):
            raise ValueError("matrix is not invertible over the integers")
        inv = sympy.Matrix(self.entries).inv()
        return IntMatrix.from_rows([[int(x) for x in inv.row(i)] for i in range(self.rows)])

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]
