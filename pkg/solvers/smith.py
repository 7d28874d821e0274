# =============================================================================
# solvers/smith.py
# =============================================================================
# Purpose:
# Smith normal form over the integers with both transforms, U·M·V = D, and
# the abelianization of a finite presentation read off from the relator
# exponent-sum matrix.
#
# Elimination follows the textbook loop: bring the smallest nonzero entry of
# the remaining block to the pivot, clear its row and column by division
# with remainder, and fold in any entry the pivot fails to divide.
# Arrays are numpy dtype=object so every entry stays a Python int.
# =============================================================================

import logging
from functools import lru_cache

import numpy as np

from models.matrix import IntMatrix
from models.presentation import Presentation
from presentation.words import exponent_sums

logger = logging.getLogger(__name__)


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


class SmithNormalForm:
    """
    Smith normal form of an integer matrix M.

    Attributes
    ----------
    D, U, V : ndarray (dtype=object)
        D = U·M·V, D diagonal with d1 | d2 | ..., U and V unimodular.
    """

    def __init__(self, m: IntMatrix):
        self._m = m
        self.D = m.to_array() if m.rows and m.cols else np.zeros((m.rows, m.cols), dtype=object)
        self.U = _identity(m.rows)
        self.V = _identity(m.cols)

    # -------------------------------------------------------------------------
    # Elementary operations, mirrored into U (rows) and V (columns)
    # -------------------------------------------------------------------------
    def _swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.D[[i, j], :] = self.D[[j, i], :]
            self.U[[i, j], :] = self.U[[j, i], :]

    def _swap_cols(self, i: int, j: int) -> None:
        if i != j:
            self.D[:, [i, j]] = self.D[:, [j, i]]
            self.V[:, [i, j]] = self.V[:, [j, i]]

    def _add_row(self, target: int, source: int, factor: int) -> None:
        self.D[target, :] = self.D[target, :] + factor * self.D[source, :]
        self.U[target, :] = self.U[target, :] + factor * self.U[source, :]

    def _add_col(self, target: int, source: int, factor: int) -> None:
        self.D[:, target] = self.D[:, target] + factor * self.D[:, source]
        self.V[:, target] = self.V[:, target] + factor * self.V[:, source]

    def _negate_row(self, i: int) -> None:
        self.D[i, :] = -self.D[i, :]
        self.U[i, :] = -self.U[i, :]

    # -------------------------------------------------------------------------
    # Main loop
    # -------------------------------------------------------------------------
    def _smallest_entry(self, t: int) -> tuple[int, int] | None:
        best = None
        rows, cols = self.D.shape
        for i in range(t, rows):
            for j in range(t, cols):
                value = abs(self.D[i, j])
                if value and (best is None or value < best[0]):
                    best = (value, i, j)
        return None if best is None else (best[1], best[2])

    def run(self) -> "SmithNormalForm":
        rows, cols = self.D.shape
        for t in range(min(rows, cols)):
            while True:
                position = self._smallest_entry(t)
                if position is None:
                    logger.debug("SNF: remaining block zero from %d", t)
                    return self._finish()
                self._swap_rows(t, position[0])
                self._swap_cols(t, position[1])
                pivot = self.D[t, t]

                clean = True
                for i in range(t + 1, rows):
                    q = self.D[i, t] // pivot
                    if q:
                        self._add_row(i, t, -q)
                    clean = clean and self.D[i, t] == 0
                for j in range(t + 1, cols):
                    q = self.D[t, j] // pivot
                    if q:
                        self._add_col(j, t, -q)
                    clean = clean and self.D[t, j] == 0
                if not clean:
                    continue

                # Divisibility: fold a row holding a non-multiple into row t
                offender = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if self.D[i, j] % pivot),
                    None,
                )
                if offender is None:
                    break
                self._add_row(t, offender, 1)
            if self.D[t, t] < 0:
                self._negate_row(t)
        return self._finish()

    def _finish(self) -> "SmithNormalForm":
        rows, cols = self.D.shape
        for t in range(min(rows, cols)):
            if self.D[t, t] < 0:
                self._negate_row(t)
        return self

    def diagonal(self) -> list[int]:
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U·m·V = D."""
    snf = SmithNormalForm(m).run()
    if m.rows == 0 or m.cols == 0:
        return IntMatrix.identity(m.rows), m, IntMatrix.identity(m.cols)
    return IntMatrix.from_array(snf.U), IntMatrix.from_array(snf.D), IntMatrix.from_array(snf.V)


def relation_matrix(p: Presentation) -> IntMatrix:
    """One row of exponent sums per relator."""
    if not p.relators:
        return IntMatrix(rows=0, cols=p.rank, entries=())
    return IntMatrix.from_rows([exponent_sums(r, p.rank) for r in p.relators])


def abelianization(p: Presentation) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients > 1) of the abelianized group."""
    m = relation_matrix(p)
    if m.rows == 0:
        return p.rank, []
    diagonal = SmithNormalForm(m).run().diagonal()
    nonzero = [d for d in diagonal if d]
    torsion = [d for d in nonzero if d > 1]
    free_rank = p.rank - len(nonzero)
    logger.debug("%s: abelianization Z^%d + %s", p.name, free_rank, torsion)
    return free_rank, torsion


def in_row_lattice(m: IntMatrix, vector: list[int]) -> bool:
    """Whether `vector` is an integer combination of the rows of m."""
    if m.rows == 0:
        return not any(vector)
    snf = SmithNormalForm(m).run()
    row = np.array([vector], dtype=object).dot(snf.V)[0]
    return _solvable(row, snf.diagonal())


@lru_cache(maxsize=128)
def _relator_lattice(p: Presentation) -> tuple[np.ndarray, tuple[int, ...]] | None:
    m = relation_matrix(p)
    if m.rows == 0:
        return None
    snf = SmithNormalForm(m).run()
    return snf.V, tuple(snf.diagonal())


def in_relator_lattice(p: Presentation, vector: list[int]) -> bool:
    """in_row_lattice(relation_matrix(p), vector) with the factorization cached per presentation."""
    cached = _relator_lattice(p)
    if cached is None:
        return not any(vector)
    v, diagonal = cached
    row = np.array([vector], dtype=object).dot(v)[0]
    return _solvable(row, diagonal)


def _solvable(row, diagonal) -> bool:
    """y·D = row has an integer solution y."""
    for j, value in enumerate(row):
        d = diagonal[j] if j < len(diagonal) else 0
        if (d == 0 and value != 0) or (d and value % d):
            return False
    return True
