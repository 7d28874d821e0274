# =============================================================================
# mcg/symplectic.py
# =============================================================================
# Purpose:
# The symplectic lattice H_1(S_g; ℤ) with basis a1, b1, ..., ag, bg, the
# algebraic intersection pairing, transvections (Dehn twists acting on
# homology) and curve systems whose pairings realize a graph.
#
# Twist convention: the N-th power of the twist about c sends
#     x -> x + N <c, x> c,
# so the twist about a1 sends b1 to b1 + a1.
# =============================================================================

import numpy as np

from models.errors import DimensionMismatchError, PreconditionError
from models.matrix import IntMatrix
from models.presentation import Graph
from models.surface import CurveClass, SymplecticSpace, TwistMatrix


def symplectic_form(genus: int) -> IntMatrix:
    return SymplecticSpace(genus=genus).form()


def basis_vector(genus: int, index: int, kind: str) -> tuple[int, ...]:
    """a_i (kind "a") or b_i (kind "b"), 0-based i."""
    vector = [0] * (2 * genus)
    vector[2 * index + (0 if kind == "a" else 1)] = 1
    return tuple(vector)


def pairing(u: CurveClass | tuple[int, ...], v: CurveClass | tuple[int, ...]) -> int:
    """<u, v> = u^T J v."""
    x = u.vector if isinstance(u, CurveClass) else tuple(u)
    y = v.vector if isinstance(v, CurveClass) else tuple(v)
    if len(x) != len(y) or len(x) % 2:
        raise DimensionMismatchError(f"cannot pair vectors of lengths {len(x)} and {len(y)}")
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2))


def is_symplectic(m: IntMatrix, form: IntMatrix | None = None) -> bool:
    if m.rows != m.cols or m.rows % 2:
        return False
    if form is None:
        form = symplectic_form(m.rows // 2)
    return m.transpose() @ form @ m == form


def direct_sum_form(blocks: int, genus: int) -> IntMatrix:
    """J ⊕ ... ⊕ J, one standard form per block."""
    d = 2 * genus
    rows = [[0] * (blocks * d) for _ in range(blocks * d)]
    j = symplectic_form(genus)
    for k in range(blocks):
        for r in range(d):
            for c in range(d):
                rows[k * d + r][k * d + c] = j[r, c]
    return IntMatrix.from_rows(rows)


def transvection(c: CurveClass, n: int) -> TwistMatrix:
    """The matrix of x -> x + n <c, x> c."""
    if not c.primitive:
        raise PreconditionError(f"curve class {c.vector} is not primitive")
    if len(c.vector) % 2:
        raise DimensionMismatchError("curve classes live in even dimension")
    genus = len(c.vector) // 2
    column = np.array(c.vector, dtype=object).reshape(-1, 1)
    row = column.T.dot(symplectic_form(genus).to_array())
    identity = IntMatrix.identity(2 * genus).to_array()
    return TwistMatrix(matrix=IntMatrix.from_array(identity + n * column.dot(row)))


def curve_system_from_graph(g: Graph) -> tuple[SymplecticSpace, list[CurveClass]]:
    """c_i = a_i + Σ_{j<i, (i,j) not an edge} b_j on genus n."""
    space = SymplecticSpace(genus=g.n)
    neighbours = g.adjacency()
    curves = []
    for i in range(g.n):
        vector = list(basis_vector(g.n, i, "a"))
        for j in range(i):
            if j not in neighbours[i]:
                vector[2 * j + 1] += 1
        curves.append(CurveClass(vector=tuple(vector)))
    return space, curves


def pairing_matrix(curves: list[CurveClass]) -> list[list[int]]:
    return [[pairing(c, d) for d in curves] for c in curves]
