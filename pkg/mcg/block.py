# =============================================================================
# mcg/block.py
# =============================================================================
# Purpose:
# Block matrices for wreath elements with symplectic bottoms.
#
# Block (c, top[c]) holds bottom[c] and every other block is zero. This
# matches wreath_multiply, so the map is a homomorphism, and it preserves
# the direct-sum symplectic form.
# =============================================================================

from mcg.symplectic import is_symplectic
from models.errors import DimensionMismatchError, PreconditionError
from models.matrix import IntMatrix
from models.results import WreathElement


def block_wreath_embed(w: WreathElement, block_dim: int) -> IntMatrix:
    n = len(w.top)

    # Every bottom must be a block_dim square symplectic matrix
    for c, bottom in enumerate(w.bottom):
        if not isinstance(bottom, IntMatrix):
            raise PreconditionError("block embedding needs matrix bottoms")
        if (bottom.rows, bottom.cols) != (block_dim, block_dim):
            raise DimensionMismatchError(f"bottom[{c}] is {bottom.rows}x{bottom.cols}, expected {block_dim}x{block_dim}")
        if not is_symplectic(bottom):
            raise PreconditionError(f"bottom[{c}] is not symplectic")

    # Block row c, block column top[c]
    rows = [[0] * (n * block_dim) for _ in range(n * block_dim)]
    for c, bottom in enumerate(w.bottom):
        target = w.top[c]
        for r in range(block_dim):
            for k in range(block_dim):
                rows[c * block_dim + r][target * block_dim + k] = bottom[r, k]
    return IntMatrix.from_rows(rows)
