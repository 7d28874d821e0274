# =============================================================================
# reductions/membership.py
# =============================================================================
# Purpose:
# Membership in fibre products and in kernels of maps onto ℤ.
#
# (u, v) lies in P = {(x, y) : p(x) = p(y)} exactly when p(u v^-1) = 1 in Q,
# so membership is one word-problem question in Q. The ℤ-kernel test needs
# no oracle at all: it is a weighted sum of exponent sums.
# =============================================================================

import logging

from models.errors import DimensionMismatchError
from models.reductions import Membership, PairWord, ZKernelSpec
from models.results import FibreData, Verdict
from models.word import Word
from presentation.homs import WordOracle, apply_hom
from presentation.words import concat, exponent_sums, invert

logger = logging.getLogger(__name__)

# UNKNOWN (and anything else) falls through to Membership.UNKNOWN
_FROM_VERDICT = {
    Verdict.TRIVIAL: Membership.MEMBER,
    Verdict.NONTRIVIAL: Membership.NON_MEMBER,
}


def membership_query(pw: PairWord, f: FibreData, wp_oracle: WordOracle) -> Membership:
    # p(u v^-1) lives in Q; the oracle answers for Q
    difference = apply_hom(f.p, concat(pw.left, invert(pw.right)))
    verdict = wp_oracle(difference)
    logger.debug("membership: p(u v^-1) has length %d, oracle says %s", len(difference), verdict.value)
    return _FROM_VERDICT.get(verdict, Membership.UNKNOWN)


# -----------------------------------------------------------------------------
# Kernels of maps onto ℤ
# -----------------------------------------------------------------------------
def z_kernel_value(words: list[Word] | tuple[Word, ...], spec: ZKernelSpec) -> int:
    """Σ_i phi_i(words[i])."""
    if len(words) != len(spec.factors):
        raise DimensionMismatchError(f"expected {len(spec.factors)} coordinates, got {len(words)}")
    total = 0
    for i, word in enumerate(words):
        sums = exponent_sums(word, spec.factors[i].rank)
        # phi_i is a weighted exponent sum over the i-th factor
        total += sum(w * s for w, s in zip(spec.weights(i), sums))
    return total


def z_kernel_membership(words: list[Word] | tuple[Word, ...], spec: ZKernelSpec) -> Membership:
    return Membership.MEMBER if z_kernel_value(words, spec) == 0 else Membership.NON_MEMBER
