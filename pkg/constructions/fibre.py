# =============================================================================
# constructions/fibre.py
# =============================================================================
# Purpose:
# Fibre products P = {(x, y) : p(x) = p(y)} < Γ×Γ, delivered as generating
# sets only.
#
# P is generated by (a, 1) for a in the kernel generators together with the
# diagonal (x, x) for every generator x of Γ, since (u, v) = (u v^-1, 1)(v, v)
# and conjugating (a, 1) by diagonal elements sweeps out (ker p, 1).
# =============================================================================

import logging

from models.errors import PreconditionError
from models.reductions import PairWord
from models.results import FibreData, RipsOutput, Verdict
from models.word import Word
from presentation.homs import WordOracle, apply_hom
from presentation.words import concat, invert

logger = logging.getLogger(__name__)


def fibre_data_from_rips(out: RipsOutput) -> FibreData:
    return FibreData(p=out.p, kernel_gens=out.kernel_gens)


# -----------------------------------------------------------------------------
# Kernel certification
# -----------------------------------------------------------------------------
def certify_kernel(f: FibreData, oracle: WordOracle) -> Verdict:
    """TRIVIAL when every kernel generator maps to the identity of Q."""
    outcome = Verdict.TRIVIAL
    for gen in f.kernel_gens:
        verdict = oracle(apply_hom(f.p, gen))
        if verdict is Verdict.NONTRIVIAL:
            return verdict
        # One UNKNOWN keeps the whole set uncertified
        if verdict is not Verdict.TRIVIAL:
            outcome = Verdict.UNKNOWN
    return outcome


# -----------------------------------------------------------------------------
# Generating sets and pair words
# -----------------------------------------------------------------------------
def fibre_product_generators(f: FibreData, oracle: WordOracle | None = None) -> list[PairWord]:
    """(a, 1) per kernel generator, then (x, x) per generator of Γ."""
    if oracle is not None and certify_kernel(f, oracle) is not Verdict.TRIVIAL:
        raise PreconditionError("kernel generators are not certified to lie in ker p")
    # Identity kernel words add nothing
    generators = [PairWord(left=a) for a in f.kernel_gens if not a.is_identity()]
    generators += [PairWord.diagonal(Word.generator(i)) for i in range(f.p.source.rank)]
    logger.debug("fibre product: %d generators", len(generators))
    return generators


def decompose_pair(u: Word, v: Word) -> tuple[PairWord, list[PairWord]]:
    """Split (u, v) as (u v^-1, 1) followed by diagonal generators spelling (v, v)."""
    kernel_part = PairWord(left=concat(u, invert(v)))
    diagonal = [PairWord.diagonal(Word.from_codes([code])) for code in v.codes]
    return kernel_part, diagonal


def pair_product(pairs: list[PairWord]) -> PairWord:
    # Coordinatewise product, each side freely reduced once at the end
    left: list[int] = []
    right: list[int] = []
    for pair in pairs:
        left.extend(pair.left.codes)
        right.extend(pair.right.codes)
    return PairWord(left=Word.from_codes(left), right=Word.from_codes(right))
