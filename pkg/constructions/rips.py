# =============================================================================
# constructions/rips.py
# =============================================================================
# Purpose:
# The classical Rips construction. Given Q = <x1..xm | r1..rk>, build
#
#     Γ = < x1..xm, a1, a2 |  r_i · u_i^-1,
#                             x_j^e a_l x_j^-e · w_{j,l,e}^-1 >
#
# with every padding word u, w of the form  Π_{s<L} a1 · a2^(o_t + s).
# N = <<a1, a2>> is normal (every conjugate of an a_l by an x_j^±1 is a
# word in the a's), Γ/N = Q, and with long enough padding Γ is C'(1/6).
#
# Offsets. All a2-exponents across all padding words are distinct. The
# longest piece is then a2^e a1 a2^(e+1) cut from the two largest
# non-final runs, about 2E for a top exponent E, while the shortest
# relator has about L·o_0 letters. Starting the offsets at
#
#     o_0 > 12·N·L / (L - 12)        (N = k + 4m padding words)
#
# puts the ratio under 1/6 once L > 12. The checker has the last word:
# a failed certification doubles L and builds again.
# =============================================================================

import logging
from fractions import Fraction

from constructions.products import disjoint_symbols
from models.errors import PreconditionError
from models.presentation import GroupHom, Presentation
from models.results import PaddingParams, RipsOutput
from models.word import Word, invert_codes
from solvers.small_cancellation import check_small_cancellation

logger = logging.getLogger(__name__)

DEFAULT_BLOCKS = 8


def padding_offsets(blocks: int, count: int) -> tuple[int, ...]:
    """Starting a2-exponents for `count` padding words of `blocks` blocks each."""
    first = blocks + 1
    if blocks > 12:
        first = max(first, 12 * count * blocks // (blocks - 12) + 1)
    return tuple(first + t * blocks for t in range(count))


def padding_word(a1: int, a2: int, blocks: int, offset: int) -> tuple[int, ...]:
    """Π_{s<blocks} a1 · a2^(offset+s) as letter codes."""
    codes: list[int] = []
    for s in range(blocks):
        codes.append(a1)
        codes.extend([a2] * (offset + s))
    return tuple(codes)


def _build(q: Presentation, blocks: int) -> tuple[Presentation, PaddingParams]:
    m, k = q.rank, len(q.relators)
    a1, a2 = m + 1, m + 2
    offsets = padding_offsets(blocks, k + 4 * m)
    padding = iter(padding_word(a1, a2, blocks, o) for o in offsets)

    relators: list[tuple[int, ...]] = []
    for r in q.relators:
        relators.append(r.codes + invert_codes(next(padding)))
    for j in range(m):
        x = j + 1
        for a in (a1, a2):
            for e in (1, -1):
                relators.append((e * x, a, -e * x) + invert_codes(next(padding)))

    kernel_symbols = disjoint_symbols(q.alphabet, ("a1", "a2"))
    gamma = Presentation(
        name=f"{q.name}_rips",
        alphabet=q.alphabet + kernel_symbols,
        relators=tuple(Word.from_codes(r) for r in relators),
    )
    return gamma, PaddingParams(block_count=blocks, offsets=offsets)


def rips(q: Presentation, blocks: int = DEFAULT_BLOCKS) -> RipsOutput:
    """Γ, the quotient map Γ -> Q and the kernel generators a1, a2, certified C'(1/6)."""
    if q.rank == 0:
        raise PreconditionError("the Rips construction needs at least one generator")
    if blocks < DEFAULT_BLOCKS:
        raise PreconditionError(f"block count must be at least {DEFAULT_BLOCKS}, got {blocks}")

    while True:
        gamma, params = _build(q, blocks)
        report = check_small_cancellation(gamma, Fraction(1, 6))
        if report.passes(Fraction(1, 6)):
            break
        logger.info(
            "rips: L=%d not C'(1/6) (piece %d, shortest relator %d); doubling",
            blocks, report.max_piece_length, report.min_relator_length,
        )
        blocks *= 2

    m = q.rank
    p = GroupHom(
        source=gamma,
        target=q,
        images=tuple(Word.generator(j) for j in range(m)) + (Word(), Word()),
    )
    logger.debug("rips: %s has %d relators, L=%d, ratio %s", gamma.name, len(gamma.relators), blocks, report.ratio)
    return RipsOutput(
        gamma=gamma,
        p=p,
        kernel_gens=(Word.generator(m), Word.generator(m + 1)),
        padding_params=params,
        certification=report,
    )
