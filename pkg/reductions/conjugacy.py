# =============================================================================
# reductions/conjugacy.py
# =============================================================================
# Purpose:
# Conjugacy in fibre products reduced to membership. With H normal in G,
# a table of rewrites b^e a b^-e = u_{b,e,a} (u over H's generators) turns
# w a w^-1 into a word over H, and when the centralizer of a lies in P,
#
#     w a w^-1 is conjugate to a in P   iff   w lies in P.
#
# For P < Γ×Γ the element a is the diagonal (a, a) of a kernel generator.
# =============================================================================

import logging

from constructions.products import shift_word
from models.errors import PreconditionError
from models.reductions import (
    ConjugacyQuery,
    ConjugacyVerdict,
    ConjugationEntry,
    ConjugationTable,
    Membership,
    PairWord,
)
from models.results import FibreData, RipsOutput
from models.word import Word, invert_codes, reduce_codes
from presentation.homs import WordOracle
from reductions.membership import membership_query

logger = logging.getLogger(__name__)


def conjugacy_rewrite(w: Word, a: int | Word, tbl: ConjugationTable) -> Word:
    """w a w^-1 as a word over the inner generators, peeling letters of w from the right."""
    if w.max_generator() >= len(tbl.outer_gens):
        raise PreconditionError("w uses a letter outside the outer alphabet")
    target = Word.generator(a) if isinstance(a, int) else a
    if target.max_generator() >= len(tbl.inner_gens):
        raise PreconditionError("target uses a letter outside the inner alphabet")

    lookup = {key: word.codes for key, word in tbl.lookup().items()}
    current = target.codes
    for code in reversed(w.codes):
        b, sign = abs(code) - 1, 1 if code > 0 else -1
        substituted: list[int] = []
        for c in current:
            u = lookup[(b, sign, abs(c) - 1)]
            substituted.extend(u if c > 0 else invert_codes(u))
        current = reduce_codes(substituted)

    k = max(1, tbl.max_entry_length)
    envelope = len(target) * k ** len(w)
    logger.debug("conjugacy rewrite: |w|=%d, |w'|=%d, envelope %d", len(w), len(current), envelope)
    if len(current) > envelope:
        logger.warning("conjugacy rewrite exceeded its envelope: %d > %d", len(current), envelope)
    return Word.from_codes(current)


# -----------------------------------------------------------------------------
# Tables
# -----------------------------------------------------------------------------
def conjugation_table_from_rips(out: RipsOutput) -> ConjugationTable:
    """b^e a_l b^-e for every generator b of Γ, read off the conjugation relators."""
    gamma = out.gamma
    m = gamma.rank - 2
    k = len(gamma.relators) - 4 * m

    def to_inner(codes: tuple[int, ...]) -> Word:
        return Word.from_codes(c - m if c > 0 else c + m for c in codes)

    entries: list[ConjugationEntry] = []
    for j in range(m):
        for l in range(2):
            for e_index, e in enumerate((1, -1)):
                relator = gamma.relators[k + 4 * j + 2 * l + e_index].codes
                entries.append(ConjugationEntry(outer=j, sign=e, inner=l, word=to_inner(invert_codes(relator[3:]))))
    for l_outer in range(2):
        for e in (1, -1):
            for l in range(2):
                codes = (l + 1,) if l == l_outer else (e * (l_outer + 1), l + 1, -e * (l_outer + 1))
                entries.append(ConjugationEntry(outer=m + l_outer, sign=e, inner=l, word=Word.from_codes(codes)))
    return ConjugationTable(outer_gens=gamma.alphabet, inner_gens=gamma.alphabet[m:], entries=tuple(entries))


def product_table(tbl: ConjugationTable) -> ConjugationTable:
    """The table of Γ×Γ over H×H; letters from different factors commute."""
    n_outer, n_inner = len(tbl.outer_gens), len(tbl.inner_gens)
    lookup = tbl.lookup()
    entries: list[ConjugationEntry] = []
    for b in range(2 * n_outer):
        for sign in (1, -1):
            for a in range(2 * n_inner):
                if b // n_outer == a // n_inner:
                    word = shift_word(lookup[(b % n_outer, sign, a % n_inner)], (a // n_inner) * n_inner)
                else:
                    word = Word.generator(a)
                entries.append(ConjugationEntry(outer=b, sign=sign, inner=a, word=word))
    return ConjugationTable(
        outer_gens=_pair_symbols(tbl.outer_gens),
        inner_gens=_pair_symbols(tbl.inner_gens),
        entries=tuple(entries),
    )


def _pair_symbols(alphabet: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(f"({x},1)" for x in alphabet) + tuple(f"(1,{x})" for x in alphabet)


def split_pair_word(w: Word, rank: int) -> PairWord:
    """A word over the generators of Γ×Γ as its two components."""
    left = [c for c in w.codes if abs(c) <= rank]
    right = [c - rank if c > 0 else c + rank for c in w.codes if abs(c) > rank]
    return PairWord(left=Word.from_codes(left), right=Word.from_codes(right))


# -----------------------------------------------------------------------------
# The reduction
# -----------------------------------------------------------------------------
_TO_CONJUGACY = {
    Membership.MEMBER: ConjugacyVerdict.CONJUGATE,
    Membership.NON_MEMBER: ConjugacyVerdict.NOT_CONJUGATE,
    Membership.UNKNOWN: ConjugacyVerdict.UNKNOWN,
}


def conjugacy_reduction_query(
    w: Word,
    f: FibreData,
    tbl: ConjugationTable,
    wp_oracle: WordOracle,
    a: int = 0,
) -> ConjugacyQuery:
    """Is w (a, a) w^-1 conjugate to (a, a) in P? w is a word over the generators of Γ×Γ."""
    rank = f.p.source.rank
    if len(tbl.outer_gens) != rank:
        raise PreconditionError("conjugation table does not match the fibre data")
    n_inner = len(tbl.inner_gens)
    diagonal = Word.from_codes((a + 1, n_inner + a + 1))
    rewritten = conjugacy_rewrite(w, diagonal, product_table(tbl))
    membership = membership_query(split_pair_word(w, rank), f, wp_oracle)
    return ConjugacyQuery(verdict=_TO_CONJUGACY[membership], rewritten=rewritten)
