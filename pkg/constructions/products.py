# =============================================================================
# constructions/products.py
# =============================================================================
# Purpose:
# Direct products of presentations with their two injections.
#
# The second factor's generators are renumbered after the first's; a symbol
# that clashes with one from the first factor gets a "_2" suffix.
# =============================================================================

import logging

from models.presentation import GroupHom, Presentation
from models.word import Word
from presentation.words import commutator

logger = logging.getLogger(__name__)


def disjoint_symbols(first: tuple[str, ...], second: tuple[str, ...]) -> tuple[str, ...]:
    # Suffixes stack ("x_2_2") when the first factor already uses "x_2"
    taken = set(first)
    renamed = []
    for symbol in second:
        candidate = symbol
        while candidate in taken:
            candidate = f"{candidate}_2"
        taken.add(candidate)
        renamed.append(candidate)
    return tuple(renamed)


def shift_word(w: Word, offset: int) -> Word:
    """Renumber every generator of w by `offset`."""
    return Word.from_codes(c + offset if c > 0 else c - offset for c in w.codes)


def direct_product(p1: Presentation, p2: Presentation) -> tuple[Presentation, GroupHom, GroupHom]:
    """p1 × p2 with its two injections."""
    n1 = p1.rank
    second = disjoint_symbols(p1.alphabet, p2.alphabet)
    if second != p2.alphabet:
        logger.debug("direct product: renamed clashing generators of %s to %s", p2.name, second)

    # [x_i, y_j] for every pair; the factors commute and nothing else is added
    cross = tuple(
        commutator(Word.generator(i), Word.generator(n1 + j))
        for i in range(n1)
        for j in range(p2.rank)
    )
    product = Presentation(
        name=f"{p1.name}x{p2.name}",
        alphabet=p1.alphabet + second,
        relators=p1.relators + tuple(shift_word(r, n1) for r in p2.relators) + cross,
    )
    left = GroupHom(source=p1, target=product, images=tuple(Word.generator(i) for i in range(n1)))
    right = GroupHom(source=p2, target=product, images=tuple(Word.generator(n1 + j) for j in range(p2.rank)))
    return product, left, right
