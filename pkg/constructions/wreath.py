# =============================================================================
# constructions/wreath.py
# =============================================================================
# Purpose:
# The standard embedding of a group H into K ≀ (H/K) for a finite-index
# subgroup K, and arithmetic in the wreath product.
#
# Cosets act on the right, as in the coset table: c·h. With a transversal
# t_c (0·t_c = c, t_0 = 1) the embedding is
#
#     top[c]    = c·h
#     bottom[c] = t_c · h · t_{c·h}^-1        (fixes coset 0, so lies in K)
#
# and elements multiply as (π, f)(σ, g) = (σ∘π, c -> f(c)·g(π(c))), which
# makes h -> (top, bottom) a homomorphism. Bottoms are words over H's own
# alphabet or integer matrices; both multiply through the same rule.
# =============================================================================

import logging

from models.errors import TransversalError
from models.matrix import IntMatrix
from models.results import CosetTable, WreathElement
from models.word import Word, invert_codes, reduce_codes

logger = logging.getLogger(__name__)


def check_transversal(t: CosetTable, transversal: list[Word] | tuple[Word, ...]) -> None:
    if len(transversal) != t.n_cosets:
        raise TransversalError(f"transversal has {len(transversal)} words for {t.n_cosets} cosets")
    if not transversal[0].is_identity():
        raise TransversalError("transversal[0] must be the identity")
    for c, word in enumerate(transversal):
        if t.act_word(0, word) != c:
            raise TransversalError(f"transversal[{c}] does not lie in coset {c}")


def wreath_embed(h: Word, t: CosetTable, transversal: list[Word] | tuple[Word, ...]) -> WreathElement:
    check_transversal(t, transversal)
    top = tuple(t.act_word(c, h) for c in range(t.n_cosets))
    bottom = []
    for c in range(t.n_cosets):
        codes = reduce_codes(transversal[c].codes + h.codes + invert_codes(transversal[top[c]].codes))
        if t.act_word(0, codes) != 0:
            raise TransversalError(f"bottom entry at coset {c} leaves the subgroup")
        bottom.append(Word.from_codes(codes))
    return WreathElement(top=top, bottom=tuple(bottom))


# -----------------------------------------------------------------------------
# Arithmetic
# -----------------------------------------------------------------------------
def _times(x: Word | IntMatrix, y: Word | IntMatrix) -> Word | IntMatrix:
    if isinstance(x, IntMatrix):
        return x @ y
    return Word.from_codes(x.codes + y.codes)


def _inverse(x: Word | IntMatrix) -> Word | IntMatrix:
    if isinstance(x, IntMatrix):
        return x.inverse()
    return Word.from_codes(invert_codes(x.codes))


def wreath_multiply(w1: WreathElement, w2: WreathElement) -> WreathElement:
    if len(w1.top) != len(w2.top):
        raise TransversalError("wreath elements over different index sets")
    top = tuple(w2.top[w1.top[c]] for c in range(len(w1.top)))
    bottom = tuple(_times(w1.bottom[c], w2.bottom[w1.top[c]]) for c in range(len(w1.top)))
    return WreathElement(top=top, bottom=bottom)


def wreath_inverse(w: WreathElement) -> WreathElement:
    n = len(w.top)
    inverse_top = [0] * n
    for c, image in enumerate(w.top):
        inverse_top[image] = c
    bottom = tuple(_inverse(w.bottom[inverse_top[c]]) for c in range(n))
    return WreathElement(top=tuple(inverse_top), bottom=bottom)


def wreath_identity(n: int, unit: Word | IntMatrix | None = None) -> WreathElement:
    unit = Word() if unit is None else unit
    return WreathElement(top=tuple(range(n)), bottom=(unit,) * n)
