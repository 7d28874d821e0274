# =============================================================================
# presentation/homs.py
# =============================================================================
# Purpose:
# Homomorphisms between presentations: application, composition, and the
# on-demand check that relators map to the identity.
#
# Nothing here decides the word problem; callers pass a WordOracle.
# =============================================================================

import logging
from typing import Callable

from models.presentation import GroupHom, Presentation
from models.results import Verdict
from models.word import Word, invert_codes, reduce_codes

logger = logging.getLogger(__name__)

# word -> trivial / nontrivial / unknown; deterministic per input
WordOracle = Callable[[Word], Verdict]


def apply_hom(h: GroupHom, w: Word) -> Word:
    """Substitute each letter by its image (inverted for sign -1) and free-reduce."""
    images = [image.codes for image in h.images]
    out: list[int] = []
    for code in w.codes:
        image = images[abs(code) - 1]
        # An inverse letter maps to the inverted image
        out.extend(image if code > 0 else invert_codes(image))
    return Word.from_codes(reduce_codes(out))


def compose_hom(outer: GroupHom, inner: GroupHom) -> GroupHom:
    """outer ∘ inner."""
    # Presentations compare structurally, names included
    if inner.target != outer.source:
        raise ValueError("homomorphisms do not compose: target and source differ")
    return GroupHom(
        source=inner.source,
        target=outer.target,
        images=tuple(apply_hom(outer, image) for image in inner.images),
    )


def identity_hom(p: Presentation) -> GroupHom:
    return GroupHom(source=p, target=p, images=tuple(Word.generator(i) for i in range(p.rank)))


def is_hom_certified(h: GroupHom, oracle: WordOracle) -> Verdict:
    """TRIVIAL when every source relator maps to a word the oracle calls trivial."""
    outcome = Verdict.TRIVIAL
    for relator in h.source.relators:
        verdict = oracle(apply_hom(h, relator))
        if verdict is Verdict.TRIVIAL:
            continue
        logger.debug("relator image not certified trivial: %s", verdict.value)
        if verdict is Verdict.NONTRIVIAL:
            return Verdict.NONTRIVIAL
        outcome = Verdict.UNKNOWN
    return outcome
