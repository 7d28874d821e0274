# =============================================================================
# solvers/dehn.py
# =============================================================================
# Purpose:
# Dehn's algorithm for C'(1/6) presentations: while the word contains more
# than half of some symmetrized relator s·t (|s| > |t|), replace s by t^-1
# and free-reduce. Greendlinger's lemma makes "reached the empty word" the
# exact test for triviality.
#
# Symmetrized elements are never listed. Each relator and its inverse is
# kept as a doubled string, so every rotation is a substring; a majority
# prefix of length floor(n/2)+1 is then a single str.find away.
# =============================================================================

import logging
from functools import lru_cache

from models.presentation import Presentation
from models.results import Verdict
from models.word import Word, invert_codes, reduce_codes
from solvers.small_cancellation import require_c6

logger = logging.getLogger(__name__)

_BASE = 0x4000


def _encode(codes) -> str:
    return "".join(chr(_BASE + c) for c in codes)


@lru_cache(maxsize=64)
def _cyclic_strings(p: Presentation) -> tuple[tuple[int, tuple[int, ...], str], ...]:
    """(length, codes, doubled string) per relator and per inverse, shortest first."""
    entries = []
    for relator in p.relators:
        for codes in (relator.codes, invert_codes(relator.codes)):
            entries.append((len(codes), codes, _encode(codes + codes)))
    return tuple(sorted(entries, key=lambda e: e[0]))


def _majority_step(word: tuple[int, ...], cyclic) -> tuple[int, ...] | None:
    text = _encode(word)
    for i in range(len(word)):
        for n, codes, doubled in cyclic:
            k = n // 2 + 1
            if i + k > len(word):
                break
            found = doubled.find(text[i:i + k])
            if found < 0:
                continue
            start = found % n
            element = codes[start:] + codes[:start]
            return reduce_codes(word[:i] + invert_codes(element[k:]) + word[i + k:])
    return None


def dehn_reduce(codes: tuple[int, ...], p: Presentation) -> tuple[int, ...]:
    """Apply majority replacements until none applies; returns the Dehn-reduced word."""
    cyclic = _cyclic_strings(p)
    word = reduce_codes(codes)
    steps = 0
    while word:
        nxt = _majority_step(word, cyclic)
        if nxt is None:
            break
        word = nxt
        steps += 1
    logger.debug("dehn: %d replacements, residue length %d", steps, len(word))
    return word


def dehn_solve(w: Word, p: Presentation) -> Verdict:
    """TRIVIAL or NONTRIVIAL; raises PreconditionError unless p is C'(1/6)."""
    require_c6(p)
    return Verdict.TRIVIAL if not dehn_reduce(w.codes, p) else Verdict.NONTRIVIAL


def dehn_oracle(p: Presentation):
    """A reusable word oracle for a certified presentation."""
    require_c6(p)

    def oracle(w: Word) -> Verdict:
        return Verdict.TRIVIAL if not dehn_reduce(w.codes, p) else Verdict.NONTRIVIAL

    return oracle
