# =============================================================================
# solvers/small_cancellation.py
# =============================================================================
# Purpose:
# Symmetrized relator sets and the metric small-cancellation certificate
# C'(λ): every piece is shorter than λ times the length of every relator.
#
# A piece is a common prefix of two distinct symmetrized elements. Pieces
# are found on run-length encoded cyclic words, so the cost grows with the
# number of runs rather than the number of letters (Rips relators run to
# thousands of letters but only a few dozen runs):
#
#   two rotations that start inside runs p and q of the same letter agree
#   longest when both have j = min(|p|, |q|) letters left in their run; from
#   there they agree on every following run of equal letter and count, plus
#   the shorter of the first run whose counts differ.
#
# Two rotations that start inside the same run a^c share at most a^(c-1).
# =============================================================================

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from models.errors import PreconditionError
from models.presentation import Presentation
from models.results import CancellationReport, SymmetrizedSet
from models.word import Word, invert_codes, shortlex_key
from presentation.words import cyclic_rotations

logger = logging.getLogger(__name__)

STANDARD_LAMBDAS = (Fraction(1, 4), Fraction(1, 6), Fraction(1, 8))


@lru_cache(maxsize=128)
def symmetrized_codes(p: Presentation) -> tuple[tuple[int, ...], ...]:
    """Code tuples of the symmetrized set, shortlex sorted."""
    closure: set[tuple[int, ...]] = set()
    for relator in p.relators:
        codes = relator.codes
        closure.update(cyclic_rotations(codes))
        closure.update(cyclic_rotations(invert_codes(codes)))
    return tuple(sorted(closure, key=shortlex_key))


def symmetrize(p: Presentation) -> SymmetrizedSet:
    if not p.relators:
        raise PreconditionError(f"{p.name} has no relators to symmetrize")
    elements = tuple(Word.from_codes(codes) for codes in symmetrized_codes(p))
    return SymmetrizedSet(base=p, elements=elements)


# -----------------------------------------------------------------------------
# Run-length cyclic words
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class CyclicRuns:
    # Rotated so that position 0 starts a run
    codes: tuple[int, ...]
    letters: tuple[int, ...]
    counts: tuple[int, ...]
    starts: tuple[int, ...]

    @classmethod
    def of(cls, codes: tuple[int, ...]) -> "CyclicRuns":
        n = len(codes)
        shift = next((i for i in range(n) if codes[i] != codes[i - 1]), 0)
        rotated = codes[shift:] + codes[:shift]
        letters, counts, starts = [], [], []
        for i, code in enumerate(rotated):
            if letters and letters[-1] == code:
                counts[-1] += 1
            else:
                letters.append(code)
                counts.append(1)
                starts.append(i)
        return cls(rotated, tuple(letters), tuple(counts), tuple(starts))

    def __len__(self) -> int:
        return len(self.codes)

    def rotation(self, run: int, remaining: int) -> tuple[int, ...]:
        """The rotation that starts `remaining` letters before the end of `run`."""
        start = self.starts[run] + self.counts[run] - remaining
        return self.codes[start:] + self.codes[:start]

    def canonical(self) -> tuple[int, ...]:
        return min(self.codes[i:] + self.codes[:i] for i in self.starts)


def _agreement(a: CyclicRuns, p: int, b: CyclicRuns, q: int) -> int | None:
    """Common prefix length of the best-aligned rotations at runs p, q; None when identical."""
    total = min(a.counts[p], b.counts[q])
    cap = min(len(a), len(b))
    step = 1
    while total < cap:
        i, k = (p + step) % len(a.letters), (q + step) % len(b.letters)
        if a.letters[i] != b.letters[k]:
            return total
        if a.counts[i] != b.counts[k]:
            return min(total + min(a.counts[i], b.counts[k]), cap)
        total += a.counts[i]
        step += 1
    if len(a) == len(b):
        return None
    return cap


def _cyclic_words(p: Presentation) -> list[CyclicRuns]:
    """Relators and their inverses as cyclic words, duplicates removed."""
    words: dict[tuple[int, ...], CyclicRuns] = {}
    for relator in p.relators:
        for codes in (relator.codes, invert_codes(relator.codes)):
            runs = CyclicRuns.of(codes)
            words.setdefault(runs.canonical(), runs)
    return list(words.values())


def max_piece(p: Presentation) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Length of the longest piece and two distinct elements that share it."""
    words = _cyclic_words(p)
    by_letter: dict[int, list[tuple[int, int]]] = {}
    for w, runs in enumerate(words):
        for r, letter in enumerate(runs.letters):
            by_letter.setdefault(letter, []).append((w, r))

    best, where = 0, None
    for positions in by_letter.values():
        for x, (wa, ra) in enumerate(positions):
            for wb, rb in positions[x + 1:]:
                agreed = _agreement(words[wa], ra, words[wb], rb)
                if agreed is not None and agreed > best:
                    best, where = agreed, (wa, ra, wb, rb)

    # Two rotations inside one run a^c overlap in a^(c-1); a single-run word
    # has only one rotation
    inner = None
    for w, runs in enumerate(words):
        if len(runs.letters) < 2:
            continue
        for r, count in enumerate(runs.counts):
            if count - 1 > best:
                best, inner = count - 1, (w, r)

    if inner is not None:
        runs = words[inner[0]]
        count = runs.counts[inner[1]]
        return best, (runs.rotation(inner[1], count), runs.rotation(inner[1], count - 1))
    if where is None:
        return 0, None
    wa, ra, wb, rb = where
    a, b = words[wa], words[wb]
    j = min(a.counts[ra], b.counts[rb])
    return best, (a.rotation(ra, j), b.rotation(rb, j))


def check_small_cancellation(p: Presentation, lam: Fraction | str = Fraction(1, 6)) -> CancellationReport:
    if not p.relators:
        raise PreconditionError(f"{p.name} has no relators; small cancellation is undefined")
    lam = Fraction(lam)

    best, witness = max_piece(p)
    min_length = min(len(r) for r in p.relators)
    ratio = Fraction(best, min_length)
    lambdas = sorted(set(STANDARD_LAMBDAS) | {lam}, reverse=True)

    # Strict and per relator; the shortest relator is the binding one
    passes = {str(l): all(best < l * len(r) for r in p.relators) for l in lambdas}
    logger.debug("%s: max piece %d, min relator %d, ratio %s", p.name, best, min_length, ratio)

    return CancellationReport(
        max_piece_length=best,
        min_relator_length=min_length,
        ratio=str(ratio),
        passes_lambda=passes,
        witness=(Word.from_codes(witness[0]), Word.from_codes(witness[1])) if witness else None,
        piece=Word.from_codes(witness[0][:best]) if witness else Word(),
    )


def require_c6(p: Presentation) -> CancellationReport:
    """The certificate Dehn's algorithm needs, or PreconditionError."""
    report = check_small_cancellation(p, Fraction(1, 6))
    if not report.passes(Fraction(1, 6)):
        raise PreconditionError(
            f"{p.name} is not certified C'(1/6): piece {report.max_piece_length}, "
            f"shortest relator {report.min_relator_length}"
        )
    return report
