# =============================================================================
# solvers/brute_force.py
# =============================================================================
# Purpose:
# Independent word-problem oracle: bidirectional breadth-first search over
# freely reduced words. One move replaces a subword s by t^-1 whenever s·t
# is a symmetrized relator (|s| = 0 inserts a relator, |t| = 0 deletes one).
# The move set is symmetric, so the backward search from the empty word uses
# the same moves.
#
# "trivial" is definitive. "nontrivial-within-budget" means both searches
# ran dry under the length cap, or the exponent sums already rule the word
# out. "unknown" means the step budget ran out first.
# =============================================================================

import logging
import time
from collections import deque
from functools import lru_cache
from typing import Iterator

from models.presentation import Presentation
from models.results import BruteForceResult, Verdict
from models.word import Word, invert_codes, reduce_codes
from presentation.words import exponent_sums
from solvers.small_cancellation import symmetrized_codes
from solvers.smith import in_relator_lattice

logger = logging.getLogger(__name__)

DEFAULT_MAX_LEN = 16
DEFAULT_MAX_STEPS = 200_000


@lru_cache(maxsize=64)
def replacement_rules(p: Presentation) -> tuple[dict[tuple[int, ...], tuple[tuple[int, ...], ...]], tuple[int, ...]]:
    """Every split s·t of every symmetrized element, as s -> (t^-1, ...)."""
    rules: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for element in symmetrized_codes(p):
        for k in range(len(element) + 1):
            rules.setdefault(element[:k], set()).add(invert_codes(element[k:]))
    frozen = {s: tuple(sorted(ts)) for s, ts in rules.items()}
    return frozen, tuple(sorted({len(s) for s in frozen}))


def neighbours(word: tuple[int, ...], p: Presentation, max_len: int) -> Iterator[tuple[int, ...]]:
    """Words one relator application away from `word`, freely reduced, within max_len."""
    rules, lengths = replacement_rules(p)
    for i in range(len(word) + 1):
        for k in lengths:
            if i + k > len(word):
                break
            for replacement in rules.get(word[i:i + k], ()):
                nxt = reduce_codes(word[:i] + replacement + word[i + k:])
                if len(nxt) <= max_len:
                    yield nxt


def abelian_obstruction(w: Word, p: Presentation) -> bool:
    """True when w's exponent sums are not an integer combination of the relators'."""
    return not in_relator_lattice(p, exponent_sums(w, p.rank))


def brute_force_trivial(
    w: Word,
    p: Presentation,
    max_len: int = DEFAULT_MAX_LEN,
    max_steps: int = DEFAULT_MAX_STEPS,
    deadline: float | None = None,
) -> BruteForceResult:
    """`deadline` is a time.monotonic() value; passing it ends the search like the step budget."""
    start = w.codes
    if not start:
        return BruteForceResult(verdict=Verdict.TRIVIAL, steps=0)
    if abelian_obstruction(w, p):
        logger.debug("brute force: exponent sums certify nontriviality")
        return BruteForceResult(verdict=Verdict.NONTRIVIAL_WITHIN_BUDGET, steps=0, abelian_witness=True)
    if not p.relators:
        return BruteForceResult(verdict=Verdict.NONTRIVIAL_WITHIN_BUDGET, steps=0)

    max_len = max(max_len, len(start))
    forward, backward = {start}, {()}
    forward_queue, backward_queue = deque([start]), deque([()])
    steps = 0

    # Either search running dry closes off every derivation under the cap
    while forward_queue and backward_queue:
        if len(forward_queue) <= len(backward_queue):
            queue, seen, other = forward_queue, forward, backward
        else:
            queue, seen, other = backward_queue, backward, forward
        word = queue.popleft()
        steps += 1
        if steps > max_steps or (deadline is not None and time.monotonic() > deadline):
            logger.info("brute force: budget exhausted after %d steps", steps - 1)
            return BruteForceResult(verdict=Verdict.UNKNOWN, steps=steps - 1)
        for nxt in neighbours(word, p, max_len):
            if nxt in other:
                logger.debug("brute force: searches met after %d steps", steps)
                return BruteForceResult(verdict=Verdict.TRIVIAL, steps=steps)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)

    return BruteForceResult(verdict=Verdict.NONTRIVIAL_WITHIN_BUDGET, steps=steps)


def brute_force_oracle(p: Presentation, max_len: int = DEFAULT_MAX_LEN, max_steps: int = DEFAULT_MAX_STEPS):
    """Oracle view: nontrivial-within-budget is reported as unknown unless the abelian check fired."""

    def oracle(w: Word) -> Verdict:
        result = brute_force_trivial(w, p, max_len, max_steps)
        if result.verdict is Verdict.TRIVIAL:
            return Verdict.TRIVIAL
        if result.abelian_witness:
            return Verdict.NONTRIVIAL
        return Verdict.UNKNOWN

    return oracle
