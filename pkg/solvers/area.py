# =============================================================================
# solvers/area.py
# =============================================================================
# Purpose:
# Pointwise van Kampen area: the least number of relator applications that
# take a null-homotopic word to the empty word, found by uniform-cost search
# over freely reduced words (every move costs 1, so the search runs level by
# level). Moves are the brute-force oracle's: replace s by t^-1 for s·t in
# the symmetrized set, including length-increasing moves up to the
# intermediate-length cap.
#
# Also computes small values of the Dehn function
#     δ(n) = max { Area(w) : w = 1, |w| <= n }
# by enumerating words.
# =============================================================================

import itertools
import logging
import time
from typing import Callable

from models.presentation import Presentation
from models.results import AreaBudget, AreaResult, AreaStatus, DehnValue, Verdict
from models.word import Word, reduce_codes
from solvers.brute_force import replacement_rules

logger = logging.getLogger(__name__)


def area_estimate(
    w: Word,
    p: Presentation,
    budget: AreaBudget | None = None,
    deadline: float | None = None,
) -> AreaResult:
    """
    Area of w in <A | R>.

    `budget.max_intermediate_length` of 0 means "the length of w".
    `deadline` is a time.monotonic() value; reaching it ends the search
    like an exhausted budget.
    """
    budget = budget or AreaBudget()
    start = w.codes
    cap = budget.max_intermediate_length or len(start)
    cap = max(cap, len(start))
    effective = budget.model_copy(update={"max_intermediate_length": cap})

    if not start:
        return AreaResult(status=AreaStatus.EXACT, value=0, budget=effective)

    rules, lengths = replacement_rules(p) if p.relators else ({}, ())
    frontier = [start]
    seen = {start}
    cap_bound = False
    expanded = 0

    for level in range(1, budget.max_area + 1):
        next_frontier: list[tuple[int, ...]] = []
        for word in frontier:
            expanded += 1
            if expanded > budget.max_nodes or (deadline is not None and time.monotonic() > deadline):
                logger.info("area: budget exhausted at level %d after %d nodes", level, expanded)
                return AreaResult(
                    status=AreaStatus.EXCEEDED_BUDGET,
                    value=level,
                    budget=effective,
                    length_cap_bound=cap_bound,
                    nodes_expanded=expanded,
                )
            for i in range(len(word) + 1):
                for k in lengths:
                    if i + k > len(word):
                        break
                    for replacement in rules.get(word[i:i + k], ()):
                        nxt = reduce_codes(word[:i] + replacement + word[i + k:])
                        if not nxt:
                            logger.debug("area: %d after %d nodes", level, expanded)
                            return AreaResult(
                                status=AreaStatus.EXACT,
                                value=level,
                                budget=effective,
                                length_cap_bound=cap_bound,
                                nodes_expanded=expanded,
                            )
                        if len(nxt) > cap:
                            cap_bound = True
                            continue
                        if nxt not in seen:
                            seen.add(nxt)
                            next_frontier.append(nxt)
        frontier = next_frontier
        if not frontier:
            logger.info("area: search space closed at level %d without reaching the identity", level)
            return AreaResult(
                status=AreaStatus.AT_LEAST,
                value=level + 1,
                budget=effective,
                length_cap_bound=cap_bound,
                nodes_expanded=expanded,
            )

    return AreaResult(
        status=AreaStatus.EXCEEDED_BUDGET,
        value=budget.max_area + 1,
        budget=effective,
        length_cap_bound=cap_bound,
        nodes_expanded=expanded,
    )


def reduced_words(rank: int, length: int):
    """Every freely reduced word of exactly `length` letters, as code tuples."""
    letters = [c for g in range(1, rank + 1) for c in (g, -g)]
    for codes in itertools.product(letters, repeat=length):
        if all(codes[i] != -codes[i + 1] for i in range(length - 1)):
            yield codes


def dehn_function_values(
    p: Presentation,
    max_len: int,
    oracle: Callable[[Word], Verdict],
    budget: AreaBudget | None = None,
    deadline: float | None = None,
) -> list[DehnValue]:
    """δ(n) for n = 0..max_len; any inexact area makes that value a lower bound."""
    values: list[DehnValue] = []
    best, best_word, status = 0, None, AreaStatus.EXACT
    for n in range(max_len + 1):
        for codes in reduced_words(p.rank, n):
            w = Word.from_codes(codes)
            verdict = oracle(w)
            if verdict is Verdict.UNKNOWN:
                status = AreaStatus.AT_LEAST
                continue
            if verdict is not Verdict.TRIVIAL:
                continue
            result = area_estimate(w, p, budget, deadline)
            if result.status is not AreaStatus.EXACT:
                status = AreaStatus.AT_LEAST
            if result.value > best:
                best, best_word = result.value, w
        values.append(DehnValue(n=n, value=best, status=status, witness=best_word))
        logger.debug("dehn function: delta(%d) = %d (%s)", n, best, status.value)
    return values
