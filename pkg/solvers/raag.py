# =============================================================================
# solvers/raag.py
# =============================================================================
# Purpose:
# Word problem in right-angled Artin groups.
#
# The normal form is computed by piling: one pile per generator; reading a
# letter either cancels the top of its own pile or stacks the letter there
# and a blank on the pile of every generator it does not commute with.
# Depiling repeatedly emits the least generator whose pile starts with a
# letter, which yields the shortlex-least word in the group element's class.
#
# `raag_equal_brute` is the independent check: a search over commutation
# swaps and free cancellations.
# =============================================================================

import logging
from collections import deque
from functools import lru_cache

from models.presentation import Graph
from models.word import Word, invert_codes, reduce_codes

logger = logging.getLogger(__name__)


class RaagNormalizer:
    """Piling normalizer for the RAAG of one graph."""

    def __init__(self, graph: Graph):
        self.graph = graph
        neighbours = graph.adjacency()

        # Generators that do not commute with i, excluding i itself
        self.non_commuters = [
            [j for j in range(graph.n) if j != i and j not in neighbours[i]]
            for i in range(graph.n)
        ]
        self.non_commuters_and_self = [sorted(others + [i]) for i, others in enumerate(self.non_commuters)]

    def normal_form(self, w: Word) -> Word:
        return Word.from_codes(self.normal_codes(w.codes))

    def normal_codes(self, codes: tuple[int, ...]) -> tuple[int, ...]:
        piles: list[deque[int]] = [deque() for _ in range(self.graph.n)]
        count = 0

        # Piling: 0 is the blank left by a non-commuting letter
        for code in codes:
            i, sign = abs(code) - 1, (1 if code > 0 else -1)
            if i >= self.graph.n:
                raise ValueError(f"generator {i} outside the RAAG on {self.graph.n} vertices")
            if piles[i] and piles[i][-1] == -sign:
                count -= 1
                for j in self.non_commuters_and_self[i]:
                    piles[j].pop()
            else:
                count += 1
                piles[i].append(sign)
                for j in self.non_commuters[i]:
                    piles[j].append(0)

        # Depiling: least available generator first
        out: list[int] = []
        while count:
            for i in range(self.graph.n):
                if piles[i] and piles[i][0]:
                    break
            else:
                raise RuntimeError("piles inconsistent: no letter available to depile")
            out.append((i + 1) * piles[i][0])
            count -= 1
            for j in self.non_commuters_and_self[i]:
                piles[j].popleft()
        return tuple(out)


@lru_cache(maxsize=256)
def _normalizer(graph: Graph) -> RaagNormalizer:
    return RaagNormalizer(graph)


def raag_normal_form(w: Word, g: Graph) -> Word:
    """Shortlex-least word equal to w in the RAAG of g."""
    return _normalizer(g).normal_form(w)


def raag_equal(u: Word, v: Word, g: Graph) -> bool:
    return raag_normal_form(u, g) == raag_normal_form(v, g)


# -----------------------------------------------------------------------------
# Brute-force oracle
# -----------------------------------------------------------------------------
def raag_trivial_brute(codes: tuple[int, ...], g: Graph, max_nodes: int = 500_000) -> bool:
    """
    Search every word reachable from `codes` by swapping adjacent commuting
    letters and deleting adjacent inverse pairs; trivial iff the empty word
    is reached. Both moves never lengthen a word, so the search is finite.
    """
    neighbours = g.adjacency()
    start = reduce_codes(codes)
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        if not word:
            return True
        for k in range(len(word) - 1):
            x, y = word[k], word[k + 1]
            if x == -y:
                nxt = word[:k] + word[k + 2:]
            elif abs(x) != abs(y) and (abs(y) - 1) in neighbours[abs(x) - 1]:
                nxt = word[:k] + (y, x) + word[k + 2:]
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
        if len(seen) > max_nodes:
            raise RuntimeError(f"brute-force RAAG search exceeded {max_nodes} words")
    return False


def raag_equal_brute(u: Word, v: Word, g: Graph) -> bool:
    return raag_trivial_brute(u.codes + invert_codes(v.codes), g)
