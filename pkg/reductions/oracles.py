# =============================================================================
# reductions/oracles.py
# =============================================================================
# Purpose:
# Word-problem oracles for the quotient groups the reductions run over, and
# the chooser that picks the strongest one a presentation admits:
#
#   no relators                -> free group: trivial iff freely reduced to 1
#   commutators of generators  -> RAAG normal form
#   C'(1/6)                    -> Dehn's algorithm
#   finite (enumerates)        -> regular coset table
#   otherwise                  -> brute force, unknown when inconclusive
# =============================================================================

import logging
from fractions import Fraction

from constructions.todd_coxeter import finite_group_oracle, todd_coxeter
from models.presentation import Graph, Presentation
from models.results import Verdict
from models.word import Word
from presentation.homs import WordOracle
from solvers.brute_force import DEFAULT_MAX_LEN, DEFAULT_MAX_STEPS, brute_force_oracle
from solvers.dehn import dehn_oracle
from solvers.raag import raag_normal_form
from solvers.small_cancellation import check_small_cancellation

logger = logging.getLogger(__name__)

FINITE_CHECK_COSETS = 2_000


def free_group_oracle(w: Word) -> Verdict:
    return Verdict.TRIVIAL if w.is_identity() else Verdict.NONTRIVIAL


def raag_graph_of(p: Presentation) -> Graph | None:
    """The defining graph when every relator is a commutator of two generators."""
    edges = set()
    for r in p.relators:
        codes = r.codes
        if len(codes) != 4 or codes[2] != -codes[0] or codes[3] != -codes[1] or abs(codes[0]) == abs(codes[1]):
            return None
        i, j = abs(codes[0]) - 1, abs(codes[1]) - 1
        edges.add((min(i, j), max(i, j)))
    return Graph(n=p.rank, edges=tuple(sorted(edges)))


def raag_oracle(g: Graph) -> WordOracle:
    def oracle(w: Word) -> Verdict:
        return Verdict.TRIVIAL if raag_normal_form(w, g).is_identity() else Verdict.NONTRIVIAL

    return oracle


def choose_oracle(
    p: Presentation,
    max_len: int = DEFAULT_MAX_LEN,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_cosets: int = FINITE_CHECK_COSETS,
) -> tuple[str, WordOracle]:
    """(kind, oracle) for p; kind is one of free, raag, dehn, finite, brute-force."""
    if not p.relators:
        return "free", free_group_oracle

    graph = raag_graph_of(p)
    if graph is not None:
        return "raag", raag_oracle(graph)

    if check_small_cancellation(p, Fraction(1, 6)).passes(Fraction(1, 6)):
        return "dehn", dehn_oracle(p)

    if todd_coxeter(p, (), max_cosets).completed:
        return "finite", finite_group_oracle(p, max_cosets)

    logger.info("%s: no exact oracle applies; falling back to brute force", p.name)
    return "brute-force", brute_force_oracle(p, max_len, max_steps)
