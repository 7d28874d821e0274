# =============================================================================
# mcg/representation.py
# =============================================================================
# Purpose:
# RAAGs acting on homology: v_i goes to the N-th power of the transvection
# about the curve c_i.
#
# check_relations reports which pairs of images commute and, for pairs that
# should not, searches for a short word in the two images that is trivial.
# =============================================================================

import logging

import numpy as np

from constructions.raag_builder import raag_alphabet
from mcg.symplectic import curve_system_from_graph, transvection
from models.matrix import IntMatrix
from models.presentation import Graph
from models.surface import PairVerdict, RelationReport, SymplecticRep
from models.word import Word
from presentation.parser import format_word

logger = logging.getLogger(__name__)

# N in v_i -> T_{c_i}^N
DEFAULT_TWIST_POWER = 2


def raag_symplectic_rep(g: Graph, n: int = DEFAULT_TWIST_POWER) -> SymplecticRep:
    space, curves = curve_system_from_graph(g)
    images = tuple(transvection(c, n) for c in curves)
    return SymplecticRep(space=space, twist_power=n, curves=tuple(curves), images=images)


def _first_relation(x: np.ndarray, y: np.ndarray, cap: int) -> tuple[tuple[int, ...] | None, int]:
    """Depth-first search over reduced words in x, y (codes 1, 2) up to length cap."""
    # Object dtype keeps entries as exact Python ints
    identity = np.identity(x.shape[0], dtype=object)
    inverse = {1: _integer_inverse(x), 2: _integer_inverse(y)}
    letters = {1: x, -1: inverse[1], 2: y, -2: inverse[2]}
    checked = 0
    stack: list[tuple[tuple[int, ...], np.ndarray]] = [((), identity)]
    while stack:
        word, value = stack.pop()
        if len(word) == cap:
            continue
        for code in (1, -1, 2, -2):
            # Reduced words only
            if word and word[-1] == -code:
                continue
            extended = word + (code,)
            product = value.dot(letters[code])
            checked += 1
            if (product == identity).all():
                return extended, checked
            stack.append((extended, product))
    return None, checked


def _integer_inverse(m: np.ndarray) -> np.ndarray:
    return IntMatrix.from_array(m).inverse().to_array()


def check_relations(rep: SymplecticRep, g: Graph, word_len_cap: int = 8) -> RelationReport:
    alphabet = raag_alphabet(g.n)
    arrays = [image.matrix.to_array() for image in rep.images]
    pairs = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            x, y = arrays[i], arrays[j]
            commute = bool((x.dot(y) == y.dot(x)).all())
            verdict = PairVerdict(i=i, j=j, edge=g.adjacent(i, j), commute=commute)
            # Non-edges should generate a free group; look for a witness that they do not
            if not verdict.edge:
                relation, checked = _first_relation(x, y, word_len_cap)
                if relation is not None:
                    generator = {1: i + 1, 2: j + 1}
                    codes = tuple(generator[abs(c)] * (1 if c > 0 else -1) for c in relation)
                    verdict.relation = format_word(Word.from_codes(codes), alphabet)
                verdict.words_checked = checked
            pairs.append(verdict)
            logger.debug("relations: pair (%d, %d) edge=%s commute=%s", i, j, verdict.edge, commute)
    return RelationReport(n=g.n, twist_power=rep.twist_power, word_len_cap=word_len_cap, pairs=pairs)
