# =============================================================================
# constructions/reidemeister_schreier.py
# =============================================================================
# Purpose:
# Presentations of finite-index subgroups from a completed coset table.
#
# Transversal: breadth-first spanning tree from coset 0, trying columns in
# shortlex order (a, a^-1, b, b^-1, ...), so t_c is the shortlex-least word
# taking coset 0 to c.
#
# Schreier generators: s_{c,g} = t_c · g · t_{c·g}^-1 for every coset c and
# generator g, dropping those that are tree edges. Relators: every relator
# of the big group rewritten from every coset.
# =============================================================================

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from models.errors import PreconditionError
from models.presentation import GroupHom, Presentation
from models.results import CosetTable
from models.word import Word, invert_codes, reduce_codes
from presentation.words import is_cyclically_reduced

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchreierData:
    transversal: tuple[tuple[int, ...], ...]

    # (coset, generator) -> index of the Schreier generator, absent for tree edges
    generators: dict[tuple[int, int], int]


@lru_cache(maxsize=64)
def schreier_data(t: CosetTable) -> SchreierData:
    rank = len(t.action) // 2
    transversal: list[tuple[int, ...] | None] = [None] * t.n_cosets
    transversal[0] = ()
    tree: set[tuple[int, int]] = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for col in range(2 * rank):
            d = t.action[col][c]
            if transversal[d] is None:
                code = col // 2 + 1 if col % 2 == 0 else -(col // 2 + 1)
                transversal[d] = transversal[c] + (code,)
                # Edges stored in the positive direction: (source coset, generator)
                tree.add((c, col // 2) if code > 0 else (d, col // 2))
                queue.append(d)

    generators: dict[tuple[int, int], int] = {}
    for c in range(t.n_cosets):
        for g in range(rank):
            if (c, g) not in tree:
                generators[(c, g)] = len(generators)
    return SchreierData(transversal=tuple(transversal), generators=generators)


def transversal_words(t: CosetTable) -> list[Word]:
    return [Word.from_codes(codes) for codes in schreier_data(t).transversal]


def _rewrite_from(codes: tuple[int, ...], coset: int, t: CosetTable, data: SchreierData) -> tuple[tuple[int, ...], int]:
    out: list[int] = []
    for code in codes:
        g = abs(code) - 1
        if code > 0:
            index = data.generators.get((coset, g))
            if index is not None:
                out.append(index + 1)
            coset = t.act(coset, code)
        else:
            coset = t.act(coset, code)
            index = data.generators.get((coset, g))
            if index is not None:
                out.append(-(index + 1))
    return reduce_codes(out), coset


def schreier_rewrite(w: Word, t: CosetTable) -> Word:
    """w, which must lie in the subgroup, as a word in the Schreier generators."""
    data = schreier_data(t)
    codes, end = _rewrite_from(w.codes, 0, t, data)
    if end != 0:
        raise PreconditionError(f"word is not in the subgroup: it moves coset 0 to coset {end}")
    return Word.from_codes(codes)


def _cyclic_core(codes: tuple[int, ...]) -> tuple[int, ...]:
    while codes and not is_cyclically_reduced(codes):
        codes = codes[1:-1]
    return codes


def reidemeister_schreier(p: Presentation, t: CosetTable) -> tuple[Presentation, GroupHom]:
    """Presentation of the subgroup with coset table t, and its inclusion into p."""
    if len(t.action) != 2 * p.rank:
        raise PreconditionError("coset table does not match the presentation's generators")
    data = schreier_data(t)

    relators: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for r in p.relators:
        for c in range(t.n_cosets):
            codes, end = _rewrite_from(r.codes, c, t, data)
            if end != c:
                raise PreconditionError(f"coset table is not closed: a relator moves coset {c}")
            core = _cyclic_core(codes)
            if core and core not in seen:
                seen.add(core)
                relators.append(core)

    alphabet: list[str] = [""] * len(data.generators)
    images: list[Word] = [Word()] * len(data.generators)
    for (c, g), index in data.generators.items():
        alphabet[index] = f"{p.alphabet[g]}_{c}"
        d = t.action[2 * g][c]
        images[index] = Word.from_codes(data.transversal[c] + (g + 1,) + invert_codes(data.transversal[d]))

    subgroup = Presentation(
        name=f"{p.name}_sub{t.n_cosets}",
        alphabet=tuple(alphabet),
        relators=tuple(Word.from_codes(r) for r in relators),
    )
    inclusion = GroupHom(source=subgroup, target=p, images=tuple(images))
    logger.debug(
        "reidemeister-schreier: index %d, %d generators, %d relators",
        t.n_cosets, subgroup.rank, len(subgroup.relators),
    )
    return subgroup, inclusion
