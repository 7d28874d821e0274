"""
A small instance on which the conjugacy reduction can be checked end to end.

Γ = F(a1, a2) ⋊ <x>, where x acts by a1 -> a1 a2, a2 -> a2. The kernel of
Γ -> <x> = ℤ is F(a1, a2), the conjugation table is the automorphism and its
inverse, and the word problem is solved by carrying (free word, power of x)
through the multiplication (f, k)(g, l) = (f · x^k g x^-k, k + l).
"""
from dataclasses import dataclass

from models.presentation import GroupHom, Presentation
from models.reductions import ConjugationEntry, ConjugationTable
from models.results import FibreData, Verdict
from models.word import Word, invert_codes, reduce_codes
from presentation.homs import WordOracle
from reductions.oracles import free_group_oracle

# x = 1, a1 = 2, a2 = 3
MAPPING_TORUS = Presentation(
    name="Torus",
    alphabet=("x", "a1", "a2"),
    relators=(
        Word.from_codes((1, 2, -1, -3, -2)),
        Word.from_codes((1, 3, -1, -3)),
    ),
)

CYCLIC_QUOTIENT = Presentation(name="Z", alphabet=("x",))


@dataclass(frozen=True)
class DemoInstance:
    gamma: Presentation
    quotient: Presentation
    fibre: FibreData
    table: ConjugationTable
    gamma_oracle: WordOracle
    quotient_oracle: WordOracle

    def embed_inner(self, w: Word) -> Word:
        """A word over (a1, a2) as a word in Γ."""
        return Word.from_codes(c + 1 if c > 0 else c - 1 for c in w.codes)


def _twist(inner: int, k: int) -> tuple[int, ...]:
    """x^k a x^-k as inner codes (a1 = 1, a2 = 2)."""
    if abs(inner) == 2:
        return (inner,)
    image = (1,) + (2,) * k if k >= 0 else (1,) + (-2,) * -k
    return image if inner > 0 else invert_codes(image)


def mapping_torus_oracle(w: Word) -> Verdict:
    free: list[int] = []
    k = 0
    for code in w.codes:
        if abs(code) == 1:
            k += 1 if code > 0 else -1
        else:
            inner = code - 1 if code > 0 else code + 1
            free.extend(_twist(inner, k))
    return Verdict.TRIVIAL if k == 0 and not reduce_codes(free) else Verdict.NONTRIVIAL


def _table() -> ConjugationTable:
    entries = [
        ConjugationEntry(outer=0, sign=1, inner=0, word=Word.from_codes((1, 2))),
        ConjugationEntry(outer=0, sign=1, inner=1, word=Word.from_codes((2,))),
        ConjugationEntry(outer=0, sign=-1, inner=0, word=Word.from_codes((1, -2))),
        ConjugationEntry(outer=0, sign=-1, inner=1, word=Word.from_codes((2,))),
    ]
    for outer in (1, 2):
        for sign in (1, -1):
            for inner in (0, 1):
                codes = (inner + 1,) if outer == inner + 1 else (sign * outer, inner + 1, -sign * outer)
                entries.append(ConjugationEntry(outer=outer, sign=sign, inner=inner, word=Word.from_codes(codes)))
    return ConjugationTable(outer_gens=MAPPING_TORUS.alphabet, inner_gens=("a1", "a2"), entries=tuple(entries))


def mapping_torus_demo() -> DemoInstance:
    p = GroupHom(
        source=MAPPING_TORUS,
        target=CYCLIC_QUOTIENT,
        images=(Word.generator(0), Word(), Word()),
    )
    return DemoInstance(
        gamma=MAPPING_TORUS,
        quotient=CYCLIC_QUOTIENT,
        fibre=FibreData(p=p, kernel_gens=(Word.generator(1), Word.generator(2))),
        table=_table(),
        gamma_oracle=mapping_torus_oracle,
        quotient_oracle=free_group_oracle,
    )
