# =============================================================================
# models/reductions.py
# =============================================================================
# Purpose:
# Carrier types for the decision-problem reductions: conjugation tables for
# rewriting w a w^-1, elements of Γ×Γ written componentwise, surjections
# from direct products onto ℤ, query outcomes, and the Γ0(level) data behind
# the congruence-subgroup kernels.
# =============================================================================

from enum import Enum
from math import gcd

from pydantic import BaseModel, ConfigDict, model_validator

from models.matrix import IntMatrix
from models.presentation import GroupHom, Presentation
from models.results import CosetTable
from models.word import Word

# ℤ = <t | >, the target of every surjection onto the integers
INTEGERS = Presentation(name="Z", alphabet=("t",))


class ConjugationEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    outer: int
    sign: int
    inner: int

    # u with b^sign a b^-sign = u, a word over the inner alphabet
    word: Word


class ConjugationTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    outer_gens: tuple[str, ...]
    inner_gens: tuple[str, ...]
    entries: tuple[ConjugationEntry, ...]

    @model_validator(mode="after")
    def _total(self) -> "ConjugationTable":
        keys = {(e.outer, e.sign, e.inner) for e in self.entries}
        for b in range(len(self.outer_gens)):
            for sign in (1, -1):
                for a in range(len(self.inner_gens)):
                    if (b, sign, a) not in keys:
                        raise ValueError(f"missing conjugation entry for ({b}, {sign}, {a})")
        return self

    def lookup(self) -> dict[tuple[int, int, int], Word]:
        return {(e.outer, e.sign, e.inner): e.word for e in self.entries}

    @property
    def max_entry_length(self) -> int:
        return max((len(e.word) for e in self.entries), default=0)


class PairWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: Word = Word()
    right: Word = Word()

    @classmethod
    def diagonal(cls, word: Word) -> "PairWord":
        return cls(left=word, right=word)


class ZKernelSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    factors: tuple[Presentation, ...]

    # One homomorphism to ℤ per factor
    phis: tuple[GroupHom, ...]

    @model_validator(mode="after")
    def _surjective(self) -> "ZKernelSpec":
        if len(self.factors) != len(self.phis):
            raise ValueError("one phi per factor is required")
        for factor, phi in zip(self.factors, self.phis):
            if phi.source != factor:
                raise ValueError(f"phi does not start at factor {factor.name}")
            weights = [sum(l.sign for l in image.letters) for image in phi.images]
            divisor = 0
            for w in weights:
                divisor = gcd(divisor, w)
            if divisor != 1:
                raise ValueError(f"phi on {factor.name} is not surjective (weights {weights})")
        return self

    def weights(self, index: int) -> tuple[int, ...]:
        return tuple(sum(l.sign for l in image.letters) for image in self.phis[index].images)

    @classmethod
    def from_weights(cls, factors: list[Presentation], weights: list[list[int]]) -> "ZKernelSpec":
        phis = tuple(
            GroupHom(
                source=factor,
                target=INTEGERS,
                images=tuple(Word.generator(0, w) for w in row),
            )
            for factor, row in zip(factors, weights)
        )
        return cls(factors=tuple(factors), phis=phis)


# -----------------------------------------------------------------------------
# Query outcomes
# -----------------------------------------------------------------------------
class Membership(str, Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    UNKNOWN = "unknown"


class ConjugacyVerdict(str, Enum):
    CONJUGATE = "conjugate-in-P"
    NOT_CONJUGATE = "not"
    UNKNOWN = "unknown"


class ConjugacyQuery(BaseModel):
    verdict: ConjugacyVerdict

    # w (a, a) w^-1 rewritten over the kernel generators of both factors
    rewritten: Word


# -----------------------------------------------------------------------------
# Congruence subgroup data
# -----------------------------------------------------------------------------
class ModularPhi(BaseModel):
    """A surjection from Γ0(level) onto ℤ, through the image of Γ0(level) in PSL(2, ℤ)."""

    model_config = ConfigDict(frozen=True)

    level: int
    index: int

    # Coset table of the image in <s, u | s^2, u^3>
    table: CosetTable
    subgroup: Presentation
    free_rank: int
    torsion: tuple[int, ...]

    # SNF coordinate projected onto
    coordinate: int
    hom: GroupHom

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(sum(l.sign for l in image.letters) for image in self.hom.images)


class KnWitness(BaseModel):
    level: int
    matrices: tuple[IntMatrix, ...]
    phi_values: tuple[int, ...]
    member: bool
    order: int | None
