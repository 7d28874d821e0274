# =============================================================================
# models/results.py
# =============================================================================
# Purpose:
# Result and carrier types produced by the solvers and the constructions:
# symmetrized relator sets, small-cancellation reports, word-problem and area
# verdicts, coset tables, Rips output, fibre-product data, wreath elements.
# =============================================================================

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from models.matrix import IntMatrix
from models.presentation import GroupHom, Presentation
from models.word import Word


# -----------------------------------------------------------------------------
# Solvers
# -----------------------------------------------------------------------------
class SymmetrizedSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: Presentation

    # All cyclic permutations of all relators and their inverses, shortlex sorted
    elements: tuple[Word, ...]


class CancellationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_piece_length: int
    min_relator_length: int

    # Exact rational "p/q"
    ratio: str

    # Keyed by the rational as "p/q"
    passes_lambda: dict[str, bool]

    # Two distinct symmetrized elements sharing the longest piece as a prefix
    witness: tuple[Word, Word] | None = None
    piece: Word = Word()

    @property
    def ratio_value(self) -> Fraction:
        return Fraction(self.ratio)

    def passes(self, lam: Fraction | str) -> bool:
        return self.passes_lambda[str(Fraction(lam))]


class Verdict(str, Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"
    NONTRIVIAL_WITHIN_BUDGET = "nontrivial-within-budget"
    UNKNOWN = "unknown"


class BruteForceResult(BaseModel):
    verdict: Verdict
    steps: int

    # Set when the exponent-sum check alone proved the word nontrivial
    abelian_witness: bool = False


class AreaStatus(str, Enum):
    EXACT = "exact"
    AT_LEAST = "at-least"
    EXCEEDED_BUDGET = "exceeded-budget"


class AreaBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_area: int = 16
    max_intermediate_length: int = 16
    max_nodes: int = 200_000


class AreaResult(BaseModel):
    status: AreaStatus
    value: int
    budget: AreaBudget

    # True when some successor was dropped for exceeding the length cap
    length_cap_bound: bool = False
    nodes_expanded: int = 0


class DehnValue(BaseModel):
    n: int
    value: int
    status: AreaStatus

    # Longest-area witness at this length
    witness: Word | None = None


# -----------------------------------------------------------------------------
# Constructions
# -----------------------------------------------------------------------------
class CosetTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_cosets: int

    # action[2*g] is the action of generator g, action[2*g+1] of its inverse
    action: tuple[tuple[int, ...], ...]
    subgroup_gens: tuple[Word, ...] = ()

    def act(self, coset: int, code: int) -> int:
        column = 2 * (abs(code) - 1) + (0 if code > 0 else 1)
        return self.action[column][coset]

    def act_word(self, coset: int, word: Word | tuple[int, ...]) -> int:
        codes = word.codes if isinstance(word, Word) else word
        for code in codes:
            coset = self.act(coset, code)
        return coset


class CosetEnumeration(BaseModel):
    """Outcome of Todd-Coxeter: a table, or an explicit "not determined"."""

    completed: bool
    max_cosets: int
    cosets_defined: int
    table: CosetTable | None = None

    @property
    def index(self) -> int | None:
        return self.table.n_cosets if self.table else None


class PaddingParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    block_count: int

    # Starting a2-exponent of each padding word, in relator order
    offsets: tuple[int, ...]


class RipsOutput(BaseModel):
    gamma: Presentation
    p: GroupHom
    kernel_gens: tuple[Word, Word]
    padding_params: PaddingParams
    certification: CancellationReport


class FibreData(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: GroupHom
    kernel_gens: tuple[Word, ...]

    # Generators of Γ×Γ: "(x,1)" for every x, then "(1,x)"
    pair_alphabet: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _default_pair_alphabet(self) -> "FibreData":
        if not self.pair_alphabet:
            alphabet = self.p.source.alphabet
            pairs = tuple(f"({x},1)" for x in alphabet) + tuple(f"(1,{x})" for x in alphabet)
            object.__setattr__(self, "pair_alphabet", pairs)
        return self


class WreathElement(BaseModel):
    model_config = ConfigDict(frozen=True)

    # top[c] is the image of index c
    top: tuple[int, ...]
    bottom: tuple[Word, ...] | tuple[IntMatrix, ...]

    @model_validator(mode="after")
    def _bijection(self) -> "WreathElement":
        if sorted(self.top) != list(range(len(self.top))):
            raise ValueError("top is not a permutation")
        if len(self.bottom) != len(self.top):
            raise ValueError("bottom length must equal the size of the index set")
        return self
