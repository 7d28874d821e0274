# =============================================================================
# models/surface.py
# =============================================================================
# Purpose:
# Homology-level stand-ins for surfaces and their mapping classes:
# the symplectic lattice H_1(S_g; ℤ), curve classes in it, the transvection
# matrices that represent Dehn twists, and the (genus, boundary) bookkeeping
# of compact surfaces.
# =============================================================================

from math import gcd

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from models.matrix import IntMatrix


class SymplecticSpace(BaseModel):
    model_config = ConfigDict(frozen=True)

    # Basis order is a1, b1, a2, b2, ..., ag, bg
    genus: int

    @computed_field
    @property
    def dimension(self) -> int:
        return 2 * self.genus

    def basis_labels(self) -> tuple[str, ...]:
        return tuple(label for i in range(1, self.genus + 1) for label in (f"a{i}", f"b{i}"))

    def form(self) -> IntMatrix:
        """J with <a_i, b_i> = 1, <b_i, a_i> = -1 and zero elsewhere."""
        rows = [[0] * self.dimension for _ in range(self.dimension)]
        for i in range(self.genus):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = -1
        return IntMatrix.from_rows(rows)


class CurveClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    vector: tuple[int, ...]

    @computed_field
    @property
    def primitive(self) -> bool:
        divisor = 0
        for x in self.vector:
            divisor = gcd(divisor, x)
        return divisor == 1


class TwistMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    matrix: IntMatrix

    @model_validator(mode="after")
    def _symplectic(self) -> "TwistMatrix":
        m = self.matrix
        if m.rows != m.cols or m.rows % 2:
            raise ValueError("twist matrices are square of even size")
        form = SymplecticSpace(genus=m.rows // 2).form()
        if m.transpose() @ form @ m != form:
            raise ValueError("matrix does not preserve the symplectic form")
        return self


class SurfaceSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    genus: int
    boundary: int = 0

    @model_validator(mode="after")
    def _non_negative(self) -> "SurfaceSpec":
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count are non-negative")
        return self

    @computed_field
    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary


class PairVerdict(BaseModel):
    i: int
    j: int
    edge: bool
    commute: bool

    # For non-edges: a nontrivial reduced word in the two images equal to I, if any
    relation: str | None = None
    words_checked: int = 0

    @property
    def consistent(self) -> bool:
        if self.edge:
            return self.commute
        return not self.commute and self.relation is None


class RelationReport(BaseModel):
    n: int
    twist_power: int
    word_len_cap: int
    pairs: list[PairVerdict]

    @computed_field
    @property
    def violations(self) -> int:
        return sum(1 for pair in self.pairs if not pair.consistent)


class GenusStage(BaseModel):
    stage: str
    euler_characteristic: int
    boundary: int


class SymplecticRep(BaseModel):
    """Images of the RAAG generators v1..vn as twist matrices on H_1(S_n)."""

    model_config = ConfigDict(frozen=True)

    space: SymplecticSpace
    twist_power: int
    curves: tuple[CurveClass, ...]
    images: tuple[TwistMatrix, ...]
