# =============================================================================
# models/presentation.py
# =============================================================================
# Purpose:
# Finite presentations, homomorphisms between them, and the simple graphs
# that encode right-angled Artin groups.
#
# All three models are frozen: they hash, so solvers can cache per
# presentation, and they are safe to share between threads.
# =============================================================================

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from models.word import Word


# -----------------------------------------------------------------------------
# Presentation: <alphabet | relators>
# -----------------------------------------------------------------------------
class Presentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = "G"

    # Declaration order is the order used by every shortlex comparison
    alphabet: tuple[str, ...]

    # Freely and cyclically reduced, nonempty
    relators: tuple[Word, ...] = ()

    @field_validator("alphabet")
    @classmethod
    def _distinct_symbols(cls, alphabet: tuple[str, ...]) -> tuple[str, ...]:
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("generator symbols must be pairwise distinct")
        return alphabet

    @model_validator(mode="after")
    def _check_relators(self) -> "Presentation":
        for relator in self.relators:
            if relator.is_identity():
                raise ValueError("relators must be nonempty")
            if relator.max_generator() >= len(self.alphabet):
                raise ValueError("relator uses a generator outside the alphabet")
            first, last = relator.letters[0], relator.letters[-1]
            if len(relator) > 1 and first.generator == last.generator and first.sign == -last.sign:
                raise ValueError("relators must be cyclically reduced")
        return self

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    def index_of(self, symbol: str) -> int:
        return self.alphabet.index(symbol)


# -----------------------------------------------------------------------------
# GroupHom: one image word (over target) per source generator
# -----------------------------------------------------------------------------
class GroupHom(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: Presentation
    target: Presentation
    images: tuple[Word, ...]

    @model_validator(mode="after")
    def _one_image_per_generator(self) -> "GroupHom":
        if len(self.images) != self.source.rank:
            raise ValueError(
                f"expected {self.source.rank} images, got {len(self.images)}"
            )
        for image in self.images:
            if image.max_generator() >= self.target.rank:
                raise ValueError("image word uses a generator outside the target alphabet")
        return self


# -----------------------------------------------------------------------------
# Graph: simple undirected graph on vertices 0..n-1
# -----------------------------------------------------------------------------
class Graph(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int

    # Stored as sorted (i, j) pairs with i < j
    edges: tuple[tuple[int, int], ...] = ()

    @field_validator("n")
    @classmethod
    def _non_negative(cls, n: int) -> int:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        return n

    @model_validator(mode="before")
    @classmethod
    def _normalize_edges(cls, data):
        if isinstance(data, dict) and "edges" in data:
            pairs = set()
            for i, j in data["edges"]:
                if i == j:
                    raise ValueError(f"loop at vertex {i}")
                pair = (min(i, j), max(i, j))
                if pair in pairs:
                    raise ValueError(f"duplicate edge {pair}")
                pairs.add(pair)
            data = {**data, "edges": tuple(sorted(pairs))}
        return data

    @model_validator(mode="after")
    def _edges_in_range(self) -> "Graph":
        for i, j in self.edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) outside [0, {self.n})")
        return self

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def adjacency(self) -> list[set[int]]:
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            neighbours[i].add(j)
            neighbours[j].add(i)
        return neighbours
