"""
Right-angled Artin groups from graphs: one generator per vertex and one
commutator relator per edge.
"""
from models.presentation import Graph, Presentation
from models.word import Word
from presentation.words import commutator


def raag_alphabet(n: int) -> tuple[str, ...]:
    return tuple(f"v{i + 1}" for i in range(n))


def build_raag(g: Graph, name: str | None = None) -> Presentation:
    """A(g) = <v1..vn | [vi, vj] for every edge (i, j)>, relators in sorted edge order."""
    relators = tuple(commutator(Word.generator(i), Word.generator(j)) for i, j in g.edges)
    return Presentation(name=name or f"A{g.n}", alphabet=raag_alphabet(g.n), relators=relators)
