"""Words, presentations, homomorphisms and their text formats."""
from presentation.graphs import complete_graph, graph_join, parse_graph, path_graph, serialize_graph
from presentation.homs import apply_hom, compose_hom, identity_hom, is_hom_certified
from presentation.parser import format_word, parse_presentation, parse_word, serialize_presentation
from presentation.words import (
    WordOp,
    commutator,
    concat,
    conjugate,
    cyclic_reduce,
    exponent_sums,
    free_reduce,
    invert,
    power,
    word_algebra,
)

__all__ = [
    "WordOp",
    "apply_hom",
    "commutator",
    "complete_graph",
    "compose_hom",
    "concat",
    "conjugate",
    "cyclic_reduce",
    "exponent_sums",
    "format_word",
    "free_reduce",
    "graph_join",
    "identity_hom",
    "invert",
    "is_hom_certified",
    "parse_graph",
    "parse_presentation",
    "parse_word",
    "path_graph",
    "power",
    "serialize_graph",
    "serialize_presentation",
    "word_algebra",
]
