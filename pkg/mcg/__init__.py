"""Homology-level model of mapping class groups."""
from mcg.block import block_wreath_embed
from mcg.genus import genus_sequence, wreath_genus, wreath_genus_stepwise
from mcg.representation import check_relations, raag_symplectic_rep
from mcg.symplectic import (
    curve_system_from_graph,
    direct_sum_form,
    is_symplectic,
    pairing,
    symplectic_form,
    transvection,
)

__all__ = [
    "block_wreath_embed",
    "check_relations",
    "curve_system_from_graph",
    "direct_sum_form",
    "genus_sequence",
    "is_symplectic",
    "pairing",
    "raag_symplectic_rep",
    "symplectic_form",
    "transvection",
    "wreath_genus",
    "wreath_genus_stepwise",
]
