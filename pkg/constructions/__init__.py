"""Presentation-to-presentation compilers."""
from constructions.fibre import fibre_data_from_rips, fibre_product_generators
from constructions.products import direct_product
from constructions.raag_builder import build_raag
from constructions.reidemeister_schreier import reidemeister_schreier, schreier_rewrite, transversal_words
from constructions.rips import rips
from constructions.todd_coxeter import brute_force_coset_count, finite_group_oracle, todd_coxeter
from constructions.wreath import wreath_embed, wreath_inverse, wreath_multiply

__all__ = [
    "brute_force_coset_count",
    "build_raag",
    "direct_product",
    "fibre_data_from_rips",
    "fibre_product_generators",
    "finite_group_oracle",
    "reidemeister_schreier",
    "rips",
    "schreier_rewrite",
    "todd_coxeter",
    "transversal_words",
    "wreath_embed",
    "wreath_inverse",
    "wreath_multiply",
]
