"""Decision-problem reductions, parameterized by word-problem oracles."""
from reductions.conjugacy import conjugacy_reduction_query, conjugacy_rewrite, conjugation_table_from_rips
from reductions.membership import membership_query, z_kernel_membership
from reductions.modular import build_phi, gamma0_membership, kn_torsion_witness, sl2z_word, torsion_order
from reductions.oracles import choose_oracle

__all__ = [
    "build_phi",
    "choose_oracle",
    "conjugacy_reduction_query",
    "conjugacy_rewrite",
    "conjugation_table_from_rips",
    "gamma0_membership",
    "kn_torsion_witness",
    "membership_query",
    "sl2z_word",
    "torsion_order",
    "z_kernel_membership",
]
