"""Word-problem and quantitative solvers."""
from solvers.area import area_estimate, dehn_function_values
from solvers.brute_force import brute_force_oracle, brute_force_trivial
from solvers.dehn import dehn_oracle, dehn_solve
from solvers.raag import raag_equal, raag_normal_form
from solvers.small_cancellation import check_small_cancellation, symmetrize
from solvers.smith import abelianization, smith_normal_form

__all__ = [
    "abelianization",
    "area_estimate",
    "brute_force_oracle",
    "brute_force_trivial",
    "check_small_cancellation",
    "dehn_function_values",
    "dehn_oracle",
    "dehn_solve",
    "raag_equal",
    "raag_normal_form",
    "smith_normal_form",
    "symmetrize",
]
