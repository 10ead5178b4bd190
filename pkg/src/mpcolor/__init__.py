"""t-relaxed (defective) colorings of complete multi-partite graphs."""

from .bounds import BoundsReport, bounds_report, chi_1_formula, color_class_cap
from .exact import SearchBudgetExceeded, SolveOutcome, chi_t_exact, is_kt_colorable
from .gen import (gen_counterexample_even, gen_counterexample_odd, gen_random,
                  gen_tightness)
from .greedy import greedy_color_count, greedy_coloring
from .instance import (CountColoring, MultipartiteInstance, SparseSelection,
                       expand_labels, make_instance, verify_coloring)
from .sparse import beta_t, max_t_sparse, solve_lp

__all__ = [
    "BoundsReport", "CountColoring", "MultipartiteInstance", "SearchBudgetExceeded",
    "SolveOutcome", "SparseSelection", "beta_t", "bounds_report", "chi_1_formula",
    "chi_t_exact", "color_class_cap", "expand_labels", "gen_counterexample_even",
    "gen_counterexample_odd", "gen_random", "gen_tightness", "greedy_color_count",
    "greedy_coloring", "is_kt_colorable", "make_instance", "max_t_sparse", "solve_lp",
    "verify_coloring",
]
