"""
toruscover: torus-covering charts, quandle colorings, unknotting bounds.

The package models surface links presented as simple branched coverings of
the standard torus.  Such a link is recorded by a covering chart: a degree,
a commuting pair of boundary braids, and decoration counts.  Dihedral
quandle colorings of the underlying closed braids give a lower bound for
the unknotting number, chart shapes give an upper bound, and for the family
of spun and turned spun covering knots of cl(s1^3 s2^3 ... sn^3) the two
meet at exactly n.
"""

from .braids import (
    BraidWord,
    Permutation,
    closure_component_count,
    concat,
    exponent_sum,
    format_braid,
    free_reduce,
    infer_degree,
    invert,
    parse_braid,
    permutation,
    power,
)
from .garside import NormalForm, commute, is_trivial, left_canonical_form, words_equal
from .quandles import (
    ColoringSystem,
    Quandle,
    StateCapExceeded,
    coloring_count,
    constrained_count,
    crossing_action,
    dihedral,
    dihedral_coloring_count_fast,
    format_quandle_table,
    parse_quandle_table,
    propagate_grid,
    validate_quandle,
)
from .charts import (
    ChartValidationError,
    GluingMatrix,
    TorusCoveringChart,
    chart_from_dict,
    chart_to_dict,
    classify,
    component_count,
    is_extendable,
    load_chart,
    new_chart,
    save_chart,
    spun_chart,
    symmetry_spun_chart,
    turn,
    turned_spun_chart,
)
from .bounds import (
    BoundsReport,
    chart_coloring_count,
    coloring_lower_bound,
    constrained_count_for_pairs,
    free_edge_upper_bound,
    grid_positions,
    handle_surgery_experiment,
    phi_drop_satisfied,
    triple_twist_chain,
    unknotting_bounds,
    unknotting_table,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Permutation",
    "NormalForm",
    "parse_braid",
    "format_braid",
    "infer_degree",
    "invert",
    "concat",
    "power",
    "free_reduce",
    "permutation",
    "exponent_sum",
    "closure_component_count",
    "left_canonical_form",
    "words_equal",
    "is_trivial",
    "commute",
    "Quandle",
    "ColoringSystem",
    "StateCapExceeded",
    "dihedral",
    "validate_quandle",
    "crossing_action",
    "propagate_grid",
    "coloring_count",
    "dihedral_coloring_count_fast",
    "constrained_count",
    "parse_quandle_table",
    "format_quandle_table",
    "TorusCoveringChart",
    "ChartValidationError",
    "GluingMatrix",
    "new_chart",
    "spun_chart",
    "turned_spun_chart",
    "symmetry_spun_chart",
    "turn",
    "classify",
    "component_count",
    "is_extendable",
    "chart_to_dict",
    "chart_from_dict",
    "load_chart",
    "save_chart",
    "BoundsReport",
    "chart_coloring_count",
    "coloring_lower_bound",
    "free_edge_upper_bound",
    "unknotting_bounds",
    "grid_positions",
    "handle_surgery_experiment",
    "phi_drop_satisfied",
    "constrained_count_for_pairs",
    "triple_twist_chain",
    "unknotting_table",
]
