"""Exact dimension bounds for right-angled Artin groups.

The pipeline: build a flag complex, double its vertices, evaluate the
top-degree embedding obstruction on the configuration space of unordered
disjoint simplex pairs, and turn certificates into certified intervals for
the group's action dimension.
"""

from .bounds import DimensionReport, analyze, geometric_dimension, join_lemma_bound, l2_dimension
from .complexes import (
    SimplicialComplex,
    flag_completion,
    from_maximal_simplices,
    full_subcomplex,
    is_flag,
    join,
    link,
    make_complex,
    partial_barycentric_subdivision,
    skeleton,
    star,
)
from .homology import cycle_space, mod2_betti, rational_betti, solve_coboundary
from .obstruction import (
    CycleCertificate,
    certify_nonvanishing,
    certify_vanishing,
    check_star_condition,
    covering_pair_chain,
    mesh_indicator,
    mesh_number,
    moment_curve_oracle,
)
from .octa import double_over, minus_copy, octahedralize

__all__ = [
    "DimensionReport",
    "SimplicialComplex",
    "CycleCertificate",
    "analyze",
    "certify_nonvanishing",
    "certify_vanishing",
    "check_star_condition",
    "covering_pair_chain",
    "cycle_space",
    "double_over",
    "flag_completion",
    "from_maximal_simplices",
    "full_subcomplex",
    "geometric_dimension",
    "is_flag",
    "join",
    "join_lemma_bound",
    "l2_dimension",
    "link",
    "make_complex",
    "mesh_indicator",
    "mesh_number",
    "minus_copy",
    "mod2_betti",
    "moment_curve_oracle",
    "octahedralize",
    "partial_barycentric_subdivision",
    "rational_betti",
    "skeleton",
    "solve_coboundary",
    "star",
]
