"""Exact engine for realizable oriented matroids and the cell structures of
totally nonnegative and real matroid Schubert varieties."""

from .homology import (
    SimplicialComplex,
    betti,
    euler_characteristic,
    euler_from_betti,
    is_ball_betti,
    sphere_betti,
)
from .linalg import (
    FeasibilityResult,
    GroundSetSizeError,
    Subspace,
    kernel_basis,
    parse_matrix_text,
    project_subspace,
    reorient_subspace,
    sign_feasible,
    vanish_solve,
)
from .om import (
    Flat,
    OrientedMatroid,
    check_axioms,
    contract,
    covector_poset,
    flats_and_ranks,
    from_subspace,
    is_acyclic_flat,
    relabel_into,
    reorient,
    restrict,
)
from .posets import (
    GradedPoset,
    Interval,
    interval_poset,
    is_lattice,
    is_thin,
    order_complex,
    poset_from_order,
    to_dot,
)
from .real_variety import (
    TopeChart,
    TripleCell,
    chart_covering_report,
    chart_overlap_report,
    chart_regularity_report,
    chart_tope_of_triple,
    relatively_acyclic_flats,
    same_chart_cell,
    tnn_embedding_report,
    tope_chart,
    tope_charts,
    triple_cells,
    triple_of_chart_cell,
    yv_betti,
    yv_complex,
)
from .sign_vectors import SignVector, compose, perturbation_step, sign_of
from .tnn import (
    CellComplexPoset,
    TnnCell,
    boundary_pairing_check,
    cell_complex_from_lattice,
    cell_regularity_report,
    closure_nesting_report,
    find_shelling,
    las_vergnas_lattice,
    minor_correspondence_check,
    regularity_report,
    satisfies_property_s,
    tnn_cell_poset,
    verify_shelling,
    verify_strata_oracle,
)
from .util import CheckRecord, Report

__all__ = [
    "CellComplexPoset",
    "CheckRecord",
    "FeasibilityResult",
    "Flat",
    "GradedPoset",
    "GroundSetSizeError",
    "Interval",
    "OrientedMatroid",
    "Report",
    "SignVector",
    "SimplicialComplex",
    "Subspace",
    "TnnCell",
    "TopeChart",
    "TripleCell",
    "betti",
    "boundary_pairing_check",
    "cell_complex_from_lattice",
    "cell_regularity_report",
    "chart_covering_report",
    "chart_overlap_report",
    "chart_regularity_report",
    "chart_tope_of_triple",
    "check_axioms",
    "closure_nesting_report",
    "covector_poset",
    "compose",
    "contract",
    "euler_characteristic",
    "euler_from_betti",
    "find_shelling",
    "flats_and_ranks",
    "from_subspace",
    "interval_poset",
    "is_acyclic_flat",
    "is_ball_betti",
    "is_lattice",
    "is_thin",
    "kernel_basis",
    "las_vergnas_lattice",
    "minor_correspondence_check",
    "order_complex",
    "parse_matrix_text",
    "perturbation_step",
    "poset_from_order",
    "project_subspace",
    "regularity_report",
    "relabel_into",
    "relatively_acyclic_flats",
    "reorient",
    "reorient_subspace",
    "restrict",
    "same_chart_cell",
    "satisfies_property_s",
    "sign_feasible",
    "sign_of",
    "sphere_betti",
    "tnn_cell_poset",
    "tnn_embedding_report",
    "to_dot",
    "tope_chart",
    "tope_charts",
    "triple_cells",
    "triple_of_chart_cell",
    "vanish_solve",
    "verify_shelling",
    "verify_strata_oracle",
    "yv_betti",
    "yv_complex",
]
