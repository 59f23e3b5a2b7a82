"""Generalized golden ratio: quartic branch functions, similarity sets in
2-D/3-D/triangle space, and a deterministic dataset CLI.

The central object is the positive real root of x**4 - x**2 - 2x cos(alpha) - 1,
the ratio of lengths of a golden pair of vectors at angle alpha.
"""

from .branches import (
    BranchTable,
    branch_arrays,
    branch_values,
    cosine_approximation,
    cosine_approximation_many,
    mean_ggr,
    phi1,
    phi1_many,
    phi2,
    phi3,
    phi4,
    sample_branches,
)
from .output import OutputSpec
from .quartic import (
    BranchValues,
    ClassificationError,
    RootPaths,
    RootQuartet,
    classify_many,
    classify_roots,
    reduce_angle,
    residuals_many,
    solve_golden_quartic,
    solve_many,
    track_roots,
)
from .similarity import (
    DegenerateSumError,
    SimilaritySample2D,
    SimilaritySample3D,
    SumSimilarityResult,
    direction_angle,
    golden_pair_residual,
    golden_partners_1d,
    is_golden_pair,
    proportion,
    similar_vector_2d,
    similar_vector_3d,
    similarity_set_2d,
    similarity_set_3d,
    sum_similarity_sets_2d,
)
from .triangles import (
    DegenerateParameterError,
    TriangleVec,
    UnitTriangleParams,
    similar_triangle,
    tri_angle,
    tri_inner,
    tri_norm,
    triangle_similarity_set,
    unit_triangle,
    vertex_angle,
)
from .verify import Check, VerifyReport, render_report, run_all_checks

__version__ = "0.1.0"

__all__ = [
    "BranchTable",
    "BranchValues",
    "Check",
    "ClassificationError",
    "DegenerateParameterError",
    "DegenerateSumError",
    "OutputSpec",
    "RootPaths",
    "RootQuartet",
    "SimilaritySample2D",
    "SimilaritySample3D",
    "SumSimilarityResult",
    "TriangleVec",
    "UnitTriangleParams",
    "VerifyReport",
    "branch_arrays",
    "branch_values",
    "classify_many",
    "classify_roots",
    "cosine_approximation",
    "cosine_approximation_many",
    "direction_angle",
    "golden_pair_residual",
    "golden_partners_1d",
    "is_golden_pair",
    "mean_ggr",
    "phi1",
    "phi1_many",
    "phi2",
    "phi3",
    "phi4",
    "proportion",
    "reduce_angle",
    "render_report",
    "residuals_many",
    "run_all_checks",
    "sample_branches",
    "similar_triangle",
    "similar_vector_2d",
    "similar_vector_3d",
    "similarity_set_2d",
    "similarity_set_3d",
    "solve_golden_quartic",
    "solve_many",
    "sum_similarity_sets_2d",
    "track_roots",
    "tri_angle",
    "tri_inner",
    "tri_norm",
    "triangle_similarity_set",
    "unit_triangle",
    "vertex_angle",
]
