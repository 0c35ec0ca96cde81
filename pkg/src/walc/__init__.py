"""Exact calculator for conformal embeddings and collapsing levels of type-A W-algebras."""

from .conformal import (
    AdmissibleForm,
    Branch,
    ConformalLevel,
    DecompositionReport,
    DecompSummand,
    Status,
    Verdict,
    admissibility,
    collapse_check,
    conformal_levels,
    decomposition,
    h_mu,
)
from .exact import Poly, Rat, RationalFn, rat, ratfn_equal, ratfn_eval, rational_roots
from .liealg import (
    DynkinGrading,
    GradedDims,
    Partition,
    casimir_sl,
    dynkin_grading,
    graded_dims,
    height_and_np,
    sugawara_h,
    x_norm,
)
from .walgebra import (
    CosetLevels,
    Family,
    FamilyParams,
    GeneratorSpec,
    RepLabel,
    RepTag,
    central_charge,
    coset_central_charge,
    coset_levels,
    strong_generators,
)

__all__ = [
    "AdmissibleForm",
    "Branch",
    "ConformalLevel",
    "CosetLevels",
    "DecompSummand",
    "DecompositionReport",
    "DynkinGrading",
    "Family",
    "FamilyParams",
    "GeneratorSpec",
    "GradedDims",
    "Partition",
    "Poly",
    "Rat",
    "RationalFn",
    "RepLabel",
    "RepTag",
    "Status",
    "Verdict",
    "admissibility",
    "casimir_sl",
    "central_charge",
    "collapse_check",
    "conformal_levels",
    "coset_central_charge",
    "coset_levels",
    "decomposition",
    "dynkin_grading",
    "graded_dims",
    "h_mu",
    "height_and_np",
    "rat",
    "ratfn_equal",
    "ratfn_eval",
    "rational_roots",
    "strong_generators",
    "sugawara_h",
    "x_norm",
]
