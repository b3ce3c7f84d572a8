"""n-dimensional Frenet frames, harmonic curvatures, and eikonal-helix
classification for parametric curves given as closed-form expressions."""

from .classify import (
    Classification,
    Sample,
    SampleRow,
    classify,
    classify_rows,
    constancy,
    sample_along_curve,
)
from .dsl import (
    CurveSpec,
    Expr,
    format_curve_spec,
    format_expr,
    parse_curve_spec,
    parse_expr_text,
    parse_expression,
    tokenize,
)
from .frenet import FrenetData, directional_derivative, frenet_apparatus
from .harmonic import (
    HarmonicData,
    harmonic_data,
    harmonic_normal,
    harmonic_tangent,
    lemma_residuals,
)
from .jets import (
    FieldJet,
    Jet,
    default_jet_order,
    eval_curve_jet,
    eval_expr_jet,
    eval_field_jet,
)
from .verify import (
    HelixResiduals,
    SlantResiduals,
    TheoremResiduals,
    orthogonality_checks,
    verify_all,
    verify_helix_theorems,
    verify_slant_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "CurveSpec",
    "Expr",
    "FieldJet",
    "FrenetData",
    "HarmonicData",
    "HelixResiduals",
    "Jet",
    "Sample",
    "SampleRow",
    "SlantResiduals",
    "TheoremResiduals",
    "classify",
    "classify_rows",
    "constancy",
    "default_jet_order",
    "directional_derivative",
    "eval_curve_jet",
    "eval_expr_jet",
    "eval_field_jet",
    "format_curve_spec",
    "format_expr",
    "frenet_apparatus",
    "harmonic_data",
    "harmonic_normal",
    "harmonic_tangent",
    "lemma_residuals",
    "orthogonality_checks",
    "parse_curve_spec",
    "parse_expr_text",
    "parse_expression",
    "sample_along_curve",
    "tokenize",
    "verify_all",
    "verify_helix_theorems",
    "verify_slant_theorems",
]
