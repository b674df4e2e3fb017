"""Special affine differential invariants of space curves.

Computes the special affine arc length and the curvature pair (chi1, chi2)
of sampled space curves, decides special affine equivalence, reconstructs
curves from their natural equations, and synthesizes the canonical
constant-curvature curves.
"""

from ._core import (
    AffcurveError,
    AffineSignature,
    DegenerateCurveError,
    EquivalenceReport,
    SampledCurve,
    SpecialAffineMap,
    apply,
    classify_case,
    compose,
    generate_canonical,
    invert,
    random_map,
    read_curve_csv,
    reconstruct_curve,
    signature,
    verify_equivalence,
    write_curve_csv,
)

__all__ = [
    "AffcurveError",
    "AffineSignature",
    "DegenerateCurveError",
    "EquivalenceReport",
    "SampledCurve",
    "SpecialAffineMap",
    "apply",
    "classify_case",
    "compose",
    "generate_canonical",
    "invert",
    "random_map",
    "read_curve_csv",
    "reconstruct_curve",
    "signature",
    "verify_equivalence",
    "write_curve_csv",
]

__version__ = "0.1.0"
