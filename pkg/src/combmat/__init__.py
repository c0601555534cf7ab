"""Exact rational arithmetic for combined matrices A ∘ A^{-T}.

The package builds combined matrices over the rationals by two independent
routes, computes their exact spectral data (characteristic polynomial,
deflation at the guaranteed eigenvalue 1, Galois tag of the quotient),
samples seeded random elements of structured matrix groups, and runs a
replayable property-check harness over all of it.  Everything is exact:
there is no floating point anywhere in the engine.
"""

from fractions import Fraction

from .combined import (
    CombinedResult,
    combined,
    combined_matrix,
    combined_trace,
    combined_via_cofactors,
    fixed_eigenpair_check,
    orthogonal_shortcut_check,
    reversing_commutes,
    triangular_identity_check,
)
from .errors import (
    DeflationError,
    ParseError,
    SamplingError,
    ShapeError,
    SingularMatrixError,
    UnknownSuiteError,
)
from .harness import (
    REGISTRY,
    PropertyReport,
    SuiteDef,
    registry_names,
    run_suite,
)
from .matrices import (
    Matrix,
    ReversingPair,
    adjugate,
    cofactor,
    det_cofactor,
    inverse_adjugate,
    inverse_elimination,
    minor,
    reversing_pair,
)
from .rationals import (
    Rational,
    format_rational,
    parse_rational,
    rat_arith,
    rat_is_square,
)
from .samplers import (
    GROUPS,
    SampleSpec,
    cayley,
    certify,
    sample,
    transvection,
)
from .spectra import (
    GALOIS_CYCLIC_3,
    GALOIS_IDENTITY,
    GALOIS_ORDER_2,
    GALOIS_SYM_3,
    GALOIS_UNDETERMINED,
    CombinedEigen2,
    EigenReport,
    Polynomial,
    Sl2ClosedForm,
    charpoly,
    charpoly_cofactor,
    combined2_closed_form,
    deflate_at_one,
    eigen_report,
    galois_tag,
    galois_tag_order,
    matrix_function_2x2,
    rational_roots,
    sl2_closed_form,
    synthetic_divide,
)

__version__ = "0.1.0"

__all__ = [
    "CombinedEigen2",
    "CombinedResult",
    "DeflationError",
    "EigenReport",
    "Fraction",
    "GALOIS_CYCLIC_3",
    "GALOIS_IDENTITY",
    "GALOIS_ORDER_2",
    "GALOIS_SYM_3",
    "GALOIS_UNDETERMINED",
    "GROUPS",
    "Matrix",
    "ParseError",
    "Polynomial",
    "PropertyReport",
    "REGISTRY",
    "Rational",
    "ReversingPair",
    "SampleSpec",
    "SamplingError",
    "ShapeError",
    "SingularMatrixError",
    "Sl2ClosedForm",
    "SuiteDef",
    "UnknownSuiteError",
    "adjugate",
    "cayley",
    "certify",
    "charpoly",
    "charpoly_cofactor",
    "cofactor",
    "combined",
    "combined2_closed_form",
    "combined_matrix",
    "combined_trace",
    "combined_via_cofactors",
    "deflate_at_one",
    "det_cofactor",
    "eigen_report",
    "fixed_eigenpair_check",
    "format_rational",
    "galois_tag",
    "galois_tag_order",
    "inverse_adjugate",
    "inverse_elimination",
    "matrix_function_2x2",
    "minor",
    "orthogonal_shortcut_check",
    "parse_rational",
    "rat_arith",
    "rat_is_square",
    "rational_roots",
    "registry_names",
    "reversing_commutes",
    "reversing_pair",
    "run_suite",
    "sample",
    "sl2_closed_form",
    "synthetic_divide",
    "transvection",
    "triangular_identity_check",
]
