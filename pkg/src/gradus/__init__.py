"""Exact dimension, degree and multiplicity computations for graded modules."""

from .decompose import (
    MonomialIdeal,
    degree_sum_check,
    local_length_at,
    minimal_primes,
    multiplicity_sum_check,
)
from .errors import (
    GradusError,
    GsopSearchError,
    InhomogeneousError,
    KoszulCertificationError,
    NotAGsopError,
    NotGIODError,
    NotMinimalPrimeError,
    ProblemParseError,
    RingMismatchError,
    SamuelFitError,
    UnitIdealError,
)
from .field import QQ, Field
from .grmod import (
    ModulePresentation,
    component_basis,
    cyclic_module,
    direct_sum,
    free_module,
    quotient_by_ideal,
    shift,
    total_length,
)
from .grobner import buchberger, normal_form
from .gsop import certify_algebraic_independence, find_gsop
from .koszul import build_koszul, euler_poincare_identity_check, is_regular_sequence, koszul_homology
from .ring import Polynomial, Vector, polynomial_ring
from .samuel import fit_and_multiplicity, samuel_fit, samuel_table
from .series import NEG_INF, LaurentPoly, RationalSeries, dimension_and_degree, hilbert_numerator, poincare

__all__ = [
    "QQ", "Field", "Polynomial", "Vector", "polynomial_ring",
    "buchberger", "normal_form",
    "ModulePresentation", "free_module", "cyclic_module", "shift", "direct_sum",
    "quotient_by_ideal", "component_basis", "total_length",
    "NEG_INF", "LaurentPoly", "RationalSeries", "poincare", "hilbert_numerator",
    "dimension_and_degree",
    "find_gsop", "certify_algebraic_independence",
    "samuel_table", "fit_and_multiplicity", "samuel_fit",
    "build_koszul", "koszul_homology", "is_regular_sequence", "euler_poincare_identity_check",
    "MonomialIdeal", "minimal_primes", "local_length_at", "degree_sum_check",
    "multiplicity_sum_check",
    "GradusError", "RingMismatchError", "InhomogeneousError", "NotGIODError",
    "SamuelFitError", "GsopSearchError", "NotAGsopError", "KoszulCertificationError",
    "UnitIdealError", "NotMinimalPrimeError", "ProblemParseError",
]
