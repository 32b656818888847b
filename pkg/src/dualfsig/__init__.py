"""Dual F-signature of Veronese subrings, computed with exact arithmetic."""
from .exactalg import Polynomial, binomial, lex_compare
from .veronese import VeroneseContext, canonical_class, hilbert_function, min_generators
from .frobenius import (
    DecompositionMultiset,
    FrobeniusParams,
    decompose_roots,
    decompose_roots_general,
    enumerate_oracle,
    splitting_number,
)
from .determinantal import (
    BandMatrix,
    ColumnSelection,
    MinorCertificate,
    build_band_matrix,
    build_submatrix,
    determinant,
    monomial_certificate,
    surjective_in_degree,
    verify_minor_ideal,
)
from .signature import (
    SignatureReport,
    SurjectionChain,
    closed_form_prop,
    closed_form_thm,
    convergence_table,
    f_signature_estimate,
    lower_bound,
    surjection_chain,
    upper_bound,
)

__version__ = "0.1.0"
