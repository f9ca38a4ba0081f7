"""Exact finite-field engine for componentwise (Schur) products of linear
codes: product bounds, stabilizer decompositions, Reed-Solomon recognition,
and PMDS pair classification with verifiable certificates."""

from . import backend
from .classify import (
    BoundReport,
    CaseDimOne,
    CaseDual,
    CaseRS,
    DualBlock,
    PmdsCertificate,
    classify_pmds,
    is_pmds,
    kneser_check,
    make_dual_pair,
    make_selfdual,
    product_of,
    psb_check,
    singleton_check,
    verify_certificate,
)
from .code import DEFAULT_BUDGET, LinearCode
from .gf import GF, FieldElement, ProjPoint, all_points, proj_points
from .linalg import MatrixGF, kernel, rank, row_space_intersect, rref, solve
from .rs import (
    RsCertificate,
    diagonal_equivalence,
    extend_evaluation,
    recover_common_evaluation,
    recover_rs,
    recover_with_line,
    rs_code,
    rs_square_test,
    vandermonde,
)
from .stab import (
    AlgebraBasis,
    ProjectorDecomposition,
    RefinedSingletonReport,
    decompose,
    projector_basis,
    singleton_refined_check,
    stabilizer,
)

__version__ = "0.1.0"
