"""Exact verification of Kahler-type packages on graded representation spaces.

Everything runs over the rationals; no floating point anywhere.
"""

from .combinatorics import CharVector, character_table, irreducible_character
from .kahler import (
    CheckResult,
    PackageReport,
    run_package,
    usual_grading_signature_report,
)
from .ratlin import RatMatrix, Signature, kernel_basis, rank, signature
from .snrep import (
    coinvariant_graded_character,
    graded_character,
    verify_equivariant_logconcavity,
    verify_flag_conjecture,
    verify_novak_conjecture,
    verify_strong_chain,
)
from .schur import (
    lr_coefficient,
    lr_expand,
    schur_monomial_expansion,
    verify_line_logconcavity,
    verify_pieri,
    verify_schur_nonneg,
)
from .spaces import Case, DimCaps, GradedSpace, build_space, space_dump_dict

__version__ = "0.1.0"

__all__ = [
    "CharVector",
    "CheckResult",
    "Case",
    "DimCaps",
    "GradedSpace",
    "PackageReport",
    "RatMatrix",
    "Signature",
    "build_space",
    "character_table",
    "coinvariant_graded_character",
    "graded_character",
    "irreducible_character",
    "kernel_basis",
    "lr_coefficient",
    "lr_expand",
    "rank",
    "run_package",
    "schur_monomial_expansion",
    "signature",
    "space_dump_dict",
    "usual_grading_signature_report",
    "verify_equivariant_logconcavity",
    "verify_flag_conjecture",
    "verify_line_logconcavity",
    "verify_novak_conjecture",
    "verify_pieri",
    "verify_schur_nonneg",
    "verify_strong_chain",
]
