"""Numerical certification of sharp bounds on the second Hankel determinant
of logarithmic coefficients for five close-to-convex function classes."""
from .bounds import eta_root, theoretical_bound
from .caratheodory import (
    CaratheodoryCoeffs,
    RationalWitness,
    SchurParams,
    expand_p,
    positivity_scan,
    rational_from_schur,
    schur_to_coeffs,
)
from .classes import ClassFunction, GeometricClass, build_from_p, closed_form_a234, extremal_witness
from .functionals import (
    CaseCoefficients,
    LogCoeffVector,
    case_coefficients,
    envelope_value,
    fekete_szego,
    gamma_closed_form,
    h21_log,
    h21_log_from_a,
    log_coeffs,
    zeta_form_value,
)
from .series import TruncatedSeries
from .verifier import (
    BoundReport,
    SearchConfig,
    Status,
    consistency_suite,
    envelope_check,
    full_report,
    search_max,
    verify_class,
    verify_extremal,
)
from .ykm import YOutcome, r_closed, y_closed, y_oracle

__version__ = "0.1.0"
