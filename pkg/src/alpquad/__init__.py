"""Alternative Legendre polynomials on [0, 1] with exact verification and quadrature.

The order-n family {P_nk, k = n..0} comes from Gram-Schmidt applied to the
monomials in decreasing power order, so P_nk keeps the x^k behaviour near
zero that ordinary orthogonal polynomials lose. The package provides exact
integer coefficients through five independent construction routes, stable
floating-point evaluation, the full set of recurrence, differentiation and
differential-equation identities as exactly checkable operations, the
Jacobi-connected auxiliary sequence, and the Gauss-type quadrature the
family generates (exact precisely for monomial degrees 2k-1 through 2n).

An exact-rational verification suite certifies every identity and
documents three misprinted constants found in published formulas for this
family; see ``alpquad.verify``.
"""

from .exactpoly import Polynomial, inner_product
from .family import (
    CORRECTED,
    PUBLISHED,
    AlpFamily,
    RecurrenceCoefficients,
    alp_coefficients,
    alp_coefficients_hypergeometric,
    alp_coefficients_jacobi,
    alp_coefficients_rodrigues,
    alp_derivative_eval,
    alp_eval,
    alp_eval_exact,
    alp_eval_recurrence,
    aux_coefficients,
    aux_eval,
    family,
    ode_residual,
    reciprocity_transform,
    recurrence_coefficients,
)
from .jacobi import (
    binomial_general,
    jacobi_eval,
    jacobi_shifted_coefficients,
    pochhammer,
)
from .quadrature import (
    QuadratureRule,
    RootFindingError,
    build_rule,
    exactness_report,
    expand_in_alp,
    integrate,
    nodes,
    rule_to_csv,
    rule_to_json,
    weights,
)
from .verify import (
    IdentityReport,
    expected_to_pass,
    fit_lowering_coefficients,
    report_from_json,
    reports_to_json_lines,
    suite_passes,
    verify_aux_orthogonality,
    verify_identity_suite,
    verify_orthogonality,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "inner_product",
    "CORRECTED",
    "PUBLISHED",
    "AlpFamily",
    "RecurrenceCoefficients",
    "alp_coefficients",
    "alp_coefficients_hypergeometric",
    "alp_coefficients_jacobi",
    "alp_coefficients_rodrigues",
    "alp_derivative_eval",
    "alp_eval",
    "alp_eval_exact",
    "alp_eval_recurrence",
    "aux_coefficients",
    "aux_eval",
    "family",
    "ode_residual",
    "reciprocity_transform",
    "recurrence_coefficients",
    "binomial_general",
    "jacobi_eval",
    "jacobi_shifted_coefficients",
    "pochhammer",
    "QuadratureRule",
    "RootFindingError",
    "build_rule",
    "exactness_report",
    "expand_in_alp",
    "integrate",
    "nodes",
    "rule_to_csv",
    "rule_to_json",
    "weights",
    "IdentityReport",
    "expected_to_pass",
    "fit_lowering_coefficients",
    "report_from_json",
    "reports_to_json_lines",
    "suite_passes",
    "verify_aux_orthogonality",
    "verify_identity_suite",
    "verify_orthogonality",
    "__version__",
]
