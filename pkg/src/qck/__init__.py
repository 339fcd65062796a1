"""qck: exact q-series computation and mechanical identity verification.

Sparse multivariate Laurent polynomials with exact rational arithmetic,
q-Pochhammer / Gaussian-binomial combinatorics, terminating basic
hypergeometric series, q-Delannoy numbers, and verification suites for the
product formulas, bracket congruences, and coefficient-positivity claims
built on them.
"""

from .exactalg import (MultiLaurentPoly, NotDivisibleError, TermBudgetExceeded,
                       add, divrem_in_q, exact_divide, is_nonneg_integer_laurent,
                       mul, substitute)
from .qkit import (ParamExpr, QBracket, bracket, qbinomial, qpochhammer)
from .hyperg import PhiSpec, parse_phi, phi_sum, phi_term, print_phi
from .delannoy import dq, dq_star
from .report import IdentityCase, VerificationReport

__version__ = "1.0.0"

__all__ = [
    "MultiLaurentPoly", "NotDivisibleError", "TermBudgetExceeded",
    "add", "mul", "substitute", "exact_divide", "divrem_in_q",
    "is_nonneg_integer_laurent",
    "ParamExpr", "QBracket", "bracket", "qbinomial", "qpochhammer",
    "PhiSpec", "parse_phi", "print_phi", "phi_sum", "phi_term",
    "dq", "dq_star",
    "IdentityCase", "VerificationReport",
    "__version__",
]
