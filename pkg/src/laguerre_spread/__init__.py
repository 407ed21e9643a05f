"""Spreading measures of the Rakhmanov densities of Laguerre polynomials.

Standard deviation, Fisher length, Renyi lengths (two exact finite-sum
engines) and Shannon length (quadrature, asymptotics and variational
upper bounds) of the Rakhmanov density x^a e^-x p_n(x)^2.
"""

from .laguerre_core import (CoefficientVector, PolySpec, RakhmanovDensity, coefficients,
                            density, evaluate_orthonormal, roots)
from .moments import (fisher_information, fisher_length, log_moment, moment,
                      standard_deviation)
from .renyi import RenyiResult, TermBudgetExceeded
from .renyi_algebraic import (closed_form_n0, closed_form_n1, entropic_moment_algebraic,
                              lauricella_theta0, renyi_length_algebraic)
from .renyi_bell import (bell_polynomial, entropic_moment_bell, onicescu_information,
                         polynomial_power_coefficients, renyi_length_bell)
from .shannon import (BoundResult, ShannonReport, entropy_E, entropy_J, optimize_bound,
                      shannon_asymptotic, shannon_bound, shannon_length)

__all__ = [
    "BoundResult", "CoefficientVector", "PolySpec", "RakhmanovDensity", "RenyiResult",
    "ShannonReport", "TermBudgetExceeded", "bell_polynomial", "closed_form_n0",
    "closed_form_n1", "coefficients", "density", "entropic_moment_algebraic",
    "entropic_moment_bell", "entropy_E", "entropy_J", "evaluate_orthonormal",
    "fisher_information", "fisher_length", "lauricella_theta0", "log_moment", "moment",
    "onicescu_information", "optimize_bound", "polynomial_power_coefficients",
    "renyi_length_algebraic", "renyi_length_bell", "roots", "shannon_asymptotic",
    "shannon_bound", "shannon_length", "standard_deviation",
]
