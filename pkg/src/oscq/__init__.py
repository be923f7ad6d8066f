"""Fourier sine and cosine transforms by the trapezoidal rule after a single
exponential change of variable, with a pole/saddle error analysis."""

__version__ = "0.1.0"

from .error_analysis import (
    DiscretisationKernels,
    ErrorDecomposition,
    KernelRule,
    decompose_error,
    find_saddle,
    locate_pole,
    locate_pole_asymptotic,
    residue_pair,
    residue_term_asymptotic,
    residue_term_exact,
    saddle_phase,
    saddle_phase_gradient,
    saddle_phase_second,
    saddle_term,
)
from .exceptions import ConvergenceError, DegenerateSaddleError, DomainError, OscqError
from .integrands import IntegrandSpec, parse_integrand
from .maps import (
    DecayClass,
    MapKind,
    OouraMoriMap1,
    OouraMoriMap2,
    SingleExponentialMap,
    TransformMap,
    make_map,
)
from .quadrature import (
    QuadratureParams,
    choose_m,
    cosine_transform,
    default_n,
    sine_transform,
    transformed_integrand,
    truncation_bound,
)
from .special import (
    LorentzianParams,
    cosine_integral,
    exp_integral_e1,
    halfline_cosine_reference,
    halfline_sine_reference,
    lorentzian_sine_reference,
    si_complement,
    sine_integral,
)

__all__ = [name for name in dir() if not name.startswith("_")]
