"""Pole and saddle-point decomposition of the discretisation error.

For the Lorentzian model problem ``f(x) = 1/((x - a)^2 + b^2)`` the error of
the (untruncated) trapezoidal rule after the single exponential change of
variable is written as a contour integral against the kernel ratio

    Psi_h(w) / Phi_h(w) = -pi e^{i pi w/h} / sin(pi w/h) = -pi (cot(m w) + i)

(``h = pi/m``, ``Im w > 0``). Deforming the contour upward picks up the
residues of ``F_m`` at the pole ``w0`` and its conjugate, which gives the
pole term ``R_m``; what remains is an integral along a contour through the
saddle point ``w1`` of

    p(w) = log(-pi (cot(m w) + i) sin(m phi(w))),

estimated by steepest descent as ``S_m``.

Pole conventions
----------------
The pole solves ``m phi(w0) = (a + ib) t``, so ``w0 = log(e^z - 1)`` with
``z = (a + ib) t / m``. For ``z -> 0`` this behaves like ``log z + z/2``.
:func:`decompose_error` evaluates ``R_m`` at that two-term asymptotic pole by
default, which is the convention that reproduces the published error table;
the value at the exact pole is recorded alongside.

Saddle conventions
------------------
For large ``Im w`` the kernel behaves like ``e^{2imw}`` and ``sin(m phi)``
like ``e^{-i m phi}``, so ``p'(w) = 0`` reduces to ``phi'(w) = 2``, whose
solution is ``w = log 2 + i pi``. That point lies on the edge of the strip
``|Im w| < pi`` where the principal branch of ``log(1 + e^w)`` lives, so the
phase is evaluated with the continuation

    phi_+(w) = i pi + log(-(1 + e^w)),

which agrees with the principal branch for ``0 < Im w < pi`` and is analytic
across ``Im w = pi`` for ``Re w > 0``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ConvergenceError, DegenerateSaddleError, DomainError
from .integrands import IntegrandSpec
from .maps import SingleExponentialMap, se_derivative_complex, se_inverse_complex
from .quadrature import QuadratureParams, sine_transform
from .special import LorentzianParams, lorentzian_sine_reference

__all__ = [
    "KernelRule",
    "DiscretisationKernels",
    "ErrorDecomposition",
    "locate_pole",
    "locate_pole_asymptotic",
    "residue_term_exact",
    "residue_term_asymptotic",
    "residue_pair",
    "saddle_phase",
    "saddle_phase_gradient",
    "saddle_phase_second",
    "saddle_hint",
    "find_saddle",
    "saddle_term",
    "decompose_error",
    "M_MAX",
]

#: largest ``m`` for which ``I - T_m`` is still above double-precision noise
M_MAX = 12.0

_NEWTON_TOL = 1e-12
_NEWTON_MAXITER = 50
_DEDUPE_TOL = 1e-8
_DEGENERATE_TOL = 1e-14


class KernelRule(enum.Enum):
    TRAPEZOIDAL = "trapezoidal"
    MIDPOINT = "midpoint"


@dataclass(frozen=True)
class DiscretisationKernels:
    """Ratio ``Psi_h / Phi_h`` of the error kernels in the upper half plane.

    Trapezoidal rule: ``-pi e^{i pi w/h} / sin(pi w/h)``.
    Midpoint rule: ``-i pi e^{i pi w/h} / cos(pi w/h)``.
    """

    rule: KernelRule = KernelRule.TRAPEZOIDAL

    def ratio(self, w: complex, h: float) -> complex:
        w = complex(w)
        if not w.imag > 0:
            raise DomainError(f"the kernel ratio is defined for Im w > 0, got {w!r}")
        x = math.pi * w / h
        if self.rule is KernelRule.TRAPEZOIDAL:
            return -math.pi * cmath.exp(1j * x) / cmath.sin(x)
        return -1j * math.pi * cmath.exp(1j * x) / cmath.cos(x)

    def cot_form(self, w: complex, h: float) -> complex:
        """The same ratio written through ``cot`` (or ``tan``) of ``pi w / h``."""
        w = complex(w)
        if not w.imag > 0:
            raise DomainError(f"the kernel ratio is defined for Im w > 0, got {w!r}")
        x = math.pi * w / h
        if self.rule is KernelRule.TRAPEZOIDAL:
            return -math.pi * (_cot(x) + 1j)
        return math.pi * (cmath.tan(x) - 1j)


# ---------------------------------------------------------------------------
# stable trigonometric pieces in the upper half plane


def _cot(x: complex) -> complex:
    # cot x = i (q + 1)/(q - 1) with q = e^{2ix}; |q| <= 1 for Im x >= 0
    if x.imag < 0:
        return _cot(x.conjugate()).conjugate()
    q = cmath.exp(2j * x)
    return 1j * (q + 1) / (q - 1)


def _csc2(x: complex) -> complex:
    # csc^2 x = -4q / (1 - q)^2
    if x.imag < 0:
        return _csc2(x.conjugate()).conjugate()
    q = cmath.exp(2j * x)
    return -4 * q / (1 - q) ** 2


def _cot_plus_i(x: complex) -> complex:
    # cot x + i = -2i q / (1 - q), no cancellation for large Im x
    q = cmath.exp(2j * x)
    return -2j * q / (1 - q)


def _phi_plus(w: complex) -> complex:
    """``log(1 + e^w)`` continued across ``Im w = pi`` from below."""
    return 1j * math.pi + cmath.log(-(1 + cmath.exp(w)))


# ---------------------------------------------------------------------------
# pole


def _pole_argument(p: LorentzianParams, m: float) -> complex:
    if not m > 0:
        raise DomainError(f"m must be positive, got {m}")
    return complex(p.a, p.b) * p.t / m


def locate_pole(p: LorentzianParams, m: float) -> complex:
    """Pole ``w0`` of ``F_m`` in the upper half plane.

    Solves ``m phi(w0) = (a + ib) t`` exactly, ``w0 = log(e^z - 1)``.

    Parameters
    ----------
    p : LorentzianParams
        Model problem.
    m : float
        Rule parameter.

    Returns
    -------
    complex
        ``w0`` with ``0 < Im w0 < pi``.
    """
    return se_inverse_complex(_pole_argument(p, m))


def locate_pole_asymptotic(p: LorentzianParams, m: float) -> complex:
    """Two-term small-``z`` approximation ``log z + z/2`` of :func:`locate_pole`."""
    z = _pole_argument(p, m)
    return cmath.log(z) + z / 2


def _residue_upper(p: LorentzianParams, m: float, w0: complex) -> complex:
    # Res_{w0} f((m/t) phi) sin(m phi) (m/t) phi' = sin((a + ib) t) / (2ib);
    # the chain-rule factor cancels against (m/t) phi'
    kernel = -math.pi * _cot_plus_i(m * w0)
    return kernel * cmath.sin(complex(p.a, p.b) * p.t) / (2j * p.b)


def residue_pair(p: LorentzianParams, m: float, w0: complex | None = None) -> complex:
    """``-Res(w0) - Res(conj w0)`` as a complex number.

    The lower half plane kernel is ``-pi (cot(m w) - i)`` and the residue of
    the Lorentzian factor at ``conj w0`` is ``sin((a - ib) t)/(-2ib)``. The
    two residues are complex conjugates, so the imaginary part of the result
    is rounding noise; tests use it to check that claim.
    """
    w0 = locate_pole(p, m) if w0 is None else complex(w0)
    upper = _residue_upper(p, m, w0)
    wl = w0.conjugate()
    q = cmath.exp(-2j * m * wl)  # cot(x) - i = 2i q/(1 - q), q = e^{-2ix}
    kernel_lower = -math.pi * (2j * q / (1 - q))
    lower = kernel_lower * cmath.sin(complex(p.a, -p.b) * p.t) / (-2j * p.b)
    return -upper - lower


def residue_term_exact(p: LorentzianParams, m: float, w0: complex | None = None) -> float:
    """Pole contribution ``R_m`` in closed real form.

    With ``w0 = u0 + i v0``::

        R_m = (pi/b) {[e^{-2 m v0} - cos(2 m u0)] sin(at) cosh(bt)
                      + sin(2 m u0) cos(at) sinh(bt)} / (cosh(2 m v0) - cos(2 m u0))

    Parameters
    ----------
    p : LorentzianParams
        Model problem.
    m : float
        Rule parameter.
    w0 : complex, optional
        Pole location. Defaults to the exact pole from :func:`locate_pole`.
    """
    w0 = locate_pole(p, m) if w0 is None else complex(w0)
    a, b, t = p.a, p.b, p.t
    u0, v0 = w0.real, w0.imag
    c2, s2 = math.cos(2 * m * u0), math.sin(2 * m * u0)
    num = ((math.exp(-2 * m * v0) - c2) * math.sin(a * t) * math.cosh(b * t)
           + s2 * math.cos(a * t) * math.sinh(b * t))
    # cosh(2 m v0) - cos(2 m u0) = 2 |sin(m w0)|^2, written without cancellation
    den = 2.0 * (math.sinh(m * v0) ** 2 + math.sin(m * u0) ** 2)
    return math.pi / b * num / den


def residue_term_asymptotic(p: LorentzianParams, m: float, w0: complex | None = None) -> float:
    """``R_m`` with ``e^{-2 m v0}`` neglected against ``cosh(2 m v0)``::

        (2 pi/b) e^{-2 m v0} [-cos(2 m u0) sin(at) cosh(bt) + sin(2 m u0) cos(at) sinh(bt)]
    """
    w0 = locate_pole(p, m) if w0 is None else complex(w0)
    a, b, t = p.a, p.b, p.t
    u0, v0 = w0.real, w0.imag
    bracket = (-math.cos(2 * m * u0) * math.sin(a * t) * math.cosh(b * t)
               + math.sin(2 * m * u0) * math.cos(a * t) * math.sinh(b * t))
    return 2 * math.pi / b * math.exp(-2 * m * v0) * bracket


# ---------------------------------------------------------------------------
# saddle point


def _check_upper(w: complex) -> complex:
    w = complex(w)
    if not w.imag > 0:
        raise DomainError(f"the saddle phase is defined for Im w > 0, got {w!r}")
    return w


def saddle_phase(m: float, w: complex) -> complex:
    """``p(w) = log(-pi (cot(m w) + i) sin(m phi(w)))``, principal logarithm."""
    w = _check_upper(w)
    value = -math.pi * _cot_plus_i(m * w) * cmath.sin(m * _phi_plus(w))
    if value == 0:
        raise DomainError(f"p(w) is singular at w={w!r}")
    return cmath.log(value)


def saddle_phase_gradient(m: float, w: complex) -> complex:
    """``p'(w) = -m (cot(m w) - i) + m phi'(w) cot(m phi(w))``."""
    w = _check_upper(w)
    q = cmath.exp(2j * m * w)
    cot_minus_i = -2j / (1 - q)
    return -m * cot_minus_i + m * se_derivative_complex(w) * _cot(m * _phi_plus(w))


def saddle_phase_second(m: float, w: complex) -> complex:
    """``p''(w) = m^2 csc^2(m w) + m phi'' cot(m phi) - m^2 phi'^2 csc^2(m phi)``."""
    w = _check_upper(w)
    s = se_derivative_complex(w)
    mphi = m * _phi_plus(w)
    return m * m * _csc2(m * w) + m * s * (1 - s) * _cot(mphi) - m * m * s * s * _csc2(mphi)


def saddle_hint() -> complex:
    """Large-``Im w`` solution ``log 2 + i pi`` of ``p'(w) = 0``."""
    return complex(math.log(2.0), math.pi)


def _newton(m: float, w: complex) -> complex | None:
    try:
        for _ in range(_NEWTON_MAXITER):
            g = saddle_phase_gradient(m, w)
            if abs(g) < _NEWTON_TOL:
                return w
            w = w - g / saddle_phase_second(m, w)
            if not (w.imag > 0 and math.isfinite(w.real) and math.isfinite(w.imag)):
                return None
        if abs(saddle_phase_gradient(m, w)) < _NEWTON_TOL:
            return w
    except (ZeroDivisionError, OverflowError, ValueError):
        return None
    return None


def find_saddle(m: float, hint: complex | None = None) -> complex:
    """Root ``w1`` of ``p'(w) = 0`` relevant to the error contour.

    Newton's method with the analytic ``p''`` is started from ``hint``
    (default :func:`saddle_hint`). If that start fails, a grid of starts over
    ``Re w`` in ``[Re hint - 2, Re hint + 2]`` (step 0.25) and ``Im w`` in
    ``[0.1, min(Im hint, pi) + 0.1]`` (step 0.2) is tried and the converged
    root closest to ``hint`` is returned.

    Roots near the real axis also satisfy ``p'(w) = 0`` but are not on the
    steepest-descent contour that produces the error, which is why the
    selection rule is proximity to the asymptotic saddle and not the
    smallest imaginary part.

    Raises
    ------
    ConvergenceError
        If no start converges to ``|p'| < 1e-12``.
    """
    if not m > 0:
        raise DomainError(f"m must be positive, got {m}")
    hint = saddle_hint() if hint is None else complex(hint)
    root = _newton(m, hint)
    if root is not None:
        return root
    roots: list[complex] = []
    for x in np.arange(hint.real - 2, hint.real + 2 + 1e-9, 0.25):
        for y in np.arange(0.1, min(hint.imag, math.pi) + 0.1 + 1e-9, 0.2):
            r = _newton(m, complex(x, y))
            if r is not None and not any(abs(r - s) < _DEDUPE_TOL for s in roots):
                roots.append(r)
    if not roots:
        raise ConvergenceError(f"no saddle point found for m={m}")
    return min(roots, key=lambda r: abs(r - hint))


def _q(p: LorentzianParams, m: float, w: complex) -> complex:
    x = m / p.t * _phi_plus(w)
    return m / p.t * se_derivative_complex(w) / ((x - p.a) ** 2 + p.b * p.b)


def saddle_term(p: LorentzianParams, m: float, w1: complex) -> float:
    """Steepest-descent estimate ``S_m`` of the remaining contour integral.

    ``S_m = 2 Re[(1/2 pi i) sqrt(2 pi/|p''|) alpha e^{p(w1)} q(w1)]`` with
    ``q(w) = f((m/t) phi(w)) (m/t) phi'(w)``. The direction ``alpha`` is the
    steepest-descent direction ``exp(i(pi/2 - arg p''/2))`` reversed, because
    the contour in the upper half plane runs from right to left.

    Raises
    ------
    DegenerateSaddleError
        If ``|p''(w1)| < 1e-14``.
    """
    w1 = complex(w1)
    pp = saddle_phase_second(m, w1)
    if abs(pp) < _DEGENERATE_TOL:
        raise DegenerateSaddleError(f"p''(w1) = {pp!r} vanishes at w1={w1!r}")
    alpha = -cmath.exp(1j * (math.pi / 2 - cmath.phase(pp) / 2))
    term = math.sqrt(2 * math.pi / abs(pp)) * alpha * cmath.exp(saddle_phase(m, w1)) * _q(p, m, w1)
    return 2 * (term / (2j * math.pi)).real


# ---------------------------------------------------------------------------
# full decomposition


@dataclass(frozen=True)
class ErrorDecomposition:
    """``I - T_m`` together with its pole and saddle contributions.

    Attributes
    ----------
    m : float
        Rule parameter.
    total : float
        ``I - T_{n,m}`` with ``n = ceil(4 m^2)``.
    pole_term : float
        ``R_m`` at the pole convention requested from :func:`decompose_error`.
    saddle_term : float or None
        ``S_m``; ``None`` when no saddle was found.
    w0 : complex
        Exact pole.
    w0_asymptotic : complex
        ``log z + z/2`` approximation of the pole.
    pole_term_exact_pole : float
        ``R_m`` evaluated at the exact pole.
    w1 : complex or None
        Saddle point.
    saddle_converged : bool
        Whether :func:`find_saddle` succeeded.
    """

    m: float
    total: float
    pole_term: float
    saddle_term: float | None
    w0: complex
    w0_asymptotic: complex
    pole_term_exact_pole: float
    w1: complex | None
    saddle_converged: bool


def decompose_error(p: LorentzianParams, m: float, pole: str = "asymptotic") -> ErrorDecomposition:
    """Compute ``I - T_m``, ``R_m`` and ``S_m`` for the Lorentzian model problem.

    Parameters
    ----------
    p : LorentzianParams
        Model problem.
    m : float
        Rule parameter in ``[1, M_MAX]``.
    pole : {"asymptotic", "exact"}
        Which pole location feeds ``pole_term``.
    """
    if not 1.0 <= m <= M_MAX:
        raise DomainError(f"m must lie in [1, {M_MAX}], got {m}")
    if pole not in ("asymptotic", "exact"):
        raise DomainError(f"pole must be 'asymptotic' or 'exact', got {pole!r}")
    spec = IntegrandSpec.lorentzian(p.a, p.b)
    approx = sine_transform(spec, SingleExponentialMap(), QuadratureParams.with_default_n(m, p.t))
    total = lorentzian_sine_reference(p) - approx

    w0 = locate_pole(p, m)
    w0a = locate_pole_asymptotic(p, m)
    r_exact = residue_term_exact(p, m, w0)
    r = residue_term_exact(p, m, w0a) if pole == "asymptotic" else r_exact

    try:
        w1 = find_saddle(m)
        s = saddle_term(p, m, w1)
        converged = True
    except (ConvergenceError, DegenerateSaddleError):
        w1, s, converged = None, None, False
    return ErrorDecomposition(m, total, r, s, w0, w0a, r_exact, w1, converged)
