"""Complex trigonometric integrals and the closed-form Lorentzian sine transform.

The sine and cosine integrals follow the Abramowitz & Stegun definitions::

    Si(z) = int_0^z sin(s)/s ds
    Ci(z) = gamma + log z + int_0^z (cos(s) - 1)/s ds      (|arg z| < pi)

Two evaluation routes are used. Near the imaginary axis, or for small
``|z|``, the Maclaurin series is well conditioned (all terms have nearly the
same phase), so it is summed directly. Elsewhere Si and Ci are assembled from
the exponential integral ``E1(iz)`` and ``E1(-iz)``, with ``E1`` evaluated by
its power series for ``|z| <= 4`` and by a modified Lentz continued fraction
beyond.

Accuracy is about 1e-13 relative for ``1e-8 <= |z| <= 50``. ``|Im z|`` above
``OVERFLOW_IM`` raises :class:`OverflowError` because ``Si`` and ``Ci`` grow
like ``exp(|Im z|)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286060651209008240243
OVERFLOW_IM = 700.0

_EPS = 2.0**-53
_SERIES_RADIUS = 4.0
# series is used while |z| - |Im z| stays below this (loss of ~exp(3) ulps)
_SERIES_CONDITION = 3.0
_MAX_SERIES_TERMS = 400
_MAX_CF_TERMS = 20000


@dataclass(frozen=True)
class LorentzianParams:
    """Parameters of ``int_0^inf sin(tx) / ((x - a)^2 + b^2) dx``.

    The integrand has poles at ``a +/- ib``.
    """

    a: float
    b: float
    t: float

    def __post_init__(self):
        for name in ("a", "b", "t"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.b <= 0:
            raise DomainError(f"b must be positive, got {self.b}")
        if self.t <= 0:
            raise DomainError(f"t must be positive, got {self.t}")

    @property
    def pole(self) -> complex:
        """Upper half-plane pole ``a + ib`` of the Lorentzian."""
        return complex(self.a, self.b)


def _check_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"argument must be finite, got {z!r}")
    return z


def _on_negative_axis(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0


def _e1_series(z: complex) -> complex:
    # E1(z) = -gamma - log z - sum_{k>=1} (-z)^k / (k k!)
    total = 0j
    term = 1 + 0j
    for k in range(1, _MAX_SERIES_TERMS):
        term *= -z / k
        contrib = term / k
        total += contrib
        if abs(contrib) <= _EPS * abs(total):
            break
    else:
        raise ConvergenceError(f"E1 series did not converge at z={z!r}")
    return -EULER_GAMMA - cmath.log(z) - total


def _e1_continued_fraction(z: complex) -> complex:
    # E1(z) = exp(-z) / (z+1 - 1/(z+3 - 4/(z+5 - ...))), modified Lentz
    tiny = 1e-300
    b = z + 1
    c = 1 / tiny
    d = 1 / b
    h = d
    for i in range(1, _MAX_CF_TERMS):
        an = -float(i * i)
        b += 2
        d = an * d + b
        if d == 0:
            d = tiny
        c = b + an / c
        if c == 0:
            c = tiny
        d = 1 / d
        delta = c * d
        h *= delta
        if abs(delta - 1) <= _EPS:
            return h * cmath.exp(-z)
    raise ConvergenceError(f"E1 continued fraction did not converge at z={z!r}")


def exp_integral_e1(z: complex) -> complex:
    """Principal-branch exponential integral ``E1(z) = int_z^inf exp(-s)/s ds``.

    Raises :class:`DomainError` on the closed negative real axis (branch cut
    and the logarithmic singularity at 0).
    """
    z = _check_finite(z)
    if _on_negative_axis(z):
        raise DomainError(f"E1 is not defined on the branch cut, z={z!r}")
    r = abs(z)
    # the series is well conditioned near the negative real axis, where the
    # continued fraction converges slowly
    if r <= _SERIES_RADIUS or r + z.real <= _SERIES_CONDITION:
        return _e1_series(z)
    return _e1_continued_fraction(z)


def _si_series(z, eps=_EPS):
    # generic in the scalar type so it also runs in extended precision
    z2 = z * z
    term = z  # (-1)^k z^(2k+1) / (2k+1)!
    total = z
    for k in range(1, _MAX_SERIES_TERMS):
        term = term * -z2 / ((2 * k) * (2 * k + 1))
        contrib = term / (2 * k + 1)
        total = total + contrib
        if abs(contrib) <= eps * abs(total):
            return total
    raise ConvergenceError(f"Si series did not converge at z={z!r}")


def _cin_series(z, eps=_EPS):
    # Cin(z) = int_0^z (1 - cos s)/s ds = sum_{k>=1} (-1)^(k+1) z^(2k) / (2k (2k)!)
    z2 = z * z
    term = z * 0 + 1  # (-1)^k z^(2k) / (2k)!, k = 0
    total = z * 0
    for k in range(1, _MAX_SERIES_TERMS):
        term = term * -z2 / ((2 * k - 1) * (2 * k))
        contrib = -term / (2 * k)
        total = total + contrib
        if abs(contrib) <= eps * abs(total):
            return total
    raise ConvergenceError(f"Cin series did not converge at z={z!r}")


def _use_series(z: complex) -> bool:
    r = abs(z)
    return r <= _SERIES_RADIUS or r - abs(z.imag) <= _SERIES_CONDITION


def _check_overflow(z: complex):
    if abs(z.imag) > OVERFLOW_IM:
        raise OverflowError(f"|Im z| = {abs(z.imag)} exceeds {OVERFLOW_IM}")


def sine_integral(z: complex) -> complex:
    """Sine integral ``Si(z)``, an entire odd function."""
    z = _check_finite(z)
    _check_overflow(z)
    if z == 0:
        return 0j
    if _use_series(z):
        return _si_series(z)
    if z.real < 0:
        return -sine_integral(-z)
    # Re z > 0 here, so +-iz stay off the E1 cut
    e_plus = exp_integral_e1(1j * z)
    e_minus = exp_integral_e1(-1j * z)
    return (e_plus - e_minus) / 2j + math.pi / 2


def cosine_integral(z: complex) -> complex:
    """Cosine integral ``Ci(z)`` on the principal branch (cut along ``z <= 0``)."""
    z = _check_finite(z)
    if _on_negative_axis(z):
        raise DomainError(f"Ci is not defined on the closed negative real axis, z={z!r}")
    _check_overflow(z)
    if _use_series(z):
        return EULER_GAMMA + cmath.log(z) - _cin_series(z)
    if z.real < 0:
        # Ci(-w) = Ci(w) + i pi sign(Im(-w)) for w in the right half-plane
        return cosine_integral(-z) + math.copysign(math.pi, z.imag) * 1j
    return -(exp_integral_e1(1j * z) + exp_integral_e1(-1j * z)) / 2


def si_complement(z: complex) -> complex:
    """``pi/2 - Si(z)``.

    Note the sign: Abramowitz & Stegun write ``si(z) = Si(z) - pi/2``, which
    is the negative of this function.
    """
    return math.pi / 2 - sine_integral(z)


def _check_halfline_args(a: complex, y: float) -> complex:
    a = _check_finite(a)
    if _on_negative_axis(a):
        raise DomainError(f"a must satisfy |arg a| < pi, got {a!r}")
    if not y > 0:
        raise DomainError(f"y must be positive, got {y}")
    return a


def halfline_cosine_reference(a: complex, y: float) -> complex:
    """``int_0^inf cos(xy) / (a + x) dx`` for ``|arg a| < pi``, ``y > 0``."""
    a = _check_halfline_args(a, y)
    z = a * y
    return si_complement(z) * cmath.sin(z) - cosine_integral(z) * cmath.cos(z)


def halfline_sine_reference(a: complex, y: float) -> complex:
    """``int_0^inf sin(xy) / (a + x) dx`` for ``|arg a| < pi``, ``y > 0``."""
    a = _check_halfline_args(a, y)
    z = a * y
    return cosine_integral(z) * cmath.sin(z) + si_complement(z) * cmath.cos(z)


_LD = np.longdouble
_LD_EPS = float(np.finfo(_LD).eps)
_LD_GAMMA = _LD("0.577215664901532860606512090082402431")
_LD_HALF_PI = _LD("1.57079632679489661923132169163975144")


def _extended_si_ci(z: complex):
    """``(Si(z), Ci(z))`` summed in ``long double`` where that type is wider.

    Only used inside the well-conditioned series region. On platforms where
    ``long double`` is plain double this is the ordinary series.
    """
    ze = np.clongdouble(z)
    si_ = _si_series(ze, _LD_EPS)
    ci = _LD_GAMMA + np.log(ze) - _cin_series(ze, _LD_EPS)
    return si_, ci


def lorentzian_sine_reference(p: LorentzianParams) -> float:
    """Exact value of ``int_0^inf sin(tx) / ((x - a)^2 + b^2) dx``.

    Partial fractions split the Lorentzian into ``1/(x + c)`` terms with
    ``c = -a -/+ ib``; the two half-line sine transforms are complex
    conjugates, which leaves ``I = -Im S(-a + ib) / b`` where ``S`` is
    :func:`halfline_sine_reference`. Written out in real arithmetic, with
    ``z = (-a + ib) t``::

        b I = -Re Ci(z) cos(at) sinh(bt) + Im Ci(z) sin(at) cosh(bt)
              - Re si(z) sin(at) sinh(bt) + Im Si(z) cos(at) cosh(bt)

    with ``si = pi/2 - Si``. For moderate ``|z|`` the combination is carried
    out in ``long double`` so the result is correctly rounded on x86.
    """
    a, b, t = p.a, p.b, p.t
    z = complex(-a * t, b * t)
    _check_overflow(z)
    if _use_series(z):
        si_, ci = _extended_si_ci(z)
        at, bt = _LD(a) * _LD(t), _LD(b) * _LD(t)
        sic = _LD_HALF_PI - si_
        sa, ca, sh, ch = np.sin(at), np.cos(at), np.sinh(bt), np.cosh(bt)
        b_ = _LD(b)
    else:
        ci = cosine_integral(z)
        si_ = sine_integral(z)
        sic = math.pi / 2 - si_
        sa, ca = math.sin(a * t), math.cos(a * t)
        sh, ch = math.sinh(b * t), math.cosh(b * t)
        b_ = b
    bI = (-ci.real * ca * sh + ci.imag * sa * ch
          - sic.real * sa * sh + si_.imag * ca * ch)
    return float(bI / b_)
