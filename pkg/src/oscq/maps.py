"""Changes of variable ``x = phi(u)`` from the real line onto ``(0, inf)``.

Every map satisfies ``phi(u) -> 0`` as ``u -> -inf`` and ``phi(u) ~ u`` as
``u -> +inf``. Three maps are provided:

* :class:`SingleExponentialMap` -- ``phi(u) = log(1 + e^u)``. The excess
  ``phi(u) - u`` decays like ``e^{-u}``.
* :class:`OouraMoriMap1` -- ``u / (1 - exp(-K sinh u))``. Double exponential.
* :class:`OouraMoriMap2` -- ``u / (1 - exp(-2u - alpha(1 - e^{-u}) - beta(e^u - 1)))``.

Besides ``evaluate`` and ``derivative`` each map exposes ``excess(u)``, the
quantity ``phi(u) - u`` computed without cancellation for ``u > 0``. The
quadrature needs it to evaluate ``sin(m phi(u))`` at nodes ``u = k pi / m``
where ``m u`` is an exact multiple of ``pi``.

Only the single exponential map has an inverse and a complex continuation.
"""

from __future__ import annotations

import cmath
import enum
import math

import numpy as np

from .exceptions import DomainError

__all__ = [
    "DecayClass",
    "MapKind",
    "TransformMap",
    "SingleExponentialMap",
    "OouraMoriMap1",
    "OouraMoriMap2",
    "make_map",
    "se_evaluate",
    "se_derivative",
    "se_second_derivative",
    "se_inverse",
    "se_evaluate_complex",
    "se_derivative_complex",
    "se_second_derivative_complex",
    "se_inverse_complex",
    "om1_evaluate",
    "om1_derivative",
    "om2_evaluate",
    "om2_derivative",
    "om2_alpha",
]


class MapKind(enum.Enum):
    SINGLE_EXP = "se"
    OOURA_MORI_1 = "om1"
    OOURA_MORI_2 = "om2"


class DecayClass(enum.Enum):
    SINGLE_EXPONENTIAL = "single"
    DOUBLE_EXPONENTIAL = "double"


# ---------------------------------------------------------------------------
# single exponential map, real argument


def se_evaluate(u):
    """``log(e^u + 1)`` without overflow for large ``u``."""
    u = np.asarray(u, dtype=float)
    out = np.where(u > 0, u + np.log1p(np.exp(-np.abs(u))), np.log1p(np.exp(np.minimum(u, 0.0))))
    return out[()]


def se_excess(u):
    """``log(e^u + 1) - u = log1p(e^{-u})``."""
    u = np.asarray(u, dtype=float)
    return np.log1p(np.exp(-u))[()]


def se_derivative(u):
    """The logistic function ``e^u / (e^u + 1)``."""
    u = np.asarray(u, dtype=float)
    with np.errstate(over="ignore"):
        return (1.0 / (1.0 + np.exp(-u)))[()]


def se_second_derivative(u):
    """``e^u / (e^u + 1)^2``, i.e. ``s (1 - s)`` for the logistic ``s``."""
    u = np.asarray(u, dtype=float)
    e = np.exp(-np.abs(u))
    return (e / (1.0 + e) ** 2)[()]


_INVERSE_SERIES_CUTOFF = 1e-4


def se_inverse(x):
    """``log(e^x - 1)`` for ``x > 0``.

    Small ``x`` uses ``log(x) + log(expm1(x)/x)``, which behaves like
    ``log(x) + x/2`` as ``x -> 0``. Large ``x`` uses ``x + log1p(-e^{-x})``.
    """
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("se_inverse requires x > 0")
    with np.errstate(divide="ignore"):
        small = np.log(x) + np.log1p((np.expm1(x) - x) / x)
        mid = np.log(np.expm1(np.minimum(x, 700.0)))
        large = x + np.log1p(-np.exp(-x))
    out = np.where(x < _INVERSE_SERIES_CUTOFF, small, np.where(x < 1.0, mid, large))
    return out[()]


# ---------------------------------------------------------------------------
# single exponential map, complex continuation

_BRANCH_TOL = 1e-12


def _clog1p(z: complex) -> complex:
    # Kahan's trick, accurate for small |z|
    w = 1 + z
    if w == 1:
        return z
    return cmath.log(w) * z / (w - 1)


def _cexpm1(z: complex) -> complex:
    x, y = z.real, z.imag
    s = math.sin(y / 2)
    return complex(math.expm1(x) * math.cos(y) - 2 * s * s, math.exp(x) * math.sin(y))


def _reduce_strip(w: complex) -> complex:
    # e^w is 2 pi i periodic; bring Im w into (-pi, pi]
    k = math.floor((w.imag + math.pi) / (2 * math.pi))
    y = w.imag - 2 * math.pi * k
    if y <= -math.pi:
        y += 2 * math.pi
    return complex(w.real, y)


def _check_branch_point(w: complex):
    wr = _reduce_strip(w)
    if abs(wr - complex(0, math.pi)) < _BRANCH_TOL or abs(wr + complex(0, math.pi)) < _BRANCH_TOL:
        raise DomainError(f"w={w!r} is within {_BRANCH_TOL} of a branch point (2k+1) i pi")


def se_evaluate_complex(w: complex) -> complex:
    """Principal branch of ``log(1 + e^w)``.

    Branch points sit at ``w = (2k+1) i pi``.
    """
    w = complex(w)
    _check_branch_point(w)
    wr = _reduce_strip(w)
    if wr.real > 0:
        # both forms are analytic on the half strip and agree on the real axis
        return wr + _clog1p(cmath.exp(-wr))
    if wr.real < -745:
        return 0j
    return _clog1p(cmath.exp(wr))


def se_derivative_complex(w: complex) -> complex:
    """``e^w / (e^w + 1)``."""
    w = complex(w)
    _check_branch_point(w)
    if w.real < 0:
        e = cmath.exp(w) if w.real > -745 else 0j
        return e / (1 + e)
    return 1 / (1 + cmath.exp(-w))


def se_second_derivative_complex(w: complex) -> complex:
    """``e^w / (e^w + 1)^2``."""
    s = se_derivative_complex(w)
    return s * (1 - s)


def se_inverse_complex(z: complex) -> complex:
    """Principal branch of ``log(e^z - 1)``.

    Raises :class:`DomainError` at the zeros ``z = 2 pi i k`` of ``e^z - 1``.
    """
    z = complex(z)
    e = _cexpm1(z) if z.real < 1 else None
    if e is not None:
        if abs(e) < _BRANCH_TOL:
            raise DomainError(f"e^z - 1 vanishes at z={z!r}")
        return cmath.log(e)
    return cmath.log(1 - cmath.exp(-z)) + z if z.real < 700 else z


# ---------------------------------------------------------------------------
# Ooura-Mori maps


_FILL_RADIUS = 1e-4
_UNDERFLOW_EXPONENT = -740.0


def _removable_series(u, c1, c2, c3):
    """Taylor data of ``u / (1 - exp(-g(u)))`` with ``g = c1 u + c2 u^2 + c3 u^3``."""
    a0 = 1.0 / c1
    a1 = (c1 * c1 - 2 * c2) / (2 * c1 * c1)
    a2 = (c1**4 - 12 * c1 * c3 + 12 * c2 * c2) / (12 * c1**3)
    return a0 + u * (a1 + u * a2), a1 + 2 * a2 * u


def _om_form(u, g, dg, coeffs):
    """``u / (1 - exp(-g))``, its derivative and its excess over ``u``."""
    u = np.asarray(u, dtype=float)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore", under="ignore"):
        gv = g(u)
        dgv = dg(u)
        pos = gv >= 0
        # g >= 0: D = 1 - e^{-g}
        em = np.exp(-np.where(pos, gv, 0.0))
        D = -np.expm1(-np.where(pos, gv, 0.0))
        val_pos = u / D
        # em == 0 once g overflows, and then dg may be inf as well
        der_pos = 1.0 / D - np.where(em > 0, u * dgv * em / D**2, 0.0)
        exc_pos = u * em / D
        # g < 0: phi = u E / expm1(g) with E = e^{g}
        gn = np.where(pos, -1.0, gv)
        E = np.exp(gn)
        Dn = np.expm1(gn)
        val_neg = u * E / Dn
        der_neg = E / Dn - u * dgv * E / Dn**2
        under = gv < _UNDERFLOW_EXPONENT
        val = np.where(pos, val_pos, np.where(under, 0.0, val_neg))
        der = np.where(pos, der_pos, np.where(under, 0.0, der_neg))
        exc = np.where(pos, exc_pos, val - u)
        small = np.abs(u) < _FILL_RADIUS
        if np.any(small):
            sv, sd = _removable_series(u, *coeffs)
            val = np.where(small, sv, val)
            der = np.where(small, sd, der)
            exc = np.where(small, sv - u, exc)
    return val[()], der[()], exc[()]


def om2_alpha(M: float, beta: float = 0.25) -> float:
    """``beta / sqrt(1 + M log(1 + M) / (2 pi))``."""
    if not M > 0:
        raise DomainError(f"M must be positive, got {M}")
    return beta / math.sqrt(1 + M * math.log1p(M) / (2 * math.pi))


def _om1_parts(u, K):
    if not K > 0:
        raise DomainError(f"K must be positive, got {K}")
    return _om_form(
        u,
        lambda v: K * np.sinh(v),
        lambda v: K * np.cosh(v),
        (K, 0.0, K / 6.0),
    )


def _om2_parts(u, alpha, beta):
    return _om_form(
        u,
        lambda v: 2 * v + alpha * (-np.expm1(-v)) + beta * np.expm1(v),
        lambda v: 2 + alpha * np.exp(-v) + beta * np.exp(v),
        (2 + alpha + beta, (beta - alpha) / 2, (alpha + beta) / 6),
    )


def om1_evaluate(u, K: float = 2 * math.pi):
    """``u / (1 - exp(-K sinh u))``, equal to ``1/K`` at ``u = 0``."""
    return _om1_parts(u, K)[0]


def om1_derivative(u, K: float = 2 * math.pi):
    return _om1_parts(u, K)[1]


def om2_evaluate(u, M: float, beta: float = 0.25):
    """Second Ooura-Mori map with ``alpha = om2_alpha(M, beta)``."""
    return _om2_parts(u, om2_alpha(M, beta), beta)[0]


def om2_derivative(u, M: float, beta: float = 0.25):
    return _om2_parts(u, om2_alpha(M, beta), beta)[1]


# ---------------------------------------------------------------------------
# uniform interface


class TransformMap:
    """A change of variable ``phi`` with ``phi(-inf) = 0`` and ``phi(u) ~ u``."""

    kind: MapKind
    decay_class: DecayClass
    has_inverse = False

    def evaluate(self, u):
        raise NotImplementedError

    def derivative(self, u):
        raise NotImplementedError

    def excess(self, u):
        """``phi(u) - u``, accurate for ``u > 0``."""
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError(f"{type(self).__name__} has no closed-form inverse")

    @property
    def params(self) -> dict:
        return {}

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.params.items())
        return f"{type(self).__name__}({args})"


class SingleExponentialMap(TransformMap):
    kind = MapKind.SINGLE_EXP
    decay_class = DecayClass.SINGLE_EXPONENTIAL
    has_inverse = True

    def evaluate(self, u):
        return se_evaluate(u)

    def derivative(self, u):
        return se_derivative(u)

    def second_derivative(self, u):
        return se_second_derivative(u)

    def excess(self, u):
        return se_excess(u)

    def inverse(self, x):
        return se_inverse(x)

    def evaluate_complex(self, w):
        return se_evaluate_complex(w)

    def derivative_complex(self, w):
        return se_derivative_complex(w)

    def second_derivative_complex(self, w):
        return se_second_derivative_complex(w)

    def inverse_complex(self, z):
        return se_inverse_complex(z)


class OouraMoriMap1(TransformMap):
    kind = MapKind.OOURA_MORI_1
    decay_class = DecayClass.DOUBLE_EXPONENTIAL

    def __init__(self, K: float = 2 * math.pi):
        if not K > 0:
            raise DomainError(f"K must be positive, got {K}")
        self.K = float(K)

    @property
    def params(self):
        return {"K": self.K}

    def evaluate(self, u):
        return _om1_parts(u, self.K)[0]

    def derivative(self, u):
        return _om1_parts(u, self.K)[1]

    def excess(self, u):
        return _om1_parts(u, self.K)[2]


class OouraMoriMap2(TransformMap):
    kind = MapKind.OOURA_MORI_2
    decay_class = DecayClass.DOUBLE_EXPONENTIAL

    def __init__(self, M: float, beta: float = 0.25):
        self.M = float(M)
        self.beta = float(beta)
        self.alpha = om2_alpha(self.M, self.beta)

    @property
    def params(self):
        return {"M": self.M, "beta": self.beta}

    def evaluate(self, u):
        return _om2_parts(u, self.alpha, self.beta)[0]

    def derivative(self, u):
        return _om2_parts(u, self.alpha, self.beta)[1]

    def excess(self, u):
        return _om2_parts(u, self.alpha, self.beta)[2]


def make_map(name: str, m: float | None = None, **params) -> TransformMap:
    """Build a map from its short name ``se``, ``om1`` or ``om2``.

    ``om2`` needs its parameter ``M``; when not given it defaults to the
    quadrature parameter ``m``.
    """
    name = name.lower()
    if name == "se":
        return SingleExponentialMap()
    if name == "om1":
        return OouraMoriMap1(**params)
    if name == "om2":
        if "M" not in params:
            if m is None:
                raise DomainError("om2 needs M (or the quadrature parameter m)")
            params["M"] = m
        return OouraMoriMap2(**params)
    raise DomainError(f"unknown map {name!r}; expected se, om1 or om2")
