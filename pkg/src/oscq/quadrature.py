"""Trapezoidal and midpoint rules for Fourier sine and cosine transforms.

After the change of variable ``x = (m/t) phi(u)`` the sine transform becomes

    int_0^inf f(x) sin(tx) dx = int_{-inf}^{inf} F_m(u) du,
    F_m(u) = f((m/t) phi(u)) sin(m phi(u)) (m/t) phi'(u),

which is approximated with stepsize ``h = pi/m`` by

    T_{n,m} = (pi/m) sum_{k=-n}^{n} F_m(k pi/m).

The nodes satisfy ``m u_k = k pi``, so for large ``u_k`` the factor
``sin(m phi(u_k))`` equals ``(-1)^k sin(m (phi(u_k) - u_k))``, which goes to
zero like ``phi(u) - u``. Evaluating it in that form keeps the decay intact;
``sin(m phi(u))`` computed directly would only be as small as the rounding
error in ``m phi(u)``.

For the cosine transform the midpoint nodes ``(k + 1/2) pi/m`` play the same
role, with ``cos(m phi)`` in place of ``sin(m phi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .integrands import IntegrandSpec
from .maps import SingleExponentialMap, TransformMap

__all__ = [
    "QuadratureParams",
    "transformed_integrand",
    "node_values",
    "sine_transform",
    "cosine_transform",
    "choose_m",
    "truncation_bound",
    "default_n",
    "compensated_sum",
]


_PHI_FLOOR = 1e-280


def default_n(m: float) -> int:
    """Truncation index ``ceil(4 m^2)``, enough to reach machine precision."""
    if not m > 0:
        raise DomainError(f"m must be positive, got {m}")
    return math.ceil(4 * m * m - 1e-9)


@dataclass(frozen=True)
class QuadratureParams:
    """Rule parameter ``m`` (stepsize ``pi/m``), truncation ``n`` and frequency ``t``."""

    m: float
    n: int
    t: float = 1.0

    def __post_init__(self):
        if not (self.m > 0 and math.isfinite(self.m)):
            raise DomainError(f"m must be positive and finite, got {self.m}")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n}")
        if not (self.t > 0 and math.isfinite(self.t)):
            raise DomainError(f"t must be positive and finite, got {self.t}")

    @property
    def h(self) -> float:
        return math.pi / self.m

    @classmethod
    def with_default_n(cls, m: float, t: float = 1.0) -> "QuadratureParams":
        return cls(m, default_n(m), t)


def _trig_m_phi(tmap: TransformMap, m: float, u, shift=None, cosine=False):
    """``sin(m phi(u))`` (or ``cos``) with the exact-node reduction for ``u > 0``.

    ``shift`` holds the node phase ``m u / pi`` when it is known to be an
    integer (trapezoid) or half-integer (midpoint); otherwise the general
    angle-addition form is used.
    """
    u = np.asarray(u, dtype=float)
    phi = tmap.evaluate(u)
    direct = np.cos(m * phi) if cosine else np.sin(m * phi)
    pos = u > 0
    if not np.any(pos):
        return direct, phi
    with np.errstate(invalid="ignore", over="ignore"):
        delta = m * tmap.excess(np.where(pos, u, 1.0))
    if shift is not None:
        shift = np.asarray(shift, dtype=float)
        j = np.floor(shift)
        sign = np.where(np.mod(j, 2) == 0, 1.0, -1.0)
        half = (shift - j) != 0
        # sin(j pi + delta) = sign sin(delta); sin((j + 1/2) pi + delta) = sign cos(delta)
        # cos(j pi + delta) = sign cos(delta); cos((j + 1/2) pi + delta) = -sign sin(delta)
        if cosine:
            reduced = np.where(half, -sign * np.sin(delta), sign * np.cos(delta))
        else:
            reduced = np.where(half, sign * np.cos(delta), sign * np.sin(delta))
    else:
        mu = m * u
        if cosine:
            reduced = np.cos(mu) * np.cos(delta) - np.sin(mu) * np.sin(delta)
        else:
            reduced = np.sin(mu) * np.cos(delta) + np.cos(mu) * np.sin(delta)
    return np.where(pos, reduced, direct), phi


def _assemble(spec: IntegrandSpec, tmap: TransformMap, m: float, t: float, u, trig, phi):
    u = np.asarray(u, dtype=float)
    x = (m / t) * phi
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        val = spec(x) * trig * (m / t) * tmap.derivative(u)
    # far out on the left phi and phi' are both below _PHI_FLOOR, so
    # |F_m| <= max(sup|f|, m) (m/t) phi' is negligible; 1/phi would overflow there
    return np.where(phi > _PHI_FLOOR, val, 0.0)


def transformed_integrand(spec: IntegrandSpec, tmap: TransformMap, m: float, t: float, u, cosine=False):
    """``F_m(u) = f((m/t) phi(u)) sin(m phi(u)) (m/t) phi'(u)``.

    With ``cosine=True`` the ``sin`` is replaced by ``cos``.
    """
    trig, phi = _trig_m_phi(tmap, m, u, cosine=cosine)
    return _assemble(spec, tmap, m, t, u, trig, phi)[()]


def node_values(spec: IntegrandSpec, tmap: TransformMap, params: QuadratureParams, midpoint=False):
    """``F`` at the trapezoidal nodes ``k pi/m``, ``|k| <= n``, or at the
    midpoint nodes ``(k + 1/2) pi/m``, ``-n <= k < n``."""
    m, n, t = params.m, params.n, params.t
    if midpoint:
        shift = np.arange(-n, n, dtype=float) + 0.5
    else:
        shift = np.arange(-n, n + 1, dtype=float)
    u = shift * (math.pi / m)
    trig, phi = _trig_m_phi(tmap, m, u, shift=shift, cosine=midpoint)
    return u, _assemble(spec, tmap, m, t, u, trig, phi)


def compensated_sum(values) -> float:
    """Sum in ascending order of magnitude with exact-rounding compensation."""
    values = np.asarray(values, dtype=float).ravel()
    order = np.argsort(np.abs(values), kind="stable")
    return math.fsum(values[order])


def sine_transform(spec: IntegrandSpec, tmap: TransformMap | None, params: QuadratureParams) -> float:
    """Truncated trapezoidal approximation ``T_{n,m}`` of ``int_0^inf f(x) sin(tx) dx``."""
    tmap = tmap or SingleExponentialMap()
    _, vals = node_values(spec, tmap, params)
    if not np.all(np.isfinite(vals)):
        raise DomainError(f"non-finite integrand values for {spec.label()}")
    return params.h * compensated_sum(vals)


def cosine_transform(spec: IntegrandSpec, tmap: TransformMap | None, params: QuadratureParams) -> float:
    """Truncated midpoint approximation of ``int_0^inf f(x) cos(tx) dx``."""
    if spec.name == "sinc":
        raise DomainError("the cosine transform of 1/x diverges at x = 0")
    tmap = tmap or SingleExponentialMap()
    _, vals = node_values(spec, tmap, params, midpoint=True)
    if not np.all(np.isfinite(vals)):
        raise DomainError(f"non-finite integrand values for {spec.label()}")
    return params.h * compensated_sum(vals)


def choose_m(n: int, alpha: float = math.pi) -> float:
    """``m = sqrt(n pi / alpha)``.

    Balances a discretisation error ``~ exp(-alpha m)`` against the truncation
    error ``~ exp(-n pi / m)`` of the single exponential rule.
    """
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    return math.sqrt(n * math.pi / alpha)


def truncation_bound(spec: IntegrandSpec, m: float, n: int) -> float:
    """Bound ``2 m C_f exp(-n pi / m)`` on ``|T_m - T_{n,m}|`` (single exponential map)."""
    cf = spec.bound_Cf
    if cf is None:
        raise DomainError(f"{spec.label()} has no finite bound C_f")
    if not m > 0:
        raise DomainError(f"m must be positive, got {m}")
    return 2.0 * m * cf * math.exp(-n * math.pi / m)
