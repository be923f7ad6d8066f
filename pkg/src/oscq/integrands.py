"""Catalog of amplitude functions ``f`` for the half-line transforms.

    lorentzian(a, b)   f(x) = 1 / ((x - a)^2 + b^2)
    sinc               f(x) = 1 / x            (so f(x) sin(tx) is sin(tx)/x)
    expdecay(lambda)   f(x) = exp(-lambda x)

Each entry knows ``sup |f|`` on ``(0, inf)`` when it is finite, and the
closed-form sine/cosine transform where one exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError
from .special import (
    LorentzianParams,
    halfline_cosine_reference,
    lorentzian_sine_reference,
)

__all__ = ["IntegrandSpec", "parse_integrand"]

_NAMES = ("lorentzian", "sinc", "expdecay")


@dataclass(frozen=True)
class IntegrandSpec:
    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in _NAMES:
            raise DomainError(f"unknown integrand {self.name!r}; expected one of {_NAMES}")
        if self.name == "lorentzian":
            a, b = self.params.get("a"), self.params.get("b")
            if a is None or b is None:
                raise DomainError("lorentzian needs parameters a and b")
            if not b > 0:
                raise DomainError(f"lorentzian needs b > 0, got {b}")
        elif self.name == "expdecay":
            lam = self.params.get("lambda")
            if lam is None or not lam > 0:
                raise DomainError("expdecay needs lambda > 0")

    def __hash__(self):
        return hash((self.name, tuple(sorted(self.params.items()))))

    @classmethod
    def lorentzian(cls, a: float, b: float) -> "IntegrandSpec":
        return cls("lorentzian", {"a": float(a), "b": float(b)})

    @classmethod
    def sinc(cls) -> "IntegrandSpec":
        return cls("sinc", {})

    @classmethod
    def exp_decay(cls, lam: float = 1.0) -> "IntegrandSpec":
        return cls("expdecay", {"lambda": float(lam)})

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            if self.name == "lorentzian":
                a, b = self.params["a"], self.params["b"]
                return (1.0 / ((x - a) ** 2 + b * b))[()]
            if self.name == "sinc":
                return (1.0 / x)[()]
            return np.exp(-self.params["lambda"] * x)[()]

    @property
    def bound_Cf(self) -> float | None:
        """``sup |f(x)|`` over ``x > 0``, or ``None`` if ``f`` is unbounded."""
        if self.name == "lorentzian":
            a, b = self.params["a"], self.params["b"]
            return 1.0 / (b * b) if a >= 0 else 1.0 / (a * a + b * b)
        if self.name == "expdecay":
            return 1.0
        return None

    def sine_reference(self, t: float) -> float | None:
        """Exact ``int_0^inf f(x) sin(tx) dx``, or ``None`` if unknown."""
        if not t > 0:
            raise DomainError(f"t must be positive, got {t}")
        if self.name == "lorentzian":
            return lorentzian_sine_reference(LorentzianParams(self.params["a"], self.params["b"], t))
        if self.name == "sinc":
            return math.pi / 2
        lam = self.params["lambda"]
        return t / (lam * lam + t * t)

    def cosine_reference(self, t: float) -> float | None:
        """Exact ``int_0^inf f(x) cos(tx) dx``; ``None`` when it diverges."""
        if not t > 0:
            raise DomainError(f"t must be positive, got {t}")
        if self.name == "lorentzian":
            a, b = self.params["a"], self.params["b"]
            return -halfline_cosine_reference(complex(-a, b), t).imag / b
        if self.name == "sinc":
            return None
        lam = self.params["lambda"]
        return lam / (lam * lam + t * t)

    def label(self) -> str:
        if not self.params:
            return self.name
        return self.name + ":" + ",".join(f"{k}={v:g}" for k, v in self.params.items())


def parse_integrand(text: str) -> IntegrandSpec:
    """Parse ``NAME[:key=value,...]``, e.g. ``lorentzian:a=0,b=1``."""
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    params = {}
    if rest:
        for item in rest.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise DomainError(f"bad integrand parameter {item!r} in {text!r}")
            key = key.strip()
            if key == "lam":
                key = "lambda"
            try:
                params[key] = float(value)
            except ValueError:
                raise DomainError(f"parameter {key} is not a number: {value!r}") from None
    if name == "expdecay":
        params.setdefault("lambda", 1.0)
    return IntegrandSpec(name, params)
