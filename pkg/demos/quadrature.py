"""Sine and cosine transforms by the transformed trapezoid and midpoint rules.

Run with ``python demos/quadrature.py``.
"""

import math

from oscq import (
    IntegrandSpec,
    OouraMoriMap1,
    QuadratureParams,
    SingleExponentialMap,
    choose_m,
    cosine_transform,
    default_n,
    sine_transform,
)
from oscq.cli import om1_m

se = SingleExponentialMap()
spec = IntegrandSpec.lorentzian(0.0, 1.0)
exact = spec.sine_reference(1.0)
print(f"Lorentzian a=0, b=1, t=1: exact {exact:.16f}")

# a fixed rule parameter m with the default cut-off n = ceil(4 m^2)
for m in (2, 4, 6, 8):
    value = sine_transform(spec, se, QuadratureParams(m, default_n(m)))
    print(f"  m={m}  n={default_n(m):4d}  value {value:.16f}  error {abs(value - exact):.1e}")

# matching m to n makes both error sources decay together
print("matched m = sqrt(n pi / alpha), alpha = pi")
for n in (16, 36, 64, 100, 144):
    m = choose_m(n, math.pi)
    value = sine_transform(spec, se, QuadratureParams(m, n))
    print(f"  n={n:4d}  m={m:6.3f}  error {abs(value - exact):.1e}")

# cosine transforms use the midpoint rule
decay = IntegrandSpec.exp_decay(1.0)
for t in (1.0, 2.0, 5.0):
    value = cosine_transform(decay, se, QuadratureParams(10, 400, t))
    print(f"int exp(-x) cos({t:g}x) dx = {value:.15f}  exact {1 / (1 + t * t):.15f}")

# sin(x)/x: the Ooura-Mori map wants a much larger m than the SE map
sinc = IntegrandSpec.sinc()
for n in (16, 32, 64):
    e_se = abs(sine_transform(sinc, se, QuadratureParams(choose_m(n, math.pi), n)) - math.pi / 2)
    e_om = abs(sine_transform(sinc, OouraMoriMap1(), QuadratureParams(om1_m(n), n)) - math.pi / 2)
    print(f"sin(x)/x, n={n:3d}: SE error {e_se:.1e}   OM1 error {e_om:.1e}")
