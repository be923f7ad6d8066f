"""Sine and cosine integrals at complex arguments, and the Lorentzian sine transform.

Run with ``python demos/special_functions.py``.
"""

from oscq import LorentzianParams, cosine_integral, lorentzian_sine_reference, si_complement, sine_integral

# Si and Ci on the real axis
print("Si(1) =", sine_integral(1.0))
print("Ci(1) =", cosine_integral(1.0))

# off the axis the values grow like exp(|Im z|)/|z|
for z in (2 + 3j, -4 + 1j, 10 + 9.5j):
    print(f"z = {z}:  Si = {sine_integral(z):.12g}  Ci = {cosine_integral(z):.12g}")

# the complement si(z) = pi/2 - Si(z) decays along the positive axis
for x in (1.0, 10.0, 100.0):
    print(f"si({x:g}) = {si_complement(x).real:.6e}")

# the closed form for int_0^inf sin(tx) / ((x - a)^2 + b^2) dx
for a in (-1.0, 0.0, 1.0):
    value = lorentzian_sine_reference(LorentzianParams(a, 1.0, 1.0))
    print(f"a = {a:+g}: I = {value:.16f}")

