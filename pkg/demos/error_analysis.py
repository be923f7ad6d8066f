"""Splitting the discretisation error into a pole term and a saddle term.

Run with ``python demos/error_analysis.py``.
"""

from oscq import LorentzianParams, decompose_error, find_saddle, locate_pole

for a in (-1.0, 0.0, 1.0):
    p = LorentzianParams(a, 1.0, 1.0)
    print(f"a = {a:+g}, b = 1, t = 1")
    print("   m        I - T_m         R_m            S_m")
    for m in range(1, 11):
        d = decompose_error(p, m)
        print(f"  {m:2d}  {d.total:14.4e} {d.pole_term:14.4e} {d.saddle_term:14.4e}")

# the pole of the transformed integrand tends to arg(a + ib) + bt / (2m)
p = LorentzianParams(1.0, 1.0, 1.0)
for m in (5, 10, 50):
    print(f"m={m:3d}  w0 = {locate_pole(p, m):.6f}")

# the saddle of the phase sits at log 2 + i pi
for m in (1, 5, 10):
    print(f"m={m:3d}  w1 = {find_saddle(m):.10f}")
