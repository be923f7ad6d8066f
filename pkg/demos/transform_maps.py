"""The single exponential map next to the two Ooura-Mori maps.

Run with ``python demos/transform_maps.py``.
"""

import numpy as np

from oscq import OouraMoriMap1, OouraMoriMap2, SingleExponentialMap

maps = [SingleExponentialMap(), OouraMoriMap1(), OouraMoriMap2(M=8.0)]
u = np.array([-6.0, -3.0, 0.0, 3.0, 6.0])

print("u      " + "  ".join(f"{x:>10g}" for x in u))
for tmap in maps:
    print(f"{tmap!r:>22}")
    print("  phi  " + "  ".join(f"{v:10.3e}" for v in tmap.evaluate(u)))
    print("  phi' " + "  ".join(f"{v:10.3e}" for v in tmap.derivative(u)))

# every map approaches the identity on the right; the excess phi(u) - u tells
# how fast, and it is what the sine of m phi is reduced against
se = SingleExponentialMap()
for x in (5.0, 20.0, 40.0):
    print(f"SE excess at u={x:g}: {se.excess(x):.3e}   exp(-u) = {np.exp(-x):.3e}")

# the SE map has an explicit inverse, also off the real axis
w = se.inverse(1.5)
print("phi^{-1}(1.5) =", w, " round trip:", se.evaluate(w))
