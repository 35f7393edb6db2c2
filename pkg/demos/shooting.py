"""Find the levels without the formula.

A blind scan of the shooting miss function over a log-spaced energy grid,
compared with -beta^2 / (2n - 2 q alpha + 1)^2.
"""

import time

from ptcoulomb import ModelParams, StateLabel, energy
from ptcoulomb.shooting import scan_spectrum

params = ModelParams(alpha=0.4, beta=-2.0, c=1.0)
for q in (1, -1):
    t0 = time.perf_counter()
    found = sorted(scan_spectrum(params, q, -150.0, -0.05, points=100))
    print(f"q = {q:+d}: {len(found)} levels in {time.perf_counter() - t0:.1f} s")
    for n, e in enumerate(found):
        exact = energy(params, StateLabel(q, n))
        print(f"  n={n}  shooting {e:.10f}  formula {exact:.10f}  rel {abs(e / exact - 1):.1e}")
