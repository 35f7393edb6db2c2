"""Three routes to the pseudo-norm and where they part ways.

The closed form and the half-line integral agree to quadrature precision.
The straight real-line integral of psi(x)^2 does not: its path starts at
u = -ic rather than at the branch point u = 0, and by Cauchy's theorem the
difference is exactly the integral along the short vertical segment between
the two.  That segment term depends on c, so the real-line value does too.
"""

from ptcoulomb import ModelParams, StateLabel
from ptcoulomb.pseudonorm import (
    pseudo_norm_closed,
    pseudo_norm_quadrature,
    vertical_segment_correction,
)

label = StateLabel(-1, 0)
print(f"{'c':>5} {'closed':>12} {'half-line':>12} {'real-line':>12} {'segment':>12} {'check':>9}")
for c in (0.05, 0.2, 1.0, 3.0):
    params = ModelParams(0.25, -1.0, c)
    closed = pseudo_norm_closed(params, label).value
    half = pseudo_norm_quadrature(params, label, "half_line").value
    real = pseudo_norm_quadrature(params, label, "real_line").value
    seg = vertical_segment_correction(params, label)
    print(f"{c:5.2f} {closed:12.8f} {half:12.8f} {real:12.8f} {seg:12.8f} "
          f"{abs(real - half - seg):9.1e}")
