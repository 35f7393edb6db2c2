"""The q = +1 ground state as alpha approaches 1/2.

The spectral denominator 1 - 2 alpha closes, the energy runs off to minus
infinity, and at alpha = 1/2 the level is gone.  Beyond that the
same label no longer decays.
"""

from ptcoulomb.verification import alpha_sweep

for alpha, value in alpha_sweep(-1.0, 1, 0, [0.3, 0.4, 0.45, 0.49, 0.499, 0.4999, 0.5, 0.6]):
    shown = value.value if hasattr(value, "value") else f"{value:.6g}"
    print(f"alpha = {alpha:<7} {shown}")
