"""Real and imaginary parts of a few bound states along the real line.

psi(-x) is the complex conjugate of psi(x), so the real part is even and the
imaginary part odd.  Writes wavefunctions.png next to this script.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ptcoulomb import ModelParams, StateLabel, wavefunction

params = ModelParams(alpha=0.25, beta=-1.0, c=1.0)
xs = np.linspace(-30, 30, 2001)
xs = xs[xs != 0]

fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
for ax, label in zip(axes.flat, [StateLabel(-1, 0), StateLabel(-1, 1),
                                  StateLabel(1, 0), StateLabel(1, 2)]):
    psi = wavefunction(params, label, xs, normalized=True)
    ax.plot(xs, psi.real, label="Re")
    ax.plot(xs, psi.imag, label="Im")
    ax.set_title(str(label))
    ax.axhline(0, color="0.7", lw=0.5)
axes[0, 0].legend()
out = Path(__file__).with_name("wavefunctions.png")
fig.tight_layout()
fig.savefig(out, dpi=120)
print("wrote", out)
