"""Both quasi-parity families side by side.

The q = -1 ladder is the ordinary radial Coulomb ladder with l = alpha - 1/2;
the q = +1 ladder sits deeper and interleaves with it.
"""

from ptcoulomb import ModelParams, list_spectrum

params = ModelParams(alpha=0.25, beta=-1.0, c=1.0)

print(f"{'q':>3} {'n':>3} {'energy':>14} {'gamma':>10} {'|N|':>10}")
for entry in list_spectrum(params, n_max=4):
    s = entry.state
    if s is None:
        print(f"{entry.label.q:+3d} {entry.label.n:3d}  {entry.status.value}")
        continue
    print(f"{entry.label.q:+3d} {entry.label.n:3d} {s.energy:14.8f} {s.gamma:10.6f} {s.norm_magnitude:10.6f}")

# past alpha = 1/2 the q = +1 ground state drops out
print()
for entry in list_spectrum(ModelParams(0.75, -1.0, 1.0), n_max=1):
    print(entry.label, entry.status.value)
