"""PT-symmetric Coulomb-like model on the shifted contour.

The potential is V = (alpha^2 - 1/4)/u^2 + beta/u, where u(x) is the contour
coordinate standing in for |x - ic|.  Bound states come in two families
labelled by the quasi-parity q = +1/-1, with energies
E = -beta^2 / (2n - 2 q alpha + 1)^2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .special import laguerre

FLOWN_AWAY_TOL = 1e-12


class Admissibility(enum.Enum):
    ADMISSIBLE = "admissible"
    FLOWN_AWAY = "flown_away"
    NOT_NORMALIZABLE = "not_normalizable"


class AdmissibilityError(ValueError):
    """A requested state does not exist for the given parameters."""

    def __init__(self, status: Admissibility, params, label):
        self.status = status
        super().__init__(f"state {label} is {status.value} for {params}")


@dataclass(frozen=True)
class ModelParams:
    alpha: float
    beta: float
    c: float

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if self.beta == 0 or not math.isfinite(self.beta):
            raise ValueError(f"beta must be finite and non-zero, got {self.beta}")

    @property
    def core_strength(self) -> float:
        """G = alpha^2 - 1/4, strength of the centrifugal-like core."""
        return self.alpha**2 - 0.25


@dataclass(frozen=True, order=True)
class StateLabel:
    q: int
    n: int

    def __post_init__(self):
        if self.q not in (1, -1):
            raise ValueError(f"quasi-parity must be +1 or -1, got {self.q}")
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError(f"radial index must be a non-negative integer, got {self.n}")

    def __str__(self):
        return f"(q={self.q:+d}, n={self.n})"


@dataclass(frozen=True)
class BoundState:
    label: StateLabel
    energy: float
    gamma: float
    norm_magnitude: float
    phase_nu: float = 0.0


@dataclass(frozen=True)
class SpectrumEntry:
    label: StateLabel
    status: Admissibility
    state: Optional[BoundState] = None


def _denominator(params: ModelParams, label: StateLabel) -> float:
    return 2 * label.n - 2 * label.q * params.alpha + 1


def signed_scale(params: ModelParams, label: StateLabel) -> float:
    """-2 beta / (2n - 2 q alpha + 1); positive exactly for decaying states."""
    return -2 * params.beta / _denominator(params, label)


def admissibility(params: ModelParams, label: StateLabel) -> Admissibility:
    if abs(_denominator(params, label)) <= FLOWN_AWAY_TOL:
        return Admissibility.FLOWN_AWAY
    if signed_scale(params, label) <= 0:
        return Admissibility.NOT_NORMALIZABLE
    return Admissibility.ADMISSIBLE


def require_admissible(params: ModelParams, label: StateLabel):
    status = admissibility(params, label)
    if status is not Admissibility.ADMISSIBLE:
        raise AdmissibilityError(status, params, label)


def energy(params: ModelParams, label: StateLabel) -> float:
    require_admissible(params, label)
    return -params.beta**2 / _denominator(params, label) ** 2


def gamma_scale(params: ModelParams, label: StateLabel) -> float:
    """Decay scale gamma = 2 sqrt|E|, built with its sign from beta."""
    require_admissible(params, label)
    return signed_scale(params, label)


def contour_coord(x, c: float):
    """Contour coordinate u(x): x - ic for x >= 0 and -x + ic for x < 0.

    Re u >= 0 and conj(u(-x)) = u(x) for x != 0.
    """
    x = np.asarray(x, dtype=float)
    u = np.where(x >= 0, x - 1j * c, -x + 1j * c)
    return u[()] if u.ndim == 0 else u


def potential(params: ModelParams, x):
    u = contour_coord(x, params.c)
    return params.core_strength / u**2 + params.beta / u


def radial_function(params: ModelParams, label: StateLabel, z, gamma: float):
    """exp(-gamma z/2) (gamma z)^(1/2 - q alpha) L_n^(-2 q alpha)(gamma z).

    ``z`` may be any complex value off the negative real axis; the power uses
    the principal branch.
    """
    s = gamma * np.asarray(z, dtype=complex)
    m = -2 * label.q * params.alpha
    return np.exp(-s / 2) * s ** (0.5 - label.q * params.alpha) * laguerre(label.n, m, s)


def wavefunction(params: ModelParams, label: StateLabel, x, normalized: bool = False):
    """Bound-state wavefunction on the real line.

    The value may jump across x = 0 (the two branches are complex conjugates).
    """
    gamma = gamma_scale(params, label)
    psi = radial_function(params, label, contour_coord(x, params.c), gamma)
    if normalized:
        from .pseudonorm import normalization_coefficient

        psi = normalization_coefficient(params, label) * psi
    return psi


def bound_state(params: ModelParams, label: StateLabel) -> BoundState:
    from .pseudonorm import normalization_coefficient

    return BoundState(
        label=label,
        energy=energy(params, label),
        gamma=gamma_scale(params, label),
        norm_magnitude=normalization_coefficient(params, label),
    )


def list_spectrum(params: ModelParams, n_max: int) -> list[SpectrumEntry]:
    """Both quasi-parity families up to ``n_max``.

    Admissible states come first, sorted by ascending energy; excluded
    labels follow with their admissibility status and no bound state.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    kept, dropped = [], []
    for n in range(n_max + 1):
        for q in (1, -1):
            label = StateLabel(q, n)
            status = admissibility(params, label)
            if status is Admissibility.ADMISSIBLE:
                kept.append(SpectrumEntry(label, status, bound_state(params, label)))
            else:
                dropped.append(SpectrumEntry(label, status))
    kept.sort(key=lambda e: e.state.energy)
    return kept + dropped
