"""Exactly solvable PT-symmetric one-dimensional Coulomb model with
numerical oracles for its spectrum, wavefunctions and pseudo-norms."""

from .model import (
    Admissibility,
    AdmissibilityError,
    BoundState,
    ModelParams,
    SpectrumEntry,
    StateLabel,
    admissibility,
    contour_coord,
    energy,
    gamma_scale,
    list_spectrum,
    potential,
    wavefunction,
)
from .pseudonorm import (
    PseudoNormResult,
    normalization_coefficient,
    pseudo_inner_product,
    pseudo_norm_closed,
    pseudo_norm_quadrature,
)
from .shooting import ShootingConfig, shooting_eigensolve

__version__ = "0.1.0"
