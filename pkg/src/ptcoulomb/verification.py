"""Numerical checks of the analytic results: PT symmetry of the potential and
wavefunctions, finite-difference Schrodinger residuals, the shooting oracle,
the Hermitian limit and the flown-away sweep."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from . import model
from .model import Admissibility, ModelParams, StateLabel
from .shooting import shooting_eigensolve

EXCLUSION_FACTOR = 1e-3


@dataclass(frozen=True)
class PTCheckResult:
    max_deviation: float
    phase_phi: float = 0.0


@dataclass(frozen=True)
class ResidualReport:
    grid_step: float
    residual_norm: float
    convergence_order: float
    refined_residual_norm: float


@dataclass(frozen=True)
class LimitReport:
    max_discrepancy: float
    c_independent: bool


@dataclass(frozen=True)
class CheckOutcome:
    suite: str
    name: str
    measured: float
    threshold: float
    passed: bool


def _nonzero(xs):
    xs = np.asarray(xs, dtype=float)
    if np.any(xs == 0):
        raise ValueError("sample points must exclude x = 0")
    return xs


def check_pt_potential(params: ModelParams, xs) -> PTCheckResult:
    """max |V(-x)* - V(x)| over ``xs``."""
    xs = _nonzero(xs)
    dev = np.abs(np.conj(model.potential(params, -xs)) - model.potential(params, xs))
    return PTCheckResult(float(np.max(dev)))


def check_pt_wavefunction(params: ModelParams, label: StateLabel, xs) -> PTCheckResult:
    """max |psi*(-x) - psi(x)| and the phase phi in psi*(-x) = e^{i phi} psi(x).

    The phase is the mean argument of the ratio over points where psi is not
    negligibly small.
    """
    xs = _nonzero(xs)
    mirrored = np.conj(model.wavefunction(params, label, -xs))
    psi = model.wavefunction(params, label, xs)
    dev = float(np.max(np.abs(mirrored - psi)))
    keep = np.abs(psi) > 1e-12 * np.max(np.abs(psi))
    phase = float(np.mean(np.angle(mirrored[keep] / psi[keep]))) if np.any(keep) else 0.0
    return PTCheckResult(dev, phase)


def _residual_norm(params, label, anchor, step, points):
    # nodes are laid out from the end nearest the origin, where psi varies
    # fastest; an ulp-sized misplacement there is amplified by 1/step^2
    x = anchor + step * np.arange(points)
    psi = model.wavefunction(params, label, x)
    d2 = (psi[2:] - 2 * psi[1:-1] + psi[:-2]) / step**2
    e = model.energy(params, label)
    res = d2 + (e - model.potential(params, x[1:-1])) * psi[1:-1]
    return float(np.max(np.abs(res)) / np.max(np.abs(psi)))


def schrodinger_residual(params: ModelParams, label: StateLabel,
                         x_min: float, x_max: float, step: float) -> ResidualReport:
    """Central-difference residual of psi'' + (E - V) psi = 0 on one half-line.

    The residual is rerun at step/2; the ratio of the two gives the observed
    convergence order.

    Raises
    ------
    ValueError
        If the grid crosses or approaches x = 0, where psi jumps between
        branches.
    """
    delta = EXCLUSION_FACTOR * params.c
    if x_min >= x_max or step <= 0:
        raise ValueError("need x_min < x_max and a positive step")
    if x_min < delta and x_max > -delta:
        raise ValueError(
            f"grid [{x_min}, {x_max}] must stay on one half-line with |x| >= {delta:g}"
        )
    points = int(round((x_max - x_min) / step)) + 1
    anchor, step = (x_min, step) if x_min > 0 else (x_max, -step)
    coarse = _residual_norm(params, label, anchor, step, points)
    fine = _residual_norm(params, label, anchor, step / 2, 2 * points - 1)
    return ResidualReport(abs(step), coarse, math.log2(coarse / fine), fine)


def shooting_check(params: ModelParams, label: StateLabel, window: float = 0.2) -> float:
    """Shooting eigenvalue in a +/- ``window`` bracket around the closed-form energy."""
    e = model.energy(params, label)
    return shooting_eigensolve(params, label.q, ((1 + window) * e, (1 - window) * e))


def hermitian_limit_check(params: ModelParams, n_max: int,
                          cs=(0.1, 1.0, 5.0)) -> LimitReport:
    """Compare the q = -1 family against the radial Coulomb levels
    -beta^2 / (2 (n + l + 1))^2 with l = alpha - 1/2, and check that the
    spectrum does not depend on the contour shift."""
    ell = params.alpha - 0.5
    worst = 0.0
    for n in range(n_max + 1):
        label = StateLabel(-1, n)
        textbook = -params.beta**2 / (2 * (n + ell + 1)) ** 2
        worst = max(worst, abs(model.energy(params, label) - textbook) / abs(textbook))
    spectra = [_spectrum_values(replace(params, c=c), n_max) for c in cs]
    return LimitReport(worst, all(s == spectra[0] for s in spectra[1:]))


def _spectrum_values(params, n_max):
    out = []
    for entry in model.list_spectrum(params, n_max):
        state = entry.state
        if state is None:
            out.append((entry.label, entry.status))
        else:
            out.append((entry.label, state.energy, state.gamma, state.norm_magnitude))
    return out


def alpha_sweep(beta: float, q: int, n: int, alphas,
                c: float = 1.0) -> list[tuple[float, Union[float, Admissibility]]]:
    """Energy of state (q, n) across ``alphas``, or the reason it is absent."""
    label = StateLabel(q, n)
    rows = []
    for alpha in alphas:
        params = ModelParams(alpha, beta, c)
        status = model.admissibility(params, label)
        if status is Admissibility.ADMISSIBLE:
            rows.append((alpha, model.energy(params, label)))
        else:
            rows.append((alpha, status))
    return rows


# -- suites used by the command line ----------------------------------------

PT_TOL = 1e-12
POTENTIAL_TOL = 1e-15
PHASE_TOL = 1e-10
SHOOTING_RTOL = 1e-6
ORDER_RANGE = (1.8, 2.2)


def admissible_labels(params: ModelParams, n_max: int) -> list[StateLabel]:
    return [
        StateLabel(q, n)
        for q in (1, -1)
        for n in range(n_max + 1)
        if model.admissibility(params, StateLabel(q, n)) is Admissibility.ADMISSIBLE
    ]


def symmetric_grid(half_width: float, points: int = 201) -> np.ndarray:
    """``points`` samples of [-half_width, half_width] with x = 0 removed."""
    xs = np.linspace(-half_width, half_width, points)
    return xs[xs != 0]


def pt_suite(params: ModelParams, n_max: int) -> list[CheckOutcome]:
    out = []
    for label in admissible_labels(params, n_max):
        gam = model.gamma_scale(params, label)
        xs = symmetric_grid(10 / gam)
        pot = check_pt_potential(params, xs).max_deviation
        out.append(CheckOutcome("pt", f"potential {label}", pot, POTENTIAL_TOL, pot <= POTENTIAL_TOL))
        wf = check_pt_wavefunction(params, label, xs)
        out.append(CheckOutcome("pt", f"wavefunction {label}", wf.max_deviation, PT_TOL,
                                wf.max_deviation <= PT_TOL))
        out.append(CheckOutcome("pt", f"phase {label}", abs(wf.phase_phi), PHASE_TOL,
                                abs(wf.phase_phi) <= PHASE_TOL))
    return out


def residual_grids(params: ModelParams, label: StateLabel):
    """Both half-line grids for a state: [0.1, 15] scaled by the decay length."""
    gam = model.gamma_scale(params, label)
    scale = 4 / (3 * gam)
    lo, hi, step = 0.1 * scale, (15 + 5 * label.n) * scale, 1e-2 * scale
    return [(lo, hi, step), (-hi, -lo, step)]


def residual_suite(params: ModelParams, n_max: int) -> list[CheckOutcome]:
    out = []
    lo_ok, hi_ok = ORDER_RANGE
    for label in admissible_labels(params, n_max):
        for x_min, x_max, step in residual_grids(params, label):
            rep = schrodinger_residual(params, label, x_min, x_max, step)
            side = "x>0" if x_min > 0 else "x<0"
            out.append(CheckOutcome("residual", f"order {label} {side}", rep.convergence_order,
                                    2.0, lo_ok <= rep.convergence_order <= hi_ok))
    return out


def shooting_suite(params: ModelParams, n_max: int) -> list[CheckOutcome]:
    out = []
    for label in admissible_labels(params, n_max):
        e = model.energy(params, label)
        rel = abs(shooting_check(params, label) - e) / abs(e)
        out.append(CheckOutcome("shooting", f"eigenvalue {label}", rel, SHOOTING_RTOL,
                                rel <= SHOOTING_RTOL))
    return out


def limit_suite(params: ModelParams, n_max: int) -> list[CheckOutcome]:
    rep = hermitian_limit_check(params, n_max)
    out = [
        CheckOutcome("limit", "radial Coulomb levels", rep.max_discrepancy, 1e-15,
                     rep.max_discrepancy <= 1e-15),
        CheckOutcome("limit", "contour-shift independence", float(not rep.c_independent), 0.0,
                     rep.c_independent),
    ]
    rows = alpha_sweep(params.beta, 1, 0, (0.4, 0.45, 0.49, 0.499, 0.5))
    mags = [abs(e) for _, e in rows[:-1]]
    growing = all(b > a for a, b in zip(mags, mags[1:]))
    out.append(CheckOutcome("limit", "flown-away divergence as alpha -> 1/2", mags[-1], 0.0, growing))
    flown = rows[-1][1] is Admissibility.FLOWN_AWAY
    out.append(CheckOutcome("limit", "flown away at alpha = 1/2", float(flown), 1.0, flown))
    return out


SUITES = {
    "pt": pt_suite,
    "residual": residual_suite,
    "shooting": shooting_suite,
    "limit": limit_suite,
}


def run_suite(params: ModelParams, n_max: int, suite: str = "all") -> list[CheckOutcome]:
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        out.extend(SUITES[name](params, n_max))
    return out
