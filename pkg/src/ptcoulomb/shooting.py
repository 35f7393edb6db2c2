"""Shooting eigensolver for the half-line equation

    -phi'' + (G/t^2 + beta/t) phi = E phi,   G = alpha^2 - 1/4,

with the small-t behaviour phi ~ t^s (1 + beta t / (2s)), s = 1/2 - q alpha,
selecting the quasi-parity family.  It knows nothing about the closed-form
spectrum and serves as an independent check on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import optimize

from .model import ModelParams


class BracketError(ValueError):
    """The energy bracket does not straddle a sign change of the miss function."""


class StepSizeError(RuntimeError):
    """Step refinement did not settle the miss function."""


@dataclass(frozen=True)
class ShootingConfig:
    """Integration limits and tolerances.

    ``t_start`` is where the small-t series seeds the outward solution,
    ``t_match`` where outward and inward solutions meet, and ``t_far`` where
    the inward solution is seeded from the decaying asymptote.
    """

    t_start: float
    t_match: float
    t_far: float
    tolerance: float = 1e-12
    steps_out: int = 400
    steps_in: int = 400
    miss_tol: float = 1e-9
    max_refinements: int = 6

    def __post_init__(self):
        if not 0 < self.t_start < self.t_match < self.t_far:
            raise ValueError("need 0 < t_start < t_match < t_far")


def default_config(params: ModelParams, e_bracket: tuple[float, float]) -> ShootingConfig:
    """Limits scaled from the bracket midpoint.

    The match point sits at half the Coulomb turning point |beta|/|E|, which
    keeps the outward leg inside the region where the regular solution does
    not decay; the inward leg starts 25 decay lengths beyond the turning point,
    where the admixture of the wrong solution is of order e^-25.
    """
    e_mid = 0.5 * (e_bracket[0] + e_bracket[1])
    if e_mid >= 0:
        raise ValueError("bound states need a negative energy bracket")
    gam = 2 * math.sqrt(-e_mid)
    turning = abs(params.beta) / -e_mid
    t_match = 0.5 * turning
    return ShootingConfig(t_start=min(1e-2 / gam, 0.5 * t_match), t_match=t_match,
                          t_far=turning + 25 / gam)


def frobenius_seed(params, s, energy, t, rtol=1e-17, max_terms=400):
    """phi / t^s and t phi' / t^s from the series phi = t^s sum_k a_k t^k.

    a_0 = 1, a_1 = beta / (2s) and k (2s + k - 1) a_k = beta a_{k-1} - E a_{k-2};
    the series is entire in t, so it is summed until terms stop mattering.
    """
    beta = params.beta
    prev2, prev = 0.0, 1.0
    y, p = 1.0, s
    power = 1.0
    for k in range(1, max_terms):
        a_k = (beta * prev - energy * prev2) / (k * (2 * s + k - 1))
        power *= t
        term = a_k * power
        y += term
        p += (s + k) * term
        if abs(term) * (abs(s) + k + 1) <= rtol * (abs(y) + abs(p)) and abs(prev) * power <= abs(y):
            break
        prev2, prev = prev, a_k
    return y, p


def _outward(params, s, energy, t0, t1, steps):
    """RK4 in xi = ln t on (y, p = t y'); returns (y, p) at t1."""
    g = params.core_strength
    beta = params.beta
    y, p = frobenius_seed(params, s, energy, t0)
    x0 = math.log(t0)
    h = (math.log(t1) - x0) / steps
    eh = math.exp(h / 2)
    t = t0
    for _ in range(steps):
        tm = t * eh
        te = tm * eh
        c0 = g + beta * t - energy * t * t
        cm = g + beta * tm - energy * tm * tm
        ce = g + beta * te - energy * te * te
        k1y, k1p = p, p + c0 * y
        y2, p2 = y + 0.5 * h * k1y, p + 0.5 * h * k1p
        k2y, k2p = p2, p2 + cm * y2
        y3, p3 = y + 0.5 * h * k2y, p + 0.5 * h * k2p
        k3y, k3p = p3, p3 + cm * y3
        y4, p4 = y + h * k3y, p + h * k3p
        k4y, k4p = p4, p4 + ce * y4
        y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y)
        p += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p)
        t = te
        # rescale to keep magnitudes bounded; only the ratio y:p matters
        mag = abs(y) + abs(p)
        if mag > 1e100:
            y /= mag
            p /= mag
    return y, p


def _inward(params, energy, t_far, t1, steps):
    """RK4 in t from t_far down to t1 on (y, y'); returns (y, t y') at t1."""
    g = params.core_strength
    beta = params.beta
    kappa = math.sqrt(-energy)
    nu = -beta / (2 * kappa)
    y = 1.0
    d = (-kappa + nu / t_far) * y
    h = (t1 - t_far) / steps
    t = t_far

    def coef(tt):
        return g / (tt * tt) + beta / tt - energy

    for _ in range(steps):
        tm = t + 0.5 * h
        te = t + h
        c0, cm, ce = coef(t), coef(tm), coef(te)
        k1y, k1d = d, c0 * y
        k2y, k2d = d + 0.5 * h * k1d, cm * (y + 0.5 * h * k1y)
        k3y, k3d = d + 0.5 * h * k2d, cm * (y + 0.5 * h * k2y)
        k4y, k4d = d + h * k3d, ce * (y + h * k3y)
        y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y)
        d += h / 6 * (k1d + 2 * k2d + 2 * k3d + k4d)
        t = te
        mag = abs(y) + abs(d)
        if mag > 1e100:
            y /= mag
            d /= mag
    return y, t1 * d


def miss_function(params: ModelParams, q: int, energy: float, config: ShootingConfig,
                  refine: int = 0) -> float:
    """Normalized Wronskian between outward and inward solutions at t_match.

    This is the sine of the angle between the log-derivative vectors of the
    two solutions: scale-free, bounded by 1 in magnitude, continuous in E,
    and zero exactly at eigenvalues.
    """
    if energy >= 0:
        raise ValueError("energy must be negative")
    s = 0.5 - q * params.alpha
    scale = 2 ** refine
    yo, po = _outward(params, s, energy, config.t_start, config.t_match, config.steps_out * scale)
    yi, pi = _inward(params, energy, config.t_far, config.t_match, config.steps_in * scale)
    k = max(1.0, config.t_match * math.sqrt(-energy))
    wronskian = (yo * pi - po * yi) / k
    return wronskian / (math.hypot(yo, po / k) * math.hypot(yi, pi / k))


def _settle_steps(params, q, energy, config) -> int:
    """Smallest refinement level at which doubling the steps changes the miss
    function by less than ``config.miss_tol``."""
    previous = miss_function(params, q, energy, config, 0)
    for level in range(1, config.max_refinements + 1):
        current = miss_function(params, q, energy, config, level)
        change = abs(current - previous)
        if change <= config.miss_tol:
            return level
        previous = current
    raise StepSizeError(
        f"miss function unsettled after {config.max_refinements} step doublings "
        f"(last change {change:.3g})"
    )


def shooting_eigensolve(params: ModelParams, q: int, e_bracket: tuple[float, float],
                        config: Optional[ShootingConfig] = None) -> float:
    """Bound-state energy inside ``e_bracket`` for quasi-parity ``q``.

    Raises
    ------
    BracketError
        If the miss function has the same sign at both ends of the bracket.
    StepSizeError
        If step doubling does not settle the miss function.
    """
    if q not in (1, -1):
        raise ValueError("q must be +1 or -1")
    lo, hi = sorted(e_bracket)
    if config is None:
        config = default_config(params, (lo, hi))
    level = _settle_steps(params, q, 0.5 * (lo + hi), config)

    def miss(e):
        return miss_function(params, q, e, config, level)

    f_lo, f_hi = miss(lo), miss(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise BracketError(f"no sign change of the miss function on [{lo}, {hi}] for q={q:+d}")
    # Brent: bisection safeguarded secant / inverse quadratic steps
    return optimize.brentq(miss, lo, hi, xtol=config.tolerance * abs(lo),
                           rtol=4 * np.finfo(float).eps)


def scan_spectrum(params: ModelParams, q: int, e_min: float, e_max: float,
                  points: int = 200) -> list[float]:
    """Blind search: all eigenvalues in [e_min, e_max] found by sign changes
    of the miss function on a logarithmic energy grid."""
    if not e_min < e_max < 0:
        raise ValueError("need e_min < e_max < 0")
    grid = -np.geomspace(-e_min, -e_max, points)
    found = []
    for lo, hi in zip(grid[:-1], grid[1:]):
        config = default_config(params, (lo, hi))
        level = _settle_steps(params, q, 0.5 * (lo + hi), config)
        f_lo = miss_function(params, q, lo, config, level)
        f_hi = miss_function(params, q, hi, config, level)
        if (f_lo > 0) != (f_hi > 0):
            found.append(shooting_eigensolve(params, q, (lo, hi), config))
    return found
