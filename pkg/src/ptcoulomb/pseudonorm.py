"""PT pseudo-norms, pseudo-inner products and normalization coefficients.

The pseudo-norm of an unnormalized state is

    I = 2 * int_0^inf exp(-gamma t) (gamma t)^(1 - 2 q alpha) [L_n^(-2 q alpha)(gamma t)]^2 dt

after the contour is deformed onto the positive half-axis.  It is evaluated
three ways: a closed form built from a hypergeometric generating function,
quadrature along the half-axis, and quadrature of psi*(-x) psi(x) along the
real x-line.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import special
from .model import (
    ModelParams,
    StateLabel,
    contour_coord,
    energy,
    gamma_scale,
    radial_function,
    require_admissible,
)
from .quadrature import adaptive_gauss

QUAD_RTOL = 1e-12
QUAD_ATOL = 1e-14
QUAD_MAX_DEPTH = 20


class PseudoNormMethod(enum.Enum):
    CLOSED_FORM = "closed_form"
    HALF_LINE = "half_line_quadrature"
    REAL_LINE = "real_line_quadrature"


@dataclass(frozen=True)
class PseudoNormResult:
    value: float
    sigma: int
    method: PseudoNormMethod
    imag_residual: float = 0.0
    diagnostics: dict = field(default_factory=dict, compare=False)


def _result(value: complex, method, **diagnostics) -> PseudoNormResult:
    value = complex(value)
    return PseudoNormResult(
        value=value.real,
        sigma=1 if value.real > 0 else -1,
        method=method,
        imag_residual=abs(value.imag),
        diagnostics=diagnostics,
    )


def _hypergeometric_c(params: ModelParams, label: StateLabel) -> float:
    return 1 - 2 * label.q * params.alpha


def pseudo_norm_series(params: ModelParams, label: StateLabel) -> float:
    """General-n closed form via the n-th Taylor coefficient of

        g(h) = (1 - h) (1 + h)^(2 q alpha - 2) F(1 - q alpha, 3/2 - q alpha; 1 - 2 q alpha; 4h/(1+h)^2).
    """
    require_admissible(params, label)
    qa = label.q * params.alpha
    cpar = 1 - 2 * qa
    n = label.n
    order = n + 1
    h = special.Jet.variable(order)
    w = 4 * h * special.jet_binomial_power(-2.0, order)
    g = (1 - h) * special.jet_binomial_power(2 * qa - 2, order)
    g = g * special.hyp2f1_jet(1 - qa, 1.5 - qa, cpar, w)
    gam = gamma_scale(params, label)
    prefactor = 2 * cpar / gam * special.gamma(cpar + n) / math.factorial(n) ** 2
    return prefactor * g.derivative_at_zero(n)


def _fast_path(params: ModelParams, label: StateLabel) -> float:
    # ground and first excited states, rearranged from |N|^2 I = 1
    qa = label.q * params.alpha
    root_e = math.sqrt(-energy(params, label))
    base = special.gamma(2 - 2 * qa) / root_e
    return base if label.n == 0 else (3 - 2 * qa) * base


def pseudo_norm_closed(params: ModelParams, label: StateLabel,
                       fast_path: bool = True) -> PseudoNormResult:
    """Closed-form pseudo-norm.

    Raises
    ------
    special.DomainError
        At alpha = 1/2, q = +1, where the hypergeometric lower parameter
        vanishes; use quadrature there.
    """
    require_admissible(params, label)
    cpar = _hypergeometric_c(params, label)
    if cpar <= 0 and float(cpar).is_integer():
        raise special.DomainError(
            f"closed form undefined for {label} at alpha={params.alpha}: "
            "hypergeometric c-parameter is zero"
        )
    if fast_path and label.n <= 1:
        value = _fast_path(params, label)
    else:
        value = pseudo_norm_series(params, label)
    return _result(value, PseudoNormMethod.CLOSED_FORM)


def _cutoff(gam: float, n: int) -> float:
    return (40 + 10 * n) / gam


def _tail_bound(gam: float, n: int, m: float, cutoff: float) -> float:
    # leading behaviour of the discarded tail, 2/gamma * e^-X X^(m+1+2n) / (n!)^2
    x = gam * cutoff
    k = m + 1 + 2 * n
    return 2 / gam * math.exp(-x) * x**k / math.factorial(n) ** 2 / max(1 - k / x, 1e-3)


def _near_origin(f, split, exponent, scale):
    """int_0^split f(t) dt for f ~ t^exponent at the origin.

    With t = split * exp(-v) the integrand becomes analytic in v and decays
    like exp(-(exponent + 1) v), so truncating at (exponent + 1) v = 40
    leaves a remainder near e^-40 of the segment.
    """
    v_max = 40 / (exponent + 1)

    def mapped(v):
        t = split * np.exp(-v)
        return f(t) * t

    return adaptive_gauss(mapped, 0.0, v_max, QUAD_RTOL, max(QUAD_ATOL, QUAD_RTOL * scale),
                          QUAD_MAX_DEPTH)


def _half_line_integral(params, a: StateLabel, b: StateLabel):
    """2 * int_0^inf phi_a(t) phi_b(t) dt along the deformed contour."""
    ga, gb = gamma_scale(params, a), gamma_scale(params, b)
    gam = min(ga, gb)
    n = max(a.n, b.n)
    cutoff = _cutoff(gam, n)
    split = 1 / max(ga, gb)
    e = 1 - (a.q + b.q) * params.alpha

    def product(t):
        return (radial_function(params, a, t, ga) * radial_function(params, b, t, gb)).real

    tail, err_tail = adaptive_gauss(product, split, cutoff, QUAD_RTOL, QUAD_ATOL, QUAD_MAX_DEPTH)
    head, err_head = _near_origin(product, split, e, abs(tail))
    m = -(a.q + b.q) * params.alpha
    diagnostics = {
        "cutoff": cutoff,
        "tail_bound": _tail_bound(gam, n, m, cutoff),
        "error_estimate": 2 * (err_head + err_tail),
    }
    return 2 * (head + tail), diagnostics


def _real_line_integral(params, a: StateLabel, b: StateLabel):
    """int psi_a*(-x) psi_b(x) dx over the real line, each half-line separately."""
    ga, gb = gamma_scale(params, a), gamma_scale(params, b)
    gam = min(ga, gb)
    n = max(a.n, b.n)
    cutoff = _cutoff(gam, n)
    split = 1 / max(ga, gb)

    def integrand(x):
        left = np.conj(radial_function(params, a, contour_coord(-x, params.c), ga))
        return left * radial_function(params, b, contour_coord(x, params.c), gb)

    total, err = 0.0, 0.0
    for lo, hi in ((0.0, split), (split, cutoff), (-cutoff, -split), (-split, 0.0)):
        # Gauss nodes are interior, so x = 0 is never sampled on either branch
        value, error = adaptive_gauss(integrand, lo, hi, QUAD_RTOL, QUAD_ATOL, QUAD_MAX_DEPTH)
        total += value
        err += error
    m = -(a.q + b.q) * params.alpha
    diagnostics = {
        "cutoff": cutoff,
        "tail_bound": _tail_bound(gam, n, m, cutoff),
        "error_estimate": err,
    }
    return total, diagnostics


def pseudo_norm_quadrature(params: ModelParams, label: StateLabel,
                           mode: str = "half_line") -> PseudoNormResult:
    """Pseudo-norm by numerical quadrature.

    ``mode="half_line"`` integrates along the positive half-axis, where the
    integrand is real and positive.  ``mode="real_line"`` integrates
    psi*(-x) psi(x) along the real x-line through the shifted coordinate; the
    discarded imaginary part is returned as ``imag_residual``.
    """
    require_admissible(params, label)
    if mode == "half_line":
        value, diag = _half_line_integral(params, label, label)
        return _result(value, PseudoNormMethod.HALF_LINE, **diag)
    if mode == "real_line":
        value, diag = _real_line_integral(params, label, label)
        return _result(value, PseudoNormMethod.REAL_LINE, **diag)
    raise ValueError(f"unknown quadrature mode {mode!r}")


def pseudo_norm(params: ModelParams, label: StateLabel) -> PseudoNormResult:
    """Closed form where defined, half-line quadrature otherwise."""
    try:
        return pseudo_norm_closed(params, label)
    except special.DomainError:
        return pseudo_norm_quadrature(params, label, "half_line")


def normalization_coefficient(params: ModelParams, label: StateLabel) -> float:
    """|N| = I^(-1/2)."""
    return 1 / math.sqrt(pseudo_norm(params, label).value)


def pseudo_inner_product(params: ModelParams, a: StateLabel, b: StateLabel,
                         mode: str = "half_line") -> complex:
    """<psi_a | psi_b> = int psi_a*(-x) psi_b(x) dx for normalized states.

    The default evaluates it on the deformed contour (the positive half-axis
    traversed from the branch point), which is the same path the
    normalization uses.  ``mode="real_line"`` integrates along the shifted
    real line instead.
    """
    require_admissible(params, a)
    require_admissible(params, b)
    if mode == "half_line":
        value, _ = _half_line_integral(params, a, b)
    elif mode == "real_line":
        value, _ = _real_line_integral(params, a, b)
    else:
        raise ValueError(f"unknown quadrature mode {mode!r}")
    scale = normalization_coefficient(params, a) * normalization_coefficient(params, b)
    return complex(scale * value)


def vertical_segment_correction(params: ModelParams, label: StateLabel) -> float:
    """2 Re of the integral of the pseudo-norm integrand from -ic up to 0.

    By Cauchy's theorem the real-line quadrature equals the half-line value
    plus this term, since both paths share the far end and differ only by
    the segment joining -ic to the branch point.
    """
    gam = gamma_scale(params, label)
    c = params.c

    # z = -i y for y in (0, c]; dz = -i dy, integrated from y = c down to 0
    def integrand(y):
        z = -1j * y
        return 1j * radial_function(params, label, z, gam) ** 2

    value, _ = _near_origin(integrand, c, 1 - 2 * label.q * params.alpha, 0.0)
    return 2 * complex(value).real
