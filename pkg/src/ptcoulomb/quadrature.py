"""Globally adaptive Gauss-Legendre quadrature by interval bisection."""

from __future__ import annotations

import functools
import heapq

import numpy as np


class ConvergenceError(RuntimeError):
    """Refinement budget exhausted before the error target was met."""

    def __init__(self, message, estimates):
        super().__init__(f"{message}; last two estimates {estimates[0]!r}, {estimates[1]!r}")
        self.estimates = estimates


@functools.lru_cache(maxsize=8)
def _rule(n):
    return np.polynomial.legendre.leggauss(n)


def _panel(f, a, b, n):
    """Single-panel and two-panel estimates on [a, b]."""
    x, w = _rule(n)
    mid = 0.5 * (a + b)
    quarter = 0.25 * (b - a)
    left = quarter * np.dot(w, f(0.5 * (a + mid) + quarter * x))
    right = quarter * np.dot(w, f(0.5 * (mid + b) + quarter * x))
    return left, right


def adaptive_gauss(f, a, b, rtol=1e-12, atol=1e-14, max_depth=20, order=20):
    """Integrate a vectorized ``f`` over [a, b].

    Each panel is scored by the gap between its one-panel and two-panel
    Gauss estimates; the worst panel is bisected until the summed gap drops
    below max(atol, rtol * |I|).  A panel needing more than ``max_depth``
    bisections raises ConvergenceError.  Complex integrands are fine.

    Returns
    -------
    value, error_estimate
    """
    if b == a:
        return 0.0, 0.0
    x, w = _rule(order)
    half = 0.5 * (b - a)
    whole = half * np.dot(w, f(0.5 * (a + b) + half * x))
    heap = []
    counter = 0

    def push(lo, hi, coarse, depth):
        nonlocal counter
        left, right = _panel(f, lo, hi, order)
        err = abs(left + right - coarse)
        heapq.heappush(heap, (-err, counter, lo, hi, left, right, depth))
        counter += 1
        return left + right, err

    total, err_total = push(a, b, whole, 0)
    previous = whole
    while err_total > max(atol, rtol * abs(total)):
        neg_err, _, lo, hi, left, right, depth = heapq.heappop(heap)
        if depth + 1 > max_depth:
            raise ConvergenceError(
                f"no convergence on [{lo:.6g}, {hi:.6g}] after {max_depth} bisections",
                (previous, total),
            )
        previous = total
        mid = 0.5 * (lo + hi)
        total -= left + right
        err_total += neg_err
        for sub_lo, sub_hi, coarse in ((lo, mid, left), (mid, hi, right)):
            value, err = push(sub_lo, sub_hi, coarse, depth + 1)
            total += value
            err_total += err
    return total, err_total
