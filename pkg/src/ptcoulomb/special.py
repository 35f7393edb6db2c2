"""Special functions: gamma, associated Laguerre polynomials, and truncated
power series (jets) with the Gauss hypergeometric composition built on them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class PoleError(ValueError):
    """Raised when a function is evaluated at one of its poles."""


class DomainError(ValueError):
    """Raised when arguments fall outside the supported domain."""


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma(x: float) -> float:
    """Real gamma function, including negative non-integer arguments.

    Raises
    ------
    PoleError
        If ``x`` is zero or a negative integer.
    """
    x = float(x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at x = {x:g}")
    # math.gamma applies reflection for x < 0 internally
    return math.gamma(x)


def laguerre(n: int, m: float, z):
    """Associated Laguerre polynomial L_n^m(z) for real ``m`` and complex ``z``.

    The generalized binomial coefficients are generated by a running product
    starting from the leading term, so no gamma function is evaluated and
    negative non-integer ``m`` is handled without special cases.

    Parameters
    ----------
    n : int
        degree, n >= 0
    m : float
        upper index; any real value
    z : complex or array_like
        evaluation point(s)

    Returns
    -------
    complex or numpy.ndarray
        same shape as ``z``
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"degree must be a non-negative integer, got {n}")
    n = int(n)
    coeffs = laguerre_coefficients(n, m)
    z = np.asarray(z)
    acc = np.full(z.shape, coeffs[n], dtype=np.result_type(z.dtype, float))
    for j in range(n - 1, -1, -1):
        acc = acc * z + coeffs[j]
    return acc[()] if acc.ndim == 0 else acc


def laguerre_coefficients(n: int, m: float) -> np.ndarray:
    """Power-basis coefficients a_0..a_n of L_n^m, lowest degree first."""
    coeffs = np.empty(n + 1)
    # C(n+m, 0) = 1 for the z^n term; C(n+m, n-j+1) = C(n+m, n-j) (m+j)/(n-j+1)
    binom = 1.0
    for j in range(n, -1, -1):
        coeffs[j] = (-1) ** j * binom / math.factorial(j)
        binom *= (m + j) / (n - j + 1)
    return coeffs


def hyp2f1(a: float, b: float, c: float, z: complex, rtol: float = 1e-14,
           max_terms: int = 100_000) -> complex:
    """Gauss hypergeometric series F(a, b; c; z) for |z| < 1.

    Summation stops once a term falls below ``rtol`` relative to the partial
    sum (or the series terminates).  No analytic continuation is attempted.
    """
    if _is_nonpositive_integer(c):
        raise DomainError(f"c = {c:g} is a non-positive integer")
    if abs(z) >= 1:
        raise DomainError(f"|z| = {abs(z):g} outside the unit disk")
    total = 1.0
    term = 1.0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if term == 0 or abs(term) <= rtol * abs(total):
            return total
    raise DomainError(f"series did not converge within {max_terms} terms")


@dataclass(frozen=True)
class Jet:
    """Truncated power series c_0 + c_1 h + ... + c_K h^K.

    All arithmetic truncates at order K; operands of different order are
    rejected rather than silently padded.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("jet needs a non-empty 1-D coefficient list")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value: float, order: int) -> "Jet":
        coeffs = np.zeros(order + 1)
        coeffs[0] = value
        return cls(coeffs)

    @classmethod
    def variable(cls, order: int) -> "Jet":
        """The expansion variable h itself."""
        coeffs = np.zeros(order + 1)
        if order >= 1:
            coeffs[1] = 1.0
        return cls(coeffs)

    def derivative_at_zero(self, k: int) -> float:
        """k-th derivative at h = 0, i.e. k! c_k."""
        return math.factorial(k) * self.coeffs[k]

    def _check(self, other: "Jet"):
        if other.order != self.order:
            raise ValueError(f"jet order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return Jet(self.coeffs + other.coeffs)
        out = self.coeffs.copy()
        out[0] += other
        return Jet(out)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            return jet_product(self, other)
        return Jet(self.coeffs * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Jet) and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None


def jet_product(a: Jet, b: Jet) -> Jet:
    """Cauchy product of two jets of equal order, truncated at that order."""
    a._check(b)
    k = a.order
    return Jet(np.convolve(a.coeffs, b.coeffs)[: k + 1])


def jet_binomial_power(p: float, order: int) -> Jet:
    """Jet of (1 + h)^p: the generalized binomial coefficients C(p, k)."""
    coeffs = np.empty(order + 1)
    coeffs[0] = 1.0
    for k in range(1, order + 1):
        coeffs[k] = coeffs[k - 1] * (p - k + 1) / k
    return Jet(coeffs)


def hyp2f1_jet(a: float, b: float, c: float, w: Jet) -> Jet:
    """Jet of F(a, b; c; w(h)) about h = 0, for a jet ``w`` with w(0) = 0.

    Since w^k starts at h^k, only the first K + 1 series terms contribute at
    order K, and the sum is assembled by Horner's rule in jet arithmetic.
    """
    if _is_nonpositive_integer(c):
        raise DomainError(f"c = {c:g} is a non-positive integer")
    if w.coeffs[0] != 0:
        raise DomainError("inner jet must vanish at h = 0")
    order = w.order
    series = np.empty(order + 1)
    series[0] = 1.0
    for k in range(order):
        series[k + 1] = series[k] * (a + k) * (b + k) / ((c + k) * (k + 1))
    acc = Jet.constant(series[order], order)
    for k in range(order - 1, -1, -1):
        acc = acc * w + series[k]
    return acc
