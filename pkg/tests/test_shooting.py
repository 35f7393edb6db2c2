import math

import numpy as np
import pytest

from ptcoulomb.model import ModelParams, StateLabel, energy, gamma_scale, radial_function
from ptcoulomb.shooting import (
    BracketError,
    ShootingConfig,
    default_config,
    frobenius_seed,
    miss_function,
    scan_spectrum,
    shooting_eigensolve,
)

CANON = ModelParams(0.25, -1.0, 1.0)


@pytest.mark.parametrize("q,bracket,expected", [
    (-1, (-0.5, -0.4), -0.444444),
    (1, (-4.5, -3.5), -4.0),
    (-1, (-0.09, -0.07), -0.081633),
])
def test_reference_eigenvalues(q, bracket, expected):
    assert shooting_eigensolve(CANON, q, bracket) == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("alpha", [0.1, 0.4, 0.6, 0.9])
def test_matches_closed_form(alpha):
    params = ModelParams(alpha, -1.5, 1.0)
    for q in (1, -1):
        for n in range(3):
            label = StateLabel(q, n)
            if gamma_scale_or_none(params, label) is None:
                continue
            e = energy(params, label)
            found = shooting_eigensolve(params, q, (1.2 * e, 0.8 * e))
            assert found == pytest.approx(e, rel=1e-8)


def gamma_scale_or_none(params, label):
    try:
        return gamma_scale(params, label)
    except ValueError:
        return None


def test_wrong_exponent_has_no_root():
    # the q = -1 ground level is not a q = +1 level
    with pytest.raises(BracketError):
        shooting_eigensolve(CANON, 1, (-0.53, -0.36))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        shooting_eigensolve(CANON, 0, (-1, -0.5))
    with pytest.raises(ValueError):
        default_config(CANON, (-0.1, 0.3))
    with pytest.raises(ValueError):
        ShootingConfig(t_start=1.0, t_match=0.5, t_far=3.0)
    with pytest.raises(ValueError):
        scan_spectrum(CANON, 1, -0.1, -1.0)


def test_blind_scan_recovers_levels():
    found = scan_spectrum(CANON, -1, -1.0, -0.02, points=40)
    expected = [energy(CANON, StateLabel(-1, n)) for n in range(3)]
    assert len(found) == 3
    np.testing.assert_allclose(sorted(found), sorted(expected), rtol=1e-8)


def test_frobenius_series_matches_radial_function():
    # at an eigenvalue the regular solution is the Laguerre closed form up to
    # the factor gamma^s
    for label in (StateLabel(-1, 1), StateLabel(1, 2)):
        s = 0.5 - label.q * CANON.alpha
        e = energy(CANON, label)
        g = gamma_scale(CANON, label)
        for t in (0.01, 0.5, 2.0):
            y, _ = frobenius_seed(CANON, s, e, t)
            closed = radial_function(CANON, label, t, g) / (g * t) ** s
            assert y == pytest.approx(closed.real / closed_norm(CANON, label, g), rel=1e-12)


def closed_norm(params, label, g):
    # value of the closed-form bracket at t -> 0, i.e. L_n^m(0) = C(n + m, n)
    m = -2 * label.q * params.alpha
    return math.gamma(label.n + m + 1) / (math.gamma(label.n + 1) * math.gamma(m + 1))


def test_miss_function_changes_sign_across_level():
    e = energy(CANON, StateLabel(1, 0))
    config = default_config(CANON, (1.1 * e, 0.9 * e))
    lo = miss_function(CANON, 1, 1.05 * e, config)
    hi = miss_function(CANON, 1, 0.95 * e, config)
    assert lo * hi < 0
    assert abs(lo) <= 1 and abs(hi) <= 1
