import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptcoulomb.model import (
    Admissibility,
    AdmissibilityError,
    ModelParams,
    StateLabel,
    admissibility,
    bound_state,
    contour_coord,
    energy,
    gamma_scale,
    list_spectrum,
    potential,
    wavefunction,
)
from ptcoulomb.special import laguerre

CANON = ModelParams(0.25, -1.0, 1.0)
ALPHAS = (0.1, 0.25, 0.4, 0.6, 0.75, 0.9)


def admissible(params, n_max):
    return [
        StateLabel(q, n)
        for q, n in itertools.product((1, -1), range(n_max + 1))
        if admissibility(params, StateLabel(q, n)) is Admissibility.ADMISSIBLE
    ]


def test_params_validation():
    for bad in [(0.0, -1, 1), (1.0, -1, 1), (0.5, 0.0, 1), (0.5, -1, 0.0), (0.5, -1, -2)]:
        with pytest.raises(ValueError):
            ModelParams(*bad)
    assert ModelParams(0.5, -1, 1).core_strength == 0.0
    assert ModelParams(0.25, -1, 1).core_strength == pytest.approx(-0.1875)


def test_label_validation():
    with pytest.raises(ValueError):
        StateLabel(0, 1)
    with pytest.raises(ValueError):
        StateLabel(1, -1)


@pytest.mark.parametrize("alpha,q,n,expected", [
    (0.5, 1, 0, Admissibility.FLOWN_AWAY),
    (0.25, -1, 0, Admissibility.ADMISSIBLE),
    (0.75, 1, 0, Admissibility.NOT_NORMALIZABLE),
    (0.75, 1, 1, Admissibility.ADMISSIBLE),
])
def test_admissibility(alpha, q, n, expected):
    assert admissibility(ModelParams(alpha, -1.0, 1.0), StateLabel(q, n)) is expected


def test_repulsive_coupling_flips_admissibility():
    # decaying states need beta and (2n - 2 q alpha + 1) of opposite sign
    params = ModelParams(0.75, 1.0, 1.0)
    assert admissibility(params, StateLabel(1, 0)) is Admissibility.ADMISSIBLE
    assert admissibility(params, StateLabel(-1, 0)) is Admissibility.NOT_NORMALIZABLE


@pytest.mark.parametrize("q,n,e,g", [
    (-1, 0, -4 / 9, 4 / 3),
    (1, 1, -0.16, 0.8),
    (1, 0, -4.0, 4.0),
    (-1, 1, -1 / 12.25, 4 / 7),
])
def test_energy_and_scale(q, n, e, g):
    label = StateLabel(q, n)
    assert energy(CANON, label) == pytest.approx(e, rel=1e-15)
    assert gamma_scale(CANON, label) == pytest.approx(g, rel=1e-15)


def test_energy_rejects_excluded_states():
    with pytest.raises(AdmissibilityError) as info:
        energy(ModelParams(0.5, -1, 1), StateLabel(1, 0))
    assert info.value.status is Admissibility.FLOWN_AWAY
    with pytest.raises(AdmissibilityError):
        gamma_scale(ModelParams(0.75, -1, 1), StateLabel(1, 0))


def test_contour_coord():
    assert contour_coord(1.0, 0.5) == 1.0 - 0.5j
    assert contour_coord(-1.0, 0.5) == 1.0 + 0.5j
    assert contour_coord(0.0, 0.5) == -0.5j
    xs = np.linspace(-7, 7, 50)
    u = contour_coord(xs, 0.3)
    assert np.all(u.real >= 0)
    np.testing.assert_array_equal(np.conj(contour_coord(-xs, 0.3)), u)


def test_potential_values():
    assert potential(ModelParams(0.5, -1, 1), 1.0) == pytest.approx(-0.5 - 0.5j, abs=1e-15)
    # independent evaluation: G/u^2 + beta/u at u = -0.5i, G = -3/16
    g, u = -0.1875, -0.5j
    direct = g / (u * u) + -1.0 / u
    value = potential(ModelParams(0.25, -1, 0.5), 0.0)
    assert value == pytest.approx(direct, abs=1e-15)
    assert value == pytest.approx(0.75 - 2.0j, abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 0.99), st.floats(-5, 5).filter(lambda b: abs(b) > 1e-3),
       st.floats(0.05, 5), st.floats(1e-3, 50))
def test_potential_pt_symmetry(alpha, beta, c, x):
    params = ModelParams(alpha, beta, c)
    assert abs(np.conj(potential(params, -x)) - potential(params, x)) <= 1e-15 * max(
        1.0, abs(potential(params, x)))


def test_wavefunction_pt_and_decay():
    label = StateLabel(-1, 0)
    psi_plus = wavefunction(CANON, label, 1.3)
    psi_minus = wavefunction(CANON, label, -1.3)
    assert abs(np.conj(psi_minus) - psi_plus) <= 1e-13
    g = gamma_scale(CANON, label)
    assert abs(wavefunction(CANON, label, 50 / g)) < 1e-8 * abs(wavefunction(CANON, label, 1 / g))


def test_first_excited_node_factor():
    label = StateLabel(-1, 1)
    m = -2 * label.q * CANON.alpha
    # L_1^m(s) = m + 1 - s vanishes at s = 1 + m
    assert abs(laguerre(1, m, 1 + m)) < 1e-15


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("beta", [-1.0, -2.0])
def test_wavefunction_pt_on_grid(alpha, beta):
    params = ModelParams(alpha, beta, 1.0)
    for label in admissible(params, 5):
        g = gamma_scale(params, label)
        xs = np.linspace(-10 / g, 10 / g, 201)
        xs = xs[xs != 0]
        psi = wavefunction(params, label, xs)
        mirrored = np.conj(wavefunction(params, label, -xs))
        assert np.max(np.abs(mirrored - psi)) <= 1e-12 * max(1.0, np.max(np.abs(psi)))


def test_gamma_equals_twice_root_energy():
    for alpha, beta in itertools.product(ALPHAS, (-1.0, -2.0, -0.3)):
        params = ModelParams(alpha, beta, 1.0)
        for label in admissible(params, 8):
            state = bound_state(params, label)
            assert state.gamma == pytest.approx(2 * math.sqrt(abs(state.energy)), rel=1e-14)
            assert state.energy < 0 < state.gamma
            assert state.norm_magnitude > 0 and state.phase_nu == 0


def test_energy_increases_with_n():
    for alpha in ALPHAS:
        params = ModelParams(alpha, -1.0, 1.0)
        for q in (1, -1):
            es = [energy(params, lab) for lab in admissible(params, 10) if lab.q == q]
            assert all(a < b < 0 for a, b in zip(es, es[1:]))


def test_spectrum_independent_of_shift():
    base = None
    for c in (0.1, 1.0, 5.0):
        params = ModelParams(0.4, -1.5, c)
        states = [e.state for e in list_spectrum(params, 4)]
        if base is None:
            base = states
        assert states == base


def test_spectrum_levels_distinct_off_half():
    for alpha in ALPHAS:
        params = ModelParams(alpha, -1.0, 1.0)
        es = [e.state.energy for e in list_spectrum(params, 8) if e.state]
        assert len(set(es)) == len(es)


def test_level_crossing_at_half():
    # alpha = 1/2: (q=+1, n+1) and (q=-1, n) share the denominator 2n + 2
    params = ModelParams(0.5, -1.0, 1.0)
    assert energy(params, StateLabel(1, 2)) == energy(params, StateLabel(-1, 1))


def test_hermitian_limit_identity():
    for alpha, beta in itertools.product(ALPHAS, (-1.0, -2.0)):
        params = ModelParams(alpha, beta, 1.0)
        ell = alpha - 0.5
        for n in range(8):
            textbook = -beta**2 / (2 * (n + ell + 1)) ** 2
            assert energy(params, StateLabel(-1, n)) == textbook


def test_list_spectrum_canonical():
    entries = list_spectrum(CANON, 1)
    got = [(e.label.q, e.label.n, e.state.energy) for e in entries]
    expected = [(1, 0, -4.0), (-1, 0, -4 / 9), (1, 1, -0.16), (-1, 1, -1 / 12.25)]
    assert [(q, n) for q, n, _ in got] == [(q, n) for q, n, _ in expected]
    for (_, _, e), (_, _, ref) in zip(got, expected):
        assert e == pytest.approx(ref, rel=1e-15)
    assert got[3][2] == pytest.approx(-0.081633, abs=5e-7)


def test_list_spectrum_flags_excluded():
    entries = list_spectrum(ModelParams(0.5, -1, 1), 0)
    assert [(e.label, e.status) for e in entries] == [
        (StateLabel(-1, 0), Admissibility.ADMISSIBLE),
        (StateLabel(1, 0), Admissibility.FLOWN_AWAY),
    ]
    assert entries[0].state.energy == pytest.approx(-0.25)
    entries = list_spectrum(ModelParams(0.75, -1, 1), 0)
    assert entries[0].state.energy == pytest.approx(-0.16)
    assert entries[1].status is Admissibility.NOT_NORMALIZABLE and entries[1].state is None


def test_normalized_wavefunction_scales_by_norm():
    label = StateLabel(1, 2)
    state = bound_state(CANON, label)
    x = np.array([-2.0, 0.4, 3.1])
    np.testing.assert_allclose(wavefunction(CANON, label, x, normalized=True),
                               state.norm_magnitude * wavefunction(CANON, label, x), rtol=1e-15)
