import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscq import DomainError, OouraMoriMap1, OouraMoriMap2, SingleExponentialMap, make_map
from oscq.maps import (
    DecayClass,
    MapKind,
    om1_derivative,
    om1_evaluate,
    om2_alpha,
    om2_derivative,
    om2_evaluate,
    se_derivative,
    se_derivative_complex,
    se_evaluate,
    se_evaluate_complex,
    se_excess,
    se_inverse,
    se_inverse_complex,
    se_second_derivative,
    se_second_derivative_complex,
)

import oracles

ALL_MAPS = [SingleExponentialMap(), OouraMoriMap1(), OouraMoriMap2(M=4.0), OouraMoriMap2(M=10.0, beta=0.5)]


# ---------------------------------------------------------------------------
# single exponential map


def test_se_evaluate_examples():
    assert se_evaluate(0.0) == pytest.approx(math.log(2), rel=1e-16)
    assert se_evaluate(800.0) == 800.0
    with mp.workdps(40):
        ref = float(mp.log1p(mp.exp(-40)))
    assert se_evaluate(-40.0) == pytest.approx(ref, rel=1e-12)


def test_se_derivative_examples():
    assert se_derivative(0.0) == 0.5
    assert se_derivative(800.0) == 1.0
    assert se_derivative(1.0) == pytest.approx(oracles.central_difference(se_evaluate, 1.0, 1e-5), rel=1e-8)
    assert 0 < se_derivative(-700.0) < 1e-300


def test_se_second_derivative_matches_difference():
    for u in (-5.0, -0.3, 0.0, 2.0, 7.0):
        fd = oracles.central_difference(se_derivative, u, 1e-5)
        assert se_second_derivative(u) == pytest.approx(fd, rel=1e-7, abs=1e-14)


def test_se_inverse_examples():
    assert se_inverse(math.log(2)) == pytest.approx(0.0, abs=1e-16)
    assert se_inverse(1e-8) == pytest.approx(math.log(1e-8) + 5e-9, abs=1e-15)
    u = np.linspace(-30, 30, 601)
    assert np.max(np.abs(se_inverse(se_evaluate(u)) - u)) < 1e-12


def test_se_inverse_domain():
    with pytest.raises(DomainError):
        se_inverse(0.0)
    with pytest.raises(DomainError):
        se_inverse(np.array([1.0, -1.0]))


def test_se_excess_is_accurate():
    for u in (1.0, 10.0, 35.0, 300.0):
        with mp.workdps(40):
            ref = float(mp.log1p(mp.exp(-u)))
        assert se_excess(u) == pytest.approx(ref, rel=1e-14)


def test_se_complex_examples():
    assert se_evaluate_complex(1j * math.pi / 2) == pytest.approx(complex(math.log(math.sqrt(2)), math.pi / 4), rel=1e-15)
    w0 = se_inverse_complex(complex(0, 1) / 4)
    assert 0 < w0.imag < math.pi
    # root-finding oracle: e^{phi(w0)} = e^z
    assert cmath.exp(se_evaluate_complex(w0)) == pytest.approx(cmath.exp(0.25j), rel=1e-14)


def test_se_complex_agrees_with_real_on_axis():
    for u in (-30.0, -1.0, 0.0, 2.5, 40.0):
        assert se_evaluate_complex(u).real == pytest.approx(se_evaluate(u), rel=1e-15)
        assert se_derivative_complex(u).real == pytest.approx(se_derivative(u), rel=1e-15)
        assert se_second_derivative_complex(u).real == pytest.approx(se_second_derivative(u), rel=1e-12)


def test_se_complex_branch_points():
    for w in (1j * math.pi, -1j * math.pi, 3j * math.pi, 1j * math.pi + 1e-13):
        with pytest.raises(DomainError):
            se_evaluate_complex(w)
    with pytest.raises(DomainError):
        se_inverse_complex(2j * math.pi)


def test_se_inverse_complex_against_mpmath(rng):
    for _ in range(50):
        z = complex(rng.uniform(-3, 5), rng.uniform(0.01, 3))
        ref = complex(mp.log(mp.expm1(mp.mpc(z))))
        assert se_inverse_complex(z) == pytest.approx(ref, rel=1e-13)


def test_se_inverse_complex_v0_limit_left_pole():
    # Im w0 -> pi - arctan(b/|a|) + bt/(2m) for a < 0
    a, b, t = -1.0, 1.0, 1.0
    for m in (50.0, 200.0):
        w0 = se_inverse_complex(complex(a, b) * t / m)
        expected = math.pi - math.atan(b / abs(a)) + b * t / (2 * m)
        assert w0.imag == pytest.approx(expected, abs=2.0 / m**2)
        assert w0.imag == pytest.approx(cmath.phase(complex(a, b)) + b * t / (2 * m), abs=2.0 / m**2)


# ---------------------------------------------------------------------------
# Ooura-Mori maps


def test_om1_examples():
    assert om1_evaluate(0.0) == pytest.approx(1 / (2 * math.pi), rel=1e-15)
    assert om1_evaluate(5.0) == pytest.approx(5.0, rel=1e-12)
    with mp.workdps(50):
        ref = float(-5 / mp.expm1(2 * mp.pi * mp.sinh(5)))
    assert om1_evaluate(-5.0) == pytest.approx(ref, rel=1e-10)


def test_om2_examples():
    alpha = 0.25 / math.sqrt(1 + 4 * math.log(5) / (2 * math.pi))
    assert om2_alpha(4.0) == pytest.approx(alpha, rel=1e-15)
    assert om2_evaluate(0.0, M=4.0) == pytest.approx(1 / (2 + alpha + 0.25), rel=1e-14)
    with mp.workdps(40):
        u = mp.mpf("1e-6")
        g = 2 * u + alpha * (1 - mp.exp(-u)) + 0.25 * (mp.exp(u) - 1)
        limit = float(u / (1 - mp.exp(-g)))
    assert om2_evaluate(1e-6, M=4.0) == pytest.approx(limit, rel=1e-12)
    assert om2_evaluate(10.0, M=4.0) == pytest.approx(10.0, rel=1e-10)
    fd = oracles.central_difference(lambda v: om2_evaluate(v, M=4.0), 1.0, 1e-5)
    assert om2_derivative(1.0, M=4.0) == pytest.approx(fd, rel=1e-7)


@pytest.mark.parametrize("u", [-1.2e-4, -9e-5, 0.0, 5e-5, 1.1e-4])
def test_removable_singularity_fill_is_continuous(u):
    with mp.workdps(40):
        U = mp.mpf(u)
        K = 2 * mp.pi
        ref1 = K ** -1 if u == 0 else U / (1 - mp.exp(-K * mp.sinh(U)))
    assert om1_evaluate(u) == pytest.approx(float(ref1), rel=1e-12)


def test_om_derivatives_match_differences():
    for u in (-3.0, -0.5, -5e-5, 0.0, 0.7, 2.0):
        fd1 = oracles.central_difference(om1_evaluate, u, 1e-6)
        assert om1_derivative(u) == pytest.approx(fd1, rel=1e-6, abs=1e-12)
        fd2 = oracles.central_difference(lambda v: om2_evaluate(v, M=8.0), u, 1e-6)
        assert om2_derivative(u, M=8.0) == pytest.approx(fd2, rel=1e-6, abs=1e-12)


def test_om_parameter_validation():
    with pytest.raises(DomainError):
        OouraMoriMap1(K=0)
    with pytest.raises(DomainError):
        OouraMoriMap2(M=-1)


def test_om_extreme_arguments_are_finite():
    u = np.array([-800.0, -50.0, 50.0, 800.0])
    for tmap in ALL_MAPS:
        assert np.all(np.isfinite(tmap.evaluate(u)))
        assert np.all(np.isfinite(tmap.derivative(u)))


# ---------------------------------------------------------------------------
# uniform interface


def test_make_map():
    assert isinstance(make_map("se"), SingleExponentialMap)
    assert isinstance(make_map("OM1"), OouraMoriMap1)
    om2 = make_map("om2", m=6.0)
    assert isinstance(om2, OouraMoriMap2) and om2.M == 6.0
    assert make_map("om2", M=3.0).M == 3.0
    with pytest.raises(DomainError):
        make_map("om2")
    with pytest.raises(DomainError):
        make_map("tanh-sinh")


def test_metadata():
    assert SingleExponentialMap().kind is MapKind.SINGLE_EXP
    assert SingleExponentialMap().decay_class is DecayClass.SINGLE_EXPONENTIAL
    assert OouraMoriMap1().decay_class is DecayClass.DOUBLE_EXPONENTIAL
    assert OouraMoriMap2(M=2).kind is MapKind.OOURA_MORI_2
    assert SingleExponentialMap().has_inverse
    with pytest.raises(NotImplementedError):
        OouraMoriMap1().inverse(1.0)
    assert "K=" in repr(OouraMoriMap1())


# ---------------------------------------------------------------------------
# invariants


@pytest.mark.invariant
@pytest.mark.parametrize("tmap", ALL_MAPS, ids=repr)
def test_positive_and_monotone(tmap):
    u = np.linspace(-30, 30, 10_000)
    v = tmap.evaluate(u)
    assert np.all(v >= 0)
    assert np.all(v[u > -5] > 0)
    # strictly increasing wherever the value is representable
    live = v > 1e-300
    assert np.all(np.diff(v[live]) > 0)


@pytest.mark.invariant
@pytest.mark.parametrize("tmap", ALL_MAPS, ids=repr)
def test_derivative_matches_difference(tmap):
    for u in np.linspace(-4, 4, 17):
        fd = oracles.central_difference(tmap.evaluate, float(u), 1e-6)
        assert tmap.derivative(float(u)) == pytest.approx(fd, rel=1e-6, abs=1e-12)


@pytest.mark.invariant
@pytest.mark.parametrize("tmap", ALL_MAPS, ids=repr)
def test_asymptotic_contract(tmap):
    assert abs(tmap.evaluate(40.0) - 40.0) < 1e-10
    assert tmap.evaluate(-40.0) < 1e-10
    assert tmap.excess(40.0) == pytest.approx(tmap.evaluate(40.0) - 40.0, abs=1e-14)


@pytest.mark.invariant
def test_se_two_term_asymptotics():
    u = np.linspace(5, 30, 200)
    c_plus = np.max(np.abs(se_excess(u) - np.exp(-u)) / np.exp(-2 * u))
    assert c_plus <= 2
    u = np.linspace(-30, -5, 200)
    c_minus = np.max(np.abs(se_evaluate(u) - np.exp(u)) / np.exp(2 * u))
    assert c_minus <= 2


@pytest.mark.invariant
def test_se_complex_conjugate_symmetry(rng):
    for _ in range(100):
        w = complex(rng.uniform(-10, 10), rng.uniform(-3.1, 3.1))
        assert se_evaluate_complex(w.conjugate()) == pytest.approx(se_evaluate_complex(w).conjugate(), rel=1e-14)


@given(st.floats(-30, 30))
@settings(max_examples=100, deadline=None)
def test_property_se_round_trip(u):
    assert se_inverse(se_evaluate(u)) == pytest.approx(u, abs=1e-12)


@given(st.floats(-20, 20), st.floats(0.05, 3.09))
@settings(max_examples=100, deadline=None)
def test_property_se_complex_inverse(x, y):
    w = complex(x, y)
    assert se_inverse_complex(se_evaluate_complex(w)) == pytest.approx(w, rel=1e-10, abs=1e-10)
