import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relbell.kinematics import BoostParameters, MomentumState, angle_decomposition
from relbell.observables import (SIGMA_X, ClosedFormUnavailable,
                                 MeasurementDirection, classical_limit_correlation,
                                 correlation_weights, expectation_closed_form,
                                 joint_expectation, relativistic_spin_vector,
                                 spin_observable)
from relbell.spin_states import TwoParticleSpinState, bell_state, boost_two_particle

X_HAT = MeasurementDirection(np.array([1.0, 0.0, 0.0]))
Y_HAT = MeasurementDirection(np.array([0.0, 1.0, 0.0]))
Z_HAT = MeasurementDirection(np.array([0.0, 0.0, 1.0]))

betas = st.floats(min_value=0.0, max_value=0.999)
unit_angles = st.tuples(st.floats(min_value=-1.0, max_value=1.0),
                        st.floats(min_value=0.0, max_value=2.0 * math.pi,
                                  exclude_max=True))


def direction(angles) -> MeasurementDirection:
    cos_t, phi = angles
    sin_t = math.sqrt(1.0 - cos_t**2)
    return MeasurementDirection(np.array([sin_t * math.cos(phi),
                                          sin_t * math.sin(phi), cos_t]))


def worked_point():
    return (BoostParameters.from_cosh_alpha(2.0),
            MomentumState.from_cosh_delta(1.0, 2.0, 0.0))


class TestMeasurementDirection:
    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            MeasurementDirection.from_vector(np.zeros(3))

    def test_rejects_far_from_unit(self):
        with pytest.raises(ValueError):
            MeasurementDirection(np.array([1.0, 1.0, 0.0]))

    def test_scrubs_tiny_deviation(self):
        d = MeasurementDirection(np.array([1.0 + 5e-10, 0.0, 0.0]))
        assert np.linalg.norm(d.vec_a) == pytest.approx(1.0, abs=1e-15)

    def test_from_vector_normalizes(self):
        d = MeasurementDirection.from_vector(np.array([3.0, 0.0, 4.0]))
        assert np.allclose(d.vec_a, [0.6, 0.0, 0.8])


class TestRelativisticSpinVector:
    def test_rest(self):
        s = np.array([0.3, -0.4, 0.5])
        assert np.allclose(relativistic_spin_vector(s, BoostParameters.from_beta(0.0)), s)

    def test_parallel_invariant(self):
        b = BoostParameters.from_beta(0.95)
        assert np.allclose(relativistic_spin_vector(np.array([1.0, 0, 0]), b),
                           [1.0, 0, 0], atol=1e-15)

    def test_perpendicular_scaling(self):
        b = BoostParameters.from_beta(math.sqrt(3) / 2)
        assert np.allclose(relativistic_spin_vector(np.array([0, 0, 1.0]), b),
                           [0, 0, 0.5], atol=1e-12)


class TestSpinObservable:
    def test_rest(self):
        a = direction((0.3, 1.1))
        obs = spin_observable(a, BoostParameters.from_beta(0.0))
        assert np.allclose(obs.effective_direction, a.vec_a, atol=1e-15)

    def test_parallel_direction_unchanged(self):
        obs = spin_observable(X_HAT, BoostParameters.from_beta(0.9))
        assert np.allclose(obs.matrix, SIGMA_X, atol=1e-15)

    def test_hand_value(self):
        a = MeasurementDirection(np.array([1.0, 0.0, 1.0]) / math.sqrt(2))
        obs = spin_observable(a, BoostParameters.from_beta(math.sqrt(3) / 2))
        assert np.allclose(obs.effective_direction,
                           [0.8944271909999159, 0.0, 0.4472135954999579], atol=1e-12)

    @given(unit_angles, betas)
    @settings(max_examples=200)
    def test_squares_to_identity(self, angles, beta):
        obs = spin_observable(direction(angles), BoostParameters.from_beta(beta))
        assert np.abs(obs.matrix @ obs.matrix - np.eye(2)).max() < 1e-12


class TestJointExpectation:
    def test_singlet_rest_frame(self):
        rng = np.random.default_rng(3)
        rest = BoostParameters.from_beta(0.0)
        singlet = bell_state("11")
        for _ in range(20):
            a = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            b = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            assert joint_expectation(singlet, a, b, rest) == pytest.approx(
                -float(a.vec_a @ b.vec_a), abs=1e-12)

    def test_worked_point(self):
        boost, m = worked_point()
        state = boost_two_particle(bell_state("00"), boost, m)
        assert joint_expectation(state, Z_HAT, Z_HAT, boost) == pytest.approx(0.28, abs=1e-12)

    def test_eigenstate(self):
        up_up = TwoParticleSpinState(np.array([1.0, 0, 0, 0], dtype=complex))
        rest = BoostParameters.from_beta(0.0)
        assert joint_expectation(up_up, Z_HAT, Z_HAT, rest) == pytest.approx(1.0)

    @given(unit_angles, unit_angles, betas, st.integers(0, 2**31 - 1))
    @settings(max_examples=100)
    def test_range(self, aa, ba, beta, seed):
        rng = np.random.default_rng(seed)
        amps = rng.normal(size=4) + 1j * rng.normal(size=4)
        state = TwoParticleSpinState(amps / np.linalg.norm(amps))
        val = joint_expectation(state, direction(aa), direction(ba),
                                BoostParameters.from_beta(beta))
        assert -1.0 - 1e-12 <= val <= 1.0 + 1e-12

    def test_slot_swap_symmetry(self):
        rng = np.random.default_rng(11)
        boost = BoostParameters.from_beta(0.6)
        for _ in range(20):
            amps = rng.normal(size=4) + 1j * rng.normal(size=4)
            amps /= np.linalg.norm(amps)
            state = TwoParticleSpinState(amps)
            swapped = TwoParticleSpinState(amps[[0, 2, 1, 3]])
            a = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            b = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            assert joint_expectation(state, a, b, boost) == pytest.approx(
                joint_expectation(swapped, b, a, boost), abs=1e-12)


class TestCorrelationWeights:
    def test_rest_frame_hand_expansion(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            a = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            b = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            ax, ay, az = a.vec_a
            bx, by, bz = b.vec_a
            wts = correlation_weights(a, b, 0.0)
            assert wts.xx == pytest.approx(ax * bx - ay * by + az * bz, abs=1e-14)
            assert wts.yy == pytest.approx(-ax * bx - ay * by - az * bz, abs=1e-14)
            assert wts.zz == pytest.approx(-ax * bx + ay * by + az * bz, abs=1e-14)
            assert wts.ww == pytest.approx(ax * bx + ay * by - az * bz, abs=1e-14)
            assert wts.xy == pytest.approx(az * bx - bz * ax, abs=1e-14)
            assert wts.xz == pytest.approx(ax * by + bx * ay, abs=1e-14)
            assert wts.xw == pytest.approx(az * by + bz * ay, abs=1e-14)
            assert wts.yz == pytest.approx(az * by - bz * ay, abs=1e-14)
            assert wts.yw == pytest.approx(ax * by - bx * ay, abs=1e-14)
            assert wts.zw == pytest.approx(az * bx + bz * ax, abs=1e-14)


class TestExpectationClosedForm:
    def test_rest_triplet_parallel(self):
        angles = angle_decomposition(BoostParameters.from_beta(0.0),
                                     MomentumState(1.0, 1.0, 0.3, 0.0))
        assert expectation_closed_form("00", angles, Z_HAT, Z_HAT, 0.0,
                                       case="A") == pytest.approx(1.0, abs=1e-14)

    def test_rest_frame_standard_correlations(self):
        rng = np.random.default_rng(7)
        angles = angle_decomposition(BoostParameters.from_beta(0.0),
                                     MomentumState(1.0, 0.7, 1.0, 2.0))
        for _ in range(20):
            a = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            b = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            ax, ay, az = a.vec_a
            bx, by, bz = b.vec_a
            assert expectation_closed_form("00", angles, a, b, 0.0) == pytest.approx(
                ax * bx - ay * by + az * bz, abs=1e-12)
            assert expectation_closed_form("01", angles, a, b, 0.0) == pytest.approx(
                -ax * bx + ay * by + az * bz, abs=1e-12)

    def test_worked_point(self):
        boost, m = worked_point()
        angles = angle_decomposition(boost, m)
        for case in ("A", "B"):
            assert expectation_closed_form("00", angles, Z_HAT, Z_HAT,
                                           boost.beta, case=case) == pytest.approx(
                0.28, abs=1e-12)

    def test_matrix_path_agreement(self):
        rng = np.random.default_rng(13)
        for _ in range(300):
            beta = rng.uniform(0.0, 0.999)
            boost = BoostParameters.from_beta(beta)
            m = MomentumState(1.0, rng.uniform(0.0, 10.0),
                              math.acos(rng.uniform(-1.0, 1.0)),
                              rng.uniform(0.0, 2.0 * math.pi))
            angles = angle_decomposition(boost, m)
            a = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            b = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            for label in ("00", "01"):
                state = boost_two_particle(bell_state(label), boost, m)
                dense = joint_expectation(state, a, b, boost)
                assert expectation_closed_form(label, angles, a, b, beta,
                                               case="B") == pytest.approx(
                    dense, abs=1e-10)

    def test_in_plane_case_agreement(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            beta = rng.uniform(0.0, 0.999)
            boost = BoostParameters.from_beta(beta)
            m = MomentumState(1.0, rng.uniform(0.0, 10.0),
                              rng.uniform(0.0, math.pi), 0.0)
            angles = angle_decomposition(boost, m)
            a = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            b = direction((rng.uniform(-1, 1), rng.uniform(0, 2 * math.pi)))
            for label in ("00", "01"):
                va = expectation_closed_form(label, angles, a, b, beta, case="A")
                vb = expectation_closed_form(label, angles, a, b, beta, case="B")
                assert va == pytest.approx(vb, abs=1e-12)

    def test_unsupported_label_signals(self):
        angles = angle_decomposition(*worked_point())
        for label in ("10", "11"):
            with pytest.raises(ClosedFormUnavailable):
                expectation_closed_form(label, angles, X_HAT, Y_HAT, 0.5)

    def test_ultra_relativistic_trend(self):
        # fixed angle set, beta pushed to 1 along 1 - 10^-k
        boost, m = worked_point()
        angles = angle_decomposition(boost, m)
        a = MeasurementDirection(np.array([0.6, 0.0, 0.8]))
        b = MeasurementDirection(np.array([-0.8, 0.6, 0.0]))
        target = (math.copysign(1.0, a.vec_a[0]) * math.copysign(1.0, b.vec_a[0])
                  * (angles.cos_omega_bar**2 - angles.sin_omega_bar**2))
        deviations = [abs(expectation_closed_form("00", angles, a, b,
                                                  1.0 - 10.0**-k, case="A") - target)
                      for k in range(1, 11)]
        assert all(d2 < d1 for d1, d2 in zip(deviations, deviations[1:]))
        assert deviations[-1] < 1e-4


class TestClassicalLimit:
    def test_parallel(self):
        assert classical_limit_correlation(X_HAT, X_HAT) == 1.0

    def test_sign_product(self):
        a = MeasurementDirection(np.array([1.0, 1.0, 0.0]) / math.sqrt(2))
        b = MeasurementDirection(np.array([-1.0, 0.0, 0.0]))
        assert classical_limit_correlation(a, b) == -1.0

    def test_degenerate(self):
        assert classical_limit_correlation(Y_HAT, X_HAT) == 0.0
