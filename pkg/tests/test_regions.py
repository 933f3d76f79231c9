import numpy as np
import pytest

from numrange.errors import DomainError, NegativeTError
from numrange.fov import numerical_radius
from numrange.linalg import is_psd, min_eigenvalue
from numrange.regions import (
    drury_params_inner,
    drury_params_outer,
    q_form,
    region_S_contains,
    teardrop_contains,
    teardrop_support,
)

SHIFT2 = np.array([[0, 2], [0, 0]], dtype=complex)


def normalized_random(seed, n):
    rng = np.random.default_rng(seed)
    T = rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))
    return T / numerical_radius(T)


class TestTeardropSupport:
    def test_alpha_zero_is_unit_disk(self):
        for phi in np.linspace(0, 2 * np.pi, 13):
            assert teardrop_support(0.0, phi) == pytest.approx(1.0)

    def test_sharp_direction(self):
        assert teardrop_support(0.5, 0.0) == pytest.approx(1.25)

    def test_opposite_direction(self):
        assert teardrop_support(0.5, np.pi) == pytest.approx(1.0)

    def test_always_at_least_unit_disk(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            alpha = np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            phis = rng.uniform(0, 2 * np.pi, 50)
            assert np.all(np.asarray(teardrop_support(alpha, phis)) >= 1.0)

    def test_rotation_covariance(self):
        alpha = 0.6
        for psi in (0.4, 2.2):
            rotated = alpha * np.exp(1j * psi)
            for phi in np.linspace(0, 2 * np.pi, 17):
                assert teardrop_support(rotated, phi + psi) == pytest.approx(
                    teardrop_support(alpha, phi))


class TestTeardropContains:
    def test_sharp_boundary_point(self):
        assert teardrop_contains(0.5, 1.25)

    def test_just_outside(self):
        assert not teardrop_contains(0.5, 1.26, tol=1e-9)

    def test_origin_always_inside(self):
        for alpha in (0.0, 0.5, 0.9j, -0.3 + 0.4j, 1.0):
            assert teardrop_contains(alpha, 0.0)


class TestRegionS:
    def test_boundary_points(self):
        assert region_S_contains(0.0, -0.25)
        assert region_S_contains(0.5, 0.0)
        assert not region_S_contains(0.5, -0.01)
        assert not region_S_contains(1.0, 0.99)
        assert region_S_contains(1.0, 1.0)

    def test_seams_agree(self):
        # t^2 - 1/4 and 2t - 1 coincide at t = 1/2; 2t - 1 and t^2 at t = 1
        assert 0.5 ** 2 - 0.25 == 2 * 0.5 - 1
        assert 2 * 1.0 - 1 == 1.0 ** 2

    def test_negative_t_raises(self):
        with pytest.raises(NegativeTError):
            region_S_contains(-0.1, 0.0)


class TestQForm:
    def test_shift_matrix(self):
        t, s = 0.3, -0.1
        assert np.allclose(q_form(SHIFT2, t, s),
                           [[1, 2 * t], [2 * t, 1 + 4 * s]])

    def test_minus_identity(self):
        t, s = 0.7, 0.2
        assert np.allclose(q_form(-np.eye(3), t, s), (1 - 2 * t + s) * np.eye(3))

    def test_scaled_identity_case_three(self):
        t, s = 1.5, 1.8  # t <= s < t^2
        T = -(t / s) * np.eye(2)
        assert np.allclose(q_form(T, t, s), (1 - t * t / s) * np.eye(2))

    def test_operator_inequality_on_grid(self):
        # Q(T, t, t^2 - 1/4) >= 0 whenever w(T) <= 1
        for seed in (41, 42):
            T = normalized_random(seed, 4)
            for t in np.linspace(0, 0.5, 21):
                ok, lam = is_psd(q_form(T, t, t * t - 0.25), 1e-9)
                assert ok, (seed, t, lam)

    def test_case2_decomposition_identity(self):
        # Q(T, t, 2t-1) = (1-t)(2I + (T+T*)) + (2t-1)(I+T)*(I+T)
        T = normalized_random(43, 5)
        I = np.eye(5)
        for t in (0.5, 0.7, 1.0):
            lhs = q_form(T, t, 2 * t - 1)
            rhs = ((1 - t) * (2 * I + T + T.conj().T)
                   + (2 * t - 1) * (I + T).conj().T @ (I + T))
            assert np.max(np.abs(lhs - rhs)) < 1e-10

    def test_case3_decomposition_identity(self):
        T = normalized_random(44, 4)
        I = np.eye(4)
        for t in (1.0, 1.4, 2.0):
            lhs = q_form(T, t, t * t)
            rhs = (I + t * T).conj().T @ (I + t * T)
            assert np.max(np.abs(lhs - rhs)) < 1e-10

    def test_sharpness_below_each_branch(self):
        for t in np.linspace(0.05, 0.45, 9):
            ok, _ = is_psd(q_form(SHIFT2, t, t * t - 0.25 - 0.01))
            assert not ok
        for t in np.linspace(0.55, 1.0, 9):
            ok, _ = is_psd(q_form(-np.eye(2), t, 2 * t - 1 - 0.01))
            assert not ok
        for t in np.linspace(1.1, 2.0, 9):
            s = t * t - 0.01
            assert s >= t
            ok, _ = is_psd(q_form(-(t / s) * np.eye(2), t, s))
            assert not ok

    def test_case1_witness_determinant(self):
        t = 0.3
        Q = q_form(SHIFT2, t, t * t - 0.25 - 0.01)
        assert np.linalg.det(Q).real == pytest.approx(-0.04, abs=1e-12)
        assert min_eigenvalue(Q) < 0


class TestDruryParams:
    def test_outer_alpha_zero_theta_pi(self):
        omega, t, s = drury_params_outer(0.0, np.pi)
        assert omega == pytest.approx(1.0, abs=1e-12)
        assert t == pytest.approx(0.5)
        assert s == pytest.approx(0.0)

    def test_outer_alpha_half_theta_pi(self):
        _, t, s = drury_params_outer(0.5, np.pi)
        assert t == pytest.approx(0.75)
        assert s == pytest.approx(0.5)

    def test_inner_alpha_zero_theta_zero(self):
        omega, t, s = drury_params_inner(0.0, 0.0)
        assert omega == pytest.approx(-1.0, abs=1e-12)
        assert t == pytest.approx(0.5)
        assert s == pytest.approx(0.0)

    def test_inner_degenerate_corner(self):
        omega, t, s = drury_params_inner(0.5, 0.0)
        assert t == pytest.approx(0.0)
        assert s == pytest.approx(-0.25)
        assert abs(abs(omega) - 1) < 1e-12

    def test_seam_agreement(self):
        for alpha in (0.1, 0.5, 0.9):
            theta = np.arccos(alpha)
            _, t_out, s_out = drury_params_outer(alpha, theta)
            _, t_in, s_in = drury_params_inner(alpha, theta)
            assert t_out == pytest.approx(0.5, abs=1e-12)
            assert t_in == pytest.approx(0.5, abs=1e-12)
            assert s_out == pytest.approx(0.0, abs=1e-12)
            assert s_in == pytest.approx(0.0, abs=1e-12)

    def test_parameter_ranges_and_relations(self):
        for alpha in np.linspace(0.0, 0.98, 25):
            for c in np.linspace(-1.0, alpha, 25):
                omega, t, s = drury_params_outer(alpha, np.arccos(c))
                assert 0.5 - 1e-12 <= t <= 1.0 + 1e-12
                assert abs(s - (2 * t - 1)) < 1e-12
                assert abs(abs(omega) - 1) < 1e-12
            for c in np.linspace(alpha, 1.0, 25):
                omega, t, s = drury_params_inner(alpha, np.arccos(c))
                assert -1e-12 <= t <= 0.5 + 1e-12
                assert abs(s - (t * t - 0.25)) < 1e-12
                assert abs(abs(omega) - 1) < 1e-12

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            drury_params_outer(0.3, 0.0)  # cos(0) = 1 > alpha
        with pytest.raises(DomainError):
            drury_params_inner(0.3, np.pi)  # cos(pi) = -1 < alpha
        with pytest.raises(DomainError):
            drury_params_outer(1.2, np.pi)

    def test_psd_along_both_branches(self):
        # Q(omega T, t, s) >= 0 for the parameters of each half-plane family
        T = normalized_random(45, 3)
        alpha = 0.4
        for c in np.linspace(-1, alpha, 7):
            omega, t, s = drury_params_outer(alpha, np.arccos(c))
            ok, lam = is_psd(q_form(omega * T, t, s), 1e-8)
            assert ok, (c, lam)
        for c in np.linspace(alpha, 1, 7):
            omega, t, s = drury_params_inner(alpha, np.arccos(c))
            ok, lam = is_psd(q_form(omega * T, t, s), 1e-8)
            assert ok, (c, lam)
