import json

import numpy as np
import pytest

from numrange.diskfun import Blaschke, Mobius, Polynomial
from numrange.blaschke import BlaschkeProduct
from numrange.formats import parse_matrix
from numrange.verify import (
    VerifyReport,
    check_berger_stampfli,
    check_drury,
    check_local_inequality,
    check_operator_inequality,
    check_power_inequality,
    check_props52,
    check_region_S,
    extremal_search,
    normalize_radius,
    random_blaschke,
    random_matrix,
    run_suites,
)

SHARP = Mobius(1, -2, 2, -1)
SHIFT2 = np.array([[0, 2], [0, 0]], dtype=complex)


class TestSamplers:
    def test_random_matrix_dims(self):
        rng = np.random.default_rng(1)
        dims = {random_matrix(rng).shape[0] for _ in range(200)}
        assert dims == set(range(2, 9))

    def test_normalize_radius_hits_one(self):
        rng = np.random.default_rng(2)
        from numrange.fov import numerical_radius
        T = normalize_radius(random_matrix(rng, 4))
        assert numerical_radius(T) == pytest.approx(1.0, abs=1e-5)

    def test_normalize_rejects_zero(self):
        with pytest.raises(ValueError):
            normalize_radius(np.zeros((3, 3), dtype=complex))

    def test_random_blaschke_vanishes(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            B = random_blaschke(rng, 6)
            assert B.vanishes_at_zero()
            assert 1 <= len(B.zeros) <= 6
            assert max(abs(a) for a in B.zeros) <= 0.9


class TestSuitesPass:
    @pytest.mark.parametrize("check", [
        check_berger_stampfli,
        check_local_inequality,
        check_operator_inequality,
        check_drury,
        check_props52,
    ])
    def test_small_run_has_no_failures(self, check):
        report = check(25, seed=7)
        assert report.passed
        assert report.failures == 0
        assert report.worst_residual <= report.tolerance

    def test_power_inequality(self):
        report = check_power_inequality(25, seed=7)
        assert report.passed

    def test_power_rejects_bad_nmax(self):
        with pytest.raises(ValueError):
            check_power_inequality(5, n_max=1)

    def test_region_s_membership_and_sharpness(self):
        report = check_region_S(10, seed=7)
        assert report.passed
        # the sharpness witnesses below the boundary must go strictly negative
        assert report.worst_residual <= report.tolerance

    def test_region_s_rejects_sparse_grid(self):
        with pytest.raises(ValueError):
            check_region_S(5, grid_density=5)


class TestDeterminism:
    def test_same_seed_byte_identical(self):
        a = check_berger_stampfli(20, seed=11).to_text()
        b = check_berger_stampfli(20, seed=11).to_text()
        assert a == b

    def test_different_seed_differs(self):
        a = check_berger_stampfli(20, seed=11)
        b = check_berger_stampfli(20, seed=12)
        assert a.worst_residual != b.worst_residual

    def test_run_suites_deterministic(self):
        names = ["power", "local-ineq"]
        first = "".join(r.to_text() for r in run_suites(names, 10, 5))
        second = "".join(r.to_text() for r in run_suites(names, 10, 5))
        assert first == second

    def test_trial_isolation(self):
        # trial i draws the same data regardless of how many trials run
        small = check_power_inequality(5, seed=3)
        big = check_power_inequality(10, seed=3)
        assert big.worst_residual >= small.worst_residual


class TestReport:
    def test_text_fields(self):
        r = VerifyReport("power", 10, 0, 1e-9, 1e-7, 42)
        text = r.to_text()
        assert "suite: power" in text
        assert "failures: 0" in text
        assert "seed: 42" in text
        assert r.passed
        assert not r.warning

    def test_warning_flag(self):
        r = VerifyReport("power", 10, 0, 0.9e-7, 1e-7, 42)
        assert r.passed and r.warning

    def test_failed_report_witness_roundtrip(self):
        r = VerifyReport("power", 1, 1, 2e-7, 1e-7, 42,
                         witness={"matrix": "dim 1\n0+0i\n", "power": 2})
        line = [ln for ln in r.to_text().splitlines()
                if ln.startswith("witness:")][0]
        data = json.loads(line[len("witness: "):])
        M = parse_matrix(data["matrix"])
        assert M.shape == (1, 1)
        assert not r.passed

    def test_json_dict(self):
        r = check_props52(5, seed=9)
        d = r.to_json_dict()
        assert d["suite"] == "props52"
        assert d["failures"] == 0
        json.dumps(d)  # must be serializable


class TestExtremalSearch:
    def test_identity_function_finds_radius_one(self):
        f = Polynomial((0, 1))
        best_w, T = extremal_search(f, 2, 60, seed=1)
        assert best_w == pytest.approx(1.0, abs=1e-6)
        assert T.shape == (2, 2)

    def test_squaring_stays_bounded(self):
        f = Blaschke(BlaschkeProduct(1.0, (0j, 0j)))
        best_w, _ = extremal_search(f, 2, 120, seed=2)
        assert best_w <= 1.0 + 1e-7

    def test_sharp_example_with_injected_candidate(self):
        best_w, T = extremal_search(
            SHARP, 2, 40, seed=3,
            initial_candidates=(SHIFT2,))
        assert best_w >= 1.25 - 1e-6
        assert best_w <= 1.25 + 1e-6

    def test_rejects_bad_iterations(self):
        with pytest.raises(ValueError):
            extremal_search(Polynomial((0, 1)), 2, 0)

    def test_deterministic(self):
        f = Polynomial((0, 0.5, 0.5))
        a = extremal_search(f, 2, 50, seed=4)
        b = extremal_search(f, 2, 50, seed=4)
        assert a[0] == b[0]
        assert np.array_equal(a[1], b[1])
