"""Sweep-table tests: shapes, physics trends, sentinels and determinism."""

import math

import numpy as np
import pytest

from twospinboson.bath import OhmicGapSpectrum, gamma_R_infinity
from twospinboson.entanglement import QubitAmplitudes
from twospinboson.sweeps import (
    DEFAULT_BATH_PAIRS,
    NO_STEADY_STATE,
    commensurability_table,
    default_steady_grid,
    default_temperature_grid,
    overlap_table,
    state_series,
    steady_state_table,
    thermal_overlap_table,
)

UNIFORM = QubitAmplitudes(0.5, 0.5, 0.5, 0.5)


class TestCommensurabilityTable:
    def test_integer_n_recovers_full_entanglement(self):
        table = commensurability_table(n_min=1.0, n_max=4.0, n_points=13,
                                       samples_per_period=2000)
        np.testing.assert_allclose(table["omega_over_lambda"],
                                   4.0 * np.sqrt(table["n"]), rtol=1e-12)
        for n_int in (1.0, 2.0, 3.0, 4.0):
            idx = int(np.argmin(np.abs(table["n"] - n_int)))
            np.testing.assert_allclose(table["c_max"][idx], 1.0, atol=1e-6)

    def test_between_integers_dips(self):
        table = commensurability_table(n_min=1.0, n_max=2.0, n_points=5,
                                       samples_per_period=1000)
        # n = 1.25 sits between revivals; its peak concurrence is lower.
        assert table["c_max"][1] < table["c_max"][0] - 1e-3
        assert np.all(table["c_max"] <= 1.0 + 1e-12)

    def test_residual_entropy_shrinks_with_n(self):
        # Larger n means weaker relative coupling, hence less mixing at the
        # concurrence maxima and smaller average entropy.
        table = commensurability_table(n_min=1.0, n_max=9.0, n_points=3,
                                       samples_per_period=1000)
        assert table["s_avg"][2] < table["s_avg"][0]

    def test_all_columns_same_length(self):
        table = commensurability_table(n_min=0.5, n_max=2.0, n_points=4,
                                       samples_per_period=200)
        lengths = {len(col) for col in table.values()}
        assert lengths == {4}

    def test_deterministic(self):
        kwargs = dict(n_min=1.0, n_max=3.0, n_points=3, samples_per_period=400)
        first = commensurability_table(**kwargs)
        second = commensurability_table(**kwargs)
        for key in first:
            assert np.array_equal(first[key], second[key])

    def test_rejects_bad_ranges(self):
        with pytest.raises(ValueError, match="n_min"):
            commensurability_table(n_min=0.1)
        with pytest.raises(ValueError, match="n_points"):
            commensurability_table(n_points=1)
        with pytest.raises(ValueError, match="degenerate"):
            commensurability_table(n_min=2.0, n_max=2.0)


class TestOverlapTable:
    def test_gapless_quarter_closed_form(self):
        # alpha = 1/4 gapless at t = 1: exp(-gamma_R) = 2^{-1/2}.
        table = overlap_table(np.array([1.0]), pairs=((0.0, 0.25),))
        np.testing.assert_allclose(table["overlap_gap0_alpha0.25"][0],
                                   2.0 ** -0.5, rtol=1e-6)

    def test_default_pairs_columns(self):
        t_grid = np.array([0.5, 1.0, 2.0])
        table = overlap_table(t_grid)
        assert len(table) == 1 + len(DEFAULT_BATH_PAIRS)
        assert "overlap_gap0.1_alpha0.5" in table
        for col in table.values():
            assert col.shape == t_grid.shape

    def test_gap_preserves_coherence(self):
        # At late times the gapped overlap sits at its plateau while the
        # gapless one keeps falling.
        t_grid = np.array([200.0, 400.0])
        table = overlap_table(t_grid, pairs=((0.0, 0.25), (0.1, 0.25)))
        gapless = table["overlap_gap0_alpha0.25"]
        gapped = table["overlap_gap0.1_alpha0.25"]
        assert np.all(gapped > gapless)
        plateau = math.exp(-gamma_R_infinity(OhmicGapSpectrum(alpha=0.25,
                                                              omega0=0.1)))
        np.testing.assert_allclose(gapped[-1], plateau, rtol=1e-2)

    def test_rejects_empty_pairs(self):
        with pytest.raises(ValueError, match="pairs"):
            overlap_table(np.array([1.0]), pairs=())


class TestStateSeries:
    def test_columns_and_scaling(self):
        spec = OhmicGapSpectrum(alpha=0.25)
        t_grid = np.linspace(0.1, 20.0, 25)
        table = state_series(spec, UNIFORM, t_grid)
        assert set(table) == {"t", "theta_t", "concurrence", "entropy",
                              "entropy_scaled", "overlap"}
        np.testing.assert_allclose(table["entropy_scaled"],
                                   2.0 * table["entropy"] / 3.0, rtol=1e-12)
        assert np.all(table["concurrence"] >= 0.0)
        assert np.all(table["overlap"] <= 1.0)

    def test_uniform_state_saturates(self):
        # Fully decohered uniform state: S -> 3/2 bits so 2S/3 -> 1.
        spec = OhmicGapSpectrum(alpha=0.5)
        table = state_series(spec, UNIFORM, np.array([200.0]))
        np.testing.assert_allclose(table["entropy_scaled"][0], 1.0, atol=0.01)
        assert table["concurrence"][0] < 0.01

    def test_matches_single_point_evaluation(self):
        from twospinboson.bath import bath_reduced_density
        from twospinboson.entanglement import concurrence, von_neumann_entropy

        spec = OhmicGapSpectrum(alpha=0.25, omega0=0.1)
        table = state_series(spec, UNIFORM, np.array([0.7, 3.0]))
        for k, t in enumerate((0.7, 3.0)):
            rho = bath_reduced_density(spec, UNIFORM, t)
            np.testing.assert_allclose(table["concurrence"][k],
                                       concurrence(rho), atol=1e-10)
            np.testing.assert_allclose(table["entropy"][k],
                                       von_neumann_entropy(rho), atol=1e-10)


class TestSteadyStateTable:
    def test_sentinel_for_gapless_rows(self):
        table = steady_state_table(alphas=np.array([0.25, 0.5]),
                                   gaps=np.array([0.0, 0.1]),
                                   phase_points=256)
        assert len(table["alpha"]) == 4
        # alpha varies fastest; the first two rows are the gapless ones.
        np.testing.assert_allclose(table["omega0"][:2], 0.0)
        np.testing.assert_allclose(table["has_steady_state"][:2], 0.0)
        np.testing.assert_allclose(table["c_max_steady"][:2], NO_STEADY_STATE)
        np.testing.assert_allclose(table["s_steady"][:2], NO_STEADY_STATE)
        assert np.all(table["has_steady_state"][2:] == 1.0)
        assert np.all(table["c_max_steady"][2:] >= 0.0)

    def test_weaker_coupling_retains_more(self):
        table = steady_state_table(alphas=np.array([0.1, 0.8]),
                                   gaps=np.array([0.2]),
                                   phase_points=256)
        assert table["c_max_steady"][0] > table["c_max_steady"][1]
        assert table["s_steady"][0] < table["s_steady"][1]

    def test_default_grids_shape(self):
        alphas, gaps = default_steady_grid()
        assert alphas.shape == (32,) and gaps.shape == (32,)
        assert alphas[0] == 0.05 and alphas[-1] == 1.0
        assert gaps[0] == 0.0 and gaps[-1] == 0.5

    def test_deterministic(self):
        kwargs = dict(alphas=np.array([0.3]), gaps=np.array([0.0, 0.3]),
                      phase_points=128)
        first = steady_state_table(**kwargs)
        second = steady_state_table(**kwargs)
        for key in first:
            assert np.array_equal(first[key], second[key])

    def test_rejects_unsorted_grid(self):
        with pytest.raises(ValueError, match="increasing"):
            steady_state_table(alphas=np.array([0.5, 0.1]),
                               gaps=np.array([0.1]))


class TestThermalOverlapTable:
    def test_temperature_suppresses_plateau(self):
        table = thermal_overlap_table(temperatures=np.array([0.0, 1.0, 2.0]),
                                      gaps=np.array([0.25]))
        col = table["overlap_infinity"]
        assert np.all(col > 0.0)
        assert col[0] > col[1] > col[2]

    def test_gapless_sentinel(self):
        table = thermal_overlap_table(temperatures=np.array([0.0, 1.0]),
                                      gaps=np.array([0.0, 0.25]))
        assert np.all(table["has_steady_state"][:2] == 0.0)
        np.testing.assert_allclose(table["overlap_infinity"][:2],
                                   NO_STEADY_STATE)
        assert np.all(table["has_steady_state"][2:] == 1.0)

    def test_zero_temperature_matches_direct_integral(self):
        table = thermal_overlap_table(temperatures=np.array([0.0]),
                                      gaps=np.array([0.25]))
        expected = math.exp(-gamma_R_infinity(OhmicGapSpectrum(alpha=0.25,
                                                               omega0=0.25)))
        np.testing.assert_allclose(table["overlap_infinity"][0], expected,
                                   rtol=1e-9)

    def test_default_temperature_grid(self):
        grid = default_temperature_grid()
        assert grid.shape == (33,)
        assert grid[0] == 0.0 and grid[-1] == 2.0
