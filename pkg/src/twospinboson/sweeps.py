"""Parameter sweeps over the single-mode and bath models.

Every function returns an ordered ``dict`` of equal-length numpy columns,
ready for CSV emission.  The sweeps are deterministic: the same inputs
produce bitwise identical tables.
"""

from __future__ import annotations

import math

import numpy as np

from .bath import (
    OhmicGapSpectrum,
    bath_gamma,
    effective_coupling,
    gamma_R_infinity,
    steady_state_stats,
)
from .entanglement import QubitAmplitudes, _require_amplitudes, entanglement_measures
from .single_mode import (
    SingleModeParams,
    _density_from_phases,
    _validate_time_grid,
    period_stats,
)

__all__ = [
    "DEFAULT_BATH_PAIRS",
    "DEFAULT_N_RANGE",
    "NO_STEADY_STATE",
    "default_steady_grid",
    "default_temperature_grid",
    "commensurability_table",
    "overlap_table",
    "state_series",
    "steady_state_table",
    "thermal_overlap_table",
]

# (gap, alpha) pairs spanning weak and moderate coupling with and without a gap.
DEFAULT_BATH_PAIRS = (
    (0.0, 0.25),
    (0.01, 0.25),
    (0.1, 0.25),
    (0.0, 0.5),
    (0.01, 0.5),
    (0.1, 0.5),
)

# Sentinel for sweep cells where gamma_R diverges and no steady state exists.
NO_STEADY_STATE = -1.0


DEFAULT_N_RANGE = (0.5, 12.0, 47)  # n from 0.5 to 12 in steps of 0.25


def default_steady_grid() -> tuple[np.ndarray, np.ndarray]:
    """32 couplings alpha in [0.05, 1] by 32 gaps omega0 in [0, 0.5]."""
    return np.linspace(0.05, 1.0, 32), np.linspace(0.0, 0.5, 32)


def default_temperature_grid() -> np.ndarray:
    """33 temperatures from 0 to 2 (units of omega_c)."""
    return np.linspace(0.0, 2.0, 33)


def _validate_grid(values, name: str) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise ValueError(f"{name} must be a nonempty 1-D array")
    if values.size > 1 and not np.all(np.diff(values) > 0.0):
        raise ValueError(f"{name} must be strictly increasing")
    return values


def commensurability_table(n_min: float = DEFAULT_N_RANGE[0],
                           n_max: float = DEFAULT_N_RANGE[1],
                           n_points: int = DEFAULT_N_RANGE[2],
                           psi0: QubitAmplitudes | None = None,
                           samples_per_period: int = 2000) -> dict[str, np.ndarray]:
    """Period statistics versus the commensuration index n, omega/lambda = 4 sqrt(n).

    At integer n the oscillator period and the induced half-period of the
    phase coincide, so the concurrence recovers its decoherence-free maximum.
    Columns: n, omega_over_lambda, c_max, c_avg, s_max, s_avg.
    """
    if n_min < 0.25:
        raise ValueError(f"n_min must be at least 0.25, got {n_min}")
    if n_points < 2:
        raise ValueError(f"n_points must be at least 2, got {n_points}")
    if not n_min < n_max:
        raise ValueError(f"n range is degenerate: [{n_min}, {n_max}]")
    n_grid = np.linspace(n_min, n_max, n_points)
    if psi0 is None:
        psi0 = QubitAmplitudes.uniform()

    stats = [
        period_stats(SingleModeParams.from_ratio(4.0 * math.sqrt(n)), psi0,
                     samples_per_period)
        for n in n_grid
    ]
    return {
        "n": n_grid,
        "omega_over_lambda": 4.0 * np.sqrt(n_grid),
        "c_max": np.array([s.c_max for s in stats]),
        "c_avg": np.array([s.c_avg for s in stats]),
        "s_max": np.array([s.s_max for s in stats]),
        "s_avg": np.array([s.s_avg for s in stats]),
    }


def _pair_label(gap: float, alpha: float) -> str:
    return f"overlap_gap{gap:g}_alpha{alpha:g}"


def overlap_table(t_grid, pairs=DEFAULT_BATH_PAIRS, omega_c: float = 1.0,
                  temperature: float = 0.0) -> dict[str, np.ndarray]:
    """Coherence suppression exp(-gamma_R(t)) for several (gap, alpha) pairs.

    One column per pair, labelled ``overlap_gap{gap}_alpha{alpha}``.  A
    gapped environment levels off at a nonzero plateau; a gapless one decays
    as a power law without saturating.
    """
    t = _validate_time_grid(t_grid)
    if len(pairs) == 0:
        raise ValueError("pairs must be nonempty")
    table: dict[str, np.ndarray] = {"t": t}
    for gap, alpha in pairs:
        spec = OhmicGapSpectrum(alpha=alpha, omega0=gap, omega_c=omega_c,
                                temperature=temperature)
        overlaps = np.array([math.exp(-bath_gamma(spec, tk).gamma_r) for tk in t])
        table[_pair_label(gap, alpha)] = overlaps
    return table


def state_series(spec: OhmicGapSpectrum, psi0: QubitAmplitudes, t_grid) -> dict[str, np.ndarray]:
    """Bath time series: concurrence, entropy and overlap on a time grid.

    Columns: t, theta_t, concurrence, entropy, entropy_scaled, overlap.
    ``entropy_scaled`` is 2S/3, which saturates at 1 when the uniform initial
    state is fully decohered; ``overlap`` is exp(-gamma_R).
    """
    vec = _require_amplitudes(psi0)
    t = _validate_time_grid(t_grid)
    theta = effective_coupling(spec)

    gammas = [bath_gamma(spec, tk) for tk in t]
    gamma_rs = np.array([g.gamma_r for g in gammas])
    gamma_is = np.array([g.gamma_i for g in gammas])
    theta_ts = theta * t

    rhos = _density_from_phases(vec, theta_ts, gamma_rs, gamma_is)
    conc, entropy = entanglement_measures(rhos)
    return {
        "t": t,
        "theta_t": theta_ts,
        "concurrence": conc,
        "entropy": entropy,
        "entropy_scaled": 2.0 * entropy / 3.0,
        "overlap": np.exp(-gamma_rs),
    }


def steady_state_table(alphas=None, gaps=None, psi0: QubitAmplitudes | None = None,
                       omega_c: float = 1.0, temperature: float = 0.0,
                       phase_points: int = 2048) -> dict[str, np.ndarray]:
    """Steady-state concurrence and entropy over a (alpha, omega0) grid.

    One row per cell, alpha varying fastest.  Cells without a steady state
    (gapless with coupling) carry ``has_steady_state = 0`` and the sentinel
    -1 in the c_max_steady and s_steady columns.
    """
    if alphas is None or gaps is None:
        default_alphas, default_gaps = default_steady_grid()
        alphas = default_alphas if alphas is None else alphas
        gaps = default_gaps if gaps is None else gaps
    alphas = _validate_grid(alphas, "alphas")
    gaps = _validate_grid(gaps, "gaps")
    if psi0 is None:
        psi0 = QubitAmplitudes.uniform()

    rows_alpha = []
    rows_gap = []
    flags = []
    c_col = []
    s_col = []
    for gap in gaps:
        for alpha in alphas:
            spec = OhmicGapSpectrum(alpha=float(alpha), omega0=float(gap),
                                    omega_c=omega_c, temperature=temperature)
            stats = steady_state_stats(spec, psi0, phase_points)
            rows_alpha.append(float(alpha))
            rows_gap.append(float(gap))
            if stats is None:
                flags.append(0)
                c_col.append(NO_STEADY_STATE)
                s_col.append(NO_STEADY_STATE)
            else:
                flags.append(1)
                c_col.append(stats.c_max)
                s_col.append(stats.entropy)
    return {
        "alpha": np.array(rows_alpha),
        "omega0": np.array(rows_gap),
        "has_steady_state": np.array(flags, dtype=float),
        "c_max_steady": np.array(c_col),
        "s_steady": np.array(s_col),
    }


def thermal_overlap_table(temperatures=None, gaps=None, alpha: float = 0.25,
                          omega_c: float = 1.0) -> dict[str, np.ndarray]:
    """Saturated coherence exp(-gamma_R(inf)) over a (temperature, gap) grid.

    Temperature enters gamma_R through the thermal occupation of the bath;
    raising it can only suppress the plateau further.  Gapless cells have no
    plateau and carry the -1 sentinel with ``has_steady_state = 0``.
    """
    if temperatures is None:
        temperatures = default_temperature_grid()
    if gaps is None:
        gaps = default_steady_grid()[1]
    temperatures = _validate_grid(temperatures, "temperatures")
    gaps = _validate_grid(gaps, "gaps")
    if alpha < 0.0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")

    rows_t = []
    rows_gap = []
    flags = []
    overlap_col = []
    for gap in gaps:
        for temp in temperatures:
            spec = OhmicGapSpectrum(alpha=alpha, omega0=float(gap), omega_c=omega_c,
                                    temperature=float(temp))
            g_inf = gamma_R_infinity(spec)
            rows_t.append(float(temp))
            rows_gap.append(float(gap))
            if math.isinf(g_inf):
                flags.append(0)
                overlap_col.append(NO_STEADY_STATE)
            else:
                flags.append(1)
                overlap_col.append(math.exp(-g_inf))
    return {
        "temperature": np.array(rows_t),
        "omega0": np.array(rows_gap),
        "has_steady_state": np.array(flags, dtype=float),
        "overlap_infinity": np.array(overlap_col),
    }
