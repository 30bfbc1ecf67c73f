"""Gapped Ohmic environment: spectral density, decoherence integrals, steady state.

The spectral density is

    J(omega) = alpha * (omega - omega0) * exp(-(omega - omega0)/omega_c)

for omega above the gap omega0 and zero below it (hbar = k_B = 1).  The
environment acts on the two qubits only through three numbers:

    effective_coupling = 2 * integral J/omega domega       (induced coupling)
    gamma_R(t) = 4 * integral J/omega^2 * coth(omega/2T) * (1 - cos omega t)
    gamma_I(t) = 4 * integral J/omega^2 * sin(omega t)     (temperature free)

so the reduced density matrix has the same structure as in the single-mode
model and is delegated to :func:`twospinboson.single_mode.reduced_density`.
All integrals are evaluated in the scaled variable u = (omega - omega0)/omega_c
on [0, 40], where the envelope exp(-u) has decayed below 5e-18.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .entanglement import QubitAmplitudes, _require_amplitudes, entanglement_measures
from .quadrature import DEFAULT_ABS_TOL, integrate_decaying
from .single_mode import GammaValue, _density_from_phases, reduced_density

__all__ = [
    "X_MAX",
    "OhmicGapSpectrum",
    "BathGammaResult",
    "SteadyStateStats",
    "spectral_density",
    "thermal_kernel",
    "effective_coupling",
    "gamma_R",
    "gamma_I",
    "gamma_R_infinity",
    "saturation_time",
    "bath_gamma",
    "bath_reduced_density",
    "steady_state_stats",
    "discretize_modes",
]

# Truncation of the scaled integration variable; exp(-40) < 5e-18.
X_MAX = 40.0


@dataclass(frozen=True)
class OhmicGapSpectrum:
    """Spectral density parameters: strength, gap, cutoff and temperature."""

    alpha: float
    omega0: float = 0.0
    omega_c: float = 1.0
    temperature: float = 0.0

    def __post_init__(self):
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")
        if self.omega0 < 0.0:
            raise ValueError(f"omega0 must be nonnegative, got {self.omega0}")
        if not self.omega_c > 0.0:
            raise ValueError(f"omega_c must be positive, got {self.omega_c}")
        if self.temperature < 0.0:
            raise ValueError(f"temperature must be nonnegative, got {self.temperature}")


@dataclass(frozen=True)
class BathGammaResult:
    """Decoherence exponent with the quadrature error estimate attached."""

    gamma_r: float
    gamma_i: float
    quadrature_error_estimate: float


@dataclass(frozen=True)
class SteadyStateStats:
    """Long-time entanglement figures once gamma_R has saturated.

    ``c_max`` is the maximum concurrence over the residual phase theta*t in
    [0, pi/2); the entropy is phase independent up to roundoff, and the
    measured variation over the scan is reported alongside it.
    """

    gamma_r_inf: float
    c_max: float
    entropy: float
    entropy_variation: float


def spectral_density(spec: OhmicGapSpectrum, omega):
    """J(omega); accepts scalars or arrays, zero at and below the gap."""
    omega = np.asarray(omega, dtype=float)
    x = (omega - spec.omega0) / spec.omega_c
    dens = spec.alpha * (omega - spec.omega0) * np.exp(-np.clip(x, 0.0, None))
    out = np.where(omega > spec.omega0, dens, 0.0)
    return float(out) if out.ndim == 0 else out


def thermal_kernel(omega, temperature: float):
    """coth(omega / 2T), with the T = 0 limit equal to 1.

    Guards: arguments above 30 return exactly 1, arguments below 1e-8 use the
    small-argument expansion 1/y + y/3.
    """
    omega = np.asarray(omega, dtype=float)
    if temperature < 0.0:
        raise ValueError(f"temperature must be nonnegative, got {temperature}")
    if temperature == 0.0:
        out = np.ones_like(omega)
        return float(out) if out.ndim == 0 else out
    y = omega / (2.0 * temperature)
    out = np.empty_like(y)
    small = y < 1e-8
    large = y > 30.0
    mid = ~(small | large)
    with np.errstate(divide="ignore"):
        out[small] = 1.0 / y[small] + y[small] / 3.0
    out[large] = 1.0
    out[mid] = 1.0 / np.tanh(y[mid])
    return float(out) if out.ndim == 0 else out


@lru_cache(maxsize=None)
def _effective_coupling_cached(alpha: float, omega0: float, omega_c: float) -> float:
    if alpha == 0.0:
        return 0.0

    def integrand(u):
        return u * np.exp(-u) / (omega0 + omega_c * u)

    value, _ = integrate_decaying(integrand, upper=X_MAX)
    return 2.0 * alpha * omega_c**2 * value


def effective_coupling(spec: OhmicGapSpectrum) -> float:
    """Induced qubit-qubit coupling 2 * integral J(omega)/omega domega.

    For a gapless spectrum this equals 2 * alpha * omega_c exactly.
    """
    return _effective_coupling_cached(spec.alpha, spec.omega0, spec.omega_c)


def _gamma_r_with_error(spec: OhmicGapSpectrum, t: float,
                        abs_tol: float = DEFAULT_ABS_TOL) -> tuple[float, float]:
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0.0 or spec.alpha == 0.0:
        return 0.0, 0.0
    scale = 4.0 * spec.alpha * spec.omega_c**2

    if spec.temperature == 0.0:
        def integrand(u):
            w = spec.omega0 + spec.omega_c * u
            # 2 sin^2(w t / 2) = 1 - cos(w t) without cancellation at small w t.
            return u * np.exp(-u) * 2.0 * np.sin(0.5 * w * t) ** 2 / w**2
    else:
        def integrand(u):
            w = spec.omega0 + spec.omega_c * u
            osc = 2.0 * np.sin(0.5 * w * t) ** 2
            return u * np.exp(-u) * thermal_kernel(w, spec.temperature) * osc / w**2

    value, err = integrate_decaying(integrand, upper=X_MAX,
                                    osc_rate=spec.omega_c * t,
                                    abs_tol=abs_tol / max(scale, 1.0))
    return max(scale * value, 0.0), scale * err


def _gamma_i_with_error(spec: OhmicGapSpectrum, t: float,
                        abs_tol: float = DEFAULT_ABS_TOL) -> tuple[float, float]:
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0.0 or spec.alpha == 0.0:
        return 0.0, 0.0
    scale = 4.0 * spec.alpha * spec.omega_c**2

    def integrand(u):
        w = spec.omega0 + spec.omega_c * u
        return u * np.exp(-u) * np.sin(w * t) / w**2

    value, err = integrate_decaying(integrand, upper=X_MAX,
                                    osc_rate=spec.omega_c * t,
                                    abs_tol=abs_tol / max(scale, 1.0))
    return scale * value, scale * err


def gamma_R(spec: OhmicGapSpectrum, t: float) -> float:
    """Damping exponent gamma_R(t); zero at t = 0, nonnegative always."""
    return _gamma_r_with_error(spec, t)[0]


def gamma_I(spec: OhmicGapSpectrum, t: float) -> float:
    """Phase exponent gamma_I(t); independent of temperature."""
    return _gamma_i_with_error(spec, t)[0]


def gamma_R_infinity(spec: OhmicGapSpectrum) -> float:
    """Long-time limit of gamma_R.

    Returns ``math.inf`` when the limit diverges, which happens exactly for a
    gapless spectrum with nonzero coupling: the integrand then behaves as
    1/omega at the origin and the oscillatory term never stops contributing.
    """
    if spec.alpha == 0.0:
        return 0.0
    if spec.omega0 == 0.0:
        return math.inf
    scale = 4.0 * spec.alpha * spec.omega_c**2

    def integrand(u):
        w = spec.omega0 + spec.omega_c * u
        return u * np.exp(-u) * thermal_kernel(w, spec.temperature) / w**2

    value, _ = integrate_decaying(integrand, upper=X_MAX,
                                  abs_tol=DEFAULT_ABS_TOL / max(scale, 1.0))
    return scale * value


def saturation_time(spec: OhmicGapSpectrum, t_start: float = 100.0,
                    tol: float = 1e-6, max_doublings: int = 12) -> float:
    """Time at which gamma_R has measurably saturated, for reporting.

    Doubles t from ``t_start`` until |gamma_R(2t) - gamma_R(t)| < tol and
    returns the first such 2t.  Returns ``math.inf`` for spectra without a
    plateau (gapless with coupling) without evaluating anything.
    """
    if t_start <= 0.0:
        raise ValueError(f"t_start must be positive, got {t_start}")
    if spec.alpha == 0.0:
        return 0.0
    if spec.omega0 == 0.0:
        return math.inf
    t = t_start
    current = gamma_R(spec, t)
    for _ in range(max_doublings):
        ahead = gamma_R(spec, 2.0 * t)
        if abs(ahead - current) < tol:
            return 2.0 * t
        t, current = 2.0 * t, ahead
    raise RuntimeError(
        f"gamma_R not saturated to {tol:g} after doubling to t = {t:g}")


def bath_gamma(spec: OhmicGapSpectrum, t: float,
               abs_tol: float = DEFAULT_ABS_TOL) -> BathGammaResult:
    """gamma_R and gamma_I at time ``t`` with the combined error estimate."""
    g_r, err_r = _gamma_r_with_error(spec, t, abs_tol)
    g_i, err_i = _gamma_i_with_error(spec, t, abs_tol)
    return BathGammaResult(g_r, g_i, err_r + err_i)


def bath_reduced_density(spec: OhmicGapSpectrum, psi0: QubitAmplitudes, t: float) -> np.ndarray:
    """Reduced two-qubit density matrix under the bath at time ``t``.

    Same matrix structure as the single-mode result, with theta*t given by
    the effective coupling and the decoherence exponents by the bath
    integrals.
    """
    result = bath_gamma(spec, t)
    theta_t = effective_coupling(spec) * t
    return reduced_density(psi0, theta_t, GammaValue(result.gamma_r, result.gamma_i))


def steady_state_stats(spec: OhmicGapSpectrum, psi0: QubitAmplitudes,
                       phase_points: int = 2048):
    """Entanglement figures in the saturated regime, or None if there is none.

    In the steady state gamma_R is pinned at its long-time limit and gamma_I
    has decayed to zero; only the induced phase theta*t keeps advancing.  The
    concurrence is scanned over theta*t in [0, pi/2) (its full period up to
    local unitaries) while the entropy is phase independent.

    Returns ``None`` when gamma_R diverges (gapless spectrum with coupling),
    in which case no steady state exists.
    """
    vec = _require_amplitudes(psi0)
    if phase_points < 4:
        raise ValueError(f"phase_points must be at least 4, got {phase_points}")
    g_inf = gamma_R_infinity(spec)
    if math.isinf(g_inf):
        return None

    theta_ts = np.linspace(0.0, 0.5 * math.pi, phase_points, endpoint=False)
    rhos = _density_from_phases(vec, theta_ts,
                                np.full_like(theta_ts, g_inf),
                                np.zeros_like(theta_ts))
    conc, entropy = entanglement_measures(rhos)
    variation = float(np.max(entropy) - np.min(entropy))
    if variation > 1e-6:
        raise RuntimeError(
            f"entropy varied by {variation:.3e} over the steady-state phase scan; "
            "it should be phase independent"
        )
    return SteadyStateStats(
        gamma_r_inf=g_inf,
        c_max=float(np.max(conc)),
        entropy=float(np.mean(entropy)),
        entropy_variation=variation,
    )


def discretize_modes(spec: OhmicGapSpectrum, n_modes: int = 200,
                     upper: float = 12.0) -> tuple[np.ndarray, np.ndarray]:
    """Finite-mode stand-in for the continuum: frequencies and couplings squared.

    Places modes at the abscissas of a composite 8-point Gauss rule on the
    scaled interval [0, upper] and assigns lambda_j^2 = J(omega_j) * weight,
    so that sums like 4 * sum lambda_j^2 sin(omega_j t)/omega_j^2 approximate
    the corresponding continuum integrals.  ``n_modes`` must be a multiple
    of 8.
    """
    if n_modes < 8 or n_modes % 8 != 0:
        raise ValueError(f"n_modes must be a positive multiple of 8, got {n_modes}")
    if upper <= 0.0:
        raise ValueError(f"upper must be positive, got {upper}")
    nodes, weights = np.polynomial.legendre.leggauss(8)
    n_panels = n_modes // 8
    h = upper / n_panels
    left = h * np.arange(n_panels, dtype=float)[:, None]
    u = (left + 0.5 * h * (nodes + 1.0)[None, :]).ravel()
    du = (np.broadcast_to(0.5 * h * weights, (n_panels, 8))).ravel()
    omegas = spec.omega0 + spec.omega_c * u
    couplings_sq = spectral_density(spec, omegas) * spec.omega_c * du
    return omegas, couplings_sq
