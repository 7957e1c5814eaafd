"""CHSH Bell-observable assembly, canonical settings and maximization."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .kinematics import AngleDecomposition, BoostParameters, MomentumState
from .observables import (PAULI, ClosedFormUnavailable, MeasurementDirection,
                          joint_expectation)
from .spin_states import bell_state, boost_two_particle

TSIRELSON = 2.0 * math.sqrt(2.0)

_U = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class ChshSettings:
    """The four measurement directions of a CHSH run."""

    a: MeasurementDirection
    a_prime: MeasurementDirection
    b: MeasurementDirection
    b_prime: MeasurementDirection

    def directions(self) -> tuple[MeasurementDirection, ...]:
        return self.a, self.a_prime, self.b, self.b_prime


def _settings(a, ap, b, bp) -> ChshSettings:
    return ChshSettings(*(MeasurementDirection(np.asarray(v, dtype=float))
                          for v in (a, ap, b, bp)))


# Rest-frame maximizers with b along y and b' along x.  The sets for the
# last two labels swap a and a'; with the first-two sets unchanged those
# labels would score 0 at rest instead of 2*sqrt(2).
_CANONICAL = {
    "00": _settings((_U, -_U, 0), (-_U, -_U, 0), (0, 1, 0), (1, 0, 0)),
    "01": _settings((-_U, _U, 0), (_U, _U, 0), (0, 1, 0), (1, 0, 0)),
    "10": _settings((_U, _U, 0), (-_U, _U, 0), (0, 1, 0), (1, 0, 0)),
    "11": _settings((-_U, -_U, 0), (_U, -_U, 0), (0, 1, 0), (1, 0, 0)),
}


def canonical_settings(label: str) -> ChshSettings:
    """Measurement settings that reach 2*sqrt(2) at rest for the label.

    For in-plane momentum the last two labels then reproduce the CHSH
    values of the first two exactly (11 matches 00, 10 matches 01).
    """
    if label not in _CANONICAL:
        raise ValueError(f"unknown Bell label {label!r}")
    return _CANONICAL[label]


def chsh_value(label: str, settings: ChshSettings, boost: BoostParameters,
               m: MomentumState) -> float:
    """CHSH combination <ab> + <ab'> + <a'b> - <a'b'> on the boosted state."""
    state = boost_two_particle(bell_state(label), boost, m)
    a, ap, b, bp = settings.directions()
    value = (joint_expectation(state, a, b, boost)
             + joint_expectation(state, a, bp, boost)
             + joint_expectation(state, ap, b, boost)
             - joint_expectation(state, ap, bp, boost))
    if abs(value) > TSIRELSON + 1e-9:
        raise RuntimeError(f"CHSH value {value} exceeds the quantum bound")
    return value


def chsh_closed_form(label: str, beta: float, angles: AngleDecomposition,
                     case: str = "B") -> float:
    """Printed CHSH value at the canonical settings.

    Case "A" (in-plane): (2/sqrt(2-b^2)) (sqrt(1-b^2) + cos(full angle)),
    with the full half-sum angle for label 00 and the half-difference one
    for label 01.  Case "B" mixes the coefficient tuples instead.
    """
    if label not in ("00", "01"):
        raise ClosedFormUnavailable(
            f"label {label!r} has no printed closed form; use the matrix path")
    if case not in ("A", "B"):
        raise ValueError(f"case must be 'A' or 'B', got {case!r}")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    pref = 2.0 / math.sqrt(2.0 - beta**2)
    sg = math.sqrt(1.0 - beta**2)
    if case == "A":
        if label == "00":
            cos_full = angles.cos_omega_bar**2 - angles.sin_omega_bar**2
        else:
            cos_full = angles.cos_delta_omega**2 - angles.sin_delta_omega**2
        return pref * (sg + cos_full)
    if label == "00":
        q_minus = angles.x**2 - angles.y**2 - angles.z**2 + angles.w**2
        q_plus = angles.x**2 + angles.y**2 - angles.z**2 - angles.w**2
        return pref * (q_minus + q_plus * sg)
    xp2, yp2, zp2 = angles.xp**2, angles.yp**2, angles.zp**2
    return pref * ((-xp2 - yp2 + zp2) + (xp2 - yp2 + zp2) * sg)


def universal_curve(beta: float) -> float:
    """The summary curve (2/sqrt(2-b^2)) (1 + sqrt(1-b^2)) on [0, 1].

    Equals the angle-dependent CHSH closed forms only when the rotation
    terms are unity; strictly decreasing from 2*sqrt(2) at rest to 2.
    """
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    # written so both endpoints round exactly: sqrt(2)*2/1 at beta = 0 and
    # sqrt(2)/sqrt(1/2) at beta = 1 (halving a double is exact)
    return math.sqrt(2.0) * (1.0 + math.sqrt(1.0 - beta**2)) / math.sqrt(1.0 - beta**2 / 2.0)


@dataclass(frozen=True, eq=False)
class MaximizeResult:
    """Best settings found, their CHSH value, and whether the search converged."""

    settings: ChshSettings
    value: float
    converged: bool


def _correlation_matrix(amplitudes: np.ndarray) -> np.ndarray:
    ops = [np.kron(PAULI[i], PAULI[j]) for i in range(3) for j in range(3)]
    return np.array([(amplitudes.conj() @ op @ amplitudes).real
                     for op in ops]).reshape(3, 3)


def _directions_from_angles(params: np.ndarray) -> np.ndarray:
    """Four unit vectors from (polar, azimuth) pairs, stacked as rows."""
    polar, azim = params[0::2], params[1::2]
    st = np.sin(polar)
    return np.stack([st * np.cos(azim), st * np.sin(azim), np.cos(polar)], axis=1)


def _effective(vec: np.ndarray, beta: float) -> np.ndarray:
    scaled = np.array([vec[0],
                       math.sqrt(1.0 - beta**2) * vec[1],
                       math.sqrt(1.0 - beta**2) * vec[2]])
    return scaled / np.linalg.norm(scaled)


def _angles_of(vec: np.ndarray) -> tuple[float, float]:
    return math.acos(max(-1.0, min(1.0, vec[2]))), math.atan2(vec[1], vec[0])


def maximize_chsh(label: str, boost: BoostParameters, m: MomentumState,
                  method: str = "simplex", seed: int = 0,
                  n_starts: int = 16, max_iterations: int = 2000) -> MaximizeResult:
    """Search measurement settings maximizing the CHSH value.

    Each direction is parametrized by its two spherical angles, an
    8-dimensional unconstrained search.  ``grid`` scans a coarse lattice
    and refines the best cells with Nelder-Mead; ``simplex`` runs
    Nelder-Mead from the canonical settings plus seeded random starts.
    Both are deterministic for a fixed seed and never return less than the
    canonical-settings value (those settings seed the search).
    """
    if method not in ("grid", "simplex"):
        raise ValueError(f"method must be 'grid' or 'simplex', got {method!r}")
    beta = boost.beta
    state = boost_two_particle(bell_state(label), boost, m)
    corr = _correlation_matrix(state.amplitudes)

    def objective(params: np.ndarray) -> float:
        va, vap, vb, vbp = (_effective(v, beta)
                            for v in _directions_from_angles(params))
        return -(va @ corr @ (vb + vbp) + vap @ corr @ (vb - vbp))

    canonical = canonical_settings(label)
    canonical_params = np.array(
        [c for d in canonical.directions() for c in _angles_of(d.vec_a)])

    starts = [canonical_params]
    if method == "grid":
        # coarse lattice over the effective (b, b') directions; for each pair
        # the best a maximizes a.corr(b+b'), attained along corr(b+b'), and
        # likewise a' along corr(b-b')
        polar = np.linspace(0.0, math.pi, 7)
        azim = np.linspace(0.0, 2.0 * math.pi, 8, endpoint=False)
        grid = np.array([[math.sin(p) * math.cos(q), math.sin(p) * math.sin(q), math.cos(p)]
                         for p in polar for q in azim])
        plus = np.linalg.norm((grid[:, None, :] + grid[None, :, :]) @ corr.T, axis=-1)
        minus = np.linalg.norm((grid[:, None, :] - grid[None, :, :]) @ corr.T, axis=-1)
        ib, ibp = np.unravel_index(np.argmax(plus + minus), plus.shape)
        va = corr @ (grid[ib] + grid[ibp])
        vap = corr @ (grid[ib] - grid[ibp])
        # lattice lives in effective-direction space; pull back to settings
        pullback = []
        for v in (va, vap, grid[ib], grid[ibp]):
            norm = np.linalg.norm(v)
            v = v / norm if norm > 0 else np.array([1.0, 0.0, 0.0])
            raw = np.array([v[0], v[1] / math.sqrt(1.0 - beta**2),
                            v[2] / math.sqrt(1.0 - beta**2)])
            pullback.extend(_angles_of(raw / np.linalg.norm(raw)))
        starts.append(np.array(pullback))
    else:
        rng = np.random.default_rng(seed)
        extra = max(n_starts - 1, 15)
        polar = np.arccos(rng.uniform(-1.0, 1.0, size=(extra, 4)))
        azim = rng.uniform(0.0, 2.0 * math.pi, size=(extra, 4))
        for k in range(extra):
            starts.append(np.stack([polar[k], azim[k]], axis=1).ravel())

    best_params, best_value, converged = canonical_params, -objective(canonical_params), True
    for start in starts:
        res = minimize(objective, start, method="Nelder-Mead",
                       options={"maxiter": max_iterations, "fatol": 1e-8,
                                "xatol": 1e-8})
        if -res.fun > best_value + 1e-12:
            best_params, best_value, converged = res.x, -res.fun, bool(res.success)

    vecs = _directions_from_angles(best_params)
    settings = _settings(*vecs)
    value = chsh_value(label, settings, boost, m)
    # keep the guarantee exact even if the refined point re-evaluates lower
    canonical_value = chsh_value(label, canonical, boost, m)
    if value < canonical_value:
        settings, value = canonical, canonical_value
    return MaximizeResult(settings, value, converged)
