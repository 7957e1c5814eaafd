"""Two-particle spin states, Bell states and their behaviour under boosts.

Amplitudes are ordered (up-up, up-down, down-up, down-down) with slot 1 the
``+p`` particle and slot 2 the ``-p`` particle; tensor products are slot-1
major throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import (AngleDecomposition, BoostParameters, MomentumState,
                         WignerRotation, boosted_energy, wigner_rotation)

BELL_LABELS = ("00", "01", "10", "11")

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

# 00: (uu + dd)/sqrt2, 01: (uu - dd)/sqrt2, 10: (ud + du)/sqrt2, 11: singlet
_BELL_AMPLITUDES = {
    "00": np.array([_INV_SQRT2, 0.0, 0.0, _INV_SQRT2], dtype=complex),
    "01": np.array([_INV_SQRT2, 0.0, 0.0, -_INV_SQRT2], dtype=complex),
    "10": np.array([0.0, _INV_SQRT2, _INV_SQRT2, 0.0], dtype=complex),
    "11": np.array([0.0, _INV_SQRT2, -_INV_SQRT2, 0.0], dtype=complex),
}


@dataclass(frozen=True, eq=False)
class Su2Matrix:
    """A 2x2 unitary with unit determinant."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=complex)
        object.__setattr__(self, "entries", entries)
        if entries.shape != (2, 2):
            raise ValueError("expected a 2x2 matrix")
        if np.abs(entries.conj().T @ entries - np.eye(2)).max() > 1e-12:
            raise ValueError("matrix is not unitary")
        if abs(np.linalg.det(entries) - 1.0) > 1e-12:
            raise ValueError("determinant must equal 1")


@dataclass(frozen=True, eq=False)
class TwoParticleSpinState:
    """Unit-norm spin amplitudes of the pair, plus the stripped energy factor.

    The prefactor collects sqrt((Lp)^0/p^0) per particle and is reported
    separately so the amplitudes stay exactly normalized.
    """

    amplitudes: np.ndarray
    prefactor: float = 1.0

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        if amps.shape != (4,):
            raise ValueError("expected 4 amplitudes")
        if abs(np.linalg.norm(amps) - 1.0) > 1e-12:
            raise ValueError("amplitudes must have unit norm")
        if self.prefactor <= 0.0:
            raise ValueError("prefactor must be positive")


@dataclass(frozen=True)
class BellDecomposition:
    """Coefficients of a state over the four Bell states."""

    c00: complex
    c01: complex
    c10: complex
    c11: complex

    def __post_init__(self) -> None:
        total = sum(abs(c)**2 for c in self.as_array())
        if abs(total - 1.0) > 1e-10:
            raise ValueError("Bell coefficients must have unit total weight")

    def as_array(self) -> np.ndarray:
        return np.array([self.c00, self.c01, self.c10, self.c11], dtype=complex)


def _validate_label(label: str) -> str:
    if label not in BELL_LABELS:
        raise ValueError(f"unknown Bell label {label!r}; expected one of {BELL_LABELS}")
    return label


def bell_state(label: str) -> TwoParticleSpinState:
    """One of the four momentum-conserved Bell states of the pair."""
    return TwoParticleSpinState(_BELL_AMPLITUDES[_validate_label(label)].copy())


def wigner_matrix(rotation: WignerRotation) -> Su2Matrix:
    """SU(2) matrix cos(O/2) I + i sin(O/2) sigma.n of a half-angle rotation."""
    c, s = rotation.cos_half, rotation.sin_half
    nx, ny, nz = rotation.axis_n
    return Su2Matrix(np.array([
        [c + 1j * s * nz, s * ny + 1j * s * nx],
        [-s * ny + 1j * s * nx, c - 1j * s * nz],
    ]))


def boost_two_particle(state: TwoParticleSpinState, b: BoostParameters,
                       m: MomentumState) -> TwoParticleSpinState:
    """Apply the per-particle spinor rotations of the observer boost.

    Slot 1 picks up the rotation of the ``+p`` particle, slot 2 that of the
    ``-p`` particle.  The map is exactly unitary; the amplitudes are still
    renormalized to scrub rounding, and the energy factor
    sqrt((Lp)^0 (L(-p))^0) / p^0 is accumulated on the prefactor.
    """
    d_plus = wigner_matrix(wigner_rotation(b, m, +1)).entries
    d_minus = wigner_matrix(wigner_rotation(b, m, -1)).entries
    amps = np.kron(d_plus, d_minus) @ state.amplitudes
    amps = amps / np.linalg.norm(amps)
    factor = math.sqrt(boosted_energy(m, b, +1) / m.energy) \
        * math.sqrt(boosted_energy(m, b, -1) / m.energy)
    return TwoParticleSpinState(amps, state.prefactor * factor)


def bell_decompose(state: TwoParticleSpinState) -> BellDecomposition:
    """Coefficients <Bell_ij | state> over the Bell basis."""
    coeffs = [complex(_BELL_AMPLITUDES[k].conj() @ state.amplitudes) for k in BELL_LABELS]
    return BellDecomposition(*coeffs)


def bell_recompose(decomposition: BellDecomposition) -> TwoParticleSpinState:
    """Inverse of :func:`bell_decompose`."""
    amps = sum(c * _BELL_AMPLITUDES[k]
               for c, k in zip(decomposition.as_array(), BELL_LABELS))
    return TwoParticleSpinState(amps)


def boost_bell_closed_form(label: str, angles: AngleDecomposition) -> BellDecomposition:
    """Bell coefficients of a boosted Bell state, straight from the angle set.

    Must agree with bell_decompose(boost_two_particle(bell_state(label), ...))
    for the decomposition of the same boost; the angle-free path is the oracle.
    """
    _validate_label(label)
    cob, sob = angles.cos_omega_bar, angles.sin_omega_bar
    cdo = angles.cos_delta_omega
    ceta, seta = angles.cos_eta, angles.sin_eta
    if label == "00":
        return BellDecomposition(angles.x, 1j * angles.z, -1j * angles.w, -angles.y)
    if label == "01":
        return BellDecomposition(1j * angles.yp, angles.zp, angles.xp, 0.0)
    if label == "10":
        return BellDecomposition(
            -1j * (cob - cdo) * ceta * seta,
            -angles.xp,
            cob * seta**2 + cdo * ceta**2,
            1j * sob * seta,
        )
    return BellDecomposition(sob * ceta, 0.0, 1j * sob * seta, cob)
