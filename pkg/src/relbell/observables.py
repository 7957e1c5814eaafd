"""Normalized relativistic spin observables and joint expectation values.

A measurement along the unit vector ``a`` made by an observer boosted along
x with speed ``beta`` is represented by (m/|m|).sigma with
m = (a_x, sqrt(1-beta^2) a_y, sqrt(1-beta^2) a_z); the normalization
|m|^2 = 1 + beta^2 (a_x^2 - 1) makes the eigenvalues exactly +-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import AngleDecomposition, BoostParameters
from .spin_states import TwoParticleSpinState

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.array([SIGMA_X, SIGMA_Y, SIGMA_Z])


class ClosedFormUnavailable(ValueError):
    """Raised when only the matrix path exists for the requested label."""


@dataclass(frozen=True, eq=False)
class MeasurementDirection:
    """A unit measurement direction.

    The constructor demands a vector already normalized to within 1e-9 and
    silently scrubs sub-tolerance deviations; use :meth:`from_vector` to
    normalize an arbitrary nonzero vector explicitly.
    """

    vec_a: np.ndarray

    def __post_init__(self) -> None:
        vec = np.asarray(self.vec_a, dtype=float)
        if vec.shape != (3,):
            raise ValueError("expected a 3-vector")
        norm = np.linalg.norm(vec)
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"measurement direction must be unit-norm, |v| = {norm}")
        object.__setattr__(self, "vec_a", vec / norm)

    @classmethod
    def from_vector(cls, vec: np.ndarray) -> "MeasurementDirection":
        vec = np.asarray(vec, dtype=float)
        norm = np.linalg.norm(vec)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(vec / norm)


@dataclass(frozen=True, eq=False)
class SpinObservable:
    """Hermitian, traceless 2x2 observable squaring to the identity."""

    matrix: np.ndarray
    effective_direction: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "effective_direction",
                           np.asarray(self.effective_direction, dtype=float))
        if np.abs(mat - mat.conj().T).max() > 1e-12:
            raise ValueError("observable must be Hermitian")
        if abs(np.trace(mat)) > 1e-12:
            raise ValueError("observable must be traceless")
        if np.abs(mat @ mat - np.eye(2)).max() > 1e-12:
            raise ValueError("observable must square to the identity")


def relativistic_spin_vector(s: np.ndarray, b: BoostParameters) -> np.ndarray:
    """Spin vector seen by the boosted observer: the component along the
    boost axis is kept, the perpendicular part shrinks by sqrt(1-beta^2)."""
    s = np.asarray(s, dtype=float)
    parallel = float(s @ b.axis_e) * b.axis_e
    return math.sqrt(1.0 - b.beta**2) * (s - parallel) + parallel


def spin_observable(a: MeasurementDirection, b: BoostParameters) -> SpinObservable:
    """Normalized relativistic spin observable for direction ``a``."""
    b.requires_x_axis()
    scaled = relativistic_spin_vector(a.vec_a, b)
    # |scaled|^2 == 1 + beta^2 (a_x^2 - 1) identically; the explicit form
    # keeps the matrix squaring to I at the 1e-12 level.
    norm = math.sqrt(1.0 + b.beta**2 * (a.vec_a[0]**2 - 1.0))
    direction = scaled / norm
    matrix = np.einsum("i,ijk->jk", direction, PAULI)
    return SpinObservable(matrix, direction)


def joint_expectation(state: TwoParticleSpinState, a: MeasurementDirection,
                      b: MeasurementDirection, boost: BoostParameters) -> float:
    """<state| a_hat (x) b_hat |state> via the dense 4x4 tensor operator."""
    op = np.kron(spin_observable(a, boost).matrix, spin_observable(b, boost).matrix)
    return float((state.amplitudes.conj() @ op @ state.amplitudes).real)


@dataclass(frozen=True)
class CorrelationWeights:
    """Weights of the quadratic form in the Bell-coefficient tuple.

    ``xx`` .. ``ww`` multiply the squared coefficients, the remaining
    entries multiply the cross products (with the -2/+2 bookkeeping done by
    the caller).  Every entry reduces at beta = 0 to a plain product of
    measurement components, which is what the unit tests pin down.
    """

    xx: float
    yy: float
    zz: float
    ww: float
    xy: float
    xz: float
    xw: float
    yz: float
    yw: float
    zw: float


def correlation_weights(a: MeasurementDirection, b: MeasurementDirection,
                        beta: float) -> CorrelationWeights:
    """The coefficient family of the out-of-plane joint expectation."""
    g = 1.0 - beta**2
    sg = math.sqrt(g)
    ax, ay, az = a.vec_a
    bx, by, bz = b.vec_a
    return CorrelationWeights(
        xx=ax * bx - g * ay * by + g * az * bz,
        yy=-ax * bx - g * ay * by - g * az * bz,
        zz=-ax * bx + g * ay * by + g * az * bz,
        ww=ax * bx + g * ay * by - g * az * bz,
        xy=sg * (az * bx - bz * ax),
        xz=sg * (ax * by + bx * ay),
        xw=g * (az * by + bz * ay),
        yz=g * (az * by - bz * ay),
        yw=sg * (ax * by - bx * ay),
        zw=sg * (az * bx + bz * ax),
    )


def _observable_norms(a: MeasurementDirection, b: MeasurementDirection,
                      beta: float) -> float:
    return math.sqrt((1.0 + beta**2 * (a.vec_a[0]**2 - 1.0))
                     * (1.0 + beta**2 * (b.vec_a[0]**2 - 1.0)))


def expectation_closed_form(label: str, angles: AngleDecomposition,
                            a: MeasurementDirection, b: MeasurementDirection,
                            beta: float, case: str = "B") -> float:
    """Printed closed form of the boosted joint expectation.

    Only the first two Bell labels have printed forms; the others raise
    :class:`ClosedFormUnavailable` and must go through the matrix path.
    Case "A" is the in-plane specialization (valid when sin_eta = 0),
    case "B" the general out-of-plane form.
    """
    if label not in ("00", "01"):
        raise ClosedFormUnavailable(
            f"label {label!r} has no printed closed form; use the matrix path")
    if case not in ("A", "B"):
        raise ValueError(f"case must be 'A' or 'B', got {case!r}")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    norm = _observable_norms(a, b, beta)
    g = 1.0 - beta**2
    sg = math.sqrt(g)
    ax, ay, az = a.vec_a
    bx, by, bz = b.vec_a

    if case == "A":
        # in-plane forms; the full-angle sine carries the cos_eta orientation
        ceta = angles.cos_eta
        if label == "00":
            cos_sum = angles.cos_omega_bar**2 - angles.sin_omega_bar**2
            sin_sum = 2.0 * angles.sin_omega_bar * angles.cos_omega_bar * ceta
            return ((ax * bx + g * az * bz) * cos_sum - g * ay * by
                    - sg * (az * bx - bz * ax) * sin_sum) / norm
        cos_dif = angles.cos_delta_omega**2 - angles.sin_delta_omega**2
        sin_dif = 2.0 * angles.sin_delta_omega * angles.cos_delta_omega * ceta
        return ((-ax * bx + g * az * bz) * cos_dif + g * ay * by
                + sg * (az * bx + bz * ax) * sin_dif) / norm

    wts = correlation_weights(a, b, beta)
    if label == "00":
        x, y, z, w = angles.x, angles.y, angles.z, angles.w
        val = (wts.xx * x**2 + wts.yy * y**2 + wts.zz * z**2 + wts.ww * w**2
               - 2.0 * (wts.xy * x * y + wts.xz * x * z + wts.xw * x * w
                        - wts.yz * y * z + wts.yw * y * w + wts.zw * z * w))
        return val / norm
    xp, yp, zp = angles.xp, angles.yp, angles.zp
    val = (wts.ww * xp**2 + wts.xx * yp**2 + wts.zz * zp**2
           + 2.0 * (wts.zw * xp * zp + wts.xz * yp * zp - wts.xw * xp * yp))
    return val / norm


def classical_limit_correlation(a: MeasurementDirection,
                                b: MeasurementDirection) -> float:
    """Correlation surviving at lightlike boost speed: sign(a_x) sign(b_x).

    When a component along the boost vanishes the exact finite-beta
    expectation tends to 0, so 0 is returned instead of dividing by |a_x|.
    """
    ax, bx = a.vec_a[0], b.vec_a[0]
    if ax == 0.0 or bx == 0.0:
        return 0.0
    return math.copysign(1.0, ax) * math.copysign(1.0, bx)
