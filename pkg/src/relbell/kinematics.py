"""Scalar and 4-vector kinematics: rapidities, boosts, Wigner half-angles.

Conventions used throughout the package:

* natural units, c = 1; 4-vectors are ordered (x, y, z, t);
* the observer boost is a pure boost of rapidity ``alpha`` along the unit
  axis ``e`` (default x), acting actively: a particle at rest acquires
  momentum ``m sinh(alpha) e``;
* a particle pair carries opposite momenta ``+p`` / ``-p`` with
  ``p = m sinh(delta) (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta))``;
* the rotation picked up by a boosted spinor is stored as the half-angle
  pair ``(cos_half, sin_half)`` with ``sin_half >= 0`` and the orientation
  carried by the rotation axis (along ``e x p`` for the ``+p`` particle).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

X_AXIS = np.array([1.0, 0.0, 0.0])

_UNIT_TOL = 1e-12


def rapidity_from_beta(beta: float) -> float:
    """Rapidity of a boost with speed ratio ``beta``, i.e. atanh(beta)."""
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"beta must lie in [0, 1), got {beta}")
    return math.atanh(beta)


def beta_from_rapidity(alpha: float) -> float:
    """Inverse of :func:`rapidity_from_beta`."""
    if alpha < 0.0:
        raise ValueError(f"rapidity must be nonnegative, got {alpha}")
    return math.tanh(alpha)


def rapidity_from_cosh(cosh_value: float) -> float:
    """Rapidity whose cosh equals ``cosh_value`` (>= 1)."""
    if cosh_value < 1.0:
        raise ValueError(f"cosh of a rapidity is >= 1, got {cosh_value}")
    return math.acosh(cosh_value)


@dataclass(frozen=True, eq=False)
class BoostParameters:
    """Observer boost: speed ratio, rapidity and unit axis (default x)."""

    beta: float
    rapidity_alpha: float
    axis_e: np.ndarray = field(default_factory=lambda: X_AXIS.copy())

    def __post_init__(self) -> None:
        object.__setattr__(self, "axis_e", np.asarray(self.axis_e, dtype=float))
        if not 0.0 <= self.beta < 1.0:
            raise ValueError(f"beta must lie in [0, 1), got {self.beta}")
        if self.rapidity_alpha < 0.0:
            raise ValueError("rapidity must be nonnegative")
        # stable form of cosh(alpha) * sqrt(1 - beta^2) == 1
        if abs(math.tanh(self.rapidity_alpha) - self.beta) > _UNIT_TOL:
            raise ValueError("beta and rapidity are inconsistent: beta != tanh(alpha)")
        if abs(np.linalg.norm(self.axis_e) - 1.0) > _UNIT_TOL:
            raise ValueError("boost axis must be a unit vector")

    @classmethod
    def from_beta(cls, beta: float, axis: np.ndarray | None = None) -> "BoostParameters":
        alpha = rapidity_from_beta(beta)
        return cls(beta, alpha, X_AXIS.copy() if axis is None else axis)

    @classmethod
    def from_rapidity(cls, alpha: float, axis: np.ndarray | None = None) -> "BoostParameters":
        beta = beta_from_rapidity(alpha)
        return cls(beta, alpha, X_AXIS.copy() if axis is None else axis)

    @classmethod
    def from_cosh_alpha(cls, cosh_alpha: float, axis: np.ndarray | None = None) -> "BoostParameters":
        return cls.from_rapidity(rapidity_from_cosh(cosh_alpha), axis)

    def requires_x_axis(self) -> None:
        if not np.array_equal(self.axis_e, X_AXIS):
            raise ValueError("this operation assumes the boost axis is exactly x")


@dataclass(frozen=True, eq=False)
class MomentumState:
    """Kinematics of the particle pair: mass, rapidity and direction angles."""

    mass_m: float
    rapidity_delta: float
    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if self.mass_m <= 0.0:
            raise ValueError(f"mass must be positive, got {self.mass_m}")
        if self.rapidity_delta < 0.0:
            raise ValueError("momentum rapidity must be nonnegative")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise ValueError(f"phi must lie in [0, 2*pi), got {self.phi}")

    @classmethod
    def from_cosh_delta(cls, mass_m: float, cosh_delta: float,
                        theta: float, phi: float = 0.0) -> "MomentumState":
        return cls(mass_m, rapidity_from_cosh(cosh_delta), theta, phi)

    @property
    def energy(self) -> float:
        return self.mass_m * math.cosh(self.rapidity_delta)

    @property
    def momentum_magnitude(self) -> float:
        return self.mass_m * math.sinh(self.rapidity_delta)

    @property
    def direction(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi),
                         math.cos(self.theta)])


@dataclass(frozen=True, eq=False)
class WignerRotation:
    """Half-angle data of the rotation a boosted spinor acquires.

    ``sin_half`` is stored nonnegative; the orientation lives in ``axis_n``,
    which is the zero vector in the degenerate collinear case.
    """

    cos_half: float
    sin_half: float
    axis_n: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "axis_n", np.asarray(self.axis_n, dtype=float))
        if self.sin_half < 0.0:
            raise ValueError("sin_half must be nonnegative")
        if abs(self.cos_half**2 + self.sin_half**2 - 1.0) > _UNIT_TOL:
            raise ValueError("cos_half^2 + sin_half^2 must equal 1")
        norm = np.linalg.norm(self.axis_n)
        if norm > _UNIT_TOL and abs(norm - 1.0) > _UNIT_TOL:
            raise ValueError("axis must be unit-norm or exactly zero")

    @property
    def omega(self) -> float:
        return 2.0 * math.atan2(self.sin_half, self.cos_half)


def _validate_sign(sign: int) -> int:
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return sign


def four_momentum(m: MomentumState, sign: int) -> tuple[np.ndarray, float]:
    """(three-momentum, energy) of the particle carrying ``sign * p``."""
    _validate_sign(sign)
    return sign * m.momentum_magnitude * m.direction, m.energy


def boosted_energy(m: MomentumState, b: BoostParameters, sign: int) -> float:
    """Energy of the ``sign * p`` particle as seen by the boosted observer."""
    pvec, energy = four_momentum(m, sign)
    return energy * math.cosh(b.rapidity_alpha) + math.sinh(b.rapidity_alpha) * float(pvec @ b.axis_e)


def wigner_rotation(b: BoostParameters, m: MomentumState, sign: int) -> WignerRotation:
    """Half-angle form of the little-group rotation for the ``sign * p`` particle.

    cos(O/2) = [ch(a/2)ch(d/2) + sh(a/2)sh(d/2) (e.p)] / sqrt(1/2 + ch(a)ch(d)/2 + sh(a)sh(d)(e.p)/2)
    sin(O/2) n = sh(a/2)sh(d/2) (e x p) / (same denominator)
    """
    _validate_sign(sign)
    alpha, delta = b.rapidity_alpha, m.rapidity_delta
    phat = sign * m.direction
    edotp = float(b.axis_e @ phat)
    ha, hd = alpha / 2.0, delta / 2.0
    den = math.sqrt(0.5 + 0.5 * math.cosh(alpha) * math.cosh(delta)
                    + 0.5 * math.sinh(alpha) * math.sinh(delta) * edotp)
    cos_half = (math.cosh(ha) * math.cosh(hd) + math.sinh(ha) * math.sinh(hd) * edotp) / den
    sin_vec = math.sinh(ha) * math.sinh(hd) * np.cross(b.axis_e, phat) / den
    sin_half = float(np.linalg.norm(sin_vec))
    if sin_half <= 1e-15:
        return WignerRotation(min(cos_half, 1.0), 0.0, np.zeros(3))
    return WignerRotation(cos_half, sin_half, sin_vec / sin_half)


def eta_decomposition(theta: float, phi: float) -> tuple[float, float, float]:
    """(r, cos_eta, sin_eta) of the rotation-axis tilt out of the x-z plane.

    r = |e x p| = sqrt(sin^2(theta) sin^2(phi) + cos^2(theta)); the degenerate
    r = 0 case (momentum collinear with the boost) returns (0, 1, 0) by
    convention, which is safe because every term it multiplies vanishes.
    """
    r = math.sqrt(math.sin(theta)**2 * math.sin(phi)**2 + math.cos(theta)**2)
    if r < 1e-15:
        return 0.0, 1.0, 0.0
    return r, math.cos(theta) / r, math.sin(theta) * math.sin(phi) / r


def coth_half_squared(rapidity: float) -> float:
    """coth^2(x/2) = (cosh(x/2) / sinh(x/2))^2, +inf at x = 0.

    The half-angle quotient is free of the cancellation in
    (cosh x + 1)/(cosh x - 1) and overflows to the +inf sentinel for
    rapidities below the double-precision floor.
    """
    if rapidity < 0.0:
        raise ValueError("rapidity must be nonnegative")
    sh = math.sinh(rapidity / 2.0)
    if sh == 0.0:
        return math.inf
    quotient = math.cosh(rapidity / 2.0) / sh
    if quotient > 1.3e154:  # square would overflow
        return math.inf
    return quotient**2


@dataclass(frozen=True, eq=False)
class AngleDecomposition:
    """Derived angle set of the pair rotation and its coefficient tuples.

    ``omega_bar`` / ``delta_omega`` are the half-sum and half-difference of
    the two Wigner angles; ``(x, y, z, w)`` and ``(xp, yp, zp)`` are the
    Bell-coefficient tuples built from them, each of unit Euclidean norm.
    ``t`` collapses the boost/momentum dependence, with ``t = +inf`` when
    either rapidity vanishes.  The exact trig values the tuples were built
    from are kept alongside the angles to avoid re-deriving them.
    """

    omega_bar: float
    delta_omega: float
    r: float
    cos_eta: float
    sin_eta: float
    x: float
    y: float
    z: float
    w: float
    xp: float
    yp: float
    zp: float
    t: float
    cos_omega_bar: float
    sin_omega_bar: float
    cos_delta_omega: float
    sin_delta_omega: float

    def __post_init__(self) -> None:
        if abs(self.x**2 + self.y**2 + self.z**2 + self.w**2 - 1.0) > 1e-10:
            raise ValueError("x^2 + y^2 + z^2 + w^2 must equal 1")
        if abs(self.xp**2 + self.yp**2 + self.zp**2 - 1.0) > 1e-10:
            raise ValueError("xp^2 + yp^2 + zp^2 must equal 1")
        if self.r > 0.0 and abs(self.cos_eta**2 + self.sin_eta**2 - 1.0) > _UNIT_TOL:
            raise ValueError("cos_eta^2 + sin_eta^2 must equal 1")
        if not (math.isinf(self.t) or self.t >= 1.0):
            raise ValueError("t must be >= 1 or the +inf sentinel")


def angle_decomposition(b: BoostParameters, m: MomentumState) -> AngleDecomposition:
    """Half-sum/half-difference angles of the pair and the coefficient tuples.

    Built from the two Wigner rotations through the half-angle sum and
    difference identities rather than by subtracting full angles, so the
    small-boost regime keeps full precision.
    """
    b.requires_x_axis()
    plus = wigner_rotation(b, m, +1)
    minus = wigner_rotation(b, m, -1)
    cp, sp = plus.cos_half, plus.sin_half
    cm, sm = minus.cos_half, minus.sin_half

    cos_bar = cp * cm - sp * sm
    sin_bar = sp * cm + cp * sm
    cos_dif = cp * cm + sp * sm
    sin_dif = sp * cm - cp * sm

    r, cos_eta, sin_eta = eta_decomposition(m.theta, m.phi)

    x = cos_bar * cos_eta**2 + cos_dif * sin_eta**2
    y = sin_bar * cos_eta
    z = sin_dif * sin_eta
    w = (cos_dif - cos_bar) * sin_eta * cos_eta
    xp = sin_dif * cos_eta
    yp = sin_dif * sin_eta
    zp = cos_dif

    t = coth_half_squared(b.rapidity_alpha) * coth_half_squared(m.rapidity_delta)

    return AngleDecomposition(
        omega_bar=math.atan2(sin_bar, cos_bar),
        delta_omega=math.atan2(sin_dif, cos_dif),
        r=r, cos_eta=cos_eta, sin_eta=sin_eta,
        x=x, y=y, z=z, w=w, xp=xp, yp=yp, zp=zp, t=t,
        cos_omega_bar=cos_bar, sin_omega_bar=sin_bar,
        cos_delta_omega=cos_dif, sin_delta_omega=sin_dif,
    )


def appendix_quantities(t: float, theta: float, phi: float) -> tuple[float, float, float, float]:
    """(q_minus, q_plus, lower_minus, lower_plus) in the t-parametrization.

    q_minus = x^2 - y^2 - z^2 + w^2 and q_plus = x^2 + y^2 - z^2 - w^2,
    evaluated through t = coth^2(a/2) coth^2(d/2) instead of the angles.
    The returned lower bounds are 2 sin^2(theta) sin^2(phi) - 1 and
    cos(2 eta); both sandwich their q between themselves and 1.

    The rational forms are cleared of the tan(eta) singularity:
    r^2 cos^2(eta) = cos^2(theta) and r^2 sin^2(eta) = sin^2(theta)sin^2(phi).
    At r = 0 the rotations vanish identically, so both q are exactly 1 for
    every t (the t = 1 corner is an order-of-limits artifact).
    """
    if not (math.isinf(t) or t >= 1.0):
        raise ValueError(f"t must be >= 1 (or +inf), got {t}")
    s = math.sin(theta)**2 * math.sin(phi)**2
    c2 = math.cos(theta)**2
    r2 = s + c2
    lower_minus = 2.0 * s - 1.0
    _, cos_eta, sin_eta = eta_decomposition(theta, phi)
    lower_plus = cos_eta**2 - sin_eta**2
    # beyond ~1e100 the corrections are below 1e-99; avoid squaring overflow
    if math.isinf(t) or t > 1e100 or r2 == 0.0:
        return 1.0, 1.0, lower_minus, lower_plus
    den = (t - 1.0)**2 + 4.0 * t * r2
    q_minus = 1.0 - (8.0 * t * c2 + 8.0 * (1.0 - r2) * s) / den
    q_plus = 1.0 - 8.0 * s * (1.0 - s) / den
    return q_minus, q_plus, lower_minus, lower_plus


def pure_boost(axis: np.ndarray, rapidity: float) -> np.ndarray:
    """4x4 pure boost of the given rapidity along a unit axis, (x,y,z,t) order."""
    axis = np.asarray(axis, dtype=float)
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    out = np.eye(4)
    out[:3, :3] += (ch - 1.0) * np.outer(axis, axis)
    out[:3, 3] = sh * axis
    out[3, :3] = sh * axis
    out[3, 3] = ch
    return out


def standard_boost(m: MomentumState, sign: int) -> np.ndarray:
    """Boost taking the rest momentum (0,0,0,m) to the ``sign * p`` particle's."""
    _validate_sign(sign)
    return pure_boost(sign * m.direction, m.rapidity_delta)


def boost_matrix(b: BoostParameters) -> np.ndarray:
    """The observer's pure boost as a 4x4 matrix."""
    return pure_boost(b.axis_e, b.rapidity_alpha)
