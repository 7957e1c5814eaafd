"""Brute-force cross-checks: 4x4 little-group elements, the direct spinor
matrix, dense tensor expectations, and the seeded comparison suite.

Everything here recomputes quantities the closed forms also provide, by a
route that shares no algebra with them, and is therefore usable as ground
truth in tests and verification runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chsh import canonical_settings, chsh_closed_form, chsh_value
from .kinematics import (BoostParameters, MomentumState, WignerRotation,
                         angle_decomposition, boost_matrix, boosted_energy,
                         four_momentum, pure_boost, standard_boost,
                         wigner_rotation)
from .observables import (PAULI, MeasurementDirection, SpinObservable,
                          expectation_closed_form, spin_observable)
from .spin_states import (BELL_LABELS, Su2Matrix, TwoParticleSpinState,
                          bell_decompose, bell_state, boost_bell_closed_form,
                          boost_two_particle, wigner_matrix)

MINKOWSKI = np.diag([-1.0, -1.0, -1.0, 1.0])


class InternalConsistencyError(RuntimeError):
    """A brute-force construction violated one of its own guarantees."""


@dataclass(frozen=True, eq=False)
class Lorentz4:
    """A 4x4 matrix preserving the Minkowski metric, (x, y, z, t) order.

    ``tolerance`` is the metric-preservation allowance; the 1e-10 default
    covers direct constructions, while callers assembling a matrix through
    ill-conditioned products pass the error bound of their computation.
    """

    entries: np.ndarray
    tolerance: float = 1e-10

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        object.__setattr__(self, "entries", entries)
        if entries.shape != (4, 4):
            raise ValueError("expected a 4x4 matrix")
        if np.abs(entries.T @ MINKOWSKI @ entries - MINKOWSKI).max() > self.tolerance:
            raise ValueError("matrix does not preserve the Minkowski metric")


_LONG_EPS = float(np.finfo(np.longdouble).eps)


def _boost_from_cosh_sinh(axis: np.ndarray, ch, sh) -> np.ndarray:
    """Extended-precision pure boost given cosh and sinh of its rapidity.

    Taking (ch, sh) directly instead of the rapidity avoids a lossy
    arccosh/sinh round trip when the hyperbolics are already known.
    """
    axis = np.asarray(axis, dtype=np.longdouble)
    # a double-rounded axis is unit only to ~1e-16, which the cosh^2 terms
    # amplify; renormalize at extended precision
    axis = axis / np.sqrt((axis * axis).sum())
    ch = np.longdouble(ch)
    sh = np.longdouble(sh)
    out = np.eye(4, dtype=np.longdouble)
    out[:3, :3] += (ch - 1.0) * np.outer(axis, axis)
    out[:3, 3] = sh * axis
    out[3, :3] = sh * axis
    out[3, 3] = ch
    return out


def _pure_boost_extended(axis: np.ndarray, rapidity) -> np.ndarray:
    """pure_boost evaluated in extended precision (oracle internals only)."""
    rapidity = np.longdouble(rapidity)
    return _boost_from_cosh_sinh(axis, np.cosh(rapidity), np.sinh(rapidity))


def little_group_element(b: BoostParameters, m: MomentumState,
                         sign: int) -> tuple[Lorentz4, WignerRotation]:
    """The residual rotation L^-1(Lp) Lambda L(p), built from 4x4 matrices.

    The rotation angle comes from the trace of the spatial block and the
    axis from its antisymmetric part; the axis sign is chosen so that the
    result feeds the spinor convention cos(O/2) + i sin(O/2) sigma.n (the
    spatial block itself rotates vectors by -O about that n).

    The triple product cancels terms of size (Lp)^0 p^0 / m^2 down to O(1),
    so it is evaluated in extended precision and the residual conditioning
    bound is carried into the returned container's tolerance.
    """
    _validate_little_group_inputs(b, m, sign)
    lab_boost = _pure_boost_extended(sign * m.direction, m.rapidity_delta)
    observer = _pure_boost_extended(b.axis_e, b.rapidity_alpha)
    rest = np.array([0.0, 0.0, 0.0, m.mass_m], dtype=np.longdouble)
    boosted = observer @ lab_boost @ rest
    energy = boosted[3]
    momentum = boosted[:3]
    magnitude = np.sqrt((momentum * momentum).sum())
    if magnitude < 1e-14 * m.mass_m:
        inverse = np.eye(4, dtype=np.longdouble)
    else:
        inverse = _boost_from_cosh_sinh(momentum / magnitude,
                                        energy / m.mass_m,
                                        -magnitude / m.mass_m)
    w = inverse @ observer @ lab_boost

    # conditioning of the cancellation in the triple product
    scale = float(energy / m.mass_m) * m.energy / m.mass_m * math.cosh(b.rapidity_alpha)
    tolerance = max(1e-10, 500.0 * _LONG_EPS * scale)
    if float(np.abs(w @ rest - rest).max()) > tolerance * m.mass_m:
        raise InternalConsistencyError("little-group element moved the rest momentum")
    block = w[:3, :3].astype(float)
    if np.abs(block.T @ block - np.eye(3)).max() > tolerance:
        raise InternalConsistencyError("extracted spatial block is not orthogonal")

    cos_omega = max(-1.0, min(1.0, (np.trace(block) - 1.0) / 2.0))
    antisym = 0.5 * np.array([block[2, 1] - block[1, 2],
                              block[0, 2] - block[2, 0],
                              block[1, 0] - block[0, 1]])
    sin_omega = float(np.linalg.norm(antisym))
    omega = math.atan2(sin_omega, cos_omega)
    if sin_omega < 1e-8:
        axis = np.zeros(3)
    else:
        axis = -antisym / sin_omega
    rotation = WignerRotation(math.cos(omega / 2.0), math.sin(omega / 2.0), axis)
    return Lorentz4(w.astype(float), tolerance), rotation


def _validate_little_group_inputs(b: BoostParameters, m: MomentumState,
                                  sign: int) -> None:
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")


def wigner_matrix_direct(b: BoostParameters, m: MomentumState, sign: int) -> Su2Matrix:
    """Spinor rotation from the explicit pre-half-angle expression.

    [(p0+m) ch(a/2) + (p.e) sh(a/2) - i sh(a/2) sigma.(p x e)]
        / sqrt((p0+m)((Lp)0+m)),
    evaluated with the signed momentum directly; bypasses all the angle
    algebra in :mod:`relbell.kinematics`.
    """
    pvec, energy = four_momentum(m, sign)
    mass = m.mass_m
    ha = b.rapidity_alpha / 2.0
    boosted = boosted_energy(m, b, sign)
    numerator = ((energy + mass) * math.cosh(ha)
                 + float(pvec @ b.axis_e) * math.sinh(ha)) * np.eye(2) \
        - 1j * math.sinh(ha) * np.einsum("i,ijk->jk", np.cross(pvec, b.axis_e), PAULI)
    return Su2Matrix(numerator / math.sqrt((energy + mass) * (boosted + mass)))


def tensor_operator_columns(a: MeasurementDirection, b: MeasurementDirection,
                            beta: float) -> np.ndarray:
    """The 4x4 joint observable assembled column by column.

    Each column is the closed-form action of a_hat (x) b_hat on one product
    basis vector, written out term by term; column order (uu, ud, du, dd).
    """
    g = 1.0 - beta**2
    sg = math.sqrt(g)
    ax, ay, az = a.vec_a
    bx, by, bz = b.vec_a
    norm = math.sqrt((1.0 + beta**2 * (ax**2 - 1.0)) * (1.0 + beta**2 * (bx**2 - 1.0)))
    a_plus = ax + 1j * ay * sg
    a_minus = ax - 1j * ay * sg
    b_plus = bx + 1j * by * sg
    b_minus = bx - 1j * by * sg
    col_uu = np.array([g * az * bz, sg * az * b_plus, sg * bz * a_plus,
                       a_plus * b_plus])
    col_ud = np.array([sg * az * b_minus, -g * az * bz, a_plus * b_minus,
                       -sg * bz * a_plus])
    col_du = np.array([sg * bz * a_minus, a_minus * b_plus, -g * az * bz,
                       -sg * az * b_plus])
    col_dd = np.array([a_minus * b_minus, -sg * bz * a_minus, -sg * az * b_minus,
                       g * az * bz])
    return np.stack([col_uu, col_ud, col_du, col_dd], axis=1) / norm


def dense_expectation(state: TwoParticleSpinState, op_a: SpinObservable,
                      op_b: SpinObservable) -> float:
    """Quadratic form of the explicit 4x4 tensor-product operator."""
    op = np.kron(op_a.matrix, op_b.matrix)
    return float((state.amplitudes.conj() @ op @ state.amplitudes).real)


@dataclass(frozen=True, eq=False)
class CrosscheckReport:
    """Outcome of one seeded comparison run.

    ``deviations`` holds the maximum absolute deviation seen per comparison,
    ``tolerances`` the threshold each is held to, and ``failures`` one entry
    per comparison that exceeded it, with the offending parameter tuple.
    """

    seed: int
    n_samples: int
    deviations: dict[str, float]
    tolerances: dict[str, float]
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_samples": self.n_samples,
            "passed": self.passed,
            "comparisons": [
                {"name": name, "max_deviation": dev, "tolerance": self.tolerances[name]}
                for name, dev in self.deviations.items()
            ],
            "failures": list(self.failures),
        }


_SUITE_TOLERANCES = {
    "little_group_vs_half_angle": 1e-9,
    "direct_su2_vs_half_angle": 1e-9,
    "bell_closed_form_vs_matrix": 1e-9,
    "tensor_columns_vs_kron": 1e-12,
    "expectation_closed_form_vs_dense": 1e-9,
    "chsh_closed_form_vs_assembled": 1e-9,
    "coefficient_normalization": 1e-10,
    "boosted_state_norm": 1e-12,
}


def _random_direction(rng: np.random.Generator) -> MeasurementDirection:
    # inverse-CDF sphere sampling: uniform cos(theta), uniform phi
    cos_t = rng.uniform(-1.0, 1.0)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    sin_t = math.sqrt(1.0 - cos_t**2)
    return MeasurementDirection(np.array([sin_t * math.cos(phi),
                                          sin_t * math.sin(phi), cos_t]))


def crosscheck_suite(seed: int, n_samples: int, beta_max: float = 0.999,
                     delta_max: float = 10.0) -> CrosscheckReport:
    """Run every pairwise path comparison on seeded random parameter tuples.

    Draws (beta, delta, theta, phi) and two measurement directions per
    sample, runs the little-group / direct-matrix / closed-form / dense
    paths against each other, and reports the worst deviation seen per
    comparison.  Bit-identical for identical seeds.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    if not 0.0 <= beta_max < 1.0:
        raise ValueError("beta_max must lie in [0, 1)")
    rng = np.random.default_rng(seed)
    worst: dict[str, float] = {name: 0.0 for name in _SUITE_TOLERANCES}
    offenders: dict[str, dict] = {}

    def record(name: str, deviation: float, params: dict) -> None:
        if deviation > worst[name]:
            worst[name] = deviation
            if deviation > _SUITE_TOLERANCES[name]:
                offenders[name] = {"comparison": name, "deviation": deviation, **params}

    for _ in range(n_samples):
        beta = rng.uniform(0.0, beta_max)
        delta = rng.uniform(0.0, delta_max)
        theta = math.acos(rng.uniform(-1.0, 1.0))
        phi = rng.uniform(0.0, 2.0 * math.pi)
        a_dir = _random_direction(rng)
        b_dir = _random_direction(rng)
        params = {"beta": beta, "delta": delta, "theta": theta, "phi": phi}

        boost = BoostParameters.from_beta(beta)
        momentum = MomentumState(1.0, delta, theta, phi)
        angles = angle_decomposition(boost, momentum)

        for sign in (+1, -1):
            closed = wigner_rotation(boost, momentum, sign)
            _, extracted = little_group_element(boost, momentum, sign)
            dev = max(abs(extracted.cos_half - closed.cos_half),
                      float(np.abs(extracted.sin_half * extracted.axis_n
                                   - closed.sin_half * closed.axis_n).max()))
            record("little_group_vs_half_angle", dev, params)

            direct = wigner_matrix_direct(boost, momentum, sign).entries
            half_angle = wigner_matrix(closed).entries
            record("direct_su2_vs_half_angle",
                   float(np.abs(direct - half_angle).max()), params)

        boosted = {label: boost_two_particle(bell_state(label), boost, momentum)
                   for label in BELL_LABELS}
        for label in BELL_LABELS:
            record("boosted_state_norm",
                   abs(np.linalg.norm(boosted[label].amplitudes) - 1.0), params)
            dev = float(np.abs(bell_decompose(boosted[label]).as_array()
                               - boost_bell_closed_form(label, angles).as_array()).max())
            record("bell_closed_form_vs_matrix", dev, params)

        record("coefficient_normalization",
               max(abs(angles.x**2 + angles.y**2 + angles.z**2 + angles.w**2 - 1.0),
                   abs(angles.xp**2 + angles.yp**2 + angles.zp**2 - 1.0)),
               params)

        columns = tensor_operator_columns(a_dir, b_dir, beta)
        kron = np.kron(spin_observable(a_dir, boost).matrix,
                       spin_observable(b_dir, boost).matrix)
        record("tensor_columns_vs_kron", float(np.abs(columns - kron).max()), params)

        for label in ("00", "01"):
            closed_val = expectation_closed_form(label, angles, a_dir, b_dir,
                                                 beta, case="B")
            dense_val = dense_expectation(boosted[label],
                                          spin_observable(a_dir, boost),
                                          spin_observable(b_dir, boost))
            record("expectation_closed_form_vs_dense",
                   abs(closed_val - dense_val), params)

            assembled = chsh_value(label, canonical_settings(label), boost, momentum)
            record("chsh_closed_form_vs_assembled",
                   abs(chsh_closed_form(label, beta, angles, case="B") - assembled),
                   params)

    return CrosscheckReport(seed=seed, n_samples=n_samples, deviations=worst,
                            tolerances=dict(_SUITE_TOLERANCES),
                            failures=sorted(offenders.values(),
                                            key=lambda f: f["comparison"]))


_BOUNDS_TOLERANCES = {
    "q_minus_within_bounds": 1e-12,
    "q_plus_within_bounds": 1e-12,
    "f_nonincreasing": 1e-12,
    "g_nonincreasing": 1e-12,
    "t_form_vs_angle_form": 1e-10,
    # the curve is quartically flat at beta = 0; the first grid decrement is
    # below double resolution, so allow one ulp of noise there
    "universal_curve_decreasing": 4.5e-16,
}


def bounds_suite(n_t: int = 100, n_theta: int = 50, n_phi: int = 50,
                 n_beta: int = 10_000) -> CrosscheckReport:
    """Grid check of the two-sided bounds and monotonicity statements.

    Over log-spaced t in [1, 1e6] and full angle grids: both quadratic
    combinations stay between their lower bound and 1 (slack >= -1e-12),
    the two rational envelopes are nonincreasing in t, and the t-form
    agrees with the angle-form evaluation.  The summary curve is checked
    to be strictly decreasing over a dense beta grid on the side.
    """
    from .chsh import universal_curve
    from .kinematics import appendix_quantities, eta_decomposition

    t_grid = np.geomspace(1.0, 1e6, n_t)
    theta_grid = np.linspace(0.0, math.pi, n_theta)
    phi_grid = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)

    worst: dict[str, float] = {name: -math.inf for name in _BOUNDS_TOLERANCES}
    offenders: dict[str, dict] = {}

    def record(name: str, violation: float, params: dict) -> None:
        if violation > worst[name]:
            worst[name] = violation
            if violation > _BOUNDS_TOLERANCES[name]:
                offenders[name] = {"comparison": name, "deviation": violation, **params}

    for theta in theta_grid:
        for phi in phi_grid:
            params = {"theta": float(theta), "phi": float(phi)}
            r2 = math.sin(theta)**2 * math.sin(phi)**2 + math.cos(theta)**2
            _, cos_eta, sin_eta = eta_decomposition(theta, phi)
            fs, gs = [], []
            for t in t_grid:
                q_minus, q_plus, low_minus, low_plus = appendix_quantities(t, theta, phi)
                record("q_minus_within_bounds",
                       max(low_minus - q_minus, q_minus - 1.0), {**params, "t": float(t)})
                record("q_plus_within_bounds",
                       max(low_plus - q_plus, q_plus - 1.0), {**params, "t": float(t)})
                if r2 > 0.0 and cos_eta != 0.0:
                    envelope = (t - 1.0)**2 + 4.0 * r2 * t
                    fs.append((t + (1.0 - r2) * (sin_eta / cos_eta)**2) / envelope)
                    gs.append((1.0 - r2 * sin_eta**2) / envelope)
            for values, name in ((fs, "f_nonincreasing"), (gs, "g_nonincreasing")):
                for prev, cur, t in zip(values, values[1:], t_grid[1:]):
                    record(name, cur - prev - 1e-12 * max(1.0, abs(prev)),
                           {**params, "t": float(t)})

    # t-form equivalence against the angle route on sampled kinematics
    rng = np.random.default_rng(0)
    for _ in range(200):
        boost = BoostParameters.from_beta(rng.uniform(0.0, 0.999))
        momentum = MomentumState(1.0, rng.uniform(0.0, 10.0),
                                 math.acos(rng.uniform(-1.0, 1.0)),
                                 rng.uniform(0.0, 2.0 * math.pi))
        angles = angle_decomposition(boost, momentum)
        q_minus, q_plus, _, _ = appendix_quantities(angles.t, momentum.theta,
                                                    momentum.phi)
        direct_minus = angles.x**2 - angles.y**2 - angles.z**2 + angles.w**2
        direct_plus = angles.x**2 + angles.y**2 - angles.z**2 - angles.w**2
        record("t_form_vs_angle_form",
               max(abs(q_minus - direct_minus), abs(q_plus - direct_plus)),
               {"beta": boost.beta, "delta": momentum.rapidity_delta,
                "theta": momentum.theta, "phi": momentum.phi})

    betas = np.linspace(0.0, 1.0, n_beta)
    curve = np.array([universal_curve(float(v)) for v in betas])
    diffs = np.diff(curve)
    record("universal_curve_decreasing", float(diffs.max()),
           {"beta": float(betas[int(np.argmax(diffs)) + 1])})

    return CrosscheckReport(seed=0, n_samples=n_t * n_theta * n_phi,
                            deviations=worst, tolerances=dict(_BOUNDS_TOLERANCES),
                            failures=sorted(offenders.values(),
                                            key=lambda f: f["comparison"]))
