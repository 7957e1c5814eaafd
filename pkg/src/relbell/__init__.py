"""Lorentz-boosted Bell states: Wigner rotations, relativistic spin
observables and CHSH Bell curves, with brute-force cross-checks."""

from .chsh import (ChshSettings, MaximizeResult, canonical_settings,
                   chsh_closed_form, chsh_value, maximize_chsh,
                   universal_curve)
from .kinematics import (AngleDecomposition, BoostParameters, MomentumState,
                         WignerRotation, angle_decomposition,
                         appendix_quantities, beta_from_rapidity, boost_matrix,
                         boosted_energy, eta_decomposition, four_momentum,
                         rapidity_from_beta, standard_boost, wigner_rotation)
from .observables import (ClosedFormUnavailable, CorrelationWeights,
                          MeasurementDirection, SpinObservable,
                          classical_limit_correlation, correlation_weights,
                          expectation_closed_form, joint_expectation,
                          relativistic_spin_vector, spin_observable)
from .oracle import (CrosscheckReport, InternalConsistencyError, Lorentz4,
                     bounds_suite, crosscheck_suite, dense_expectation,
                     little_group_element, tensor_operator_columns,
                     wigner_matrix_direct)
from .spin_states import (BellDecomposition, Su2Matrix, TwoParticleSpinState,
                          bell_decompose, bell_recompose, bell_state,
                          boost_bell_closed_form, boost_two_particle,
                          wigner_matrix)

__version__ = "0.1.0"

__all__ = [
    "AngleDecomposition", "BellDecomposition", "BoostParameters",
    "ChshSettings", "ClosedFormUnavailable", "CorrelationWeights",
    "CrosscheckReport", "InternalConsistencyError", "Lorentz4",
    "MaximizeResult", "MeasurementDirection", "MomentumState",
    "SpinObservable", "Su2Matrix", "TwoParticleSpinState", "WignerRotation",
    "angle_decomposition", "appendix_quantities", "bell_decompose",
    "bell_recompose", "bell_state", "beta_from_rapidity", "boost_bell_closed_form",
    "boost_matrix", "boost_two_particle", "boosted_energy", "bounds_suite",
    "canonical_settings", "chsh_closed_form", "chsh_value",
    "classical_limit_correlation", "correlation_weights", "crosscheck_suite",
    "dense_expectation", "eta_decomposition", "expectation_closed_form",
    "four_momentum", "joint_expectation", "little_group_element",
    "maximize_chsh", "rapidity_from_beta", "relativistic_spin_vector",
    "spin_observable", "standard_boost", "tensor_operator_columns",
    "universal_curve", "wigner_matrix", "wigner_matrix_direct",
    "wigner_rotation",
]
