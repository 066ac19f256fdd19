"""Adiabatic quantum unstructured search: optimized schedules and analysis tools.

Closed-form spectral quantities of the interpolating search Hamiltonian,
three interpolation schedules with their ideal probability curves, error
envelopes and the probability bounds they imply, exact Schroedinger dynamics
via an equivalent two-state system, a Grover baseline, and protocol /
bounded-resource runtime analysis.
"""

from .analysis import (
    CoherenceProbability,
    CrossingResult,
    NoCrossingError,
    ProtocolParams,
    ProtocolRun,
    ResourceBudget,
    crossing_time,
    grover_bounded_runtime,
    max_probability_for_coherence,
    overall_runtime,
    protocol_params,
    required_runs,
    run_protocol,
)
from .dynamics import TrajectoryPoint, full_simulate, marked_probability, reduced_rhs, simulate
from .error_models import (
    ErrorModelKind,
    epsilon_of_tau,
    linear_loose_bound,
    p_lower_bound_from_q,
    p_lower_bound_of_tau,
    q_upper_bound_from_p,
    time_to_probability,
)
from .grover import (
    GroverParams,
    bounded_depth_probability,
    grover_duration,
    grover_q_of_steps,
    grover_q_of_tau,
    grover_tau_of_q,
    matched_diabaticity,
)
from .integrator import (
    IntegrationError,
    IvpConfig,
    NonFiniteStateError,
    StepUnderflowError,
    Trajectory,
    dopri5_step,
    integrate,
)
from .schedules import (
    ScheduleKind,
    ScheduleSpec,
    duration,
    ideal_q_of_tau,
    ideal_tau_of_q,
    s_of_tau,
    tau_of_s,
)
from .spectral import (
    SearchInstance,
    SpectralPoint,
    dense_hamiltonian,
    dense_spectral_point,
    gap,
    ideal_marked_probability,
    invert_ideal_probability,
    spectral_point,
    transition_matrix_element,
)

__version__ = "0.1.0"
