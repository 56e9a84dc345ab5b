"""Thermal entanglement of a two-qubit Heisenberg XXX chain with x-components
of DM and KSEA interactions."""

from ._spinpair import (
    SpinpairError,
    analytic_spectrum,
    build_hamiltonian,
    classify_ground_state,
    concurrence,
    concurrence_of_state,
    critical_temperature,
    limit_high_temperature,
    limit_strong_coupling,
    limit_strong_dm_ksea,
    partition_function,
    phase_diagram,
    sweep_1d,
    thermal_state,
    verify,
)

__all__ = [
    "SpinpairError",
    "analytic_spectrum",
    "build_hamiltonian",
    "classify_ground_state",
    "concurrence",
    "concurrence_of_state",
    "critical_temperature",
    "limit_high_temperature",
    "limit_strong_coupling",
    "limit_strong_dm_ksea",
    "partition_function",
    "phase_diagram",
    "sweep_1d",
    "thermal_state",
    "verify",
]
