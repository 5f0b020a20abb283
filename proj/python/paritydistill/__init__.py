"""Exact simulator for parity-check distillation of maximally entangled
states of two identical qubits (bosons or fermions) on two spatial modes.

The heavy lifting happens in the compiled extension; this package re-exports
its operations. Density operators and unitaries are numpy arrays over the
canonical occupation basis (see :func:`basis_occupancies`).
"""

from ._core import (
    SimulatorError,
    __version__,
    apply_local_pair,
    basis_occupancies,
    closed_form_probabilities,
    disturbance_probability,
    element_unitary,
    evolve,
    fidelity,
    lift,
    lift_matrix,
    local_kraus,
    named_labels,
    named_state,
    parity_measure,
    parity_projector,
    po_components,
    po_reach_labels,
    post_bs_state,
    product_state,
    purity,
    reset_amplitude_damp,
    reset_depolarize,
    run_exact,
    run_monte_carlo,
    spectral_density,
    sweep_csv,
    verify_stated_edges,
)

__all__ = [
    "SimulatorError",
    "__version__",
    "apply_local_pair",
    "basis_occupancies",
    "closed_form_probabilities",
    "disturbance_probability",
    "element_unitary",
    "evolve",
    "fidelity",
    "lift",
    "lift_matrix",
    "local_kraus",
    "named_labels",
    "named_state",
    "parity_measure",
    "parity_projector",
    "po_components",
    "po_reach_labels",
    "post_bs_state",
    "product_state",
    "purity",
    "reset_amplitude_damp",
    "reset_depolarize",
    "run_exact",
    "run_monte_carlo",
    "spectral_density",
    "sweep_csv",
    "verify_stated_edges",
]
