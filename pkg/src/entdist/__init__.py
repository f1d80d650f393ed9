"""Entanglement distance, entanglement metric and spectrum for pure M-qubit states."""

from .families import (
    BRS,
    FAMILY_TAGS,
    GHZL,
    THREEQ,
    ClosedForm,
    FamilySpec,
    brs_n01,
    brs_reference_metric,
    brs_state,
    closed_form_E,
    family_state,
    ghzl_state,
    three_qubit_state,
)
from .metric import (
    DEFAULT_RANK_TOL,
    EntanglementMetric,
    Spectrum,
    WVector,
    distance_density,
    entanglement_measure,
    entanglement_metric,
    metric_matrix,
    optimal_directions,
    spectrum,
    w_vectors,
)
from .qstate import (
    HADAMARD,
    MAX_QUBITS,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    Direction,
    LocalUnitary,
    StateFileError,
    StateVector,
    apply_local_unitary,
    direction_operator,
    make_basis_state,
    pauli_expectation,
    pauli_pair_correlation,
    random_local_unitary,
    read_state_file,
    write_state_file,
)
from .verify import (
    OptimizerReport,
    bloch_vector_oracle,
    invariance_check,
    minimize_trace_numeric,
    reduced_density_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BRS",
    "GHZL",
    "THREEQ",
    "FAMILY_TAGS",
    "MAX_QUBITS",
    "DEFAULT_RANK_TOL",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "HADAMARD",
    "StateVector",
    "Direction",
    "LocalUnitary",
    "StateFileError",
    "WVector",
    "EntanglementMetric",
    "Spectrum",
    "FamilySpec",
    "ClosedForm",
    "OptimizerReport",
    "make_basis_state",
    "apply_local_unitary",
    "pauli_expectation",
    "pauli_pair_correlation",
    "random_local_unitary",
    "direction_operator",
    "read_state_file",
    "write_state_file",
    "w_vectors",
    "optimal_directions",
    "entanglement_measure",
    "metric_matrix",
    "entanglement_metric",
    "spectrum",
    "distance_density",
    "brs_n01",
    "brs_state",
    "ghzl_state",
    "three_qubit_state",
    "family_state",
    "closed_form_E",
    "brs_reference_metric",
    "minimize_trace_numeric",
    "bloch_vector_oracle",
    "reduced_density_matrix",
    "invariance_check",
]
