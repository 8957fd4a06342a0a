"""qroute: topology-aware quantum circuit construction, routing and
verification for chain-style coupling graphs."""

from .circuits import (Circuit, Gate, GateKind, Layout, canonical_angle,
                       cnot_count, compose, inverse, relabel, validate)
from .hashing import (HashParams, accept_prob, branch_angles, cost_formula,
                      equality_circuit, equality_test, logical_hash_circuit,
                      naive_routed_circuit, placed_logical_circuit,
                      routed_hash_circuit, search_angles)
from .qft import (QftSchedule, builtin_schedule, execute_schedule,
                  greedy_schedule, reference_qft, validate_schedule,
                  verify_structural)
from .report import CostReport
from .simulate import (apply_multiplexed_ry, equivalent_up_to_perm_phase,
                       run, unitary_of)
from .topology import (CouplingGraph, TopologySpec, builtin, derive_chain,
                       lnn, load_custom)

__version__ = "0.1.0"

__all__ = [
    "Circuit", "Gate", "GateKind", "Layout", "canonical_angle", "cnot_count",
    "compose", "inverse", "relabel", "validate",
    "HashParams", "accept_prob", "branch_angles", "cost_formula",
    "equality_circuit", "equality_test", "logical_hash_circuit",
    "naive_routed_circuit", "placed_logical_circuit", "routed_hash_circuit",
    "search_angles",
    "QftSchedule", "builtin_schedule", "execute_schedule", "greedy_schedule",
    "reference_qft", "validate_schedule", "verify_structural",
    "CostReport",
    "apply_multiplexed_ry", "equivalent_up_to_perm_phase", "run", "unitary_of",
    "CouplingGraph", "TopologySpec", "builtin", "derive_chain", "lnn",
    "load_custom",
    "__version__",
]
