"""Entangling gates, entanglement classes and stability subalgebras for
two-player, three-strategy ELW quantum games."""
from .embedding import EmbeddingConfig, Epsilon, classical_unitaries, eigenbasis, eigenvalue_table
from .entanglement import (
    Kind,
    classify,
    coefficient_matrix,
    double_root_condition,
    maximal_solutions,
    offdiag_triple,
    reduced_density,
    reduced_density_closed_form,
    two_equal_special_solutions,
)
from .game import (
    MixedTarget,
    PayoffMatrix,
    counterstrategy,
    expected_payoffs,
    final_state,
    mixed_feasibility,
    outcome_probabilities,
    strategy_probabilities,
)
from .gate import GateParams, gate_full, gate_tilde, initial_state, phase_exponents
from .stability import (
    GeneratorCombo,
    conjugate_probe,
    maximal_counter_generators,
    span_match,
    stability_algebra,
    symmetrize_basis,
    verify_generator,
)

__version__ = "0.1.0"
