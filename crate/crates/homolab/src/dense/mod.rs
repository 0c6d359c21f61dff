//! Small dense state-vector engine (≤ 14 qubits) for the constructions that
//! fall outside the stabilizer formalism: history states and overlaps,
//! reduced density matrices, energy identities, and cross-engine checks.

mod eigen;
mod history;
mod operator;
mod stabrdm;
mod state;

pub use eigen::{hermitian_eigenvalues, min_eigenvalue, trace_distance};
pub use history::{
    cat_plus, clock_qubits, expected_history_overlap, extended_cat, history_state,
};
pub use operator::{
    correlation_check, energy_from_rdms, pauli_word_matrix, DenseOperator, Ensemble, PauliWord,
};
pub use stabrdm::{fidelity_with_tableau, stabilizer_rdm};
pub use state::{CMatrix, DenseState, EQ_TOL, MAX_QUBITS, NORM_TOL};
