//! Pauli algebra, surface-code stabilizer groups, encoder synthesis, a
//! sign-exact tableau simulator, and the lemma verifications built on them.

mod encoder;
mod pauli;
mod surface;
mod tableau;
mod verify;

pub use encoder::synthesize_encoder;
pub use pauli::{intersection_parity, PauliOperator};
pub use surface::{
    independent_generators, logical_x_cocycles, logical_z_cycles, plaquette_operator,
    star_operator, surface_generators, symplectic_rank, StabilizerGroupSpec,
};
pub use tableau::{
    pauli_displaced_states_equal, run_circuit, states_equal, StabilizerTableau,
};
pub use verify::{
    appendix_a_hamiltonian, stabilizer_elements_within, verify_comut_op, verify_comut_op_with,
    verify_large_b, verify_large_b_with, AppendixAReport, ComutOpVerdict, HamiltonianTerm,
    LargeBVerdict,
};
