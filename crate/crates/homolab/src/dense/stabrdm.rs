//! Bridges between the stabilizer and dense engines: exact reduced density
//! matrices of stabilizer states (no state vector needed) and fidelity of a
//! dense state against a tableau.

use super::operator::pauli_word_matrix;
use super::state::{CMatrix, DenseState};
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::stabilizer::{stabilizer_elements_within, PauliOperator, StabilizerTableau};
use num_complex::Complex64;

fn word_of(p: &PauliOperator) -> Vec<(usize, u8)> {
    p.support()
        .iter_ones()
        .map(|q| {
            let axis = match (p.x.get(q), p.z.get(q)) {
                (true, false) => 1,
                (true, true) => 2,
                (false, true) => 3,
                (false, false) => unreachable!(),
            };
            (q, axis)
        })
        .collect()
}

/// Sign of a Hermitian Pauli rewritten over {X,Y,Z} letters.
fn hermitian_sign(p: &PauliOperator) -> Result<f64> {
    if !p.is_hermitian() {
        return Err(Error::structure("group element with imaginary sign"));
    }
    Ok(p.sign() as f64)
}

/// Exact RDM of a stabilizer state on `keep`:
/// ρ_K = 2^{-|K|} Σ_{P ∈ G, supp(P) ⊆ K} P|_K, summed over the subgroup of
/// stabilizer elements supported inside K.
pub fn stabilizer_rdm(t: &StabilizerTableau, keep: &[usize]) -> Result<CMatrix> {
    let k = keep.len();
    debug_assert!(keep.windows(2).all(|w| w[0] < w[1]), "keep must be ascending");
    let region = BitSet::from_indices(t.qubits(), keep);
    let basis = stabilizer_elements_within(t, &region);
    if basis.len() > 24 {
        return Err(Error::precondition("inner subgroup too large to enumerate"));
    }
    // Tracing out K̄ kills every group element acting there, so
    // ρ_K = 2^{-k} Σ over the inner subgroup; the identity term seeds the sum.
    let mut rho = CMatrix::identity(1 << k);
    for mask in 1u64..(1 << basis.len()) {
        let mut p = PauliOperator::identity(t.qubits());
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                p = p.mul(b);
            }
        }
        let sign = hermitian_sign(&p)?;
        let m = pauli_word_matrix(&word_of(&p), keep);
        rho = rho.add(&m.scale(Complex64::new(sign, 0.0)));
    }
    Ok(rho.scale(Complex64::new(1.0 / (1 << k) as f64, 0.0)))
}

/// ⟨ψ| ρ_t |ψ⟩ where ρ_t is the tableau state: 2^{-n} Σ_{P∈G} ⟨ψ|P|ψ⟩,
/// enumerated over the whole group by Gray code. Exact up to float rounding;
/// equals 1 precisely when |ψ⟩ is the tableau state.
pub fn fidelity_with_tableau(psi: &DenseState, t: &StabilizerTableau) -> Result<f64> {
    if psi.qubits() != t.qubits() {
        return Err(Error::precondition("qubit count mismatch"));
    }
    let n = t.qubits();
    if n > 20 {
        return Err(Error::precondition("group too large to enumerate"));
    }
    let rows = t.rows();
    let mut current = PauliOperator::identity(n);
    let mut total = psi.pauli_expectation(&[]).re; // identity term = 1
    let count = 1u64 << rows.len();
    let mut prev_gray = 0u64;
    for i in 1..count {
        let gray = i ^ (i >> 1);
        let flipped = (gray ^ prev_gray).trailing_zeros() as usize;
        prev_gray = gray;
        current = current.mul(&rows[flipped]);
        let sign = hermitian_sign(&current)?;
        let word = word_of(&current);
        total += sign * psi.pauli_expectation(&word).re;
    }
    Ok(total / count as f64)
}
