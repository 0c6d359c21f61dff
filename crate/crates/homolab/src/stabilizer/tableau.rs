//! Sign-exact stabilizer tableaux: simulate Clifford circuits on |0ⁿ⟩,
//! decide sign-exact stabilization, and compare states via canonical forms.

use super::pauli::PauliOperator;
use crate::circuit::Circuit;
use crate::error::{Error, Result};

/// A pure stabilizer state given by n independent, pairwise commuting
/// stabilizer rows with explicit signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerTableau {
    n: usize,
    rows: Vec<PauliOperator>,
}

impl StabilizerTableau {
    /// |0ⁿ⟩: stabilized by +Z_q for every q.
    pub fn zero_state(n: usize) -> Self {
        StabilizerTableau {
            n,
            rows: (0..n).map(|q| PauliOperator::single_z(n, q)).collect(),
        }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[PauliOperator] {
        &self.rows
    }

    /// Applies a gate to the state, conjugating every row.
    pub fn apply_gate(&mut self, gate: &crate::circuit::Gate) {
        for row in &mut self.rows {
            row.apply_gate(gate);
        }
    }

    pub fn apply_circuit(&mut self, u: &Circuit) {
        for gate in u.gates() {
            self.apply_gate(gate);
        }
    }

    /// Applies a Pauli unitary to the state: rows anticommuting with it flip
    /// sign, the rest are unchanged.
    pub fn apply_pauli(&mut self, p: &PauliOperator) {
        for row in &mut self.rows {
            if !row.commutes_with(p) {
                row.phase = (row.phase + 2) % 4;
            }
        }
    }

    /// Canonical generating set: reduced row echelon form of the rows over
    /// the (x|z) bit space with lowest-index pivots, back-substituted and
    /// sorted by pivot. Two tableaux describe the same state exactly when
    /// their canonical rows (signs included) coincide.
    pub fn canonical_rows(&self) -> Vec<PauliOperator> {
        let mut rows = self.rows.clone();
        let width = 2 * self.n;
        let bit = |p: &PauliOperator, i: usize| {
            if i < self.n {
                p.x.get(i)
            } else {
                p.z.get(i - self.n)
            }
        };
        let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
        let mut next = 0usize;
        for col in 0..width {
            let Some(r) = (next..rows.len()).find(|&r| bit(&rows[r], col)) else {
                continue;
            };
            rows.swap(next, r);
            let pivot = rows[next].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != next && bit(row, col) {
                    *row = row.mul(&pivot);
                }
            }
            pivot_rows.push((next, col));
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        rows
    }

    /// Sign-exact stabilization: `p|ψ⟩ = +|ψ⟩`, not merely up to phase.
    pub fn stabilizes(&self, p: &PauliOperator) -> bool {
        // Reduce p by the canonical rows; membership in the group with +1
        // sign means the residual is the exact identity with phase 0.
        let rows = self.canonical_rows();
        let mut residual = p.clone();
        for row in &rows {
            let pivot = lowest_xz_bit(row, self.n).expect("canonical rows are nonzero");
            if get_xz_bit(&residual, pivot, self.n) {
                residual = residual.mul(row);
            }
        }
        residual.is_identity_word() && residual.phase == 0
    }

    /// Expectation of a Hermitian Pauli on the state: +1/-1 when ±p is in
    /// the stabilizer group, 0 otherwise.
    pub fn expectation(&self, p: &PauliOperator) -> i8 {
        let rows = self.canonical_rows();
        let mut residual = p.clone();
        for row in &rows {
            let pivot = lowest_xz_bit(row, self.n).expect("canonical rows are nonzero");
            if get_xz_bit(&residual, pivot, self.n) {
                residual = residual.mul(row);
            }
        }
        if !residual.is_identity_word() {
            0
        } else if residual.phase == 0 {
            1
        } else {
            -1
        }
    }
}

fn get_xz_bit(p: &PauliOperator, i: usize, n: usize) -> bool {
    if i < n {
        p.x.get(i)
    } else {
        p.z.get(i - n)
    }
}

fn lowest_xz_bit(p: &PauliOperator, n: usize) -> Option<usize> {
    if let Some(i) = p.x.lowest_set() {
        return Some(i);
    }
    p.z.lowest_set().map(|i| i + n)
}

/// Runs a Clifford circuit on |0ⁿ⟩ and returns the exact tableau.
pub fn run_circuit(u: &Circuit) -> Result<StabilizerTableau> {
    u.validate()?;
    let mut t = StabilizerTableau::zero_state(u.qubit_count);
    t.apply_circuit(u);
    Ok(t)
}

/// Exact equality of two pure stabilizer states including signs.
pub fn states_equal(a: &StabilizerTableau, b: &StabilizerTableau) -> Result<bool> {
    if a.qubits() != b.qubits() {
        return Err(Error::precondition("qubit count mismatch"));
    }
    Ok(a.canonical_rows() == b.canonical_rows())
}

/// Whether `q1|ψ⟩ = q2|ψ⟩` as states with global phase, for Pauli
/// displacements q1, q2 of the same tableau state: equivalent to q2†q1
/// stabilizing |ψ⟩ with +1.
pub fn pauli_displaced_states_equal(
    t: &StabilizerTableau,
    q1: &PauliOperator,
    q2: &PauliOperator,
) -> bool {
    t.stabilizes(&q2.dagger().mul(q1))
}
