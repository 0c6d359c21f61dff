//! Dense state vectors for at most 14 qubits, with exact gate application,
//! inner products, and partial traces.
//!
//! Bit convention: basis index b assigns qubit q the bit `(b >> q) & 1`.

use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};
use num_complex::Complex64;

pub const MAX_QUBITS: usize = 14;

pub const NORM_TOL: f64 = 1e-12;
pub const EQ_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct DenseState {
    n: usize,
    amps: Vec<Complex64>,
}

impl DenseState {
    pub fn zero_state(n: usize) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::precondition(format!(
                "{n} qubits exceeds the dense limit of {MAX_QUBITS}"
            )));
        }
        let mut amps = vec![Complex64::ZERO; 1 << n];
        amps[0] = Complex64::ONE;
        Ok(DenseState { n, amps })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::precondition("too many qubits"));
        }
        if amps.len() != 1 << n {
            return Err(Error::precondition("amplitude count mismatch"));
        }
        let s = DenseState { n, amps };
        if (s.norm() - 1.0).abs() > 1e-9 {
            return Err(Error::precondition("state is not normalized"));
        }
        Ok(s)
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply_gate(&mut self, gate: &Gate) {
        match gate.kind {
            GateKind::H => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                self.map_pairs(gate.qubits[0], |a0, a1| (s * (a0 + a1), s * (a0 - a1)));
            }
            GateKind::S => {
                let i = Complex64::I;
                self.map_pairs(gate.qubits[0], |a0, a1| (a0, i * a1));
            }
            GateKind::Sdg => {
                let mi = -Complex64::I;
                self.map_pairs(gate.qubits[0], |a0, a1| (a0, mi * a1));
            }
            GateKind::X => self.map_pairs(gate.qubits[0], |a0, a1| (a1, a0)),
            GateKind::Y => {
                let i = Complex64::I;
                self.map_pairs(gate.qubits[0], |a0, a1| (-i * a1, i * a0));
            }
            GateKind::Z => self.map_pairs(gate.qubits[0], |a0, a1| (a0, -a1)),
            GateKind::CX => {
                let (c, t) = (gate.qubits[0], gate.qubits[1]);
                for b in 0..self.amps.len() {
                    if b >> c & 1 == 1 && b >> t & 1 == 0 {
                        self.amps.swap(b, b | (1 << t));
                    }
                }
            }
            GateKind::CZ => {
                let (c, t) = (gate.qubits[0], gate.qubits[1]);
                for (b, a) in self.amps.iter_mut().enumerate() {
                    if b >> c & 1 == 1 && b >> t & 1 == 1 {
                        *a = -*a;
                    }
                }
            }
            GateKind::SWAP => {
                let (p, q) = (gate.qubits[0], gate.qubits[1]);
                for b in 0..self.amps.len() {
                    if b >> p & 1 == 1 && b >> q & 1 == 0 {
                        self.amps.swap(b, b ^ (1 << p) ^ (1 << q));
                    }
                }
            }
        }
    }

    fn map_pairs(&mut self, q: usize, f: impl Fn(Complex64, Complex64) -> (Complex64, Complex64)) {
        let bit = 1usize << q;
        for b in 0..self.amps.len() {
            if b & bit == 0 {
                let (a0, a1) = (self.amps[b], self.amps[b | bit]);
                let (n0, n1) = f(a0, a1);
                self.amps[b] = n0;
                self.amps[b | bit] = n1;
            }
        }
    }

    pub fn apply_circuit(&mut self, u: &Circuit) {
        for gate in u.gates() {
            self.apply_gate(gate);
        }
    }

    pub fn run_circuit(u: &Circuit) -> Result<Self> {
        u.validate()?;
        let mut s = Self::zero_state(u.qubit_count)?;
        s.apply_circuit(u);
        Ok(s)
    }

    /// ⟨self|other⟩.
    pub fn overlap(&self, other: &DenseState) -> Result<Complex64> {
        if self.n != other.n {
            return Err(Error::precondition("dimension mismatch"));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Expectation ⟨ψ| P |ψ⟩ of a sparse weighted Pauli word given as
    /// (qubit, axis) pairs, axis ∈ {X=1, Y=2, Z=3}.
    pub fn pauli_expectation(&self, word: &[(usize, u8)]) -> Complex64 {
        let mut flip = 0usize;
        for &(q, axis) in word {
            if axis == 1 || axis == 2 {
                flip |= 1 << q;
            }
        }
        let mut total = Complex64::ZERO;
        for (b, a) in self.amps.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            // P|b⟩ = coeff · |b ^ flip⟩.
            let mut coeff = Complex64::ONE;
            for &(q, axis) in word {
                let bit = b >> q & 1;
                coeff *= match (axis, bit) {
                    (1, _) => Complex64::ONE,
                    (2, 0) => Complex64::I,
                    (2, _) => -Complex64::I,
                    (3, 0) => Complex64::ONE,
                    (3, _) => -Complex64::ONE,
                    _ => unreachable!("axis must be 1..=3"),
                };
            }
            total += self.amps[b ^ flip].conj() * coeff * a;
        }
        total
    }

    /// Exact partial trace onto the kept qubits (ascending order): a
    /// 2^k × 2^k density matrix.
    pub fn rdm(&self, keep: &[usize]) -> CMatrix {
        let k = keep.len();
        let traced: Vec<usize> = (0..self.n).filter(|q| !keep.contains(q)).collect();
        let mut rho = CMatrix::zero(1 << k);
        let expand = |bits: usize, positions: &[usize]| -> usize {
            positions
                .iter()
                .enumerate()
                .fold(0usize, |acc, (i, &q)| acc | (((bits >> i) & 1) << q))
        };
        for t in 0..(1usize << traced.len()) {
            let base = expand(t, &traced);
            for a in 0..(1usize << k) {
                let ia = base | expand(a, keep);
                let va = self.amps[ia];
                if va.norm_sqr() == 0.0 {
                    continue;
                }
                for b in 0..(1usize << k) {
                    let ib = base | expand(b, keep);
                    rho.data[a][b] += va * self.amps[ib].conj();
                }
            }
        }
        rho
    }
}

/// A small dense complex matrix (row-major).
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    pub data: Vec<Vec<Complex64>>,
}

impl CMatrix {
    pub fn zero(dim: usize) -> Self {
        CMatrix {
            data: vec![vec![Complex64::ZERO; dim]; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i][i] = Complex64::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.data[i][i]).sum()
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        let mut out = self.clone();
        for (r, row) in out.data.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v += other.data[r][c];
            }
        }
        out
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        let mut out = self.clone();
        for (r, row) in out.data.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v -= other.data[r][c];
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        let mut out = self.clone();
        for row in out.data.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        let d = self.dim();
        let mut out = CMatrix::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.data[r][k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..d {
                    out.data[r][c] += a * other.data[k][c];
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (da, db) = (self.dim(), other.dim());
        let mut out = CMatrix::zero(da * db);
        for ra in 0..da {
            for ca in 0..da {
                for rb in 0..db {
                    for cb in 0..db {
                        // Kept-qubit bit order: the factor for the FIRST
                        // listed qubit occupies the LOW bit.
                        out.data[rb * da + ra][cb * da + ca] =
                            self.data[ra][ca] * other.data[rb][cb];
                    }
                }
            }
        }
        out
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let d = self.dim();
        (0..d).all(|r| (0..d).all(|c| (self.data[r][c] - self.data[c][r].conj()).norm() <= tol))
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        let mut best = 0f64;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                best = best.max((self.data[r][c] - other.data[r][c]).norm());
            }
        }
        best
    }
}
