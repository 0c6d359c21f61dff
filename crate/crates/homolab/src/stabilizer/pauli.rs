//! Pauli operators in symplectic form with exact phase tracking.
//!
//! Representation: `P = i^phase · ∏_q X_q^{x_q} Z_q^{z_q}` with the X factor
//! left of the Z factor on every site, so `Y = i·XZ` carries phase 1. All
//! gate conjugations and products are exact in this convention.

use crate::bits::BitSet;
use crate::circuit::{Circuit, Gate, GateKind};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    pub x: BitSet,
    pub z: BitSet,
    /// Power of i in {0,1,2,3}.
    pub phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitSet::new(n),
            z: BitSet::new(n),
            phase: 0,
        }
    }

    /// σ_Z on every edge of `support`, identity elsewhere.
    pub fn z_on(n: usize, support: &BitSet) -> Self {
        debug_assert_eq!(support.len(), n);
        PauliOperator {
            x: BitSet::new(n),
            z: support.clone(),
            phase: 0,
        }
    }

    /// σ_X on every edge of `support`, identity elsewhere.
    pub fn x_on(n: usize, support: &BitSet) -> Self {
        debug_assert_eq!(support.len(), n);
        PauliOperator {
            x: support.clone(),
            z: BitSet::new(n),
            phase: 0,
        }
    }

    pub fn single_z(n: usize, q: usize) -> Self {
        Self::z_on(n, &BitSet::from_indices(n, &[q]))
    }

    pub fn single_x(n: usize, q: usize) -> Self {
        Self::x_on(n, &BitSet::from_indices(n, &[q]))
    }

    pub fn qubits(&self) -> usize {
        self.x.len()
    }

    pub fn is_identity_word(&self) -> bool {
        self.x.is_empty() && self.z.is_empty()
    }

    /// Qubits acted on non-trivially.
    pub fn support(&self) -> BitSet {
        self.x.or(&self.z)
    }

    pub fn weight(&self) -> usize {
        self.support().count()
    }

    /// Exact product `self · other` (operator order: self applied after).
    pub fn mul(&self, other: &PauliOperator) -> PauliOperator {
        // Commuting other's X factors through self's Z factors picks up
        // (-1)^{|z_self ∧ x_other|}.
        let swaps = self.z.intersection_size(&other.x);
        PauliOperator {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + 2 * (swaps as u8 & 1)) % 4,
        }
    }

    pub fn dagger(&self) -> PauliOperator {
        let y_like = self.x.intersection_size(&self.z) as u8;
        PauliOperator {
            x: self.x.clone(),
            z: self.z.clone(),
            phase: (4 - self.phase + 2 * (y_like & 1)) % 4,
        }
    }

    /// Symplectic commutation: true when the operators commute.
    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        !(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    /// True when the operator is Hermitian (sign ±1, not ±i).
    pub fn is_hermitian(&self) -> bool {
        let y_count = self.x.intersection_size(&self.z);
        (self.phase as usize + y_count) % 2 == 0
    }

    /// Sign of a Hermitian Pauli: +1 or -1.
    pub fn sign(&self) -> i8 {
        debug_assert!(self.is_hermitian());
        let y_count = self.x.intersection_size(&self.z) % 4;
        if (self.phase as usize + 4 - y_count) % 4 == 0 {
            1
        } else {
            -1
        }
    }

    /// Conjugates in place by one gate: `P ← G P G†`.
    pub fn apply_gate(&mut self, gate: &Gate) {
        match gate.kind {
            GateKind::H => {
                let q = gate.qubits[0];
                let (xq, zq) = (self.x.get(q), self.z.get(q));
                if xq && zq {
                    self.phase = (self.phase + 2) % 4;
                }
                if xq != zq {
                    self.x.toggle(q);
                    self.z.toggle(q);
                }
            }
            GateKind::S => {
                let q = gate.qubits[0];
                if self.x.get(q) {
                    self.phase = (self.phase + 1) % 4;
                    self.z.toggle(q);
                }
            }
            GateKind::Sdg => {
                let q = gate.qubits[0];
                if self.x.get(q) {
                    self.phase = (self.phase + 3) % 4;
                    self.z.toggle(q);
                }
            }
            GateKind::X => {
                let q = gate.qubits[0];
                if self.z.get(q) {
                    self.phase = (self.phase + 2) % 4;
                }
            }
            GateKind::Y => {
                let q = gate.qubits[0];
                if self.x.get(q) != self.z.get(q) {
                    self.phase = (self.phase + 2) % 4;
                }
            }
            GateKind::Z => {
                let q = gate.qubits[0];
                if self.x.get(q) {
                    self.phase = (self.phase + 2) % 4;
                }
            }
            GateKind::CX => {
                let (c, t) = (gate.qubits[0], gate.qubits[1]);
                if self.x.get(c) {
                    self.x.toggle(t);
                }
                if self.z.get(t) {
                    self.z.toggle(c);
                }
            }
            GateKind::CZ => {
                let (c, t) = (gate.qubits[0], gate.qubits[1]);
                if self.x.get(c) && self.x.get(t) {
                    self.phase = (self.phase + 2) % 4;
                }
                if self.x.get(t) {
                    self.z.toggle(c);
                }
                if self.x.get(c) {
                    self.z.toggle(t);
                }
            }
            GateKind::SWAP => {
                let (a, b) = (gate.qubits[0], gate.qubits[1]);
                let (xa, xb) = (self.x.get(a), self.x.get(b));
                if xa != xb {
                    self.x.toggle(a);
                    self.x.toggle(b);
                }
                let (za, zb) = (self.z.get(a), self.z.get(b));
                if za != zb {
                    self.z.toggle(a);
                    self.z.toggle(b);
                }
            }
        }
    }

    /// Exact conjugation through a whole circuit: `U P U†`.
    pub fn conjugate_through(&self, u: &Circuit) -> PauliOperator {
        let mut p = self.clone();
        for gate in u.gates() {
            p.apply_gate(gate);
        }
        p
    }

    fn site_char(&self, q: usize) -> char {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            // Displayed as the Hermitian letter; the i is folded into the
            // printed prefix by `fmt`.
            (true, true) => 'Y',
        }
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let y_count = self.x.intersection_size(&self.z);
        let eff = (self.phase as usize + 4 - (y_count % 4)) % 4;
        let prefix = match eff {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}")?;
        for q in 0..self.qubits() {
            write!(f, "{}", self.site_char(q))?;
        }
        Ok(())
    }
}

/// Parity of |a ∩ b| as the paper's anticommutation bridge: odd exactly when
/// a_Z and b_X anticommute.
pub fn intersection_parity(a: &BitSet, b: &BitSet) -> bool {
    a.dot(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(n: usize, q: usize) -> PauliOperator {
        let mut p = PauliOperator::identity(n);
        p.x.insert(q);
        p.z.insert(q);
        p.phase = 1;
        p
    }

    #[test]
    fn products_match_single_qubit_table() {
        let x = PauliOperator::single_x(1, 0);
        let z = PauliOperator::single_z(1, 0);
        let yy = y(1, 0);
        // XZ = -iY, ZX = iY, XY = iZ, YX = -iZ, ZY = -iX, YZ = iX.
        assert_eq!(x.mul(&z), {
            let mut p = yy.clone();
            p.phase = 0; // XZ literally, which is -iY in our convention
            p
        });
        assert_eq!(z.mul(&x).phase, 2); // ZX = i^2 XZ = -XZ = iY
        let xy = x.mul(&yy);
        assert_eq!((xy.x.get(0), xy.z.get(0), xy.phase), (false, true, 1)); // iZ
        let yx = yy.mul(&x);
        assert_eq!((yx.x.get(0), yx.z.get(0), yx.phase), (false, true, 3)); // -iZ
        assert!(x.mul(&x).is_identity_word());
        assert_eq!(yy.mul(&yy).phase, 0); // Y² = I
    }

    #[test]
    fn hermitian_and_sign() {
        let n = 3;
        let mut p = PauliOperator::single_z(n, 0);
        assert!(p.is_hermitian());
        assert_eq!(p.sign(), 1);
        p.phase = 2;
        assert_eq!(p.sign(), -1);
        let q = y(n, 1);
        assert!(q.is_hermitian());
        assert_eq!(q.sign(), 1);
        let mut r = PauliOperator::identity(n);
        r.x.insert(2);
        r.z.insert(2);
        // XZ alone is -iY: not Hermitian.
        assert!(!r.is_hermitian());
    }

    #[test]
    fn commutation_table() {
        let x = PauliOperator::single_x(2, 0);
        let z0 = PauliOperator::single_z(2, 0);
        let z1 = PauliOperator::single_z(2, 1);
        assert!(!x.commutes_with(&z0));
        assert!(x.commutes_with(&z1));
        let xx = PauliOperator::x_on(2, &BitSet::from_indices(2, &[0, 1]));
        let zz = PauliOperator::z_on(2, &BitSet::from_indices(2, &[0, 1]));
        assert!(xx.commutes_with(&zz));
    }

    #[test]
    fn dagger_involutes_and_squares() {
        let p = y(4, 2).mul(&PauliOperator::single_x(4, 0));
        assert_eq!(p.dagger().dagger(), p);
        let pp = p.mul(&p.dagger());
        assert!(pp.is_identity_word());
        assert_eq!(pp.phase, 0);
    }

    #[test]
    fn conjugation_spot_checks() {
        let n = 2;
        // H: X -> Z.
        let mut p = PauliOperator::single_x(n, 0);
        p.apply_gate(&Gate::new(GateKind::H, vec![0]));
        assert_eq!(p, PauliOperator::single_z(n, 0));
        // S: X -> Y.
        let mut p = PauliOperator::single_x(n, 0);
        p.apply_gate(&Gate::new(GateKind::S, vec![0]));
        assert_eq!(p, y(n, 0));
        // CX: X⊗I -> X⊗X, I⊗Z -> Z⊗Z.
        let mut p = PauliOperator::single_x(n, 0);
        p.apply_gate(&Gate::new(GateKind::CX, vec![0, 1]));
        assert_eq!(p.x.to_vec(), vec![0, 1]);
        let mut p = PauliOperator::single_z(n, 1);
        p.apply_gate(&Gate::new(GateKind::CX, vec![0, 1]));
        assert_eq!(p.z.to_vec(), vec![0, 1]);
        // CZ: X⊗X -> Y⊗Y (sign +).
        let mut p = PauliOperator::x_on(n, &BitSet::from_indices(n, &[0, 1]));
        p.apply_gate(&Gate::new(GateKind::CZ, vec![0, 1]));
        assert_eq!(p, y(n, 0).mul(&y(n, 1)));
    }

    #[test]
    fn gate_conjugations_are_unitary_homomorphisms() {
        // (G P G†)(G Q G†) = G (PQ) G† for every gate and Pauli pair.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let n = 3;
        let gates = vec![
            Gate::new(GateKind::H, vec![0]),
            Gate::new(GateKind::S, vec![1]),
            Gate::new(GateKind::Sdg, vec![2]),
            Gate::new(GateKind::X, vec![0]),
            Gate::new(GateKind::Y, vec![1]),
            Gate::new(GateKind::Z, vec![2]),
            Gate::new(GateKind::CX, vec![0, 1]),
            Gate::new(GateKind::CZ, vec![1, 2]),
            Gate::new(GateKind::SWAP, vec![0, 2]),
        ];
        for _ in 0..200 {
            let mut p = PauliOperator::identity(n);
            let mut q = PauliOperator::identity(n);
            for i in 0..n {
                if rng.gen_bool(0.5) {
                    p.x.insert(i);
                }
                if rng.gen_bool(0.5) {
                    p.z.insert(i);
                }
                if rng.gen_bool(0.5) {
                    q.x.insert(i);
                }
                if rng.gen_bool(0.5) {
                    q.z.insert(i);
                }
            }
            p.phase = rng.gen_range(0..4);
            q.phase = rng.gen_range(0..4);
            for gate in &gates {
                let mut gp = p.clone();
                gp.apply_gate(gate);
                let mut gq = q.clone();
                gq.apply_gate(gate);
                let mut gpq = p.mul(&q);
                gpq.apply_gate(gate);
                assert_eq!(gp.mul(&gq), gpq, "gate {:?}", gate.kind);
            }
        }
    }
}
