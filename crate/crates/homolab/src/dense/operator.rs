//! Sparse k-local Hermitian operators as weighted Pauli words, the
//! energy-from-reduced-density-matrices identity, and two-point correlation
//! checks.

use super::eigen::trace_distance;
use super::state::{CMatrix, DenseState};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Pauli axes: 1 = X, 2 = Y, 3 = Z.
pub type PauliWord = Vec<(usize, u8)>;

/// H = Σ_i w_i · P_i with real weights, each word on at most k qubits.
#[derive(Clone, Debug, Default)]
pub struct DenseOperator {
    pub terms: Vec<(f64, PauliWord)>,
}

impl DenseOperator {
    pub fn new(terms: Vec<(f64, PauliWord)>) -> Self {
        DenseOperator { terms }
    }

    pub fn locality(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }
}

/// A mixed state as an explicit ensemble of pure states.
#[derive(Clone, Debug)]
pub struct Ensemble {
    pub parts: Vec<(f64, DenseState)>,
}

impl Ensemble {
    pub fn pure(s: DenseState) -> Self {
        Ensemble {
            parts: vec![(1.0, s)],
        }
    }

    pub fn mix(parts: Vec<(f64, DenseState)>) -> Result<Self> {
        let total: f64 = parts.iter().map(|(p, _)| p).sum();
        if (total - 1.0).abs() > 1e-9 || parts.iter().any(|(p, _)| *p < 0.0) {
            return Err(Error::precondition("ensemble weights must be a distribution"));
        }
        Ok(Ensemble { parts })
    }

    pub fn rdm(&self, keep: &[usize]) -> CMatrix {
        let dim = 1usize << keep.len();
        let mut rho = CMatrix::zero(dim);
        for (p, s) in &self.parts {
            rho = rho.add(&s.rdm(keep).scale(Complex64::new(*p, 0.0)));
        }
        rho
    }

    /// Tr(Hρ) computed directly as Σ p_j ⟨ψ_j|H|ψ_j⟩.
    pub fn energy_direct(&self, h: &DenseOperator) -> f64 {
        let mut total = 0f64;
        for (p, s) in &self.parts {
            for (w, word) in &h.terms {
                total += p * w * s.pauli_expectation(word).re;
            }
        }
        total
    }
}

/// The 2^|keep| matrix of a Pauli word restricted to `keep` (every word
/// qubit must appear in `keep`; `keep[0]` occupies the low index bit).
pub fn pauli_word_matrix(word: &[(usize, u8)], keep: &[usize]) -> CMatrix {
    let single = |axis: Option<u8>| -> CMatrix {
        let mut m = CMatrix::zero(2);
        match axis {
            None => {
                m.data[0][0] = Complex64::ONE;
                m.data[1][1] = Complex64::ONE;
            }
            Some(1) => {
                m.data[0][1] = Complex64::ONE;
                m.data[1][0] = Complex64::ONE;
            }
            Some(2) => {
                m.data[0][1] = -Complex64::I;
                m.data[1][0] = Complex64::I;
            }
            Some(3) => {
                m.data[0][0] = Complex64::ONE;
                m.data[1][1] = -Complex64::ONE;
            }
            Some(_) => unreachable!(),
        }
        m
    };
    let mut out = single(word.iter().find(|(q, _)| *q == keep[0]).map(|&(_, a)| a));
    for &k in &keep[1..] {
        let axis = word.iter().find(|(q, _)| *q == k).map(|&(_, a)| a);
        out = out.kron(&single(axis));
    }
    out
}

/// Σ_i w_i · Tr(P_i · ρ_{supp P_i}): the energy evaluated purely from
/// reduced density matrices on each term's support.
pub fn energy_from_rdms(h: &DenseOperator, state: &Ensemble) -> f64 {
    let mut total = 0f64;
    for (w, word) in &h.terms {
        if word.is_empty() {
            total += w;
            continue;
        }
        let mut keep: Vec<usize> = word.iter().map(|&(q, _)| q).collect();
        keep.sort_unstable();
        keep.dedup();
        let rho = state.rdm(&keep);
        let pm = pauli_word_matrix(word, &keep);
        total += w * rho.matmul(&pm).trace().re;
    }
    total
}

/// Trace distance between the joint two-qubit state and the product of its
/// marginals: 0 exactly for product states, 1/2 for a CAT pair.
pub fn correlation_check(s: &DenseState, i: usize, j: usize) -> Result<f64> {
    if i == j || i >= s.qubits() || j >= s.qubits() {
        return Err(Error::precondition("need two distinct in-range qubits"));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let joint = s.rdm(&[lo, hi]);
    let product = s.rdm(&[lo]).kron(&s.rdm(&[hi]));
    Ok(trace_distance(&joint, &product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Circuit, Gate, GateKind};
    use rand::{Rng, SeedableRng};

    #[test]
    fn z_expectation_sign_on_zero_state() {
        // Tr(Z·|0⟩⟨0|) = +1.
        let s = DenseState::zero_state(1).unwrap();
        let h = DenseOperator::new(vec![(1.0, vec![(0, 3)])]);
        let e = Ensemble::pure(s);
        assert!((e.energy_direct(&h) - 1.0).abs() < 1e-12);
        assert!((energy_from_rdms(&h, &e) - 1.0).abs() < 1e-12);
    }

    fn random_state(rng: &mut impl Rng, n: usize) -> DenseState {
        let mut amps: Vec<Complex64> = (0..(1 << n))
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in amps.iter_mut() {
            *a /= norm;
        }
        DenseState::from_amplitudes(n, amps).unwrap()
    }

    fn random_local_operator(rng: &mut impl Rng, n: usize, k: usize, terms: usize) -> DenseOperator {
        let mut out = Vec::new();
        for _ in 0..terms {
            let support_size = rng.gen_range(1..=k);
            let mut qubits: Vec<usize> = (0..n).collect();
            for i in (1..qubits.len()).rev() {
                qubits.swap(i, rng.gen_range(0..=i));
            }
            qubits.truncate(support_size);
            let word: PauliWord = qubits
                .into_iter()
                .map(|q| (q, rng.gen_range(1..=3u8)))
                .collect();
            out.push((rng.gen_range(-1.0..1.0), word));
        }
        DenseOperator::new(out)
    }

    #[test]
    fn energy_identity_random_instances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..25 {
            let n = rng.gen_range(2..=6);
            let h = random_local_operator(&mut rng, n, 3.min(n), 5);
            let e = Ensemble::pure(random_state(&mut rng, n));
            let direct = e.energy_direct(&h);
            let via_rdms = energy_from_rdms(&h, &e);
            assert!(
                (direct - via_rdms).abs() < 1e-10,
                "direct {direct} vs rdm {via_rdms}"
            );
        }
    }

    #[test]
    fn energy_identity_mixed_state() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(32);
        let n = 5;
        let h = random_local_operator(&mut rng, n, 3, 6);
        let parts: Vec<(f64, DenseState)> = vec![
            (0.4, random_state(&mut rng, n)),
            (0.3, random_state(&mut rng, n)),
            (0.2, random_state(&mut rng, n)),
            (0.1, random_state(&mut rng, n)),
        ];
        let e = Ensemble::mix(parts).unwrap();
        assert!((e.energy_direct(&h) - energy_from_rdms(&h, &e)).abs() < 1e-10);
    }

    #[test]
    fn product_state_has_zero_correlation() {
        let mut s = DenseState::zero_state(3).unwrap();
        s.apply_gate(&Gate::new(GateKind::H, vec![0]));
        s.apply_gate(&Gate::new(GateKind::S, vec![2]));
        assert!(correlation_check(&s, 0, 2).unwrap() < 1e-10);
    }

    #[test]
    fn cat_pair_correlation_is_half() {
        let n = 6;
        let mut gates = vec![Gate::new(GateKind::H, vec![0])];
        for i in 0..n - 1 {
            gates.push(Gate::new(GateKind::CX, vec![i, i + 1]));
        }
        let u = Circuit::from_gates(n, gates);
        let s = DenseState::run_circuit(&u).unwrap();
        for (i, j) in [(0, 1), (2, 5), (1, 4)] {
            let c = correlation_check(&s, i, j).unwrap();
            assert!((c - 0.5).abs() < 1e-10, "pair ({i},{j}): {c}");
        }
    }
}
