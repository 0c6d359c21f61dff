//! The appendix constructions: gapped commuting Hamiltonians from shallow
//! circuits, the history-state overlap, and the RDM-energy identity.

use super::SuiteOutcome;
use crate::circuit::random_circuit;
use crate::dense::{
    energy_from_rdms, expected_history_overlap, extended_cat, history_state, DenseOperator,
    DenseState, Ensemble,
};
use crate::stabilizer::appendix_a_hamiltonian;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// 50 random Clifford circuits (n ≤ 10, depth ≤ 4): conjugated-Z terms
/// commute, supports stay ≤ c^d, the circuit output attains energy -n, the
/// ground state is unique, and the gap is exactly 2.
pub fn appendix_a_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("appendix-a");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..50 {
        let n = rng.gen_range(4..=10);
        let depth = rng.gen_range(0..=4);
        let u = random_circuit(&mut rng, n, depth);
        let params = format!("trial={trial} n={n} depth={depth}");
        match appendix_a_hamiltonian(&u) {
            Ok(rep) => {
                if rep.all_hold() && rep.spectral_gap == 2 {
                    out.verified_here("random-clifford", params);
                } else {
                    out.violated_here(
                        "random-clifford",
                        params,
                        format!(
                            "commute={} support={} energy={} unique={}",
                            rep.pairwise_commute,
                            rep.support_bound_holds,
                            rep.ground_energy_attained,
                            rep.ground_state_unique
                        ),
                    );
                }
            }
            Err(e) => out.violated_here("random-clifford", params, e.to_string()),
        }
    }
    out
}

/// |⟨φ_n|C̃AT⁺⟩| = √(n²−n)/n within 1e-10 for n = 2..6.
pub fn appendix_b_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("appendix-b");
    for n in 2..=6usize {
        let name = format!("history-{n}");
        let phi = match history_state(n) {
            Ok(s) => s,
            Err(e) => {
                out.violated_here(&name, "build", e.to_string());
                continue;
            }
        };
        let cat = extended_cat(n).expect("same size bound");
        let overlap = phi.overlap(&cat).expect("same qubit count").norm();
        let expected = expected_history_overlap(n);
        if (overlap - expected).abs() < 1e-10 {
            out.verified_here(&name, format!("overlap={overlap:.12}"));
        } else {
            out.violated_here(
                &name,
                format!("overlap={overlap:.12}"),
                format!("expected {expected:.12}"),
            );
        }
    }
    out
}

fn random_state(rng: &mut impl Rng, n: usize) -> DenseState {
    let mut amps: Vec<Complex64> = (0..(1usize << n))
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in amps.iter_mut() {
        *a /= norm;
    }
    DenseState::from_amplitudes(n, amps).expect("normalized by construction")
}

fn random_k_local(rng: &mut impl Rng, n: usize, k: usize, terms: usize) -> DenseOperator {
    let mut list = Vec::with_capacity(terms);
    for _ in 0..terms {
        let size = rng.gen_range(1..=k.min(n));
        let mut qubits: Vec<usize> = (0..n).collect();
        for i in (1..qubits.len()).rev() {
            qubits.swap(i, rng.gen_range(0..=i));
        }
        qubits.truncate(size);
        qubits.sort_unstable();
        let word: Vec<(usize, u8)> = qubits
            .into_iter()
            .map(|q| (q, rng.gen_range(1..=3u8)))
            .collect();
        list.push((rng.gen_range(-2.0..2.0), word));
    }
    DenseOperator::new(list)
}

/// 100 random (k ≤ 3)-local Hamiltonians on ≤ 8 qubits: the energy computed
/// from per-term reduced density matrices equals the direct expectation
/// within 1e-10, for pure states and small mixtures.
pub fn appendix_c_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("appendix-c");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..100 {
        let n = rng.gen_range(3..=8);
        let terms = rng.gen_range(2..=7);
        let h = random_k_local(&mut rng, n, 3, terms);
        let mixed = trial % 4 == 3;
        let state = if mixed {
            let weights = [0.4, 0.3, 0.2, 0.1];
            Ensemble::mix(
                weights
                    .iter()
                    .map(|&w| (w, random_state(&mut rng, n)))
                    .collect(),
            )
            .expect("weights sum to 1")
        } else {
            Ensemble::pure(random_state(&mut rng, n))
        };
        let direct = state.energy_direct(&h);
        let via_rdms = energy_from_rdms(&h, &state);
        let params = format!("trial={trial} n={n} mixed={mixed}");
        if (direct - via_rdms).abs() < 1e-10 {
            out.verified_here("random-local", params);
        } else {
            out.violated_here(
                "random-local",
                params,
                format!("direct={direct} rdm={via_rdms}"),
            );
        }
    }
    out
}
