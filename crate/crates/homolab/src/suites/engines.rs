//! Cross-engine validation (dense vs tableau) and the QECC reduced-density
//! matrix fact on the torus code.

use super::lemmas::encoder_for;
use super::SuiteOutcome;
use crate::circuit::random_circuit;
use crate::dense::{fidelity_with_tableau, stabilizer_rdm, trace_distance, DenseState};
use crate::stabilizer::{
    logical_x_cocycles, logical_z_cycles, run_circuit, surface_generators, PauliOperator,
};
use crate::fixtures::Fixture;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// 100 random Clifford circuits on ≤ 10 qubits: the dense state and the
/// tableau state agree with fidelity 1 within 1e-10.
pub fn cross_engine_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("cross-engine");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..100 {
        let n = rng.gen_range(2..=10);
        let depth = rng.gen_range(0..=6);
        let u = random_circuit(&mut rng, n, depth);
        let dense = DenseState::run_circuit(&u).expect("within dense limit");
        let tab = run_circuit(&u).expect("Clifford");
        let fidelity = fidelity_with_tableau(&dense, &tab).expect("same size");
        let params = format!("trial={trial} n={n} depth={depth}");
        if (fidelity - 1.0).abs() < 1e-10 {
            out.verified_here("random-clifford", params);
        } else {
            out.violated_here("random-clifford", params, format!("fidelity={fidelity}"));
        }
    }
    out
}

/// Two orthogonal torus code states have identical reduced density matrices
/// on every edge subset below the code distance (here |K| ≤ 2), checked by
/// exact stabilizer RDMs with trace distance < 1e-10.
pub fn qecc_rdm_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("qecc-rdm");
    for fixture in [Fixture::Torus(3), Fixture::Torus(4)] {
        let name = fixture.name();
        let g = fixture.build().expect("torus builds");
        let n = g.edge_count();
        let u = encoder_for(&g, 0).expect("encoder");
        let psi = run_circuit(&u).expect("Clifford");

        // The encoder pins the logical Z cycles; displace by a logical X
        // cocycle that anticommutes with a pinned Z to get an orthogonal
        // code state.
        let z_logicals = logical_z_cycles(&g);
        let x_logicals = logical_x_cocycles(&g);
        let Some(x_bar) = x_logicals
            .iter()
            .find(|x| z_logicals.iter().any(|z| z.dot(x)))
        else {
            out.violated_here(&name, "logical pairing", "no anticommuting pair");
            continue;
        };
        let x_op = PauliOperator::x_on(n, x_bar);
        let mut phi = psi.clone();
        phi.apply_pauli(&x_op);

        // Still a code state, and orthogonal: the pinned Z̄ flips expectation.
        let spec = surface_generators(&g).expect("CSC");
        let still_code = spec.generators.iter().all(|gen| phi.stabilizes(gen));
        let z_bar = z_logicals
            .iter()
            .find(|z| z.dot(x_bar))
            .expect("pairing found above");
        let z_op = PauliOperator::z_on(n, z_bar);
        let orthogonal = psi.expectation(&z_op) == 1 && phi.expectation(&z_op) == -1;
        if !(still_code && orthogonal) {
            out.violated_here(
                &name,
                "setup",
                format!("still_code={still_code} orthogonal={orthogonal}"),
            );
            continue;
        }

        let mut worst = 0f64;
        let mut checked = 0usize;
        let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                subsets.push(vec![i, j]);
            }
        }
        for keep in &subsets {
            let a = stabilizer_rdm(&psi, keep).expect("small subset");
            let b = stabilizer_rdm(&phi, keep).expect("small subset");
            worst = worst.max(trace_distance(&a, &b));
            checked += 1;
        }
        if worst < 1e-10 {
            out.verified_here(&name, format!("{checked} subsets, worst={worst:.2e}"));
        } else {
            out.violated_here(&name, format!("{checked} subsets"), format!("worst={worst:.2e}"));
        }
    }
    out
}
