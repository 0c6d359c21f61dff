//! The commuting-operators lemma and the large-effective-support lemma, run
//! against synthesized encoders on the standard fixtures.

use super::SuiteOutcome;
use crate::bits::BitSet;
use crate::circuit::{effective_support_a, light_cone, Circuit, Direction};
use crate::complex::{Metric, PolygonalComplex};
use crate::error::Result;
use crate::fixtures::Fixture;
use crate::gf2::Chain;
use crate::stabilizer::{
    independent_generators, logical_z_cycles, run_circuit, stabilizer_elements_within,
    surface_generators, synthesize_encoder, verify_comut_op_with, verify_large_b_with,
    ComutOpVerdict, LargeBVerdict, PauliOperator,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Synthesizes an encoder for a fixture: independent surface generators plus
/// logical-Z pinning, optionally shuffled (seeded) to vary the circuit.
pub fn encoder_for(g: &PolygonalComplex, variant: u64) -> Result<Circuit> {
    let spec = surface_generators(g)?;
    let mut gens = independent_generators(&spec.generators);
    for cyc in logical_z_cycles(g) {
        gens.push(PauliOperator::z_on(g.edge_count(), &cyc));
    }
    if variant != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(variant);
        gens.shuffle(&mut rng);
    }
    synthesize_encoder(&gens)
}

fn random_endpoint_pair(rng: &mut impl Rng, m: usize) -> (usize, usize) {
    let e = rng.gen_range(0..m);
    let mut f = rng.gen_range(0..m);
    while f == e {
        f = rng.gen_range(0..m);
    }
    (e, f)
}

/// Every Pauli P that stabilizes the encoder output and is supported outside
/// B must satisfy P γ_Z |ψ⟩ = γ_Z P |ψ⟩ exactly. Instances are drawn from
/// the full lattice of valid P (the stabilizer subgroup supported in E∖B).
pub fn comut_op_suite(seed: u64, minimum_instances: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("comut-op");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fixtures = [
        Fixture::Cube(1),
        Fixture::Cube(2),
        Fixture::Tetrahedron,
        Fixture::Torus(3),
        Fixture::Torus(4),
    ];
    let mut produced = 0usize;
    for round in 0.. {
        if produced >= minimum_instances && round >= 1 {
            break;
        }
        if round > 6 {
            break;
        }
        for fixture in fixtures {
            let name = fixture.name();
            let g = fixture.build().expect("standard fixture");
            let u = match encoder_for(&g, round) {
                Ok(u) => u,
                Err(e) => {
                    out.violated_here(&name, "encoder", e.to_string());
                    continue;
                }
            };
            let t = run_circuit(&u).expect("encoder is Clifford");
            let pair_budget = 4usize;
            for _ in 0..pair_budget {
                let (e, f) = random_endpoint_pair(&mut rng, g.edge_count());
                let gamma =
                    Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
                let b = match crate::circuit::effective_support_b(&g, &u, &gamma) {
                    Ok(b) => b,
                    Err(err) => {
                        out.violated_here(&name, "B", err.to_string());
                        continue;
                    }
                };
                let outside = b.complement();
                let basis = stabilizer_elements_within(&t, &outside);
                // Sample P from the subgroup of valid operators: every basis
                // element plus random products (identity included once).
                let mut candidates: Vec<(String, PauliOperator)> = Vec::new();
                candidates.push(("identity".into(), PauliOperator::identity(g.edge_count())));
                for (i, p) in basis.iter().enumerate() {
                    candidates.push((format!("basis[{i}]"), p.clone()));
                }
                for s in 0..basis.len().min(6) {
                    let mut p = PauliOperator::identity(g.edge_count());
                    let mut used = Vec::new();
                    for (i, b) in basis.iter().enumerate() {
                        if rng.gen_bool(0.5) {
                            p = p.mul(b);
                            used.push(i);
                        }
                    }
                    if used.len() >= 2 {
                        candidates.push((format!("product{s}:{used:?}"), p));
                    }
                }
                for (label, p) in candidates {
                    let params = format!(
                        "round={round} e={e} f={f} |B|={} P={label}",
                        b.count()
                    );
                    match verify_comut_op_with(&g, &u, &t, &b, &gamma, &p) {
                        Ok(ComutOpVerdict::Verified) => {
                            produced += 1;
                            out.verified_here(&name, params);
                        }
                        Ok(ComutOpVerdict::Violated { anticommute }) => {
                            out.violated_here(&name, params, format!("anticommute={anticommute}"));
                        }
                        Err(err) => {
                            out.skipped_here(&name, params, err.to_string());
                        }
                    }
                }
            }
        }
    }
    out
}

/// B contains a whole class member, with the size bounds |B| ≥ d(e,f) and
/// c^d·|A| ≥ d(e,f), on every fixture-encoder pair and 10 random (e,f,γ).
pub fn large_b_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("large-b");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for fixture in Fixture::standard_set() {
        let name = fixture.name();
        let g = fixture.build().expect("standard fixture");
        let u = match encoder_for(&g, 0) {
            Ok(u) => u,
            Err(e) => {
                out.violated_here(&name, "encoder", e.to_string());
                continue;
            }
        };
        let t = run_circuit(&u).expect("encoder is Clifford");
        let spec = surface_generators(&g).expect("fixtures are CSCs");
        if let Some(i) = (0..spec.generators.len()).find(|&i| !t.stabilizes(&spec.generators[i]))
        {
            out.violated_here(&name, "encoder-check", format!("generator {i} not stabilized"));
            continue;
        }
        for trial in 0..10 {
            let (e, f) = random_endpoint_pair(&mut rng, g.edge_count());
            let gamma = Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
            let a = effective_support_a(&g, &u, &gamma).unwrap();
            let b = light_cone(&u, &a, Direction::Up);
            match verify_large_b_with(&g, &u, &gamma, &a, &b) {
                Ok(LargeBVerdict::Verified {
                    member,
                    b_bound_holds,
                    a_bound_holds,
                    b_size,
                    a_size,
                    endpoint_distance,
                }) => {
                    let params = format!(
                        "trial={trial} e={e} f={f} |A|={a_size} |B|={b_size} d={endpoint_distance}"
                    );
                    if b_bound_holds && a_bound_holds && member.coeffs.is_subset_of(&b) {
                        out.verified_here(&name, params);
                    } else {
                        out.violated_here(
                            &name,
                            params,
                            format!("b_bound={b_bound_holds} a_bound={a_bound_holds}"),
                        );
                    }
                }
                Ok(LargeBVerdict::Violated) => {
                    out.violated_here(
                        &name,
                        format!("trial={trial} e={e} f={f}"),
                        "no class member inside B",
                    );
                }
                Err(err) => {
                    out.skipped_here(&name, format!("trial={trial}"), err.to_string());
                }
            }
        }
    }
    out
}

/// The coboundary-stabilizer fact: for any vertex set W, the X operator on
/// ∂⁰(W) is a product of stars and stabilizes every code state.
pub fn coboundary_stabilizer_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("coboundary-stabilizer");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for fixture in [
        Fixture::Tetrahedron,
        Fixture::Cube(1),
        Fixture::Cube(2),
        Fixture::Torus(3),
    ] {
        let name = fixture.name();
        let g = fixture.build().expect("standard fixture");
        let u = encoder_for(&g, 0).expect("encoder");
        let t = run_circuit(&u).expect("Clifford");
        for trial in 0..25 {
            let mut w = BitSet::new(g.vertex_count());
            for v in 0..g.vertex_count() {
                if rng.gen_bool(0.4) {
                    w.insert(v);
                }
            }
            let chain = g.vertex_set_coboundary_chain(&w);
            let p = PauliOperator::x_on(g.edge_count(), &chain);
            if t.stabilizes(&p) {
                out.verified_here(&name, format!("trial={trial} |W|={}", w.count()));
            } else {
                out.violated_here(
                    &name,
                    format!("trial={trial}"),
                    format!("coboundary X not stabilizing, W={:?}", w.to_vec()),
                );
            }
        }
    }
    out
}
