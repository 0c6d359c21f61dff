//! The effective supports A and B of a homology class under a circuit.
//!
//! A = ⋂_{γ'∈[γ]} L↓(γ') is computed exactly, one edge at a time: q lies in
//! A precisely when L↑({q}) meets every class member, i.e. when L↑({q}) is
//! γ-separating — a single GF(2) feasibility test per edge instead of a scan
//! over the (exponential) class.

use super::lightcone::{light_cone, Direction};
use super::Circuit;
use crate::bits::BitSet;
use crate::complex::{EdgeSet, PolygonalComplex};
use crate::error::{Error, Result};
use crate::gf2::{coset_members, is_gamma_separating, Chain};

/// Exact lower effective support A of [γ] under `u`.
pub fn effective_support_a(
    g: &PolygonalComplex,
    u: &Circuit,
    gamma: &Chain,
) -> Result<EdgeSet> {
    if u.qubit_count != g.edge_count() {
        return Err(Error::precondition("circuit/complex size mismatch"));
    }
    let n = g.edge_count();
    let mut a = BitSet::new(n);
    for q in 0..n {
        let cone = light_cone(u, &BitSet::from_indices(n, &[q]), Direction::Up);
        if is_gamma_separating(g, gamma, &cone) {
            a.insert(q);
        }
    }
    Ok(a)
}

/// Upper effective support B = L↑(A).
pub fn effective_support_b(
    g: &PolygonalComplex,
    u: &Circuit,
    gamma: &Chain,
) -> Result<EdgeSet> {
    let a = effective_support_a(g, u, gamma)?;
    Ok(light_cone(u, &a, Direction::Up))
}

/// Oracle for tiny fixtures: materializes the whole coset and intersects the
/// lower light cones directly.
pub fn brute_force_effective_support_a(
    g: &PolygonalComplex,
    u: &Circuit,
    gamma: &Chain,
) -> EdgeSet {
    let mut result = BitSet::full(g.edge_count());
    for member in coset_members(g, gamma) {
        result.and_with(&light_cone(u, &member, Direction::Down));
    }
    result
}

/// Sound over-approximation of supp(U P U†) by layer-wise expansion: a
/// layer's gates whose supports meet the running set absorb their whole
/// support. This is exactly the upper light cone of supp(P), and its size is
/// bounded by c^d · |supp(P)|.
pub fn conjugated_support(u: &Circuit, pauli_support: &BitSet) -> BitSet {
    light_cone(u, pauli_support, Direction::Up)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::random::random_circuit;
    use crate::complex::{build_cube, build_tetrahedron, Metric};
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_circuit_a_is_coset_intersection() {
        let g = build_cube(1).unwrap();
        let u = Circuit::identity(g.edge_count());
        let gamma = Chain::edges(&g, &g.canonical_path(0, 9, Metric::Path).unwrap());
        let a = effective_support_a(&g, &u, &gamma).unwrap();
        let brute = brute_force_effective_support_a(&g, &u, &gamma);
        assert_eq!(a, brute);
        // B = A for the identity circuit.
        assert_eq!(effective_support_b(&g, &u, &gamma).unwrap(), a);
    }

    #[test]
    fn exactness_against_brute_force_on_random_circuits() {
        let g = build_tetrahedron();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for trial in 0..20 {
            let depth = rng.gen_range(1..=3);
            let u = random_circuit(&mut rng, g.edge_count(), depth);
            let e = rng.gen_range(0..g.edge_count());
            let f = rng.gen_range(0..g.edge_count());
            let gamma = Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
            let fast = effective_support_a(&g, &u, &gamma).unwrap();
            let brute = brute_force_effective_support_a(&g, &u, &gamma);
            assert_eq!(fast, brute, "trial {trial}");
        }
    }

    #[test]
    fn a_is_class_invariant() {
        // A depends only on [γ]: shifting γ by a face boundary leaves it
        // unchanged.
        let g = build_tetrahedron();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(14);
        let u = random_circuit(&mut rng, g.edge_count(), 2);
        let gamma = Chain::edges(&g, &g.canonical_path(0, 5, Metric::Path).unwrap());
        let mut shifted = gamma.coeffs.clone();
        shifted.xor_with(&g.face(1).edge_set);
        let gamma2 = Chain {
            grade: 1,
            coeffs: shifted,
        };
        assert_eq!(
            effective_support_a(&g, &u, &gamma).unwrap(),
            effective_support_a(&g, &u, &gamma2).unwrap()
        );
    }

    #[test]
    fn conjugated_support_bound() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(15);
        for _ in 0..1000 {
            let n = 10;
            let depth = rng.gen_range(0..=3);
            let u = random_circuit(&mut rng, n, depth);
            let k = rng.gen_range(1..=3usize);
            let mut supp = BitSet::new(n);
            while supp.count() < k {
                supp.insert(rng.gen_range(0..n));
            }
            let out = conjugated_support(&u, &supp);
            assert!(supp.is_subset_of(&out));
            let c = u.locality();
            assert!(out.count() <= c.pow(u.depth() as u32) * supp.count());
        }
    }
}
