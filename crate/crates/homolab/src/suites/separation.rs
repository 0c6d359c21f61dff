//! γ-separation: exact linear-feasibility decisions against brute-force
//! coset enumeration, and the connected-reduction claim.

use super::SuiteOutcome;
use crate::bits::BitSet;
use crate::complex::{build_cube, build_tetrahedron, copath_components, Metric, PolygonalComplex};
use crate::gf2::{
    brute_force_separating, coset_members, is_gamma_separating, Chain,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_subsets_up_to(n: usize, max_size: usize) -> Vec<BitSet> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if (mask.count_ones() as usize) <= max_size {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            out.push(BitSet::from_indices(n, &idx));
        }
    }
    out
}

fn pair_paths(g: &PolygonalComplex) -> Vec<(usize, usize, Chain)> {
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        for f in (e + 1)..g.edge_count() {
            let path = g.canonical_path(e, f, Metric::Path).unwrap();
            out.push((e, f, Chain::edges(g, &path)));
        }
    }
    out
}

/// The feasibility decision agrees with brute force over the whole coset:
/// every X with |X| ≤ 6 (all of them on the tetrahedron and the unit cube)
/// plus 50 random larger X per fixture.
pub fn separation_oracle_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("separation-oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in [
        ("tetrahedron", build_tetrahedron()),
        ("cube-1", build_cube(1).unwrap()),
    ] {
        let m = g.edge_count();
        let mut sets = all_subsets_up_to(m, 6);
        if m > 7 {
            for _ in 0..50 {
                let size = rng.gen_range(7..=m);
                let mut s = BitSet::new(m);
                while s.count() < size {
                    s.insert(rng.gen_range(0..m));
                }
                sets.push(s);
            }
        }
        let paths = pair_paths(&g);
        let mut mismatches = 0usize;
        let mut checked = 0usize;
        for (_, _, gamma) in &paths {
            let members = coset_members(&g, gamma);
            for x in &sets {
                let fast = is_gamma_separating(&g, gamma, x);
                let brute = members.iter().all(|mem| mem.intersects(x));
                checked += 1;
                if fast != brute {
                    mismatches += 1;
                }
            }
        }
        if mismatches == 0 {
            out.verified_here(name, format!("{checked} (gamma,X) decisions agree"));
        } else {
            out.violated_here(name, format!("{checked} decisions"), format!("{mismatches} mismatches"));
        }
    }
    out
}

/// Claim: for X, X' not copath-connected to each other with X ∪ X'
/// γ-separating, every γ' ∈ [γ] is met together with γ by one of the two
/// parts. Decided exactly: when both parts meet γ the claim is the union's
/// separation; when only one part meets γ the claim says that part alone
/// separates; both parts missing γ is impossible (γ is its own class
/// member). Candidate pairs are drawn from structured families (face
/// boundaries, vertex stars, copath balls, coboundaries, random sets) and
/// filtered exactly.
pub fn gamma_sep_connected_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("gamma-sep-connected");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in [
        ("tetrahedron", build_tetrahedron()),
        ("cube-1", build_cube(1).unwrap()),
        ("cube-2", build_cube(2).unwrap()),
    ] {
        let m = g.edge_count();
        let mut family: Vec<BitSet> = Vec::new();
        for f in g.faces() {
            family.push(f.edge_set.clone());
        }
        for v in 0..g.vertex_count() {
            family.push(BitSet::from_indices(m, g.vertex_edges(v)));
        }
        for e in (0..m).step_by(3) {
            family.push(g.ball(e, 1, Metric::Copath));
        }
        for v in (0..g.vertex_count()).step_by(2) {
            let mut vs = BitSet::new(g.vertex_count());
            vs.insert(v);
            for u in 0..g.vertex_count() {
                if rng.gen_bool(0.3) {
                    vs.insert(u);
                }
            }
            family.push(g.vertex_set_coboundary_chain(&vs));
        }
        for _ in 0..10 {
            let mut s = BitSet::new(m);
            for e in 0..m {
                if rng.gen_bool(0.25) {
                    s.insert(e);
                }
            }
            family.push(s);
        }
        family.retain(|s| !s.is_empty());

        let paths = pair_paths(&g);
        let mut qualifying = 0usize;
        let mut failures = 0usize;
        for i in 0..family.len() {
            for j in 0..family.len() {
                if i == j {
                    continue;
                }
                let x = family[i].minus(&family[j]);
                let xp = family[j].minus(&family[i]);
                if x.is_empty() || xp.is_empty() {
                    continue;
                }
                let union = x.or(&xp);
                let mixed = copath_components(&g, &union).iter().any(|comp| {
                    comp.iter().any(|&e| x.get(e)) && comp.iter().any(|&e| xp.get(e))
                });
                if mixed {
                    continue;
                }
                for (e, f, gamma) in paths.iter().step_by(5) {
                    if !is_gamma_separating(&g, gamma, &union) {
                        continue;
                    }
                    qualifying += 1;
                    let x_meets = x.intersects(&gamma.coeffs);
                    let xp_meets = xp.intersects(&gamma.coeffs);
                    let holds = match (x_meets, xp_meets) {
                        (true, true) => true,
                        (true, false) => is_gamma_separating(&g, gamma, &x),
                        (false, true) => is_gamma_separating(&g, gamma, &xp),
                        (false, false) => false,
                    };
                    if !holds {
                        failures += 1;
                        if failures <= 3 {
                            out.violated_here(
                                name,
                                format!("e={e} f={f} |X|={} |X'|={}", x.count(), xp.count()),
                                "claim case analysis failed",
                            );
                        }
                    }
                }
            }
        }
        if failures == 0 {
            out.verified_here(name, format!("{qualifying} qualifying (X,X',gamma) instances"));
        }
    }
    out
}
