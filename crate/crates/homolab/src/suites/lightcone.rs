//! Effective-support exactness and the geometric containment claims.

use super::SuiteOutcome;
use crate::circuit::{
    brute_force_effective_support_a, effective_support_a, geometric_spread, light_cone,
    random_circuit, random_geometric_circuit, Direction,
};
use crate::complex::{build_cube, build_tetrahedron, Metric};
use crate::gf2::Chain;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A computed per-edge via γ-separation equals the brute-force intersection
/// over the full coset, on the tetrahedron and the unit cube with 20 random
/// depth-≤3 circuits each.
pub fn effective_support_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("effective-support");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in [
        ("tetrahedron", build_tetrahedron()),
        ("cube-1", build_cube(1).unwrap()),
    ] {
        for trial in 0..20 {
            let depth = rng.gen_range(1..=3);
            let u = random_circuit(&mut rng, g.edge_count(), depth);
            let e = rng.gen_range(0..g.edge_count());
            let mut f = rng.gen_range(0..g.edge_count());
            while f == e {
                f = rng.gen_range(0..g.edge_count());
            }
            let gamma = Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
            let fast = effective_support_a(&g, &u, &gamma).unwrap();
            let brute = brute_force_effective_support_a(&g, &u, &gamma);
            if fast == brute {
                out.verified_here(name, format!("trial={trial} depth={depth} e={e} f={f}"));
            } else {
                out.violated_here(
                    name,
                    format!("trial={trial}"),
                    format!("fast {:?} vs brute {:?}", fast.to_vec(), brute.to_vec()),
                );
            }
        }
    }
    out
}

/// Geometric containment: for geometric circuits with c·d < n on cubes
/// T₃..T₅, A lies inside the union of the cd-balls around the endpoints and
/// B inside the 2cd-balls.
pub fn sausage_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("sausage-containment");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = 0usize;
    'outer: for n in [3usize, 4, 5] {
        let g = build_cube(n).unwrap();
        let name = format!("cube-{n}");
        let c_dist = 2usize;
        let per_fixture = if n == 3 { 16 } else { 17 };
        for trial in 0..per_fixture {
            let depth = if c_dist * 2 < n { rng.gen_range(1..=2) } else { 1 };
            let u = random_geometric_circuit(&mut rng, &g, depth, c_dist);
            let spread = geometric_spread(&u, &g).unwrap();
            let c = spread.max(u.locality());
            let cd = c * depth;
            if cd >= n {
                out.skipped_here(&name, format!("trial={trial}"), "cd >= n");
                continue;
            }
            let e = rng.gen_range(0..g.edge_count());
            let mut f = rng.gen_range(0..g.edge_count());
            while f == e {
                f = rng.gen_range(0..g.edge_count());
            }
            let gamma = Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
            let a = effective_support_a(&g, &u, &gamma).unwrap();
            let b = light_cone(&u, &a, Direction::Up);
            let ball_a = g
                .ball(e, cd, Metric::Copath)
                .or(&g.ball(f, cd, Metric::Copath));
            let ball_b = g
                .ball(e, 2 * cd, Metric::Copath)
                .or(&g.ball(f, 2 * cd, Metric::Copath));
            if a.is_subset_of(&ball_a) && b.is_subset_of(&ball_b) {
                out.verified_here(&name, format!("trial={trial} cd={cd} e={e} f={f}"));
            } else {
                out.violated_here(
                    &name,
                    format!("trial={trial} cd={cd} e={e} f={f}"),
                    format!("A\\balls={:?}", a.minus(&ball_a).to_vec()),
                );
            }
            instances += 1;
            if instances >= 50 {
                break 'outer;
            }
        }
    }
    out
}

/// The non-geometric containment: A ⊆ L↓(Ball(e,c^d) ∪ Ball(f,c^d)) on the
/// cube for arbitrary shallow circuits with c^d < n.
pub fn support_in_balls_suite(seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("support-in-balls");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 5usize;
    let g = build_cube(n).unwrap();
    let name = "cube-5";
    for trial in 0..10 {
        let depth = 2usize;
        let u = random_circuit(&mut rng, g.edge_count(), depth);
        let c = u.locality();
        let radius = c.pow(depth as u32);
        if radius >= n {
            out.skipped_here(name, format!("trial={trial}"), "c^d >= n");
            continue;
        }
        let e = rng.gen_range(0..g.edge_count());
        let mut f = rng.gen_range(0..g.edge_count());
        while f == e {
            f = rng.gen_range(0..g.edge_count());
        }
        let gamma = Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
        let a = effective_support_a(&g, &u, &gamma).unwrap();
        let balls = g
            .ball(e, radius, Metric::Copath)
            .or(&g.ball(f, radius, Metric::Copath));
        let cone = light_cone(&u, &balls, Direction::Down);
        if a.is_subset_of(&cone) {
            out.verified_here(name, format!("trial={trial} radius={radius}"));
        } else {
            out.violated_here(
                name,
                format!("trial={trial} radius={radius}"),
                format!("A\\cone={:?}", a.minus(&cone).to_vec()),
            );
        }
    }
    out
}
