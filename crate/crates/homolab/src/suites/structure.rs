//! Structure identities and chain-complex laws on the standard fixtures.

use super::SuiteOutcome;
use crate::fixtures::Fixture;
use crate::gf2::{boundary_matrices, homology};
use crate::stabilizer::surface_generators;

/// χ = |V|−|E|+|F|, logical count = 2−χ, generator rank = |V|+|F|−2,
/// dim H₁ = dim H¹ = logical count, and ∂₁∂₂ = 0 / ∂¹∂⁰ = 0, on every
/// standard fixture.
pub fn structure_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("structure");
    for fixture in Fixture::standard_set() {
        let name = fixture.name();
        let g = match fixture.build() {
            Ok(g) => g,
            Err(e) => {
                out.violated_here(&name, "build", e.to_string());
                continue;
            }
        };
        let euler = g.euler_characteristic();
        let expected_logicals = 2 - euler;
        let rep = homology(&g);
        let spec = match surface_generators(&g) {
            Ok(s) => s,
            Err(e) => {
                out.violated_here(&name, "generators", e.to_string());
                continue;
            }
        };
        let rank_ok = spec.rank == g.vertex_count() + g.face_count() - 2;
        let logical_ok = spec.logical_count as i64 == expected_logicals;
        let h1_ok = rep.dims.1 as i64 == expected_logicals
            && rep.cohomology_dims.1 as i64 == expected_logicals;
        let euler_ok =
            euler == rep.dims.0 as i64 - rep.dims.1 as i64 + rep.dims.2 as i64;
        let (d1, d2) = boundary_matrices(&g);
        let chain_ok =
            d1.product_is_zero(&d2) && d2.transpose().product_is_zero(&d1.transpose());
        let connected_ok = rep.dims.0 == 1 && rep.dims.2 == 1;
        if rank_ok && logical_ok && h1_ok && euler_ok && chain_ok && connected_ok {
            out.verified_here(
                &name,
                format!(
                    "chi={euler} logical={} rank={} h={:?}",
                    spec.logical_count, spec.rank, rep.dims
                ),
            );
        } else {
            out.violated_here(
                &name,
                format!("chi={euler}"),
                format!(
                    "rank_ok={rank_ok} logical_ok={logical_ok} h1_ok={h1_ok} euler_ok={euler_ok} chain_ok={chain_ok} connected_ok={connected_ok}"
                ),
            );
        }
    }
    out
}
