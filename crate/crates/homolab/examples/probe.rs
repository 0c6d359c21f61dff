use homolab::circuit::*;
use homolab::complex::*;
use homolab::fixtures::Fixture;
use homolab::gf2::Chain;
use homolab::stabilizer::*;
use homolab::suites::encoder_for;

fn main() {
    for fixture in [Fixture::Cube(1), Fixture::Cube(2), Fixture::Tetrahedron, Fixture::Torus(3), Fixture::Torus(4)] {
        let g = fixture.build().unwrap();
        let m = g.edge_count();
        for variant in [0u64, 1, 2] {
            let u = encoder_for(&g, variant).unwrap();
            let t = run_circuit(&u).unwrap();
            let mut stats = Vec::new();
            let mut pairs = 0;
            for e in (0..m).step_by(3) {
                for f in ((e + 1)..m).step_by(4) {
                    if pairs > 8 { break; }
                    let gamma = Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
                    let b = effective_support_b(&g, &u, &gamma).unwrap();
                    let outside = b.complement();
                    let basis = stabilizer_elements_within(&t, &outside);
                    stats.push((b.count(), outside.count(), basis.len()));
                    pairs += 1;
                }
            }
            println!("{} variant={} depth={} gates={} stats(B, outside, dim)={:?}", fixture.name(), variant, u.depth(), u.gate_count(), stats);
        }
    }
}
