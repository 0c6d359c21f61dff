//! Geometric locality of a circuit against a complex's copath metric.

use super::Circuit;
use crate::complex::{Metric, PolygonalComplex};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// True when every gate's qubits are pairwise within copath distance
/// `c_dist` on `g`. The circuit must act on exactly the edges of `g`.
pub fn is_geometric(u: &Circuit, g: &PolygonalComplex, c_dist: usize) -> Result<bool> {
    if u.qubit_count != g.edge_count() {
        return Err(Error::precondition(format!(
            "circuit acts on {} qubits but the complex has {} edges",
            u.qubit_count,
            g.edge_count()
        )));
    }
    let mut cache: HashMap<usize, Vec<Option<usize>>> = HashMap::new();
    for gate in u.gates() {
        for (i, &a) in gate.qubits.iter().enumerate() {
            for &b in gate.qubits.iter().skip(i + 1) {
                let dist = cache
                    .entry(a)
                    .or_insert_with(|| g.edge_distances_from(a, Metric::Copath));
                match dist[b] {
                    Some(d) if d <= c_dist => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// The largest pairwise copath distance within any single gate; 0 for
/// circuits with no multi-qubit gates.
pub fn geometric_spread(u: &Circuit, g: &PolygonalComplex) -> Result<usize> {
    if u.qubit_count != g.edge_count() {
        return Err(Error::precondition("qubit/edge count mismatch"));
    }
    let mut best = 0usize;
    let mut cache: HashMap<usize, Vec<Option<usize>>> = HashMap::new();
    for gate in u.gates() {
        for (i, &a) in gate.qubits.iter().enumerate() {
            for &b in gate.qubits.iter().skip(i + 1) {
                let dist = cache
                    .entry(a)
                    .or_insert_with(|| g.edge_distances_from(a, Metric::Copath));
                match dist[b] {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::Unreachable(format!("edges {a},{b}"))),
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::super::{Gate, GateKind};
    use super::*;
    use crate::complex::{build_cube, build_torus};

    #[test]
    fn single_qubit_only_is_geometric() {
        let g = build_torus(3).unwrap();
        let u = Circuit::new(
            g.edge_count(),
            vec![vec![Gate::new(GateKind::H, vec![0]), Gate::new(GateKind::S, vec![5])]],
        )
        .unwrap();
        assert!(is_geometric(&u, &g, 0).unwrap());
    }

    #[test]
    fn far_cx_is_not_geometric() {
        let g = build_cube(3).unwrap();
        let d = g.all_pairs_edge_distances(Metric::Copath);
        let (mut a, mut b) = (0, 0);
        for i in 0..g.edge_count() {
            for j in 0..g.edge_count() {
                if d[i][j] > d[a][b] {
                    a = i;
                    b = j;
                }
            }
        }
        assert!(d[a][b] > 2);
        let u = Circuit::new(g.edge_count(), vec![vec![Gate::new(GateKind::CX, vec![a, b])]])
            .unwrap();
        assert!(!is_geometric(&u, &g, 2).unwrap());
        assert_eq!(geometric_spread(&u, &g).unwrap(), d[a][b]);
    }
}
