//! Seeded random circuit generation for verification runs and tests.

use super::{Circuit, Gate, GateKind};
use crate::complex::{Metric, PolygonalComplex};
use rand::seq::SliceRandom;
use rand::Rng;

const ONE_QUBIT: [GateKind; 6] = [
    GateKind::H,
    GateKind::S,
    GateKind::Sdg,
    GateKind::X,
    GateKind::Y,
    GateKind::Z,
];
const TWO_QUBIT: [GateKind; 3] = [GateKind::CX, GateKind::CZ, GateKind::SWAP];

/// A random Clifford circuit: each layer pairs up a shuffled subset of the
/// qubits with two-qubit gates and sprinkles one-qubit gates on the rest.
pub fn random_circuit(rng: &mut impl Rng, qubits: usize, depth: usize) -> Circuit {
    let mut layers = Vec::with_capacity(depth);
    for _ in 0..depth {
        let mut order: Vec<usize> = (0..qubits).collect();
        order.shuffle(rng);
        let mut layer = Vec::new();
        let mut i = 0;
        while i + 1 < order.len() {
            if rng.gen_bool(0.6) {
                let kind = *TWO_QUBIT.choose(rng).unwrap();
                layer.push(Gate::new(kind, vec![order[i], order[i + 1]]));
                i += 2;
            } else {
                if rng.gen_bool(0.5) {
                    let kind = *ONE_QUBIT.choose(rng).unwrap();
                    layer.push(Gate::new(kind, vec![order[i]]));
                }
                i += 1;
            }
        }
        if i < order.len() && rng.gen_bool(0.5) {
            let kind = *ONE_QUBIT.choose(rng).unwrap();
            layer.push(Gate::new(kind, vec![order[i]]));
        }
        layers.push(layer);
    }
    Circuit {
        qubit_count: qubits,
        layers,
    }
}

/// A random geometrically local circuit on the edges of `g`: every two-qubit
/// gate joins edges within copath distance `c_dist`.
pub fn random_geometric_circuit(
    rng: &mut impl Rng,
    g: &PolygonalComplex,
    depth: usize,
    c_dist: usize,
) -> Circuit {
    let n = g.edge_count();
    let mut near: Vec<Vec<usize>> = Vec::with_capacity(n);
    for e in 0..n {
        let d = g.edge_distances_from(e, Metric::Copath);
        near.push(
            (0..n)
                .filter(|&f| f != e && matches!(d[f], Some(x) if x <= c_dist))
                .collect(),
        );
    }
    let mut layers = Vec::with_capacity(depth);
    for _ in 0..depth {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut used = vec![false; n];
        let mut layer = Vec::new();
        for &q in &order {
            if used[q] {
                continue;
            }
            let candidates: Vec<usize> =
                near[q].iter().copied().filter(|&p| !used[p]).collect();
            if !candidates.is_empty() && rng.gen_bool(0.6) {
                let p = *candidates.choose(rng).unwrap();
                used[q] = true;
                used[p] = true;
                let kind = *TWO_QUBIT.choose(rng).unwrap();
                layer.push(Gate::new(kind, vec![q, p]));
            } else if rng.gen_bool(0.3) {
                used[q] = true;
                let kind = *ONE_QUBIT.choose(rng).unwrap();
                layer.push(Gate::new(kind, vec![q]));
            }
        }
        layers.push(layer);
    }
    Circuit {
        qubit_count: n,
        layers,
    }
}
