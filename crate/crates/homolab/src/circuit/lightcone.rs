//! Light cones: exact reachability in the circuit DAG by layer-by-layer
//! frontier expansion. Wires pass through, so the source is always contained
//! in its own cone.

use super::Circuit;
use crate::bits::BitSet;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Forward in time: qubits whose outputs depend on the sources' inputs.
    Up,
    /// Backward in time: qubits whose inputs can influence the sources'
    /// outputs.
    Down,
}

/// The light cone of `source` through `u`. A gate whose support meets the
/// frontier absorbs its whole support into it.
pub fn light_cone(u: &Circuit, source: &BitSet, direction: Direction) -> BitSet {
    debug_assert_eq!(source.len(), u.qubit_count);
    let mut frontier = source.clone();
    let mut expand = |layer: &Vec<super::Gate>| {
        for gate in layer {
            if gate.qubits.iter().any(|&q| frontier.get(q)) {
                for &q in &gate.qubits {
                    frontier.insert(q);
                }
            }
        }
    };
    match direction {
        Direction::Up => u.layers.iter().for_each(&mut expand),
        Direction::Down => u.layers.iter().rev().for_each(&mut expand),
    }
    frontier
}

#[cfg(test)]
mod tests {
    use super::super::{Gate, GateKind};
    use super::*;

    fn one(n: usize, q: usize) -> BitSet {
        BitSet::from_indices(n, &[q])
    }

    #[test]
    fn identity_circuit_cones_are_sources() {
        let u = Circuit::identity(5);
        let s = BitSet::from_indices(5, &[1, 3]);
        assert_eq!(light_cone(&u, &s, Direction::Up), s);
        assert_eq!(light_cone(&u, &s, Direction::Down), s);
    }

    #[test]
    fn single_cx_up_and_down() {
        let u = Circuit::new(2, vec![vec![Gate::new(GateKind::CX, vec![0, 1])]]).unwrap();
        assert_eq!(light_cone(&u, &one(2, 0), Direction::Up).to_vec(), vec![0, 1]);
        assert_eq!(light_cone(&u, &one(2, 1), Direction::Down).to_vec(), vec![0, 1]);
    }

    #[test]
    fn growth_bounded_by_locality_power() {
        // |L↑({q})| ≤ c^d: each layer multiplies the cone size by at most c.
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let u = super::super::random::random_circuit(&mut rng, 12, 4);
            let c = u.locality();
            let bound = c.pow(u.depth() as u32);
            for q in 0..12 {
                let cone = light_cone(&u, &one(12, q), Direction::Up);
                assert!(cone.count() <= bound);
            }
        }
    }

    #[test]
    fn monotone_and_composes() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let a = super::super::random::random_circuit(&mut rng, 10, 2);
            let b = super::super::random::random_circuit(&mut rng, 10, 2);
            let ab = a.then(&b).unwrap();
            let s = BitSet::from_indices(10, &[2, 7]);
            let bigger = BitSet::from_indices(10, &[2, 7, 9]);
            let cone_s = light_cone(&ab, &s, Direction::Up);
            let cone_big = light_cone(&ab, &bigger, Direction::Up);
            assert!(cone_s.is_subset_of(&cone_big));
            // Composition: cone through a-then-b = cone through b of cone
            // through a.
            let staged = light_cone(&b, &light_cone(&a, &s, Direction::Up), Direction::Up);
            assert_eq!(cone_s, staged);
            // Down direction composes in reverse.
            let down = light_cone(&ab, &s, Direction::Down);
            let staged_down =
                light_cone(&a, &light_cone(&b, &s, Direction::Down), Direction::Down);
            assert_eq!(down, staged_down);
        }
    }

    #[test]
    fn disjointness_duality() {
        // L↑(W) ∩ V = ∅ exactly when W ∩ L↓(V) = ∅: reaching forward from W
        // into V is the same relation as reaching backward from V into W.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let u = super::super::random::random_circuit(&mut rng, 10, 3);
            let mut w = BitSet::new(10);
            let mut v = BitSet::new(10);
            for q in 0..10 {
                if rng.gen_bool(0.25) {
                    w.insert(q);
                }
                if rng.gen_bool(0.25) {
                    v.insert(q);
                }
            }
            let up = light_cone(&u, &w, Direction::Up);
            let down = light_cone(&u, &v, Direction::Down);
            assert_eq!(up.intersects(&v), w.intersects(&down));
            // Pointwise form: q' ∈ L↑({q}) iff q ∈ L↓({q'}).
            let q = rng.gen_range(0..10);
            let qq = rng.gen_range(0..10);
            let upq = light_cone(&u, &one(10, q), Direction::Up);
            let downqq = light_cone(&u, &one(10, qq), Direction::Down);
            assert_eq!(upq.get(qq), downqq.get(q));
        }
    }
}
