//! Clifford encoder synthesis by canonical-form reduction.
//!
//! Given n independent, pairwise commuting, +1-signed stabilizer rows, find
//! gates V with V g_i V† = +Z_{π(i)}; the encoder is then U = V†, and U|0ⁿ⟩
//! is stabilized by every input generator with sign +1.

use super::pauli::PauliOperator;
use super::surface::symplectic_rank;
use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};

/// Synthesizes an encoder circuit for a full stabilizer description.
///
/// The input must be exactly n generators on n qubits, independent, pairwise
/// commuting, each with real +1 sign. For code fixtures with logicals,
/// augment the independent surface generators with logical-Z choices first.
pub fn synthesize_encoder(generators: &[PauliOperator]) -> Result<Circuit> {
    let n = match generators.first() {
        Some(p) => p.qubits(),
        None => return Ok(Circuit::identity(0)),
    };
    if generators.len() != n {
        return Err(Error::precondition(format!(
            "need exactly {n} generators for {n} qubits, got {}",
            generators.len()
        )));
    }
    for (i, p) in generators.iter().enumerate() {
        if !p.is_hermitian() || p.sign() != 1 {
            return Err(Error::precondition(format!(
                "generator {i} must have +1 sign"
            )));
        }
        if p.is_identity_word() {
            return Err(Error::precondition(format!("generator {i} is identity")));
        }
        for (j, q) in generators.iter().enumerate().skip(i + 1) {
            if !p.commutes_with(q) {
                return Err(Error::precondition(format!(
                    "generators {i} and {j} anticommute"
                )));
            }
        }
    }
    if symplectic_rank(generators, n) != n {
        return Err(Error::precondition("generators are dependent"));
    }

    let mut rows: Vec<PauliOperator> = generators.to_vec();
    let mut gates: Vec<Gate> = Vec::new();
    let apply = |rows: &mut Vec<PauliOperator>, gates: &mut Vec<Gate>, g: Gate| {
        for row in rows.iter_mut() {
            row.apply_gate(&g);
        }
        gates.push(g);
    };

    for i in 0..n {
        // Find a pivot among rows i.. acting on qubit i; Hadamard turns a
        // pure-Z column into X first if needed.
        let has_x = (i..n).find(|&r| rows[r].x.get(i));
        let pivot = match has_x {
            Some(r) => r,
            None => {
                let z_row = (i..n).find(|&r| rows[r].z.get(i)).ok_or_else(|| {
                    Error::structure(format!(
                        "no remaining generator touches qubit {i}; dependent input"
                    ))
                })?;
                apply(&mut rows, &mut gates, Gate::new(GateKind::H, vec![i]));
                z_row
            }
        };
        rows.swap(i, pivot);
        // Row-reduce the other rows' X bit at qubit i (free change of
        // generating set).
        let pivot_row = rows[i].clone();
        for r in 0..n {
            if r != i && rows[r].x.get(i) {
                rows[r] = rows[r].mul(&pivot_row);
            }
        }
        // Clear the pivot's Z tail on finalized qubits via the finalized
        // +Z rows; commutation forbids X there.
        for j in 0..i {
            debug_assert!(!rows[i].x.get(j));
            if rows[i].z.get(j) {
                let zj = rows[j].clone();
                rows[i] = rows[i].mul(&zj);
            }
        }
        // Make the pivot exactly ±X_i: S kills a Y at i, H/S normalize the
        // tail to X, CX folds the tail into qubit i.
        if rows[i].z.get(i) {
            apply(&mut rows, &mut gates, Gate::new(GateKind::S, vec![i]));
        }
        for k in (i + 1)..n {
            if rows[i].x.get(k) && rows[i].z.get(k) {
                apply(&mut rows, &mut gates, Gate::new(GateKind::S, vec![k]));
            } else if rows[i].z.get(k) {
                apply(&mut rows, &mut gates, Gate::new(GateKind::H, vec![k]));
            }
        }
        for k in (i + 1)..n {
            if rows[i].x.get(k) {
                apply(&mut rows, &mut gates, Gate::new(GateKind::CX, vec![i, k]));
            }
        }
        debug_assert_eq!(rows[i].support().to_vec(), vec![i]);
        debug_assert!(rows[i].x.get(i) && !rows[i].z.get(i));
        // X_i -> Z_i, then fix the sign with an X gate if needed.
        apply(&mut rows, &mut gates, Gate::new(GateKind::H, vec![i]));
        if rows[i].sign() < 0 {
            apply(&mut rows, &mut gates, Gate::new(GateKind::X, vec![i]));
        }
        debug_assert_eq!(rows[i], PauliOperator::single_z(n, i));
    }

    // U = V†: reverse the gates, inverting each (S† = Sdg; the rest are
    // self-inverse).
    let inverted = gates.into_iter().rev().map(|g| match g.kind {
        GateKind::S => Gate::new(GateKind::Sdg, g.qubits),
        GateKind::Sdg => Gate::new(GateKind::S, g.qubits),
        other => Gate::new(other, g.qubits),
    });
    Ok(Circuit::from_gates(n, inverted))
}

/// A second encoder family with geometrically structured light cones: the
/// code state (logical Zs pinned to +1) is the uniform superposition over
/// the cut space Im ∂⁰, prepared as H on every spanning-tree edge followed
/// by CX fanout from each tree edge onto the rest of its fundamental cut.
/// Controls are tree edges and targets are non-tree edges, so cones never
/// chain; a tree edge near the leaves has a small cut and a small cone.
///
/// Produces exactly the same state as [`synthesize_encoder`] on the pinned
/// generator set, but with local structure useful for effective-support
/// experiments.
pub fn tree_cut_encoder(g: &crate::complex::PolygonalComplex, root: usize) -> Result<Circuit> {
    use crate::bits::BitSet;
    let n = g.edge_count();
    if root >= g.vertex_count() {
        return Err(Error::precondition("root vertex out of range"));
    }
    // BFS spanning tree, lowest-index edges first; parent_edge[v] is the
    // tree edge into v.
    let mut parent_edge = vec![usize::MAX; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    seen[root] = true;
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &e in g.vertex_edges(v) {
            let (a, b) = g.edge(e);
            let w = if a == v { b } else { a };
            if !seen[w] {
                seen[w] = true;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }
    if order.len() != g.vertex_count() {
        return Err(Error::precondition("complex is not connected"));
    }
    // Subtree vertex sets, children before parents.
    let mut subtree: Vec<BitSet> = (0..g.vertex_count())
        .map(|v| {
            let mut s = BitSet::new(g.vertex_count());
            s.insert(v);
            s
        })
        .collect();
    for &v in order.iter().rev() {
        if v != root {
            let (a, b) = g.edge(parent_edge[v]);
            let parent = if a == v { b } else { a };
            let sub = subtree[v].clone();
            subtree[parent].or_with(&sub);
        }
    }
    let mut gates = Vec::new();
    let mut tree_edges = BitSet::new(n);
    for &v in &order {
        if v != root {
            tree_edges.insert(parent_edge[v]);
        }
    }
    for e in tree_edges.iter_ones() {
        gates.push(Gate::new(GateKind::H, vec![e]));
    }
    // Fundamental cut of tree edge (parent(v), v): edges with exactly one
    // endpoint in subtree(v).
    for &v in &order {
        if v == root {
            continue;
        }
        let t = parent_edge[v];
        let cut = g.vertex_set_coboundary_chain(&subtree[v]);
        debug_assert!(cut.get(t));
        for e in cut.iter_ones() {
            if e != t {
                debug_assert!(!tree_edges.get(e));
                gates.push(Gate::new(GateKind::CX, vec![t, e]));
            }
        }
    }
    Ok(Circuit::from_gates(n, gates))
}

#[cfg(test)]
mod tests {
    use super::super::surface::{
        independent_generators, logical_z_cycles, surface_generators,
    };
    use super::super::tableau::run_circuit;
    use super::*;
    use crate::complex::{build_cube, build_tetrahedron, build_torus};

    fn full_generator_set(
        g: &crate::complex::PolygonalComplex,
    ) -> Vec<PauliOperator> {
        let spec = surface_generators(g).unwrap();
        let mut gens = independent_generators(&spec.generators);
        for cycle in logical_z_cycles(g) {
            gens.push(PauliOperator::z_on(g.edge_count(), &cycle));
        }
        gens
    }

    #[test]
    fn diagonal_spec_gives_identity_like_circuit() {
        let gens: Vec<PauliOperator> =
            (0..4).map(|q| PauliOperator::single_z(4, q)).collect();
        let u = synthesize_encoder(&gens).unwrap();
        let t = run_circuit(&u).unwrap();
        for g in &gens {
            assert!(t.stabilizes(g));
        }
    }

    #[test]
    fn tetrahedron_encoder_stabilized_by_all_generators() {
        let g = build_tetrahedron();
        let gens = full_generator_set(&g);
        assert_eq!(gens.len(), g.edge_count());
        let u = synthesize_encoder(&gens).unwrap();
        let t = run_circuit(&u).unwrap();
        let spec = surface_generators(&g).unwrap();
        for gen in &spec.generators {
            assert!(t.stabilizes(gen), "generator {gen:?}");
        }
    }

    #[test]
    fn cube_encoder() {
        let g = build_cube(1).unwrap();
        let gens = full_generator_set(&g);
        let u = synthesize_encoder(&gens).unwrap();
        assert_eq!(u.qubit_count, 12);
        let t = run_circuit(&u).unwrap();
        for gen in &surface_generators(&g).unwrap().generators {
            assert!(t.stabilizes(gen));
        }
    }

    #[test]
    fn torus_encoder_with_logical_pinning() {
        let g = build_torus(3).unwrap();
        let gens = full_generator_set(&g);
        assert_eq!(gens.len(), g.edge_count());
        let u = synthesize_encoder(&gens).unwrap();
        let t = run_circuit(&u).unwrap();
        for gen in &gens {
            assert!(t.stabilizes(gen));
        }
    }

    #[test]
    fn anticommuting_input_rejected() {
        let gens = vec![
            PauliOperator::single_x(2, 0),
            PauliOperator::single_z(2, 0),
        ];
        assert!(synthesize_encoder(&gens).is_err());
        let dependent = vec![
            PauliOperator::single_z(2, 0),
            PauliOperator::single_z(2, 0),
        ];
        assert!(synthesize_encoder(&dependent).is_err());
    }
}
