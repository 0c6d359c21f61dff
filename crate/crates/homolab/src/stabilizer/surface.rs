//! Surface-code stabilizer groups on closed surface complexes: vertex star
//! X operators, face plaquette Z operators, and logical representatives from
//! (co)homology.

use super::pauli::PauliOperator;
use crate::bits::BitSet;
use crate::complex::{validate_csc, PolygonalComplex};
use crate::error::{Error, Result};
use crate::gf2::{boundary_matrices, independent_subset, Gf2Matrix};

/// The surface-code generator list with its group rank and logical count.
#[derive(Clone, Debug)]
pub struct StabilizerGroupSpec {
    pub qubits: usize,
    /// One A_v per vertex followed by one B_f per face.
    pub generators: Vec<PauliOperator>,
    pub rank: usize,
    pub logical_count: usize,
}

/// A_v = ∏_{e ∋ v} σ_X^e.
pub fn star_operator(g: &PolygonalComplex, v: usize) -> PauliOperator {
    let support = BitSet::from_indices(g.edge_count(), g.vertex_edges(v));
    PauliOperator::x_on(g.edge_count(), &support)
}

/// B_f = ∏_{e ∈ f} σ_Z^e.
pub fn plaquette_operator(g: &PolygonalComplex, f: usize) -> PauliOperator {
    PauliOperator::z_on(g.edge_count(), &g.face(f).edge_set)
}

/// Builds the full generator list for a CSC and computes the group rank over
/// GF(2); the logical count is |E| - rank = 2 - χ.
pub fn surface_generators(g: &PolygonalComplex) -> Result<StabilizerGroupSpec> {
    let cert = validate_csc(g);
    if !cert.is_csc {
        let (v, reason) = cert.failure.unwrap_or((0, "unknown".into()));
        return Err(Error::precondition(format!(
            "not a CSC at vertex {v}: {reason}"
        )));
    }
    let n = g.edge_count();
    let mut generators = Vec::with_capacity(g.vertex_count() + g.face_count());
    for v in 0..g.vertex_count() {
        generators.push(star_operator(g, v));
    }
    for f in 0..g.face_count() {
        generators.push(plaquette_operator(g, f));
    }
    let rank = symplectic_rank(&generators, n);
    Ok(StabilizerGroupSpec {
        qubits: n,
        generators,
        rank,
        logical_count: n - rank,
    })
}

/// GF(2) rank of Paulis as 2n-bit (x|z) rows.
pub fn symplectic_rank(paulis: &[PauliOperator], n: usize) -> usize {
    let rows: Vec<BitSet> = paulis.iter().map(|p| p.x.concat(&p.z)).collect();
    Gf2Matrix::from_rows(2 * n, rows).rank()
}

/// An independent generating subset of the given Paulis, preserving order.
pub fn independent_generators(paulis: &[PauliOperator]) -> Vec<PauliOperator> {
    let n = paulis.first().map(|p| p.qubits()).unwrap_or(0);
    let keyed: std::collections::HashMap<BitSet, &PauliOperator> = paulis
        .iter()
        .map(|p| (p.x.concat(&p.z), p))
        .collect();
    independent_subset(paulis.iter().map(|p| p.x.concat(&p.z)))
        .into_iter()
        .map(|key| {
            let p = keyed[&key];
            debug_assert_eq!(p.qubits(), n);
            (*p).clone()
        })
        .collect()
}

/// Representatives of a basis of H₁ as edge sets: cycles of ∂₁ independent
/// of Im ∂₂. As Z operators they commute with every generator and pin the
/// logical qubits.
pub fn logical_z_cycles(g: &PolygonalComplex) -> Vec<BitSet> {
    let (d1, _) = boundary_matrices(g);
    let cycle_basis = d1.nullspace();
    let boundary_vectors: Vec<BitSet> = g.faces().iter().map(|f| f.edge_set.clone()).collect();
    pick_quotient_basis(&boundary_vectors, &cycle_basis)
}

/// Representatives of a basis of H¹ as edge sets: cocycles (kernel of ∂₂ᵀ)
/// independent of the coboundaries (rows of ∂₁). As X operators they commute
/// with every plaquette and star but act on the logical algebra.
pub fn logical_x_cocycles(g: &PolygonalComplex) -> Vec<BitSet> {
    let (_, d2) = boundary_matrices(g);
    let cocycle_basis = d2.transpose().nullspace();
    let coboundary_vectors: Vec<BitSet> = (0..g.vertex_count())
        .map(|v| BitSet::from_indices(g.edge_count(), g.vertex_edges(v)))
        .collect();
    pick_quotient_basis(&coboundary_vectors, &cocycle_basis)
}

/// Greedily extends a basis of the subspace spanned by `inside` with vectors
/// from `candidates`, returning only the extension (the quotient basis).
fn pick_quotient_basis(inside: &[BitSet], candidates: &[BitSet]) -> Vec<BitSet> {
    let all: Vec<BitSet> = inside.iter().chain(candidates.iter()).cloned().collect();
    let kept = independent_subset(all);
    let inside_count = independent_subset(inside.to_vec()).len();
    kept.into_iter().skip(inside_count).collect()
}
