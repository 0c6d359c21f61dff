//! Homology classes and γ-separation, decided exactly by GF(2) feasibility.
//!
//! The class [γ] is the coset γ + Im ∂₂. A set X fails to be γ-separating
//! exactly when the system (∂₂ restricted to the rows of X)·w = γ|_X has a
//! solution: then γ' = γ + ∂₂w is a class member avoiding X.

use super::homology::{boundary_matrices, Chain};
use super::matrix::Gf2Matrix;
use crate::bits::BitSet;
use crate::complex::{copath_components, EdgeSet, PolygonalComplex};
use crate::error::{Error, Result};

fn restrict_rows(d2: &Gf2Matrix, rows: &BitSet) -> Gf2Matrix {
    let picked: Vec<BitSet> = rows.iter_ones().map(|r| d2.row(r).clone()).collect();
    Gf2Matrix::from_rows(d2.cols(), picked)
}

fn restrict_vec(v: &BitSet, rows: &BitSet) -> BitSet {
    let mut out = BitSet::new(rows.count());
    for (i, r) in rows.iter_ones().enumerate() {
        if v.get(r) {
            out.insert(i);
        }
    }
    out
}

/// Applies ∂₂ to a face set, yielding the boundary 1-chain.
pub fn apply_d2(g: &PolygonalComplex, faces: &BitSet) -> BitSet {
    g.face_set_boundary_chain(faces)
}

/// Decides whether γ and γ' are homologous; on success returns a face-set
/// witness w with ∂₂w = γ + γ' (free faces zero).
pub fn same_class(g: &PolygonalComplex, gamma: &Chain, gamma2: &Chain) -> Option<BitSet> {
    debug_assert_eq!(gamma.grade, 1);
    debug_assert_eq!(gamma2.grade, 1);
    let (_, d2) = boundary_matrices(g);
    let diff = gamma.coeffs.xor(&gamma2.coeffs);
    d2.solve(&diff)
}

/// A class member of [γ] disjoint from `x`, or None when `x` is
/// γ-separating. The decision is exact linear feasibility, not a heuristic.
pub fn class_member_avoiding(
    g: &PolygonalComplex,
    gamma: &Chain,
    x: &EdgeSet,
) -> Option<Chain> {
    debug_assert_eq!(gamma.grade, 1);
    if x.is_empty() {
        return Some(gamma.clone());
    }
    let (_, d2) = boundary_matrices(g);
    let sub = restrict_rows(&d2, x);
    let rhs = restrict_vec(&gamma.coeffs, x);
    let w = sub.solve(&rhs)?;
    let mut member = gamma.coeffs.clone();
    member.xor_with(&apply_d2(g, &w));
    debug_assert!(!member.intersects(x));
    Some(Chain {
        grade: 1,
        coeffs: member,
    })
}

/// A class member of [γ] supported inside `b`, or None when none exists.
pub fn class_member_within(
    g: &PolygonalComplex,
    gamma: &Chain,
    b: &EdgeSet,
) -> Option<Chain> {
    class_member_avoiding(g, gamma, &b.complement())
}

/// True when every member of [γ] meets `x`.
pub fn is_gamma_separating(g: &PolygonalComplex, gamma: &Chain, x: &EdgeSet) -> bool {
    class_member_avoiding(g, gamma, x).is_none()
}

/// Extracts a copath-connected component of `x` that still γ-separates, by
/// dropping components (lowest edge index first) as the inductive argument
/// allows. Errors when `x` does not separate to begin with.
pub fn reduce_to_connected_separator(
    g: &PolygonalComplex,
    gamma: &Chain,
    x: &EdgeSet,
) -> Result<EdgeSet> {
    if !is_gamma_separating(g, gamma, x) {
        return Err(Error::precondition("input not separating"));
    }
    let mut current = x.clone();
    loop {
        let comps = copath_components(g, &current);
        if comps.len() <= 1 {
            return Ok(current);
        }
        let first = BitSet::from_indices(current.len(), &comps[0]);
        if is_gamma_separating(g, gamma, &first) {
            return Ok(first);
        }
        current.subtract(&first);
        // The induction behind the reduction guarantees the remainder still
        // separates; a failure here would be a counterexample artifact.
        if !is_gamma_separating(g, gamma, &current) {
            return Err(Error::structure(
                "separator reduction lost separation; counterexample input",
            ));
        }
    }
}

/// Brute-force decision used as the oracle in tests and verification runs:
/// enumerates the whole coset γ + Im ∂₂ (2^rank members).
pub fn brute_force_separating(g: &PolygonalComplex, gamma: &Chain, x: &EdgeSet) -> bool {
    coset_members(g, gamma).iter().all(|m| m.intersects(x))
}

/// Greedy extraction of an independent subset spanning the given vectors.
/// Keeps the first vector of every new pivot, reducing candidates at their
/// current lowest set bit until they either vanish or find a fresh pivot.
pub fn independent_subset(vectors: impl IntoIterator<Item = BitSet>) -> Vec<BitSet> {
    let mut by_pivot: std::collections::HashMap<usize, BitSet> = std::collections::HashMap::new();
    let mut kept = Vec::new();
    for v in vectors {
        let mut r = v.clone();
        loop {
            let Some(p) = r.lowest_set() else {
                break;
            };
            match by_pivot.get(&p) {
                Some(b) => r.xor_with(&b.clone()),
                None => {
                    by_pivot.insert(p, r);
                    kept.push(v);
                    break;
                }
            }
        }
    }
    kept
}

/// All members of [γ] as explicit edge sets. Only usable on tiny fixtures:
/// the coset has 2^rank(∂₂) members.
pub fn coset_members(g: &PolygonalComplex, gamma: &Chain) -> Vec<BitSet> {
    let basis = independent_subset(g.faces().iter().map(|f| f.edge_set.clone()));
    assert!(basis.len() <= 20, "coset too large to enumerate");
    let mut members = Vec::with_capacity(1 << basis.len());
    for mask in 0u64..(1 << basis.len()) {
        let mut m = gamma.coeffs.clone();
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                m.xor_with(b);
            }
        }
        members.push(m);
    }
    members
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_cube, build_tetrahedron, build_torus, Metric};

    #[test]
    fn same_class_trivial_witness() {
        let g = build_tetrahedron();
        let gamma = Chain::edges(&g, &[0, 3]);
        let w = same_class(&g, &gamma, &gamma).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn cube_staircase_paths_are_homologous() {
        // Two edge-disjoint staircase paths between opposite corners of the
        // unit cube have equal chain boundary, so their sum is a cycle; with
        // H₁ = 0 the solver must produce a bounding face set.
        let g = build_cube(1).unwrap();
        let find_edge = |a: usize, b: usize| {
            g.edges()
                .iter()
                .position(|&(u, v)| (u, v) == (a.min(b), a.max(b)) || (u, v) == (a.max(b), a.min(b)))
                .unwrap()
        };
        // Vertex ids follow lexicographic (x,y,z) order: 0=(0,0,0), 7=(1,1,1).
        let route_a = [find_edge(0, 4), find_edge(4, 6), find_edge(6, 7)];
        let route_b = [find_edge(0, 1), find_edge(1, 3), find_edge(3, 7)];
        assert!(route_a.iter().all(|e| !route_b.contains(e)));
        let gamma = Chain::edges(&g, &route_a);
        let gamma2 = Chain::edges(&g, &route_b);
        let w = same_class(&g, &gamma, &gamma2).unwrap();
        assert_eq!(apply_d2(&g, &w), gamma.coeffs.xor(&gamma2.coeffs));
    }

    #[test]
    fn torus_meridian_not_null_homologous() {
        let g = build_torus(3).unwrap();
        // Horizontal loop around the torus: edges h(0,j) for all j.
        let meridian: Vec<usize> = (0..3).map(|j| 2 * j).collect();
        let gamma = Chain::edges(&g, &meridian);
        let zero = Chain::edges(&g, &[]);
        assert!(same_class(&g, &gamma, &zero).is_none());
    }

    #[test]
    fn avoiding_empty_returns_gamma() {
        let g = build_tetrahedron();
        let gamma = Chain::edges(&g, &[0, 3]);
        let none = BitSet::new(g.edge_count());
        let m = class_member_avoiding(&g, &gamma, &none).unwrap();
        assert_eq!(m.coeffs, gamma.coeffs);
    }

    #[test]
    fn within_full_and_support() {
        let g = build_tetrahedron();
        let gamma = Chain::edges(&g, &[0, 3]);
        let full = BitSet::full(g.edge_count());
        assert_eq!(
            class_member_within(&g, &gamma, &full).unwrap().coeffs,
            gamma.coeffs
        );
        assert_eq!(
            class_member_within(&g, &gamma, &gamma.coeffs)
                .unwrap()
                .coeffs,
            gamma.coeffs
        );
    }

    #[test]
    fn exhaustive_oracle_agreement_tetrahedron() {
        // Every (γ, X): γ a canonical path between each edge pair, X every
        // subset of the 6 edges; the feasibility decision must match the
        // brute-force coset scan.
        let g = build_tetrahedron();
        for e in 0..g.edge_count() {
            for f in 0..g.edge_count() {
                let gamma = Chain::edges(&g, &g.canonical_path(e, f, Metric::Path).unwrap());
                for mask in 0u64..(1 << g.edge_count()) {
                    let x = BitSet::from_indices(
                        g.edge_count(),
                        &(0..g.edge_count())
                            .filter(|&i| mask >> i & 1 == 1)
                            .collect::<Vec<_>>(),
                    );
                    assert_eq!(
                        is_gamma_separating(&g, &gamma, &x),
                        brute_force_separating(&g, &gamma, &x),
                        "e={e} f={f} mask={mask:b}"
                    );
                }
            }
        }
    }

    #[test]
    fn coset_size_matches_rank() {
        let g = build_cube(1).unwrap();
        let gamma = Chain::edges(&g, &[0]);
        let members = coset_members(&g, &gamma);
        let (_, d2) = boundary_matrices(&g);
        assert_eq!(members.len(), 1 << d2.rank());
        // Every member is homologous to γ.
        for m in members.iter().take(8) {
            let c = Chain {
                grade: 1,
                coeffs: m.clone(),
            };
            assert!(same_class(&g, &gamma, &c).is_some());
        }
    }

    #[test]
    fn monotone_in_x() {
        let g = build_tetrahedron();
        let gamma = Chain::edges(&g, &g.canonical_path(0, 5, Metric::Path).unwrap());
        for mask in 0u64..(1 << 6) {
            let x = BitSet::from_indices(
                6,
                &(0..6).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>(),
            );
            if is_gamma_separating(&g, &gamma, &x) {
                for extra in 0..6 {
                    let mut bigger = x.clone();
                    bigger.insert(extra);
                    assert!(is_gamma_separating(&g, &gamma, &bigger));
                }
            }
        }
    }

    #[test]
    fn reduce_returns_connected_separator() {
        let g = build_tetrahedron();
        let gamma = Chain::edges(&g, &g.canonical_path(0, 5, Metric::Path).unwrap());
        let full = BitSet::full(g.edge_count());
        let reduced = reduce_to_connected_separator(&g, &gamma, &full).unwrap();
        assert!(is_gamma_separating(&g, &gamma, &reduced));
        assert!(copath_components(&g, &reduced).len() <= 1);
        // Non-separating input is rejected.
        let err =
            reduce_to_connected_separator(&g, &gamma, &BitSet::new(6)).unwrap_err();
        assert!(err.to_string().contains("not separating"));
    }
}
