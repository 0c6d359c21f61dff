//! Edge boundary and coboundary of edge subsets, and copath components.

use super::metric::edge_set_components;
use super::{EdgeSet, Metric, PolygonalComplex};
use crate::bits::BitSet;
use crate::error::{Error, Result};

impl PolygonalComplex {
    /// Edge boundary ∂(E'): edges whose two faces are touched by `s` on
    /// exactly one side. Requires a CSC so every edge has exactly two faces.
    pub fn edge_boundary(&self, s: &EdgeSet) -> Result<EdgeSet> {
        let touched = self.face_support(s);
        let mut out = BitSet::new(self.edge_count());
        for e in 0..self.edge_count() {
            let fs = self.edge_faces(e);
            if fs.len() != 2 {
                return Err(Error::precondition(format!(
                    "edge {e} lies in {} faces; boundary needs a CSC",
                    fs.len()
                )));
            }
            if touched.get(fs[0]) != touched.get(fs[1]) {
                out.insert(e);
            }
        }
        Ok(out)
    }

    /// Edge coboundary ∂̂(E'): edges with exactly one endpoint covered by `s`.
    pub fn edge_coboundary(&self, s: &EdgeSet) -> EdgeSet {
        let covered = self.vertex_support(s);
        let mut out = BitSet::new(self.edge_count());
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            if covered.get(u) != covered.get(v) {
                out.insert(e);
            }
        }
        out
    }

    /// GF(2) coboundary chain of a vertex set: edges with exactly one
    /// endpoint in `vs` (the support of ∂⁰ applied to the vertex indicator).
    pub fn vertex_set_coboundary_chain(&self, vs: &BitSet) -> EdgeSet {
        let mut out = BitSet::new(self.edge_count());
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            if vs.get(u) != vs.get(v) {
                out.insert(e);
            }
        }
        out
    }
}

/// Partition of `s` into its copath-connected components (two edges adjacent
/// when they lie in a common face), each sorted, listed by smallest member.
pub fn copath_components(g: &PolygonalComplex, s: &EdgeSet) -> Vec<Vec<usize>> {
    edge_set_components(&g.edge_adjacency(Metric::Copath), s)
}

#[cfg(test)]
mod tests {
    use super::super::build::{build_cube, build_tetrahedron};
    use super::*;

    #[test]
    fn boundary_of_everything_and_nothing() {
        let g = build_cube(1).unwrap();
        let all = BitSet::full(g.edge_count());
        let none = BitSet::new(g.edge_count());
        assert!(g.edge_coboundary(&all).is_empty());
        assert!(g.edge_boundary(&all).unwrap().is_empty());
        assert!(g.edge_coboundary(&none).is_empty());
        assert!(g.edge_boundary(&none).unwrap().is_empty());
    }

    #[test]
    fn coboundary_of_one_square_face() {
        // For a face of the unit cube, the covered vertices are the face's
        // four corners; each corner has one incident edge leaving the face,
        // so the coboundary is those 4 edges (by direct application of the
        // definition: exactly one endpoint covered).
        let g = build_cube(1).unwrap();
        let s = g.face(0).edge_set.clone();
        let cob = g.edge_coboundary(&s);
        // Independent count: edges with exactly one endpoint among the
        // face's vertices.
        let vs: Vec<usize> = g.face(0).vertices.clone();
        let expected: Vec<usize> = (0..g.edge_count())
            .filter(|&e| {
                let (u, v) = g.edge(e);
                vs.contains(&u) != vs.contains(&v)
            })
            .collect();
        assert_eq!(cob.to_vec(), expected);
        assert_eq!(cob.count(), 4);
        assert!(!cob.intersects(&s));
    }

    #[test]
    fn remark_identities_random_subsets() {
        // ∂(E') = supp(∂₂(F_{E'})) and ∂̂(E') = supp(∂⁰(V_{E'})).
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for g in [build_tetrahedron(), build_cube(2).unwrap()] {
            for _ in 0..200 {
                let mut s = BitSet::new(g.edge_count());
                for e in 0..g.edge_count() {
                    if rng.gen_bool(0.3) {
                        s.insert(e);
                    }
                }
                let via_faces = g.face_set_boundary_chain(&g.face_support(&s));
                assert_eq!(g.edge_boundary(&s).unwrap(), via_faces);
                let via_vertices = g.vertex_set_coboundary_chain(&g.vertex_support(&s));
                assert_eq!(g.edge_coboundary(&s), via_vertices);
            }
        }
    }

    #[test]
    fn copath_components_cases() {
        let g = build_cube(1).unwrap();
        let none = BitSet::new(g.edge_count());
        assert!(copath_components(&g, &none).is_empty());
        // One face's edge set is a single component.
        let s = g.face(2).edge_set.clone();
        assert_eq!(copath_components(&g, &s).len(), 1);
        // Two edges whose face pairs are disjoint: two components.
        let a = g.face(0).edges[0];
        let b = g.face(1).edges[2];
        assert!(!g.edge_faces(a).iter().any(|f| g.edge_faces(b).contains(f)));
        let s = BitSet::from_indices(g.edge_count(), &[a, b]);
        assert_eq!(copath_components(&g, &s).len(), 2);
    }
}
