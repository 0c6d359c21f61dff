//! Boundary matrices and GF(2) homology/cohomology dimensions.

use super::matrix::Gf2Matrix;
use crate::bits::BitSet;
use crate::complex::PolygonalComplex;

/// Grade of a chain: 0 for vertices, 1 for edges, 2 for faces.
pub type Grade = usize;

/// A GF(2) chain: a coefficient vector over V, E, or F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub grade: Grade,
    pub coeffs: BitSet,
}

impl Chain {
    pub fn edges(g: &PolygonalComplex, indices: &[usize]) -> Chain {
        Chain {
            grade: 1,
            coeffs: BitSet::from_indices(g.edge_count(), indices),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.to_vec()
    }
}

/// `∂₁` is |V|×|E| (column e = its endpoints), `∂₂` is |E|×|F| (column f =
/// its edge set); `∂₁·∂₂ = 0` always holds for a valid complex.
pub fn boundary_matrices(g: &PolygonalComplex) -> (Gf2Matrix, Gf2Matrix) {
    let mut d1 = Gf2Matrix::zero(g.vertex_count(), g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        d1.set(u, e, true);
        d1.set(v, e, true);
    }
    let mut d2 = Gf2Matrix::zero(g.edge_count(), g.face_count());
    for (f, face) in g.faces().iter().enumerate() {
        for &e in &face.edges {
            d2.set(e, f, true);
        }
    }
    (d1, d2)
}

/// Homology and cohomology dimensions with the ranks they came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomologyReport {
    pub dims: (usize, usize, usize),
    pub cohomology_dims: (usize, usize, usize),
    pub euler: i64,
    pub rank_d1: usize,
    pub rank_d2: usize,
}

impl HomologyReport {
    pub fn h1(&self) -> usize {
        self.dims.1
    }
}

/// Computes H₀, H₁, H₂ from the boundary matrices and H⁰, H¹, H² from their
/// transposes. Panics in debug builds if χ fails to match the alternating sum
/// of the dimensions.
pub fn homology(g: &PolygonalComplex) -> HomologyReport {
    let (d1, d2) = boundary_matrices(g);
    let (nv, ne, nf) = (g.vertex_count(), g.edge_count(), g.face_count());
    let rank_d1 = d1.rank();
    let rank_d2 = d2.rank();
    let dims = (nv - rank_d1, ne - rank_d1 - rank_d2, nf - rank_d2);
    // Coboundary maps are the transposes; their ranks are computed
    // independently rather than assumed equal.
    let rank_cod0 = d1.transpose().rank();
    let rank_cod1 = d2.transpose().rank();
    let cohomology_dims = (
        nv - rank_cod0,
        ne - rank_cod1 - rank_cod0,
        nf - rank_cod1,
    );
    let report = HomologyReport {
        dims,
        cohomology_dims,
        euler: g.euler_characteristic(),
        rank_d1,
        rank_d2,
    };
    debug_assert_eq!(
        report.euler,
        dims.0 as i64 - dims.1 as i64 + dims.2 as i64
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_cube, build_tetrahedron, build_torus};

    #[test]
    fn chain_complex_condition() {
        for g in [
            build_tetrahedron(),
            build_cube(2).unwrap(),
            build_torus(3).unwrap(),
        ] {
            let (d1, d2) = boundary_matrices(&g);
            assert!(d1.product_is_zero(&d2));
            // Transposed (cochain) condition ∂¹∘∂⁰ = 0.
            assert!(d2.transpose().product_is_zero(&d1.transpose()));
        }
    }

    #[test]
    fn cube_ranks() {
        // Kernel of ∂₂ is spanned by the sum of all faces, so rank = |F|-1;
        // kernel of ∂₁ᵗ-side gives rank ∂₁ = |V|-1 for connected complexes.
        let g = build_cube(1).unwrap();
        let (d1, d2) = boundary_matrices(&g);
        assert_eq!(d2.rank(), 5);
        assert_eq!(d1.rank(), 7);
        let rep = homology(&g);
        assert_eq!(rep.dims, (1, 0, 1));
        assert_eq!(rep.cohomology_dims, (1, 0, 1));
        assert_eq!(rep.euler, 2);
    }

    #[test]
    fn torus_ranks() {
        let g = build_torus(3).unwrap();
        let (d1, _) = boundary_matrices(&g);
        assert_eq!(d1.rank(), 8);
        let rep = homology(&g);
        assert_eq!(rep.dims, (1, 2, 1));
        assert_eq!(rep.cohomology_dims, (1, 2, 1));
        assert_eq!(rep.euler, 0);
    }

    #[test]
    fn tetrahedron_homology() {
        let rep = homology(&build_tetrahedron());
        assert_eq!(rep.dims, (1, 0, 1));
        assert_eq!(rep.euler, 2);
    }

    #[test]
    fn cube_h1_vanishes_for_all_sizes() {
        for n in 1..=4 {
            assert_eq!(homology(&build_cube(n).unwrap()).h1(), 0);
        }
    }
}
