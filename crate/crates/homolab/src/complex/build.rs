//! Deterministic constructors for the standard fixtures.

use super::PolygonalComplex;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// The surface of an `n×n×n` cube: six `n×n` quadrilateral grids glued along
/// their boundaries.
///
/// Vertices are the lattice points of `[0,n]³` with at least one coordinate
/// in `{0,n}`, indexed in lexicographic `(x,y,z)` order, so seam vertices and
/// edges are shared between adjacent grids by construction. Edges are sorted
/// by their (ascending) endpoint pairs; faces are the unit squares of the six
/// planes `x=0, x=n, y=0, y=n, z=0, z=n`, row-major within each plane. The
/// resulting indexing is fully deterministic.
pub fn build_cube(n: usize) -> Result<PolygonalComplex> {
    if n == 0 {
        return Err(Error::precondition("cube size must be at least 1"));
    }
    let on_surface =
        |p: (usize, usize, usize)| p.0 == 0 || p.0 == n || p.1 == 0 || p.1 == n || p.2 == 0 || p.2 == n;

    let mut vertices = Vec::new();
    for x in 0..=n {
        for y in 0..=n {
            for z in 0..=n {
                if on_surface((x, y, z)) {
                    vertices.push((x, y, z));
                }
            }
        }
    }
    let vid: HashMap<(usize, usize, usize), usize> =
        vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    // A unit segment lies on the surface when both endpoints share a fixed
    // coordinate in {0,n} on an axis other than the one it varies along.
    let mut edge_pairs = Vec::new();
    let coplanar = |a: (usize, usize, usize), b: (usize, usize, usize)| {
        (a.0 == b.0 && (a.0 == 0 || a.0 == n))
            || (a.1 == b.1 && (a.1 == 0 || a.1 == n))
            || (a.2 == b.2 && (a.2 == 0 || a.2 == n))
    };
    for &p in &vertices {
        for q in [
            (p.0 + 1, p.1, p.2),
            (p.0, p.1 + 1, p.2),
            (p.0, p.1, p.2 + 1),
        ] {
            if q.0 <= n && q.1 <= n && q.2 <= n {
                if let Some(&qi) = vid.get(&q) {
                    if coplanar(p, q) {
                        let pi = vid[&p];
                        edge_pairs.push((pi.min(qi), pi.max(qi)));
                    }
                }
            }
        }
    }
    edge_pairs.sort_unstable();
    edge_pairs.dedup();
    let eid: HashMap<(usize, usize), usize> = edge_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let lookup = |a: (usize, usize, usize), b: (usize, usize, usize)| {
        let (ai, bi) = (vid[&a], vid[&b]);
        eid[&(ai.min(bi), ai.max(bi))]
    };

    // Unit squares per plane, row-major; the corner walk gives the cycle.
    let mut faces = Vec::new();
    let mut plane_faces = |fixed_axis: usize, fixed_val: usize| {
        for i in 0..n {
            for j in 0..n {
                let at = |i: usize, j: usize| match fixed_axis {
                    0 => (fixed_val, i, j),
                    1 => (i, fixed_val, j),
                    _ => (i, j, fixed_val),
                };
                let c = [at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
                faces.push(vec![
                    lookup(c[0], c[1]),
                    lookup(c[1], c[2]),
                    lookup(c[2], c[3]),
                    lookup(c[3], c[0]),
                ]);
            }
        }
    };
    for axis in 0..3 {
        plane_faces(axis, 0);
        plane_faces(axis, n);
    }

    PolygonalComplex::new(vertices.len(), edge_pairs, faces)
}

/// The `n×n` periodic grid (the torus): `n²` vertices, `2n²` edges, `n²`
/// square faces. Requires `n ≥ 3` so no pair of vertices is doubly joined.
pub fn build_torus(n: usize) -> Result<PolygonalComplex> {
    if n < 3 {
        return Err(Error::precondition("torus size must be at least 3"));
    }
    let vid = |i: usize, j: usize| (i % n) * n + (j % n);
    // Edge indexing: horizontal edge (i,j)-(i,j+1) is 2*(i*n+j), vertical
    // edge (i,j)-(i+1,j) is 2*(i*n+j)+1.
    let mut edges = vec![(0, 0); 2 * n * n];
    for i in 0..n {
        for j in 0..n {
            edges[2 * (i * n + j)] = (vid(i, j), vid(i, j + 1));
            edges[2 * (i * n + j) + 1] = (vid(i, j), vid(i + 1, j));
        }
    }
    let h = |i: usize, j: usize| 2 * ((i % n) * n + (j % n));
    let v = |i: usize, j: usize| 2 * ((i % n) * n + (j % n)) + 1;
    let mut faces = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            faces.push(vec![h(i, j), v(i, j + 1), h(i + 1, j), v(i, j)]);
        }
    }
    PolygonalComplex::new(n * n, edges, faces)
}

/// The tetrahedron: 4 vertices, 6 edges, 4 triangular faces.
pub fn build_tetrahedron() -> PolygonalComplex {
    let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let faces = vec![vec![0, 3, 1], vec![0, 4, 2], vec![1, 5, 2], vec![3, 5, 4]];
    PolygonalComplex::new(4, edges, faces).expect("tetrahedron is a valid complex")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_counts() {
        // |V| = 6n²+2, |E| = 12n², |F| = 6n², χ = 2.
        for n in 1..=4 {
            let g = build_cube(n).unwrap();
            assert_eq!(g.vertex_count(), 6 * n * n + 2, "V for n={n}");
            assert_eq!(g.edge_count(), 12 * n * n, "E for n={n}");
            assert_eq!(g.face_count(), 6 * n * n, "F for n={n}");
            assert_eq!(g.euler_characteristic(), 2);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn torus_counts() {
        let g = build_torus(3).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 18);
        assert_eq!(g.face_count(), 9);
        assert_eq!(g.euler_characteristic(), 0);
        assert!(build_torus(2).is_err());
    }

    #[test]
    fn tetrahedron_counts() {
        let g = build_tetrahedron();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.face_count()),
            (4, 6, 4)
        );
        assert_eq!(g.degrees(), (3, 3));
        assert_eq!(g.euler_characteristic(), 2);
    }

    #[test]
    fn cube_degrees() {
        assert_eq!(build_cube(1).unwrap().degrees(), (3, 4));
        assert_eq!(build_cube(2).unwrap().degrees(), (4, 4));
        assert_eq!(build_torus(4).unwrap().degrees(), (4, 4));
    }
}
