//! Polygonal complexes and closed surface complexes: construction,
//! validation, metrics, boundaries, and local subcomplexes.
//!
//! A polygonal complex is a simple graph together with a set of faces, each
//! face a closed simple edge cycle, where two distinct faces meet in nothing,
//! one vertex, or one edge. A closed surface complex (CSC) additionally has a
//! single cyclic edge/face fan around every vertex, which makes it a discrete
//! closed surface: every edge then lies in exactly two faces.

mod boundary;
mod build;
mod io;
mod metric;
mod subcomplex;
mod validate;

pub use boundary::copath_components;
pub use build::{build_cube, build_tetrahedron, build_torus};
pub use io::{load_complex, save_complex};
pub use metric::Metric;
pub use subcomplex::{subcomplex_k, EdgeRule, Subcomplex};
pub use validate::{validate_csc, CscCertificate, VertexFan};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Set of edge indices of a fixed complex.
pub type EdgeSet = BitSet;

/// One face: a closed simple path stored as its cyclic edge sequence, with
/// the matching cyclic vertex order and a bitmask for set algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Edge indices in cyclic order.
    pub edges: Vec<usize>,
    /// Vertex cycle; `vertices[i]` is shared by `edges[i-1]` and `edges[i]`.
    pub vertices: Vec<usize>,
    /// Bitmask over the complex's edges.
    pub edge_set: BitSet,
}

/// A two-dimensional polygonal complex with incidence caches.
///
/// Immutable after construction; all queries are pure.
#[derive(Clone, Debug)]
pub struct PolygonalComplex {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<Face>,
    vertex_edges: Vec<Vec<usize>>,
    edge_faces: Vec<Vec<usize>>,
}

impl PartialEq for PolygonalComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges == other.edges
            && self
                .faces
                .iter()
                .zip(&other.faces)
                .all(|(a, b)| a.edges == b.edges)
            && self.faces.len() == other.faces.len()
    }
}

impl PolygonalComplex {
    /// Builds a complex from primary data, checking the polygonal axioms.
    ///
    /// Faces are given as cyclic edge-index sequences. Rejected inputs:
    /// self-edges, duplicate edges, dangling indices, faces that are not
    /// closed simple paths (digons included), and face pairs meeting in more
    /// than one vertex or more than one edge.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        face_edges: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::parse(format!("edge {i}"), "self-edge"));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::parse(format!("edge {i}"), "dangling index"));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::parse(format!("edge {i}"), "duplicate edge"));
            }
        }

        let mut faces = Vec::with_capacity(face_edges.len());
        for (fi, cycle) in face_edges.iter().enumerate() {
            faces.push(Self::check_face(fi, cycle, &edges)?);
        }

        // Any two distinct faces intersect in nothing, one vertex, or one edge.
        for a in 0..faces.len() {
            for b in a + 1..faces.len() {
                let shared_edges = faces[a].edge_set.intersection_size(&faces[b].edge_set);
                let va: std::collections::HashSet<_> = faces[a].vertices.iter().collect();
                let shared_vertices = faces[b]
                    .vertices
                    .iter()
                    .filter(|v| va.contains(v))
                    .count();
                let ok = match shared_edges {
                    0 => shared_vertices <= 1,
                    1 => shared_vertices == 2,
                    _ => false,
                };
                if !ok {
                    return Err(Error::structure(format!(
                        "faces {a} and {b} intersect in {shared_edges} edges / {shared_vertices} vertices"
                    )));
                }
            }
        }

        let mut vertex_edges = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            vertex_edges[u].push(i);
            vertex_edges[v].push(i);
        }
        let mut edge_faces = vec![Vec::new(); edges.len()];
        for (fi, f) in faces.iter().enumerate() {
            for &e in &f.edges {
                edge_faces[e].push(fi);
            }
        }

        Ok(PolygonalComplex {
            vertex_count,
            edges,
            faces,
            vertex_edges,
            edge_faces,
        })
    }

    fn check_face(fi: usize, cycle: &[usize], edges: &[(usize, usize)]) -> Result<Face> {
        let locus = format!("face {fi}");
        if cycle.len() < 3 {
            return Err(Error::parse(locus, "face has fewer than 3 edges"));
        }
        let mut uniq = std::collections::HashSet::new();
        for &e in cycle {
            if e >= edges.len() {
                return Err(Error::parse(locus, "dangling index"));
            }
            if !uniq.insert(e) {
                return Err(Error::parse(locus, "repeated edge in face"));
            }
        }
        // Walk the cycle, recovering the vertex order; consecutive edges must
        // share exactly one vertex and the walk must close up simply.
        let k = cycle.len();
        let (a0, b0) = edges[cycle[0]];
        let (a1, b1) = edges[cycle[1]];
        // The vertex between edges 0 and 1 fixes the orientation of the walk.
        let shared01 = if a0 == a1 || a0 == b1 {
            a0
        } else if b0 == a1 || b0 == b1 {
            b0
        } else {
            return Err(Error::parse(locus, "non-cyclic face: edges 0,1 disjoint"));
        };
        let start = if shared01 == a0 { b0 } else { a0 };
        let mut vertices = vec![start];
        let mut current = shared01;
        for i in 1..k {
            vertices.push(current);
            let (u, v) = edges[cycle[i]];
            if u == current {
                current = v;
            } else if v == current {
                current = u;
            } else {
                return Err(Error::parse(
                    locus,
                    format!("non-cyclic face: edge position {i} does not continue the walk"),
                ));
            }
        }
        if current != start {
            return Err(Error::parse(locus, "face walk does not close"));
        }
        let mut vset = std::collections::HashSet::new();
        for &v in &vertices {
            if !vset.insert(v) {
                return Err(Error::parse(locus, "face path is not simple"));
            }
        }
        let edge_set = BitSet::from_indices(edges.len(), cycle);
        Ok(Face {
            edges: cycle.to_vec(),
            vertices,
            edge_set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Edges incident to `v`, ascending.
    pub fn vertex_edges(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    /// Faces containing edge `e`, ascending.
    pub fn edge_faces(&self, e: usize) -> &[usize] {
        &self.edge_faces[e]
    }

    /// Euler characteristic `|V| - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Maximum vertex degree and maximum face size `(deg, d̂eg)`.
    pub fn degrees(&self) -> (usize, usize) {
        let deg = self
            .vertex_edges
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0);
        let co = self.faces.iter().map(|f| f.edges.len()).max().unwrap_or(0);
        (deg, co)
    }

    /// True when the underlying graph is connected (isolated-vertex-free and
    /// one component). The empty complex counts as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.vertex_edges[v] {
                let (a, b) = self.edges[e];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Rebuilds incidence caches from the primary lists and compares.
    pub fn caches_consistent(&self) -> bool {
        let mut ve = vec![Vec::new(); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            ve[u].push(i);
            ve[v].push(i);
        }
        let mut ef = vec![Vec::new(); self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            for &e in &f.edges {
                ef[e].push(fi);
            }
        }
        ve == self.vertex_edges && ef == self.edge_faces
    }

    /// Vertex support `V_X` of an edge set, as a vertex bitmask.
    pub fn vertex_support(&self, s: &EdgeSet) -> BitSet {
        let mut out = BitSet::new(self.vertex_count);
        for e in s.iter_ones() {
            let (u, v) = self.edges[e];
            out.insert(u);
            out.insert(v);
        }
        out
    }

    /// Face support `F_X`: faces containing at least one edge of `s`.
    pub fn face_support(&self, s: &EdgeSet) -> BitSet {
        let mut out = BitSet::new(self.faces.len());
        for e in s.iter_ones() {
            for &f in &self.edge_faces[e] {
                out.insert(f);
            }
        }
        out
    }

    /// Edge support `E_Y` of a vertex set: edges with an endpoint in `y`.
    pub fn edges_touching_vertices(&self, y: &BitSet) -> EdgeSet {
        let mut out = BitSet::new(self.edges.len());
        for v in y.iter_ones() {
            for &e in &self.vertex_edges[v] {
                out.insert(e);
            }
        }
        out
    }

    /// Edge support `E_{Y'}` of a face set: edges lying in a face of `y`.
    pub fn edges_of_faces(&self, y: &BitSet) -> EdgeSet {
        let mut out = BitSet::new(self.edges.len());
        for f in y.iter_ones() {
            out.or_with(&self.faces[f].edge_set);
        }
        out
    }

    /// GF(2) boundary chain of a face set: edges in an odd number of faces
    /// of `fs`.
    pub fn face_set_boundary_chain(&self, fs: &BitSet) -> EdgeSet {
        let mut out = BitSet::new(self.edges.len());
        for f in fs.iter_ones() {
            out.xor_with(&self.faces[f].edge_set);
        }
        out
    }
}
