//! The local subcomplex K(e,r): faces whose edges all lie within copath
//! distance r of e, augmented with faces whose boundary is already covered,
//! together with index maps back into the parent complex.

use super::{Metric, PolygonalComplex};
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Which edges K(e,r) keeps.
///
/// The proof of the detour theorem walks through edges that are merely
/// incident to vertices of the kept faces, so that is the default; the
/// tighter face-edges-only variant is kept for comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgeRule {
    /// E' = E_{V_{F'}}: every edge incident to a vertex of a kept face.
    #[default]
    IncidentToFaceVertices,
    /// E' = E_{F'}: only edges lying in a kept face.
    FaceEdgesOnly,
}

/// A subcomplex plus the embedding back into its parent: `edge_map[i]` is the
/// parent index of sub-edge `i`, and likewise for vertices and faces.
#[derive(Clone, Debug)]
pub struct Subcomplex {
    pub complex: PolygonalComplex,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub face_map: Vec<usize>,
}

impl Subcomplex {
    /// Parent-indexed edge set of the subcomplex.
    pub fn parent_edges(&self, parent: &PolygonalComplex) -> BitSet {
        BitSet::from_indices(parent.edge_count(), &self.edge_map)
    }

    /// Parent-indexed face set of the subcomplex.
    pub fn parent_faces(&self, parent: &PolygonalComplex) -> BitSet {
        BitSet::from_indices(parent.face_count(), &self.face_map)
    }
}

/// Builds K(e,r) under the given edge rule.
///
/// Faces kept initially are those whose every edge x has d̂(x,e) ≤ r; a face
/// outside that set is added when its boundary chain is contained in the
/// GF(2) boundary support of the kept set. Vertices are all endpoints of the
/// kept edges, so the result is a well-formed polygonal complex.
pub fn subcomplex_k(
    g: &PolygonalComplex,
    e: usize,
    r: usize,
    rule: EdgeRule,
) -> Result<Subcomplex> {
    if e >= g.edge_count() {
        return Err(Error::precondition(format!("edge {e} out of range")));
    }
    let dist = g.edge_distances_from(e, Metric::Copath);
    let within = |x: usize| matches!(dist[x], Some(d) if d <= r);

    let mut kept_faces = BitSet::new(g.face_count());
    for (f, face) in g.faces().iter().enumerate() {
        if face.edges.iter().all(|&x| within(x)) {
            kept_faces.insert(f);
        }
    }
    // Augmentation: the GF(2) boundary support of the kept set, i.e. edges in
    // an odd number of kept faces.
    let boundary_support = g.face_set_boundary_chain(&kept_faces);
    for (f, face) in g.faces().iter().enumerate() {
        if !kept_faces.get(f) && face.edge_set.is_subset_of(&boundary_support) {
            kept_faces.insert(f);
        }
    }

    let face_edges = g.edges_of_faces(&kept_faces);
    let kept_edges = match rule {
        EdgeRule::FaceEdgesOnly => face_edges,
        EdgeRule::IncidentToFaceVertices => {
            g.edges_touching_vertices(&g.vertex_support(&face_edges))
        }
    };

    let edge_map: Vec<usize> = kept_edges.iter_ones().collect();
    let vertex_set = g.vertex_support(&kept_edges);
    let vertex_map: Vec<usize> = vertex_set.iter_ones().collect();
    let face_map: Vec<usize> = kept_faces.iter_ones().collect();

    let vertex_index: std::collections::HashMap<usize, usize> = vertex_map
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let edge_index: std::collections::HashMap<usize, usize> = edge_map
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();

    let edges: Vec<(usize, usize)> = edge_map
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            (vertex_index[&u], vertex_index[&v])
        })
        .collect();
    let faces: Vec<Vec<usize>> = face_map
        .iter()
        .map(|&f| g.face(f).edges.iter().map(|e| edge_index[e]).collect())
        .collect();

    let complex = PolygonalComplex::new(vertex_map.len(), edges, faces)?;
    Ok(Subcomplex {
        complex,
        vertex_map,
        edge_map,
        face_map,
    })
}
