//! Closed-surface-complex validation: the per-vertex cyclic fan conditions
//! plus connectivity. Simple connectivity (vanishing H₁) is a homology
//! question and lives with the GF(2) machinery; the CLI combines both.

use super::PolygonalComplex;

/// The cyclic orderings at one vertex: `faces[i]` is the unique face shared
/// by `edges[i-1]` and `edges[i]` (cyclically), so `f_i ∩ f_{i+1} = e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFan {
    pub edges: Vec<usize>,
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CscCertificate {
    pub is_csc: bool,
    /// One fan per vertex when the complex is a CSC, empty otherwise.
    pub fans: Vec<VertexFan>,
    /// First failing vertex and the reason, when not a CSC. Connectivity
    /// failures are reported with the first unreached vertex.
    pub failure: Option<(usize, String)>,
}

impl CscCertificate {
    fn fail(v: usize, reason: impl Into<String>) -> Self {
        CscCertificate {
            is_csc: false,
            fans: Vec::new(),
            failure: Some((v, reason.into())),
        }
    }
}

/// Checks both CSC conditions at every vertex and graph connectivity,
/// returning the per-vertex orderings on success or the first failing vertex.
pub fn validate_csc(g: &PolygonalComplex) -> CscCertificate {
    if !g.is_connected() {
        let witness = first_unreached_vertex(g);
        return CscCertificate::fail(witness, "complex is not connected");
    }
    let mut fans = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        match vertex_fan(g, v) {
            Ok(fan) => fans.push(fan),
            Err(reason) => return CscCertificate::fail(v, reason),
        }
    }
    // Claim FaceIntersect gives this for free once the fans verify; check it
    // anyway so the certificate never overstates.
    for e in 0..g.edge_count() {
        if g.edge_faces(e).len() != 2 {
            return CscCertificate::fail(
                g.edge(e).0,
                format!("edge {e} lies in {} faces", g.edge_faces(e).len()),
            );
        }
    }
    CscCertificate {
        is_csc: true,
        fans,
        failure: None,
    }
}

fn first_unreached_vertex(g: &PolygonalComplex) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &e in g.vertex_edges(v) {
            let (a, b) = g.edge(e);
            let w = if a == v { b } else { a };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().position(|s| !s).unwrap_or(0)
}

fn vertex_fan(g: &PolygonalComplex, v: usize) -> Result<VertexFan, String> {
    let edges_at_v = g.vertex_edges(v).to_vec();
    let k = edges_at_v.len();
    // Faces at v, each with its two edges incident to v.
    let mut face_pairs: Vec<(usize, usize, usize)> = Vec::new();
    for f in 0..g.face_count() {
        let face = g.face(f);
        if let Some(i) = face.vertices.iter().position(|&w| w == v) {
            let n = face.edges.len();
            let before = face.edges[(i + n - 1) % n];
            let after = face.edges[i];
            face_pairs.push((f, before, after));
        }
    }
    if face_pairs.len() != k || k < 2 {
        return Err(format!(
            "|E_v| = {k}, |F_v| = {}; need equal and at least 2",
            face_pairs.len()
        ));
    }
    // Fan multigraph: nodes are the edges at v, one link per face. A CSC
    // vertex yields a single cycle through all of them.
    let pos: std::collections::HashMap<usize, usize> = edges_at_v
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let mut links: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for &(f, a, b) in &face_pairs {
        let (pa, pb) = match (pos.get(&a), pos.get(&b)) {
            (Some(&pa), Some(&pb)) => (pa, pb),
            _ => return Err(format!("face {f} uses an edge not incident to vertex {v}")),
        };
        if pa == pb {
            return Err(format!("face {f} meets vertex {v} on a single edge"));
        }
        links[pa].push((pb, f));
        links[pb].push((pa, f));
    }
    if links.iter().any(|l| l.len() != 2) {
        return Err(format!(
            "edges at vertex {v} are not each shared by exactly 2 local faces"
        ));
    }
    // Walk the cycle from the lowest-index edge toward its smaller neighbor.
    let start = 0usize;
    let mut order_edges = vec![edges_at_v[start]];
    let mut order_faces = Vec::with_capacity(k);
    let (first_next, first_face) = std::cmp::min(links[start][0], links[start][1]);
    let mut prev_face = first_face;
    let mut cur = first_next;
    order_faces.push(first_face);
    while cur != start {
        order_edges.push(edges_at_v[cur]);
        let &(nxt, f) = links[cur]
            .iter()
            .find(|&&(_, f)| f != prev_face)
            .ok_or_else(|| format!("fan at vertex {v} is not a simple cycle"))?;
        order_faces.push(f);
        prev_face = f;
        cur = nxt;
    }
    if order_edges.len() != k {
        return Err(format!(
            "fan at vertex {v} splits into more than one cycle"
        ));
    }
    // order_faces[i] links order_edges[i] and order_edges[i+1]; rotate so
    // faces[i] is the face between edges[i-1] and edges[i], matching
    // f_i ∩ f_{i+1} = e_i.
    order_faces.rotate_right(1);
    Ok(VertexFan {
        edges: order_edges,
        faces: order_faces,
    })
}

#[cfg(test)]
mod tests {
    use super::super::build::{build_cube, build_tetrahedron, build_torus};
    use super::*;
    use crate::complex::PolygonalComplex;

    fn assert_fan_invariant(g: &PolygonalComplex, cert: &CscCertificate) {
        for (v, fan) in cert.fans.iter().enumerate() {
            let k = fan.edges.len();
            assert_eq!(fan.faces.len(), k);
            assert!(k >= 2);
            for i in 0..k {
                let fi = fan.faces[i];
                let fnext = fan.faces[(i + 1) % k];
                // f_i ∩ f_{i+1} = e_i as edge sets.
                let inter = g.face(fi).edge_set.and(&g.face(fnext).edge_set);
                assert_eq!(inter.to_vec(), vec![fan.edges[i]], "vertex {v}, i={i}");
            }
        }
    }

    #[test]
    fn tetrahedron_is_csc() {
        let g = build_tetrahedron();
        let cert = validate_csc(&g);
        assert!(cert.is_csc, "{:?}", cert.failure);
        assert_fan_invariant(&g, &cert);
    }

    #[test]
    fn cube_and_torus_are_csc() {
        for g in [
            build_cube(1).unwrap(),
            build_cube(2).unwrap(),
            build_cube(3).unwrap(),
            build_torus(3).unwrap(),
            build_torus(4).unwrap(),
        ] {
            let cert = validate_csc(&g);
            assert!(cert.is_csc, "{:?}", cert.failure);
            assert_fan_invariant(&g, &cert);
            for e in 0..g.edge_count() {
                assert_eq!(g.edge_faces(e).len(), 2);
            }
        }
    }

    #[test]
    fn open_square_is_not_csc() {
        // A single square face: every vertex sees one face only.
        let g = PolygonalComplex::new(
            4,
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            vec![vec![0, 1, 2, 3]],
        )
        .unwrap();
        let cert = validate_csc(&g);
        assert!(!cert.is_csc);
        let (v, reason) = cert.failure.unwrap();
        assert!(v < 4);
        assert!(reason.contains("|F_v| = 1"), "{reason}");
    }

    #[test]
    fn disconnected_is_not_csc() {
        // Two disjoint triangles (no faces needed to trip connectivity).
        let g = PolygonalComplex::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
            vec![],
        )
        .unwrap();
        let cert = validate_csc(&g);
        assert!(!cert.is_csc);
        assert_eq!(cert.failure.unwrap().0, 3);
    }
}
