//! The complex file format: a JSON object
//! `{"vertices": N, "edges": [[u,v],...], "faces": [[e,...],...]}` with
//! 0-based indices and faces in cyclic edge order. The writer emits keys in
//! that order, UTF-8, newline-terminated.

use super::PolygonalComplex;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

impl PolygonalComplex {
    pub fn to_json(&self) -> String {
        let file = ComplexFile {
            vertices: self.vertex_count(),
            edges: self.edges().to_vec(),
            faces: self.faces().iter().map(|f| f.edges.clone()).collect(),
        };
        let mut s = serde_json::to_string(&file).expect("complex serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text)
            .map_err(|e| Error::parse("complex file", e.to_string()))?;
        PolygonalComplex::new(file.vertices, file.edges, file.faces)
    }
}

pub fn save_complex(g: &PolygonalComplex, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, g.to_json())?;
    Ok(())
}

pub fn load_complex(path: impl AsRef<Path>) -> Result<PolygonalComplex> {
    let text = std::fs::read_to_string(&path)?;
    PolygonalComplex::from_json(&text)
}
