//! Named fixtures shared by the CLI, tests, and verification suites.

use crate::complex::{build_cube, build_tetrahedron, build_torus, PolygonalComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    Tetrahedron,
    Cube(usize),
    Torus(usize),
}

impl Fixture {
    pub fn build(self) -> Result<PolygonalComplex> {
        match self {
            Fixture::Tetrahedron => Ok(build_tetrahedron()),
            Fixture::Cube(n) => build_cube(n),
            Fixture::Torus(n) => build_torus(n),
        }
    }

    pub fn name(self) -> String {
        match self {
            Fixture::Tetrahedron => "tetrahedron".into(),
            Fixture::Cube(n) => format!("cube-{n}"),
            Fixture::Torus(n) => format!("torus-{n}"),
        }
    }

    /// Parses a `--fixture` name with its optional `--n` parameter.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Self> {
        match name {
            "tetrahedron" | "tet" => Ok(Fixture::Tetrahedron),
            "cube" => Ok(Fixture::Cube(n.ok_or_else(|| {
                Error::parse("fixture", "cube needs --n")
            })?)),
            "torus" => Ok(Fixture::Torus(n.ok_or_else(|| {
                Error::parse("fixture", "torus needs --n")
            })?)),
            other => Err(Error::parse(
                "fixture",
                format!("unknown fixture {other:?} (tetrahedron|cube|torus)"),
            )),
        }
    }

    /// The fixtures every full verification run covers.
    pub fn standard_set() -> Vec<Fixture> {
        let mut v = vec![Fixture::Tetrahedron];
        v.extend((1..=5).map(Fixture::Cube));
        v.extend((3..=6).map(Fixture::Torus));
        v
    }
}
