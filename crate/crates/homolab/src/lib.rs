//! Closed surface complexes, their GF(2) homology, quantum circuit light
//! cones, and stabilizer-code verification at desk scale.
//!
//! The crate is organized around five subsystems:
//!
//! - [`complex`]: polygonal complexes and closed surface complexes (CSCs),
//!   builders for the standard fixtures, edge metrics and balls, boundary
//!   and coboundary sets, and the local subcomplex K(e,r);
//! - [`gf2`]: bit-packed GF(2) linear algebra, boundary matrices, homology
//!   dimensions, homology-class membership and γ-separation (decided by
//!   exact linear feasibility), r-simple connectedness, and detour searches;
//! - [`circuit`]: layered Clifford circuits, upper/lower light cones,
//!   geometric locality, and the effective supports A and B;
//! - [`stabilizer`]: Pauli algebra, surface-code stabilizer groups, encoder
//!   synthesis, a sign-exact tableau simulator, and the executable lemma
//!   verifications built from them;
//! - [`dense`]: a small dense state-vector engine for the constructions that
//!   fall outside the stabilizer formalism (history states, reduced density
//!   matrices, energy identities).

pub mod bits;
pub mod circuit;
pub mod complex;
pub mod dense;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod stabilizer;
pub mod suites;

pub use error::{Error, Result};
