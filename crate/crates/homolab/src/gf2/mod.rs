//! Bit-parallel GF(2) linear algebra and the homological machinery built on
//! it: boundary matrices, homology dimensions, homology-class membership,
//! γ-separation, r-simple connectedness, and the detour search.

mod homology;
mod matrix;
mod rsimple;
mod separation;

pub use homology::{boundary_matrices, homology, Chain, Grade, HomologyReport};
pub use matrix::{Gf2Matrix, Solver};
pub use rsimple::{
    chain_endpoints, connected_boundary_check, detour_path, r_simply_connected,
    subcomplex_with_homology, DetourOutcome, RSimpleReport,
};
pub use separation::{
    apply_d2, brute_force_separating, class_member_avoiding, class_member_within, coset_members,
    independent_subset, is_gamma_separating, reduce_to_connected_separator, same_class,
};
