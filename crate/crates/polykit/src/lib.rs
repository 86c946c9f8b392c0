//! Exact rational halfspace systems and their face lattices.
//!
//! Polyhedra are given by inequalities `a·x ≤ b` (plus optional equalities)
//! over exact rationals. Feasibility, including strict inequalities, is
//! decided by Fourier–Motzkin elimination with strictness tracking, and every
//! face carries a relative-interior witness point. Height polytopes of RBW and
//! five-colored trees are built here; their face lattices are the geometric
//! side of the link computations in `linkcheck`.

mod faces;
mod fm;
mod height;
mod system;

pub use faces::{face_lattice, Face, FaceLattice};
pub use fm::{feasible, solve, Constraint, Relation};
pub use height::{
    bounded_slice, height_polytope_five, height_polytope_five_blocks, height_polytope_rbw, height_polytope_rbw_full,
    height_variables, slice_signs,
};
pub use system::{parse_rational, HalfspaceSystem, Inequality};

pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficient vector has length {found}, ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("system is not a cone (inequality {0} has a nonzero bound)")]
    NotACone(usize),
    #[error("tree uses the {found} scheme, expected {expected}")]
    WrongScheme { expected: treekit::Scheme, found: treekit::Scheme },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error("index {0} out of range")]
    OutOfRange(usize),
}
