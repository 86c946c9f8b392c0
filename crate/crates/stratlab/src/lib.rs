//! Cell models of truncated manifold operads and bimodule cobordisms.
//!
//! Every space is a regular CW complex, stored only through its face poset
//! (a regular CW complex is determined by its face poset). Each cell of a
//! space is either interior or lies in the stratum of a decomposable tree.
//! In that case it is tagged with the tree and the tuple of interior cells
//! of the vertex spaces whose product it is. These tags determine every
//! attachment map: a tuple of arbitrary cells is grafted into a finer tree
//! and looked up. Boundary colimits, validation, surgery and the built-in
//! models all work on this representation.

mod builtin;
mod colimit;
mod ledger;
mod model;
mod recognize;
mod space;
mod surgery;
mod validate;
mod worked;

pub use builtin::{
    fm1_model, interval_nullbordism_model, null_surgery_model, trivial_bimodule_model, trivial_operad_space,
};
pub use colimit::{boundary_colimit, stratified_euler, ComplexJson, EquivariantComplex, Flavor};
pub use ledger::{dimension_ledger, stratum_codim, LedgerKind};
pub use model::{CellModel, ModelJson, ModelKind, SpaceJson};
pub use recognize::{cone_fill, free_action_check, recognize, FixedCell, FreeActionReport, Recognition, StructureKind};
pub use space::{symmetric_group, Space, Stratum};
pub use surgery::{extend_left, extend_right, Side};
pub use validate::{validate_model, with_dropped_identification, ValidationReport, Violation, ViolationKind};
pub use worked::{
    chi48, fm1_pentagons, hexagons, interval_with_w3, null_chain, Chi48Report, Contribution, HexagonReport,
    NullChainReport, PentagonReport,
};

use thiserror::Error;
use treekit::Color;

#[derive(Debug, Error)]
pub enum StratError {
    #[error("truncation {0} is outside the supported range 2..=5")]
    TruncationOutOfRange(usize),
    #[error("the model has no {color} space in arity {arity}")]
    MissingArity { color: Color, arity: usize },
    #[error("the {flavor} flavor does not apply to {kind} models")]
    WrongKind { flavor: Flavor, kind: ModelKind },
    #[error("the model fails validation: {0}")]
    Invalid(Box<ValidationReport>),
    #[error("surgery produced a model that fails validation: {0}")]
    OutputInvalid(Box<ValidationReport>),
    #[error("inconsistent cell data: {0}")]
    Inconsistent(String),
    #[error("not a disjoint union of circles: {0}")]
    NotCircles(String),
    #[error("space {0} is malformed: {1}")]
    BadSpace(String, String),
    #[error(transparent)]
    Tree(#[from] treekit::TreeError),
    #[error(transparent)]
    Poset(#[from] posetkit::PosetError),
}
