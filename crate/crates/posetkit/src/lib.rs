//! Finite posets, read as face posets of regular CW complexes.
//!
//! A regular CW complex is determined by its face poset, so products, joins,
//! cones, suspensions and colimits of such complexes are computed as poset
//! operations here. "This poset realizes a sphere/ball" is certified by a
//! GF(2)-homology check on order complexes (see [`is_cw_poset`]); this is a
//! homological certificate, not homeomorphism recognition.

mod colimit;
mod construct;
mod cw;
mod iso;
mod json;
mod poset;

pub use colimit::{poset_colimit, Colimit, Diagram, DiagramMap};
pub use construct::{
    adjoin_bottom, antichain, chain, cone, join, join_all, join_with_coordinates, opposite, point, product,
    product_with_coordinates, suspension,
};
pub use cw::{is_cw_poset, order_complex, CwFailure, CwReport};
pub use gf2homology::SimplicialComplex;
pub use iso::{is_order_embedding, poset_iso};
pub use json::PosetJson;
pub use poset::{FinPoset, Interval};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relations contain a cycle through element {0}")]
    Cycle(usize),
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("elements {0} and {1} are not comparable as required")]
    Incomparable(usize, usize),
    #[error("diagram map {map} is not an injective order embedding")]
    NotAnEmbedding { map: usize },
    #[error("diagram map {map} has the wrong length or endpoints")]
    BadDiagram { map: usize },
}
