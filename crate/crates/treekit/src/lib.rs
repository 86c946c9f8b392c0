//! Labeled rooted trees, coloring schemes, contractions and their enumeration.
//!
//! A tree on a finite label set `S` is a rooted tree whose vertices carry
//! pairwise disjoint label sets covering `S`, with every vertex having at least
//! two "inputs" (children plus labels). Trees are stored in a canonical vertex
//! order so that equality, hashing and ordering are semantic.
//!
//! Colored trees come in three schemes:
//! * [`Scheme::Rbw`] — red/blue/white trees, leaf-to-root words `R* W? B*`;
//! * [`Scheme::FiveColor`] — words `R* V? O* W? B*`;
//! * [`Scheme::RwLocal`] — red/white trees without a legality constraint.
//!
//! A [`Contraction`] collapses disjoint connected subtrees to single vertices,
//! subject to the scheme's color rules. At most one contraction exists between
//! two trees ([`contraction_between`]); every RBW contraction factors into
//! elementary contractions ([`elementary_decompose`]).

mod color;
mod contraction;
mod elementary;
mod enumerate;
mod functors;
mod json;
mod perm;
mod tree;

pub use color::{Color, ColoredTree, Scheme};
pub use contraction::{
    block_may_collapse, contract, contraction_between, contractions_from, Contraction, ContractionSystem,
};
pub use elementary::{classify_elementary, elementary_decompose, Elementary};
pub use enumerate::{enumerate_colored, enumerate_trees, label_range};
pub use functors::{five_to_rbw, rw_to_rbw};
pub use json::{colored_to_dot, tree_to_dot, TreeJson};
pub use perm::{act, Permutation};
pub use tree::{LabeledTree, Slot};

use thiserror::Error;

/// Leaf labels. Label sets are arbitrary finite sets of these.
pub type Label = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("malformed tree: {0}")]
    Malformed(String),
    #[error("vertex {vertex} has fewer than two children and labels")]
    Unstable { vertex: usize },
    #[error("a label set needs at least two labels, got {0}")]
    TooFewLabels(usize),
    #[error("color {color} is not in the palette of the {scheme} scheme")]
    ColorOutsidePalette { color: Color, scheme: Scheme },
    #[error("coloring is not legal for its scheme")]
    IllegalColoring,
    #[error("operation requires the {expected} scheme, tree uses {found}")]
    WrongScheme { expected: Scheme, found: Scheme },
    #[error("not a permutation of the tree's labels")]
    BadPermutation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContractionError {
    #[error("blocks do not partition the vertex set")]
    NotAPartition,
    #[error("block {block} is not a connected subtree")]
    DisconnectedBlock { block: usize },
    #[error("block {block} may not collapse to its assigned color")]
    ColorViolation { block: usize },
    #[error("the contracted tree is not legally colored")]
    IllegalResult,
    #[error("source and target use different coloring schemes")]
    SchemeMismatch,
    #[error("vertex map does not respect labels or tree structure")]
    StructureMismatch,
    #[error("contractions are not composable")]
    NotComposable,
    #[error(transparent)]
    Tree(#[from] TreeError),
}
