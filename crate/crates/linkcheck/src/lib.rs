//! Links of tree contractions and their certificates.
//!
//! For a contraction `c : T → T′` the link `𝒫_c` is the poset of nontrivial
//! contractions through which `c` factors. The verifiers here certify that
//! links are face posets of regular CW balls and spheres, by the combination
//! that is decidable at desk scale: the CW-poset recursion (every lower
//! interval is a GF(2) homology sphere of the right dimension), homology and
//! Euler characteristic of the whole, and — where available — an explicit
//! anti-isomorphism with the face lattice of a height polytope.
//!
//! Sweeps run in parallel over tree corpora and return every failing
//! certificate; all certificates serialize to JSON.

mod ball;
mod five;
mod link;
mod rwlocal;
mod sweep;
mod system;

pub use ball::{height_contraction, verify_link_ball, verify_link_ball_among, LinkBallCertificate};
pub use five::{verify_five_link, BlockCertificate, FiveLinkCertificate};
pub use link::{
    collapsed, link_poset, link_poset_among, nontrivial_contractions, tree_link, upper_link, LinkPoset, UpperLink,
};
pub use rwlocal::{remove_leaf, verify_rwlocal_link, RwLocalCertificate, StepKind, SuspensionStep};
pub use sweep::{
    corpus, sample_corpus, sweep_elementary, sweep_five_links, sweep_join_decomposition, sweep_link_balls,
    sweep_rwlocal_links, sweep_sys_iso, ElementaryReport, SweepSummary,
};
pub use system::{
    all_systems, block_subtree, describe_system, sys_leq, system_poset, verify_join_decomposition, verify_sys_iso,
    ContractionSystemPoset, JoinReport, SysIsoReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinkError {
    #[error("the contraction is trivial; its link is undefined")]
    Trivial,
    #[error("the tree has an empty link")]
    EmptyLink,
    #[error("tree uses the {found:?} scheme, expected {expected:?}")]
    WrongScheme { expected: treekit::Scheme, found: treekit::Scheme },
    #[error("sweeps need at least 2 labels, got {0}")]
    TooFewLabels(usize),
    #[error(transparent)]
    Tree(#[from] treekit::TreeError),
    #[error(transparent)]
    Contraction(#[from] treekit::ContractionError),
    #[error(transparent)]
    Poly(#[from] polykit::PolyError),
}
