//! Simplicial chain complexes and homology over the two-element field.
//!
//! The crate provides the certificates used throughout the workspace to test
//! "this complex is a sphere / a ball" claims: a complex is accepted as a
//! homology `k`-sphere when it has dimension `k` and its reduced GF(2) homology
//! is a single class in degree `k`, and as a homology ball when it is nonempty
//! with vanishing reduced homology. These are homological certificates, not
//! homeomorphism recognition.

mod chain;
mod complex;

pub use chain::{gf2_rank, ChainComplex, ReducedBetti};
pub use complex::SimplicialComplex;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary of boundary is nonzero on simplex {simplex} of degree {degree}")]
    BoundaryNotSquareZero { degree: usize, simplex: usize },
}

/// Unreduced GF(2) Betti numbers of a complex.
pub fn betti(cx: &SimplicialComplex) -> Vec<usize> {
    chain_complex(cx).betti()
}

/// Reduced GF(2) Betti numbers of a complex (degree −1 included).
pub fn reduced_betti(cx: &SimplicialComplex) -> ReducedBetti {
    chain_complex(cx).reduced_betti()
}

/// Euler characteristic computed from the Betti numbers; equal to the
/// simplex-count formula (asserted in debug builds).
pub fn euler_characteristic(cx: &SimplicialComplex) -> i64 {
    let cc = chain_complex(cx);
    let from_betti = chain::alternating_sum(&cc.betti());
    debug_assert_eq!(from_betti, cc.euler_characteristic());
    from_betti
}

/// `true` iff `cx` has dimension `k` and the reduced GF(2) homology of the
/// `k`-sphere. `k = −1` accepts exactly the empty complex.
pub fn is_homology_sphere(cx: &SimplicialComplex, k: i64) -> bool {
    if cx.dim() != k {
        return false;
    }
    reduced_betti(cx).nonzero() == vec![(k, 1)]
}

/// `true` iff `cx` is nonempty with vanishing reduced GF(2) homology.
pub fn is_homology_ball(cx: &SimplicialComplex) -> bool {
    !cx.is_empty() && reduced_betti(cx).is_zero()
}

/// `true` iff `cx` is a homology ball of dimension exactly `k`.
pub fn is_homology_ball_of_dim(cx: &SimplicialComplex, k: i64) -> bool {
    cx.dim() == k && is_homology_ball(cx)
}

fn chain_complex(cx: &SimplicialComplex) -> ChainComplex {
    // Complexes built from facets always satisfy ∂∘∂ = 0; a failure here is a bug.
    ChainComplex::from_complex(cx).expect("simplicial boundary squares to zero")
}
