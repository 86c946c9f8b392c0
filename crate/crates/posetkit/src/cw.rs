//! Order complexes and CW-poset recognition.

use gf2homology::{is_homology_sphere, reduced_betti, SimplicialComplex};

use crate::poset::FinPoset;

/// The order complex: vertices are elements, simplices are chains.
pub fn order_complex(p: &FinPoset) -> SimplicialComplex {
    // Facets are the maximal chains: walk upper covers from minimal to maximal.
    let mut facets = Vec::new();
    let mut stack: Vec<Vec<usize>> = p.minimal_elements().into_iter().map(|m| vec![m]).collect();
    while let Some(chain) = stack.pop() {
        let top = *chain.last().unwrap();
        let ups = p.upper_covers(top);
        if ups.is_empty() {
            facets.push(chain);
        } else {
            for &u in ups {
                let mut next = chain.clone();
                next.push(u);
                stack.push(next);
            }
        }
    }
    SimplicialComplex::new(facets)
}

/// One element whose strict lower interval is not a homology sphere of the
/// right dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwFailure {
    pub element: usize,
    pub dim: usize,
    /// Nonzero reduced Betti numbers `(degree, rank)` of the lower link.
    pub reduced_betti: Vec<(i64, usize)>,
    pub link_dim: i64,
}

/// Outcome of [`is_cw_poset`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwReport {
    pub ok: bool,
    /// Every cover relation raises dimension by one.
    pub graded: bool,
    pub failures: Vec<CwFailure>,
    /// Euler characteristic `Σ (−1)^dim` of the complex.
    pub euler: i64,
}

/// Recognizes face posets of regular CW complexes: for every element `e`, the
/// order complex of `(−, e)` must be a GF(2)-homology sphere of dimension
/// `dim(e) − 1` (the empty complex counts as the (−1)-sphere).
///
/// Homology spheres are accepted in place of genuine spheres; in the low
/// dimensions exercised here (links of dimension ≤ 2) the two agree for the
/// complexes that arise, but the check is a certificate, not a proof.
pub fn is_cw_poset(p: &FinPoset) -> CwReport {
    let mut failures = Vec::new();
    for e in 0..p.len() {
        let below = p.strictly_below(e);
        let link = order_complex(&p.induced(&below));
        let k = p.dim(e) as i64 - 1;
        if !is_homology_sphere(&link, k) {
            failures.push(CwFailure {
                element: e,
                dim: p.dim(e),
                reduced_betti: reduced_betti(&link).nonzero(),
                link_dim: link.dim(),
            });
        }
    }
    let graded = p.is_graded();
    CwReport { ok: failures.is_empty() && graded, graded, failures, euler: p.cell_euler() }
}
