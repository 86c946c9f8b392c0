//! Posets of intermediate contractions.

use posetkit::FinPoset;
use treekit::{contraction_between, contractions_from, Color, ColoredTree, Contraction};

use crate::LinkError;

/// The poset `𝒫_c` of nontrivial contractions `T → T″` through which a
/// nontrivial contraction `c : T → T′` factors, ordered by factorization.
/// Element `i` of `poset` is `elements[i]`; `c` itself is the maximum `top`.
#[derive(Clone, Debug)]
pub struct LinkPoset {
    pub base: Contraction,
    pub elements: Vec<Contraction>,
    pub poset: FinPoset,
    pub top: usize,
}

impl LinkPoset {
    /// `∂𝒫_c`: the link poset with its maximum removed, together with the
    /// indices of its elements in `poset`.
    pub fn boundary(&self) -> (FinPoset, Vec<usize>) {
        let rest: Vec<usize> = (0..self.elements.len()).filter(|&i| i != self.top).collect();
        (self.poset.induced(&rest), rest)
    }

    /// Index of the element with the given target tree.
    pub fn position(&self, target: &ColoredTree) -> Option<usize> {
        self.elements.iter().position(|e| e.target() == target)
    }
}

/// The poset of all nontrivial contractions out of `tree`, ordered by
/// factorization, as `(elements, poset)`. This is the link of `tree` in the
/// poset of trees of its scheme.
#[derive(Clone, Debug)]
pub struct UpperLink {
    pub tree: ColoredTree,
    pub elements: Vec<Contraction>,
    pub poset: FinPoset,
}

/// Orders contractions out of a common source by factorization of targets.
fn factorization_poset(elements: &[Contraction]) -> FinPoset {
    let n = elements.len();
    let mut rel = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && contraction_between(elements[a].target(), elements[b].target()).is_some() {
                rel.push((a, b));
            }
        }
    }
    let names = elements.iter().map(|e| e.target().compact()).collect();
    FinPoset::from_relations(n, &rel).expect("contractions between distinct trees are antisymmetric").with_names(names)
}

/// All nontrivial contractions out of `tree`, in the deterministic order of
/// [`contractions_from`].
pub fn nontrivial_contractions(tree: &ColoredTree) -> Vec<Contraction> {
    contractions_from(tree).into_iter().filter(|c| !c.is_trivial()).collect()
}

/// `𝒫_c` computed from a precomputed list of the nontrivial contractions out
/// of `c.source()`.
pub fn link_poset_among(c: &Contraction, candidates: &[Contraction]) -> Result<LinkPoset, LinkError> {
    if c.is_trivial() {
        return Err(LinkError::Trivial);
    }
    let elements: Vec<Contraction> =
        candidates.iter().filter(|d| contraction_between(d.target(), c.target()).is_some()).cloned().collect();
    let top = elements.iter().position(|d| d.target() == c.target()).ok_or(LinkError::Trivial)?;
    let poset = factorization_poset(&elements);
    Ok(LinkPoset { base: c.clone(), elements, poset, top })
}

/// `𝒫_c` for a nontrivial contraction `c`.
pub fn link_poset(c: &Contraction) -> Result<LinkPoset, LinkError> {
    link_poset_among(c, &nontrivial_contractions(c.source()))
}

/// The corolla of `color` on the label set of `tree`, in the same scheme.
pub fn collapsed(tree: &ColoredTree, color: Color) -> Result<ColoredTree, LinkError> {
    Ok(ColoredTree::corolla(&tree.tree().label_set(), color, tree.scheme())?)
}

/// `𝒫_T = 𝒫_{T → •_W}` for an RBW tree other than `•_W`.
pub fn tree_link(tree: &ColoredTree) -> Result<LinkPoset, LinkError> {
    let white = collapsed(tree, Color::W)?;
    let c = contraction_between(tree, &white).ok_or(LinkError::Trivial)?;
    link_poset(&c)
}

/// The poset of all nontrivial contractions out of `tree` (any scheme).
pub fn upper_link(tree: &ColoredTree) -> UpperLink {
    let elements = nontrivial_contractions(tree);
    let poset = factorization_poset(&elements);
    UpperLink { tree: tree.clone(), elements, poset }
}
