//! Permutations of label sets and their action on trees.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::color::ColoredTree;
use crate::{Label, TreeError};

/// A bijection of a finite label set onto itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: BTreeMap<Label, Label>,
}

impl Permutation {
    pub fn identity(labels: &[Label]) -> Self {
        Permutation { images: labels.iter().map(|&l| (l, l)).collect() }
    }

    /// The permutation sending `domain[i]` to `images[i]`.
    pub fn from_images(domain: &[Label], images: &[Label]) -> Result<Self, TreeError> {
        let map: BTreeMap<Label, Label> = domain.iter().copied().zip(images.iter().copied()).collect();
        let mut a: Vec<Label> = map.keys().copied().collect();
        let mut b: Vec<Label> = map.values().copied().collect();
        a.sort_unstable();
        b.sort_unstable();
        if domain.len() != images.len() || map.len() != domain.len() || a != b {
            return Err(TreeError::BadPermutation);
        }
        Ok(Permutation { images: map })
    }

    /// The transposition of `a` and `b` on `labels`.
    pub fn transposition(labels: &[Label], a: Label, b: Label) -> Self {
        let mut p = Permutation::identity(labels);
        p.images.insert(a, b);
        p.images.insert(b, a);
        p
    }

    /// All permutations of `labels`, in lexicographic order of image words.
    pub fn all(labels: &[Label]) -> Vec<Permutation> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        sorted
            .iter()
            .copied()
            .permutations(sorted.len())
            .map(|imgs| Permutation { images: sorted.iter().copied().zip(imgs).collect() })
            .collect()
    }

    pub fn domain(&self) -> Vec<Label> {
        self.images.keys().copied().collect()
    }

    pub fn apply(&self, l: Label) -> Label {
        self.images.get(&l).copied().unwrap_or(l)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut images: BTreeMap<Label, Label> = other.images.iter().map(|(&k, &v)| (k, self.apply(v))).collect();
        for (&k, &v) in &self.images {
            images.entry(k).or_insert(v);
        }
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { images: self.images.iter().map(|(&k, &v)| (v, k)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|(k, v)| k == v)
    }

    /// Sign: `true` for even permutations.
    pub fn is_even(&self) -> bool {
        let mut seen = BTreeMap::new();
        let mut transpositions = 0;
        for &start in self.images.keys() {
            if seen.contains_key(&start) {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while seen.insert(cur, ()).is_none() {
                cur = self.apply(cur);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Index of this permutation in [`Permutation::all`] of its domain.
    pub fn rank(&self) -> usize {
        let images: Vec<Label> = self.images.values().copied().collect();
        let mut rank = 0;
        for i in 0..images.len() {
            let smaller_later = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
            rank = rank * (images.len() - i) + smaller_later;
        }
        rank
    }

    /// Image word `[p(d₀), p(d₁), …]` over the sorted domain.
    pub fn images(&self) -> Vec<Label> {
        self.images.values().copied().collect()
    }
}

/// Relabels a colored tree by a permutation of its labels.
pub fn act(perm: &Permutation, tree: &ColoredTree) -> Result<ColoredTree, TreeError> {
    if perm.domain() != tree.tree().label_set() {
        return Err(TreeError::BadPermutation);
    }
    Ok(tree.relabel(&|l| perm.apply(l))?.0)
}
