//! Uncolored labeled rooted trees in canonical form.

use std::collections::BTreeSet;

use crate::{Label, TreeError};

/// A rooted tree whose vertices carry pairwise disjoint label sets.
///
/// Invariants (checked on construction):
/// * the label sets are pairwise disjoint and nonempty in union;
/// * every vertex `v` satisfies `|children(v)| + |labels(v)| ≥ 2`;
/// * the parent map is acyclic with a single root.
///
/// Vertices are stored in canonical order, sorted by (smallest label in the
/// subtree, subtree size). Two trees are equal iff they have the same shape
/// and the same label placement, so derived `Eq`/`Hash`/`Ord` are semantic.
/// Only internal structure is stored: the labels on a vertex stand for the
/// leaf edges attached to it, which are never materialized.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    parent: Vec<Option<usize>>,
    labels: Vec<Vec<Label>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

/// One element of `c̄ld(v)`: either a label sitting on `v` or a child of `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Label(Label),
    Child(usize),
}

impl LabeledTree {
    /// Validates and canonicalizes a tree given by a parent array and label sets.
    pub fn new(parent: Vec<Option<usize>>, labels: Vec<Vec<Label>>) -> Result<Self, TreeError> {
        Self::new_with_map(parent, labels).map(|(t, _)| t)
    }

    /// Like [`LabeledTree::new`], also returning the map from input vertex
    /// indices to canonical indices.
    pub fn new_with_map(parent: Vec<Option<usize>>, labels: Vec<Vec<Label>>) -> Result<(Self, Vec<usize>), TreeError> {
        let n = parent.len();
        if n == 0 || labels.len() != n {
            return Err(TreeError::Malformed("vertex and label arrays differ or are empty".into()));
        }
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(TreeError::Malformed(format!("expected one root, found {}", roots.len())));
        }
        if parent.iter().flatten().any(|&p| p >= n) {
            return Err(TreeError::Malformed("parent index out of range".into()));
        }
        // Acyclicity: every vertex reaches the root within n steps.
        for v in 0..n {
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = parent[cur] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(TreeError::Malformed("parent map has a cycle".into()));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for ls in &labels {
            for &l in ls {
                if !seen.insert(l) {
                    return Err(TreeError::Malformed(format!("label {l} occurs twice")));
                }
            }
        }
        let mut child_count = vec![0usize; n];
        for p in parent.iter().flatten() {
            child_count[*p] += 1;
        }
        for v in 0..n {
            if child_count[v] + labels[v].len() < 2 {
                return Err(TreeError::Unstable { vertex: v });
            }
        }

        // Canonical order by (min label in subtree, subtree size).
        let mut min_label = vec![Label::MAX; n];
        let mut size = vec![1usize; n];
        let order = postorder(&parent);
        for &v in &order {
            let own = labels[v].iter().copied().min().unwrap_or(Label::MAX);
            min_label[v] = min_label[v].min(own);
            if let Some(p) = parent[v] {
                min_label[p] = min_label[p].min(min_label[v]);
                size[p] += size[v];
            }
        }
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by_key(|&v| (min_label[v], size[v]));
        let mut map = vec![0; n];
        for (new, &old) in sorted.iter().enumerate() {
            map[old] = new;
        }
        let mut new_parent = vec![None; n];
        let mut new_labels = vec![Vec::new(); n];
        for old in 0..n {
            new_parent[map[old]] = parent[old].map(|p| map[p]);
            let mut ls = labels[old].clone();
            ls.sort_unstable();
            new_labels[map[old]] = ls;
        }
        Ok((Self::from_canonical(new_parent, new_labels), map))
    }

    fn from_canonical(parent: Vec<Option<usize>>, labels: Vec<Vec<Label>>) -> Self {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        let mut root = 0;
        for v in 0..n {
            match parent[v] {
                Some(p) => children[p].push(v),
                None => root = v,
            }
        }
        LabeledTree { parent, labels, children, root }
    }

    /// The corolla: a single vertex carrying all labels of `s` (`|s| ≥ 2`).
    pub fn corolla(s: &[Label]) -> Result<Self, TreeError> {
        if s.len() < 2 {
            return Err(TreeError::TooFewLabels(s.len()));
        }
        LabeledTree::new(vec![None], vec![s.to_vec()])
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn labels(&self, v: usize) -> &[Label] {
        &self.labels[v]
    }

    /// All labels of the tree, sorted.
    pub fn label_set(&self) -> Vec<Label> {
        let mut all: Vec<Label> = self.labels.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Edges as `(child, parent)` pairs, in canonical child order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count()).filter_map(|v| self.parent[v].map(|p| (v, p))).collect()
    }

    /// `true` iff `a` is a (non-strict) ancestor of `b`.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut cur = Some(b);
        while let Some(v) = cur {
            if v == a {
                return true;
            }
            cur = self.parent[v];
        }
        false
    }

    /// Vertices of the subtree rooted at `v` (including `v`).
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&self.children[out[i]]);
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Labels occurring in the subtree rooted at `v`, sorted.
    pub fn subtree_labels(&self, v: usize) -> Vec<Label> {
        let mut ls: Vec<Label> = self.subtree(v).into_iter().flat_map(|w| self.labels[w].iter().copied()).collect();
        ls.sort_unstable();
        ls
    }

    /// Smallest label in the subtree rooted at `v`.
    pub fn min_label(&self, v: usize) -> Label {
        self.subtree_labels(v)[0]
    }

    /// `c̄ld(v)`: labels of `v` and children of `v`, ordered by smallest label
    /// (a child is represented by the smallest label of its subtree). This is
    /// the canonical identification of `c̄ld(v)` with `{0, …, arity − 1}`.
    pub fn slots(&self, v: usize) -> Vec<Slot> {
        let mut keyed: Vec<(Label, Slot)> = self.labels[v]
            .iter()
            .map(|&l| (l, Slot::Label(l)))
            .chain(self.children[v].iter().map(|&c| (self.min_label(c), Slot::Child(c))))
            .collect();
        keyed.sort_by_key(|&(k, _)| k);
        keyed.into_iter().map(|(_, s)| s).collect()
    }

    /// `|c̄ld(v)|`.
    pub fn arity(&self, v: usize) -> usize {
        self.children[v].len() + self.labels[v].len()
    }

    /// Vertices ordered so that every vertex precedes its parent.
    pub fn postorder(&self) -> Vec<usize> {
        postorder(&self.parent)
    }

    /// Applies a relabeling, returning the new tree and the vertex map.
    pub fn relabel(&self, f: &dyn Fn(Label) -> Label) -> Result<(Self, Vec<usize>), TreeError> {
        let labels = self.labels.iter().map(|ls| ls.iter().map(|&l| f(l)).collect()).collect();
        LabeledTree::new_with_map(self.parent.clone(), labels)
    }

    /// Lowest common ancestor of a nonempty vertex set.
    pub fn lca(&self, vertices: &[usize]) -> usize {
        let mut acc = vertices[0];
        for &v in &vertices[1..] {
            while !self.is_ancestor(acc, v) {
                acc = self.parent[acc].expect("root is an ancestor of everything");
            }
        }
        acc
    }

    /// The vertex carrying label `l`, if any.
    pub fn holder(&self, l: Label) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.labels[v].contains(&l))
    }
}

fn postorder(parent: &[Option<usize>]) -> Vec<usize> {
    let n = parent.len();
    let mut depth = vec![0usize; n];
    for (v, d) in depth.iter_mut().enumerate() {
        let mut cur = v;
        while let Some(p) = parent[cur] {
            *d += 1;
            cur = p;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
    order
}

/// Builds the quotient of `tree` by a partition into connected blocks
/// (`block_of[v]` is the block of vertex `v`, blocks numbered `0..k`).
/// Returns the quotient tree and the map from block number to its vertex.
pub(crate) fn quotient(tree: &LabeledTree, block_of: &[usize]) -> Result<(LabeledTree, Vec<usize>), TreeError> {
    let k = block_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut parent = vec![None; k];
    let mut labels = vec![Vec::new(); k];
    for v in 0..tree.vertex_count() {
        let b = block_of[v];
        labels[b].extend_from_slice(tree.labels(v));
        if let Some(p) = tree.parent(v) {
            if block_of[p] != b {
                parent[b] = Some(block_of[p]);
            }
        }
    }
    LabeledTree::new_with_map(parent, labels)
}
