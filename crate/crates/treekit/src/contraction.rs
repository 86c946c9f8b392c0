//! Contractions between colored trees and contraction systems.

use std::collections::BTreeSet;

use crate::color::{Color, ColoredTree, Scheme};
use crate::tree::quotient;
use crate::{ContractionError, TreeError};

/// A validated contraction `source → target`.
///
/// `vertex_map[v]` is the target vertex that source vertex `v` collapses to.
/// Preimages are nonempty connected subtrees, target labels are the unions of
/// the labels in their preimages, and the scheme's color rules hold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Contraction {
    source: ColoredTree,
    target: ColoredTree,
    vertex_map: Vec<usize>,
}

/// A contraction system: a partition of a tree into connected blocks, each with
/// the color it collapses to. Blocks are sorted by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContractionSystem {
    pub blocks: Vec<(Vec<usize>, Color)>,
}

impl ContractionSystem {
    pub fn new(mut blocks: Vec<(Vec<usize>, Color)>) -> Self {
        for (b, _) in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        ContractionSystem { blocks }
    }

    /// The identity system of a tree: singletons keeping their colors.
    pub fn identity(tree: &ColoredTree) -> Self {
        ContractionSystem::new((0..tree.vertex_count()).map(|v| (vec![v], tree.color(v))).collect())
    }

    /// `true` iff every block is a singleton keeping its color in `tree`.
    pub fn is_identity_on(&self, tree: &ColoredTree) -> bool {
        self.blocks.iter().all(|(b, c)| b.len() == 1 && tree.color(b[0]) == *c)
    }

    /// Block index of every vertex.
    pub fn block_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, (b, _)) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }
}

/// Whether a block whose source colors are `block_colors` may collapse to
/// `target` under `scheme`. `block_is_rbw_legal` reports whether the block,
/// read as a colored tree on its own, is a legal RBW tree (only consulted for
/// red/white-local trees).
pub fn block_may_collapse(scheme: Scheme, block_colors: &[Color], block_is_rbw_legal: bool, target: Color) -> bool {
    let all = |allowed: &[Color]| block_colors.iter().all(|c| allowed.contains(c));
    match scheme {
        Scheme::Rbw => match target {
            Color::R => all(&[Color::R]),
            Color::B => all(&[Color::B]),
            Color::W => all(&[Color::R, Color::B, Color::W]),
            _ => false,
        },
        Scheme::FiveColor => match target {
            Color::B => all(&[Color::B]),
            Color::W => all(&[Color::B, Color::W, Color::O]),
            Color::O => all(&[Color::O]),
            Color::V => all(&[Color::O, Color::V, Color::R]),
            Color::R => all(&[Color::R]),
        },
        Scheme::RwLocal => match target {
            Color::R => all(&[Color::R]),
            Color::W => block_is_rbw_legal && all(&[Color::R, Color::W]),
            _ => false,
        },
    }
}

/// Whether the vertices `block` of `tree`, with their colors, form a legal
/// RBW tree (checked on the parent/child pairs inside the block).
fn block_is_rbw_legal(tree: &ColoredTree, block: &[usize]) -> bool {
    block.iter().all(|&v| match tree.tree().parent(v) {
        Some(p) if block.contains(&p) => Scheme::Rbw.pair_is_legal(tree.color(v), tree.color(p)),
        _ => Scheme::Rbw.palette().contains(&tree.color(v)),
    })
}

fn is_connected_block(tree: &ColoredTree, block: &[usize]) -> bool {
    // A vertex set is a connected subtree iff exactly one member has its
    // parent outside the set.
    block.iter().filter(|&&v| tree.tree().parent(v).is_none_or(|p| !block.contains(&p))).count() == 1
}

impl Contraction {
    /// Validates a contraction given by an explicit vertex map.
    pub fn new(source: ColoredTree, target: ColoredTree, vertex_map: Vec<usize>) -> Result<Self, ContractionError> {
        let s = source.tree();
        let t = target.tree();
        if source.scheme() != target.scheme() {
            return Err(ContractionError::SchemeMismatch);
        }
        if vertex_map.len() != s.vertex_count() || vertex_map.iter().any(|&w| w >= t.vertex_count()) {
            return Err(ContractionError::NotAPartition);
        }
        let mut preimages = vec![Vec::new(); t.vertex_count()];
        for (v, &w) in vertex_map.iter().enumerate() {
            preimages[w].push(v);
        }
        for (w, pre) in preimages.iter().enumerate() {
            if pre.is_empty() {
                return Err(ContractionError::NotAPartition);
            }
            if !is_connected_block(&source, pre) {
                return Err(ContractionError::DisconnectedBlock { block: w });
            }
            let mut labels: Vec<_> = pre.iter().flat_map(|&v| s.labels(v).iter().copied()).collect();
            labels.sort_unstable();
            if labels != t.labels(w) {
                return Err(ContractionError::StructureMismatch);
            }
            let colors: Vec<Color> = pre.iter().map(|&v| source.color(v)).collect();
            let legal = block_is_rbw_legal(&source, pre);
            if !block_may_collapse(source.scheme(), &colors, legal, target.color(w)) {
                return Err(ContractionError::ColorViolation { block: w });
            }
        }
        for v in 0..s.vertex_count() {
            let expected = s.parent(v).map(|p| vertex_map[p]);
            match expected {
                Some(pw) if pw == vertex_map[v] => {}
                Some(pw) => {
                    if t.parent(vertex_map[v]) != Some(pw) {
                        return Err(ContractionError::StructureMismatch);
                    }
                }
                None => {
                    if vertex_map[v] != t.root() {
                        return Err(ContractionError::StructureMismatch);
                    }
                }
            }
        }
        Ok(Contraction { source, target, vertex_map })
    }

    /// The identity contraction of a tree.
    pub fn identity(tree: &ColoredTree) -> Self {
        Contraction { source: tree.clone(), target: tree.clone(), vertex_map: (0..tree.vertex_count()).collect() }
    }

    pub fn source(&self) -> &ColoredTree {
        &self.source
    }

    pub fn target(&self) -> &ColoredTree {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// `true` iff source and target coincide.
    pub fn is_trivial(&self) -> bool {
        self.source == self.target
    }

    /// `codim(source) − codim(target)` (RBW only).
    pub fn codim(&self) -> Result<usize, TreeError> {
        Ok(self.source.codim()? - self.target.codim()?)
    }

    /// Preimage of every target vertex, in target vertex order.
    pub fn preimages(&self) -> Vec<Vec<usize>> {
        let mut pre = vec![Vec::new(); self.target.vertex_count()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            pre[w].push(v);
        }
        pre
    }

    /// The contraction system `{(c⁻¹(v), color(v))}` of this contraction.
    pub fn system(&self) -> ContractionSystem {
        ContractionSystem::new(
            self.preimages().into_iter().enumerate().map(|(w, pre)| (pre, self.target.color(w))).collect(),
        )
    }

    /// Composite `self` followed by `next` (requires `self.target == next.source`).
    pub fn then(&self, next: &Contraction) -> Result<Contraction, ContractionError> {
        if self.target != next.source {
            return Err(ContractionError::NotComposable);
        }
        let map = self.vertex_map.iter().map(|&w| next.vertex_map[w]).collect();
        Contraction::new(self.source.clone(), next.target.clone(), map)
    }
}

/// Collapses `tree` along a contraction system.
///
/// Fails with a distinct error for a non-partition, a disconnected block, a
/// block that may not collapse to its assigned color, and an illegal result.
pub fn contract(
    tree: &ColoredTree,
    system: &ContractionSystem,
) -> Result<(ColoredTree, Contraction), ContractionError> {
    let n = tree.vertex_count();
    let mut covered = BTreeSet::new();
    for (b, _) in &system.blocks {
        if b.is_empty() {
            return Err(ContractionError::NotAPartition);
        }
        for &v in b {
            if v >= n || !covered.insert(v) {
                return Err(ContractionError::NotAPartition);
            }
        }
    }
    if covered.len() != n {
        return Err(ContractionError::NotAPartition);
    }
    for (i, (b, c)) in system.blocks.iter().enumerate() {
        if !is_connected_block(tree, b) {
            return Err(ContractionError::DisconnectedBlock { block: i });
        }
        let colors: Vec<Color> = b.iter().map(|&v| tree.color(v)).collect();
        if !block_may_collapse(tree.scheme(), &colors, block_is_rbw_legal(tree, b), *c) {
            return Err(ContractionError::ColorViolation { block: i });
        }
    }
    let block_of = system.block_of(n);
    let (qtree, map) = quotient(tree.tree(), &block_of).map_err(ContractionError::Tree)?;
    let mut colors = vec![Color::W; system.blocks.len()];
    for (i, (_, c)) in system.blocks.iter().enumerate() {
        colors[map[i]] = *c;
    }
    let target = ColoredTree::new(qtree, colors, tree.scheme()).map_err(|_| ContractionError::IllegalResult)?;
    let vertex_map = (0..n).map(|v| map[block_of[v]]).collect();
    let c = Contraction::new(tree.clone(), target.clone(), vertex_map)?;
    Ok((target, c))
}

/// The unique contraction `a → b`, if one exists.
///
/// A source vertex must go to the lowest common ancestor (in `b`) of the
/// target vertices holding the labels of its subtree; this candidate map is
/// then validated.
pub fn contraction_between(a: &ColoredTree, b: &ColoredTree) -> Option<Contraction> {
    if a.scheme() != b.scheme() || a.tree().label_set() != b.tree().label_set() {
        return None;
    }
    let map: Vec<usize> = (0..a.vertex_count())
        .map(|v| {
            let holders: Vec<usize> =
                a.tree().subtree_labels(v).iter().map(|&l| b.tree().holder(l).expect("label sets agree")).collect();
            b.tree().lca(&holders)
        })
        .collect();
    Contraction::new(a.clone(), b.clone(), map).ok()
}

/// All contractions out of `tree` (including the identity), one per
/// contraction system, in a deterministic order.
pub fn contractions_from(tree: &ColoredTree) -> Vec<Contraction> {
    let edges = tree.tree().edges();
    let n = tree.vertex_count();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        // Union-find over contracted edges.
        let mut rep: Vec<usize> = (0..n).collect();
        fn find(rep: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while rep[r] != r {
                r = rep[r];
            }
            rep[v] = r;
            r
        }
        for (i, &(c, p)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let (rc, rp) = (find(&mut rep, c), find(&mut rep, p));
                rep[rc] = rp;
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut rep, v);
            if index[r] == usize::MAX {
                index[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[r]].push(v);
        }
        let options: Vec<Vec<Color>> = blocks
            .iter()
            .map(|b| {
                let colors: Vec<Color> = b.iter().map(|&v| tree.color(v)).collect();
                let legal = block_is_rbw_legal(tree, b);
                tree.scheme()
                    .palette()
                    .iter()
                    .copied()
                    .filter(|&c| block_may_collapse(tree.scheme(), &colors, legal, c))
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; blocks.len()];
        if options.iter().any(Vec::is_empty) {
            continue;
        }
        loop {
            let system = ContractionSystem::new(
                blocks.iter().zip(&choice).zip(&options).map(|((b, &i), o)| (b.clone(), o[i])).collect(),
            );
            if let Ok((_, c)) = contract(tree, &system) {
                out.push(c);
            }
            // Odometer over color choices.
            let mut k = 0;
            loop {
                if k == choice.len() {
                    break;
                }
                choice[k] += 1;
                if choice[k] < options[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    out
}
