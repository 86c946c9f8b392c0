//! Factorization of RBW contractions into elementary contractions.

use crate::color::{Color, ColoredTree, Scheme};
use crate::contraction::{contract, contraction_between, Contraction, ContractionSystem};
use crate::ContractionError;

/// The six elementary contraction types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elementary {
    /// (1) recolor one `R` vertex to `W`.
    RedToWhite,
    /// (2) contract an `R–R` edge to an `R` vertex.
    RedEdge,
    /// (3) contract an `R` child into its `W` parent.
    RedIntoWhite,
    /// (4) recolor one `B` vertex to `W`.
    BlueToWhite,
    /// (5) contract a `B–B` edge to a `B` vertex.
    BlueEdge,
    /// (6) contract a `B` vertex together with all its `W` children to `W`.
    BlueWithWhiteChildren,
}

impl Elementary {
    /// The number used for the type in the elementary-contraction list.
    pub fn number(self) -> u8 {
        match self {
            Elementary::RedToWhite => 1,
            Elementary::RedEdge => 2,
            Elementary::RedIntoWhite => 3,
            Elementary::BlueToWhite => 4,
            Elementary::BlueEdge => 5,
            Elementary::BlueWithWhiteChildren => 6,
        }
    }
}

/// The elementary type of a contraction, if it is elementary: exactly one
/// block differs from the identity, and that block has one of the six shapes.
pub fn classify_elementary(c: &Contraction) -> Option<Elementary> {
    let src = c.source();
    let tgt = c.target();
    let mut nontrivial =
        c.preimages().into_iter().enumerate().filter(|(w, pre)| pre.len() > 1 || src.color(pre[0]) != tgt.color(*w));
    let (w, block) = nontrivial.next()?;
    if nontrivial.next().is_some() {
        return None;
    }
    let to = tgt.color(w);
    let colors: Vec<Color> = block.iter().map(|&v| src.color(v)).collect();
    let tree = src.tree();
    match (block.len(), to) {
        (1, Color::W) if colors[0] == Color::R => Some(Elementary::RedToWhite),
        (1, Color::W) if colors[0] == Color::B => Some(Elementary::BlueToWhite),
        (2, Color::R) => Some(Elementary::RedEdge),
        (2, Color::B) => Some(Elementary::BlueEdge),
        (2, Color::W)
            if {
                let child = if tree.parent(block[0]) == Some(block[1]) { block[0] } else { block[1] };
                let parent = if child == block[0] { block[1] } else { block[0] };
                src.color(child) == Color::R && src.color(parent) == Color::W
            } =>
        {
            Some(Elementary::RedIntoWhite)
        }
        (_, Color::W) => {
            let top = *block.iter().find(|&&v| tree.parent(v).is_none_or(|p| !block.contains(&p)))?;
            let whites: Vec<usize> =
                tree.children(top).iter().copied().filter(|&ch| src.color(ch) == Color::W).collect();
            let rest: Vec<usize> = block.iter().copied().filter(|&v| v != top).collect();
            (src.color(top) == Color::B && !whites.is_empty() && rest == whites)
                .then_some(Elementary::BlueWithWhiteChildren)
        }
        _ => None,
    }
}

/// Applies one step: contracts `block` of `cur` to color `to`, leaving every
/// other vertex alone.
fn step(cur: &ColoredTree, block: Vec<usize>, to: Color) -> Result<Contraction, ContractionError> {
    let mut blocks: Vec<(Vec<usize>, Color)> =
        (0..cur.vertex_count()).filter(|v| !block.contains(v)).map(|v| (vec![v], cur.color(v))).collect();
    blocks.push((block, to));
    contract(cur, &ContractionSystem::new(blocks)).map(|(_, c)| c)
}

/// The next elementary step towards collapsing `block` (a connected vertex set
/// of `cur`) to a single vertex of color `to`.
fn next_step(cur: &ColoredTree, block: &[usize], to: Color) -> (Vec<usize>, Color) {
    let tree = cur.tree();
    if block.len() == 1 {
        return (block.to_vec(), to);
    }
    if to != Color::W {
        // All-red or all-blue block: contract one edge.
        let child = *block.iter().find(|&&v| tree.parent(v).is_some_and(|p| block.contains(&p))).unwrap();
        return (vec![child, tree.parent(child).unwrap()], to);
    }
    let is_block_leaf = |v: usize| tree.children(v).iter().all(|c| !block.contains(c));
    if let Some(&w) = block.iter().find(|&&v| is_block_leaf(v) && cur.color(v) != Color::W) {
        let p = tree.parent(w).expect("a block leaf of a multi-vertex block has a parent in the block");
        return match (cur.color(w), cur.color(p)) {
            (Color::R, Color::R) => (vec![w, p], Color::R),
            (Color::R, Color::W) => (vec![w, p], Color::W),
            (Color::R, _) => (vec![w], Color::W),
            _ => (vec![w, p], Color::B),
        };
    }
    // Every block leaf is white: collapse a lowest blue vertex with its white children.
    let b = *block
        .iter()
        .find(|&&v| {
            cur.color(v) == Color::B
                && tree.subtree(v).iter().all(|&d| d == v || !block.contains(&d) || cur.color(d) != Color::B)
        })
        .expect("a multi-vertex block collapsing to white has a blue vertex");
    let mut group = vec![b];
    group.extend(tree.children(b).iter().copied().filter(|c| block.contains(c)));
    (group, Color::W)
}

/// Factors an RBW contraction into elementary contractions.
///
/// Target blocks are processed in vertex order; inside a block collapsing to
/// `W`, non-white block leaves are removed first (smallest canonical index),
/// then lowest blue vertices are merged with their white children. The result
/// composes to `c` and has length `codim(c)`.
pub fn elementary_decompose(c: &Contraction) -> Result<Vec<Contraction>, ContractionError> {
    if c.source().scheme() != Scheme::Rbw {
        return Err(ContractionError::SchemeMismatch);
    }
    let target = c.target().clone();
    let mut cur = c.source().clone();
    let mut steps = Vec::new();
    loop {
        let rest = contraction_between(&cur, &target).ok_or(ContractionError::StructureMismatch)?;
        let pending = rest
            .preimages()
            .into_iter()
            .enumerate()
            .find(|(w, pre)| pre.len() > 1 || cur.color(pre[0]) != target.color(*w));
        let Some((w, block)) = pending else { break };
        let (group, to) = next_step(&cur, &block, target.color(w));
        let e = step(&cur, group, to)?;
        cur = e.target().clone();
        steps.push(e);
    }
    Ok(steps)
}
