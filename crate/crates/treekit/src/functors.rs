//! Functors from five-colored and red/white-local trees to RBW trees.

use crate::color::{Color, ColoredTree, Scheme};
use crate::tree::quotient;
use crate::TreeError;

/// Partitions the vertices into maximal connected components of vertices
/// satisfying `inside`, plus singletons for the remaining vertices; every
/// component becomes one vertex of the quotient.
fn collapse_components(tree: &ColoredTree, inside: &dyn Fn(usize) -> bool) -> Vec<usize> {
    let t = tree.tree();
    let n = t.vertex_count();
    let mut block = vec![usize::MAX; n];
    let mut next = 0;
    // Parents before children: reverse postorder.
    for v in t.postorder().into_iter().rev() {
        let joins_parent = inside(v) && t.parent(v).is_some_and(inside);
        block[v] = if joins_parent {
            block[t.parent(v).unwrap()]
        } else {
            next += 1;
            next - 1
        };
    }
    block
}

fn collapse(
    tree: &ColoredTree,
    inside: &dyn Fn(usize) -> bool,
    color: &dyn Fn(usize) -> Color,
) -> Result<ColoredTree, TreeError> {
    let block = collapse_components(tree, inside);
    let (q, map) = quotient(tree.tree(), &block)?;
    let mut colors = vec![Color::W; q.vertex_count()];
    for v in 0..tree.vertex_count() {
        colors[map[block[v]]] = if inside(v) { Color::W } else { color(v) };
    }
    ColoredTree::new(q, colors, Scheme::Rbw)
}

/// Contracts every maximal subtree of `W`/`O`/`V` vertices of a five-colored
/// tree to a white vertex; `R` and `B` vertices are kept.
pub fn five_to_rbw(t: &ColoredTree) -> Result<ColoredTree, TreeError> {
    if t.scheme() != Scheme::FiveColor {
        return Err(TreeError::WrongScheme { expected: Scheme::FiveColor, found: t.scheme() });
    }
    collapse(t, &|v| matches!(t.color(v), Color::W | Color::O | Color::V), &|v| t.color(v))
}

/// Recolors red vertices blue, keeps the largest blue subtree containing the
/// root, and contracts each remaining component to a white vertex.
pub fn rw_to_rbw(t: &ColoredTree) -> Result<ColoredTree, TreeError> {
    if t.scheme() != Scheme::RwLocal {
        return Err(TreeError::WrongScheme { expected: Scheme::RwLocal, found: t.scheme() });
    }
    let tree = t.tree();
    let in_blue_core = |v: usize| {
        let mut cur = Some(v);
        while let Some(u) = cur {
            if t.color(u) != Color::R {
                return false;
            }
            cur = tree.parent(u);
        }
        true
    };
    collapse(t, &|v| !in_blue_core(v), &|_| Color::B)
}
