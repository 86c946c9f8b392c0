//! Spaces: face posets with a symmetric group action and a stratum tag per cell.

use std::collections::HashMap;

use posetkit::FinPoset;
use serde::{Deserialize, Serialize};
use treekit::{label_range, Color, ColoredTree, Label, LabeledTree, Permutation, Scheme, Slot};

use crate::StratError;

/// `Σ_m` on the labels `1..=m`, in the order of [`Permutation::all`], so that
/// the position of `p` is `p.rank()`.
pub fn symmetric_group(m: usize) -> Vec<Permutation> {
    Permutation::all(&label_range(m))
}

/// Where a cell of a space sits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    /// An interior cell of the space.
    Interior,
    /// A cell of the stratum of a decomposable tree: the product of the
    /// interior cells `cells[v]` of the vertex spaces, indexed by the
    /// vertices of `tree`. Each vertex space has the vertex's color and
    /// arity, with inputs identified with `1..=arity` in slot order.
    Boundary { tree: ColoredTree, cells: Vec<usize> },
}

/// One space `C(m)` of a model: a regular CW complex given by its face
/// poset, the `Σ_m`-action on cells, and the stratum of every cell.
#[derive(Clone, Debug)]
pub struct Space {
    color: Color,
    arity: usize,
    poset: FinPoset,
    action: Vec<Vec<usize>>,
    strata: Vec<Stratum>,
    index: HashMap<(ColoredTree, Vec<usize>), usize>,
}

impl Space {
    /// Assembles a space. `action[p.rank()][c]` is the image of cell `c`
    /// under `p ∈ Σ_m`.
    pub fn new(
        color: Color,
        arity: usize,
        poset: FinPoset,
        action: Vec<Vec<usize>>,
        strata: Vec<Stratum>,
    ) -> Result<Self, StratError> {
        let name = format!("{color}({arity})");
        let order: usize = (1..=arity).product();
        if strata.len() != poset.len() {
            return Err(StratError::BadSpace(name, "one stratum per cell required".into()));
        }
        if action.len() != order || action.iter().any(|row| row.len() != poset.len()) {
            return Err(StratError::BadSpace(
                name,
                format!("action table must be {order} rows of {} cells", poset.len()),
            ));
        }
        if action.iter().flatten().any(|&c| c >= poset.len()) {
            return Err(StratError::BadSpace(name, "action image out of range".into()));
        }
        let mut index = HashMap::new();
        for (c, s) in strata.iter().enumerate() {
            if let Stratum::Boundary { tree, cells } = s {
                index.entry((tree.clone(), cells.clone())).or_insert(c);
            }
        }
        Ok(Space { color, arity, poset, action, strata, index })
    }

    /// The empty space (as in the trivial operad).
    pub fn empty(color: Color, arity: usize) -> Self {
        let order: usize = (1..=arity).product();
        Space {
            color,
            arity,
            poset: FinPoset::empty(),
            action: vec![Vec::new(); order],
            strata: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// The permutation of cells induced by `p`.
    pub fn action_of(&self, p: &Permutation) -> &[usize] {
        &self.action[p.rank()]
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, c: usize) -> &Stratum {
        &self.strata[c]
    }

    pub fn is_interior(&self, c: usize) -> bool {
        self.strata[c] == Stratum::Interior
    }

    pub fn interior_cells(&self) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.is_interior(c)).collect()
    }

    pub fn boundary_cells(&self) -> Vec<usize> {
        (0..self.len()).filter(|&c| !self.is_interior(c)).collect()
    }

    /// The cell tagged with the stratum `(tree, cells)`, if any.
    pub fn lookup(&self, tree: &ColoredTree, cells: &[usize]) -> Option<usize> {
        self.index.get(&(tree.clone(), cells.to_vec())).copied()
    }

    /// `Σ_{interior cells} (−1)^dim`: the compactly supported Euler
    /// characteristic of the interior.
    pub fn interior_euler(&self) -> i64 {
        self.interior_cells().iter().map(|&c| if self.poset.dim(c).is_multiple_of(2) { 1 } else { -1 }).sum()
    }

    /// Largest cell dimension, `None` for the empty space.
    pub fn top_dim(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.poset.max_dim() as usize)
    }

    /// The same space for another operad color: every vertex of every
    /// stratum tree is recolored.
    pub fn recolored(&self, color: Color) -> Result<Self, StratError> {
        let strata = self
            .strata
            .iter()
            .map(|s| match s {
                Stratum::Interior => Ok(Stratum::Interior),
                Stratum::Boundary { tree, cells } => {
                    Ok(Stratum::Boundary { tree: tree.recolor(&|_| color)?, cells: cells.clone() })
                }
            })
            .collect::<Result<Vec<_>, StratError>>()?;
        Space::new(color, self.arity, self.poset.clone(), self.action.clone(), strata)
    }
}

/// The smallest label of every slot of `v`, in slot order.
pub(crate) fn slot_keys(t: &LabeledTree, v: usize) -> Vec<Label> {
    t.slots(v)
        .into_iter()
        .map(|s| match s {
            Slot::Label(l) => l,
            Slot::Child(c) => t.min_label(c),
        })
        .collect()
}

/// The leaves below one slot of `v`.
fn slot_leaves(t: &LabeledTree, s: Slot) -> Vec<Label> {
    match s {
        Slot::Label(l) => vec![l],
        Slot::Child(c) => t.subtree_labels(c),
    }
}

/// Relabels `tree` by `g`. Returns the new tree, the vertex map, and for
/// every vertex `v` the permutation of `1..=arity(v)` sending the position
/// of a slot of `v` to the position of its image slot.
pub(crate) fn relabel_with_locals(
    tree: &ColoredTree,
    g: &Permutation,
) -> Result<(ColoredTree, Vec<usize>, Vec<Permutation>), StratError> {
    let (gt, vmap) = tree.relabel(&|l| g.apply(l))?;
    let t = tree.tree();
    let mut locals = Vec::with_capacity(tree.vertex_count());
    for v in 0..tree.vertex_count() {
        let keys = slot_keys(gt.tree(), vmap[v]);
        let images: Vec<Label> = t
            .slots(v)
            .into_iter()
            .map(|s| {
                let m = slot_leaves(t, s).into_iter().map(|l| g.apply(l)).min().expect("slots are nonempty");
                keys.iter().position(|&k| k == m).expect("image slot exists") as Label + 1
            })
            .collect();
        locals.push(Permutation::from_images(&label_range(keys.len()), &images)?);
    }
    Ok((gt, vmap, locals))
}

/// `tree ∘_v inner`: vertex `v` replaced by `inner`, a tree on `1..=arity(v)`
/// whose label `i` stands for slot `i − 1` of `v`. Returns the grafted tree,
/// the new index of every old vertex other than `v`, and the new index of
/// every vertex of `inner`.
pub(crate) fn graft(
    tree: &ColoredTree,
    v: usize,
    inner: &ColoredTree,
) -> Result<(ColoredTree, Vec<Option<usize>>, Vec<usize>), StratError> {
    let t = tree.tree();
    let it = inner.tree();
    let slots = t.slots(v);
    if slots.len() != it.label_set().len() {
        return Err(StratError::Inconsistent(format!("cannot graft {inner} into a vertex of arity {}", slots.len())));
    }
    let n = tree.vertex_count();
    let outer: Vec<Option<usize>> = {
        let mut next = 0;
        (0..n)
            .map(|w| {
                (w != v).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let base = n - 1;
    let inner_idx = |u: usize| base + u;
    let holder = |i: usize| it.holder(i as Label + 1).expect("inner tree carries every slot label");
    let total = base + inner.vertex_count();
    let mut parent = vec![None; total];
    let mut labels = vec![Vec::new(); total];
    let mut colors = vec![Color::W; total];
    for w in (0..n).filter(|&w| w != v) {
        let o = outer[w].expect("outer vertex");
        parent[o] = match t.parent(w) {
            Some(p) if p == v => {
                let i = slots.iter().position(|&s| s == Slot::Child(w)).expect("child is a slot");
                Some(inner_idx(holder(i)))
            }
            Some(p) => outer[p],
            None => None,
        };
        labels[o] = t.labels(w).to_vec();
        colors[o] = tree.color(w);
    }
    for u in 0..inner.vertex_count() {
        let i = inner_idx(u);
        parent[i] = match it.parent(u) {
            Some(p) => Some(inner_idx(p)),
            None => t.parent(v).and_then(|p| outer[p]),
        };
        labels[i] = it
            .labels(u)
            .iter()
            .filter_map(|&l| match slots[l as usize - 1] {
                Slot::Label(x) => Some(x),
                Slot::Child(_) => None,
            })
            .collect();
        colors[i] = inner.color(u);
    }
    let (lt, map) = LabeledTree::new_with_map(parent, labels)?;
    let mut canon = vec![Color::W; total];
    for (old, &c) in colors.iter().enumerate() {
        canon[map[old]] = c;
    }
    let grafted = ColoredTree::new(lt, canon, Scheme::Rbw)?;
    let outer_map = outer.iter().map(|o| o.map(|o| map[o])).collect();
    let inner_map = (0..inner.vertex_count()).map(|u| map[inner_idx(u)]).collect();
    Ok((grafted, outer_map, inner_map))
}

/// The corolla on `1..=m` of one color.
pub(crate) fn corolla(m: usize, color: Color) -> Result<ColoredTree, StratError> {
    Ok(ColoredTree::corolla(&label_range(m), color, Scheme::Rbw)?)
}
