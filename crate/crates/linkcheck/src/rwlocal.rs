//! Links of red/white local trees: spheres over white roots, balls over red roots.

use gf2homology::{is_homology_ball_of_dim, is_homology_sphere};
use posetkit::{antichain, is_cw_poset, join, order_complex, poset_iso};
use serde::Serialize;
use treekit::{Color, ColoredTree, LabeledTree, Scheme, TreeJson};

use crate::link::upper_link;
use crate::LinkError;

/// How one leaf-removal step relates the links of `T` and `T ∖ v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// A white leaf vertex is inert: `𝒫_T ≅ 𝒫_{T∖v}`.
    Inert,
    /// A red leaf vertex suspends: `𝒫_T ≅ 𝒫_{T∖v} ∗ S⁰`.
    Suspension,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuspensionStep {
    pub tree: String,
    pub removed_vertex_color: Color,
    pub kind: StepKind,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RwLocalCertificate {
    pub tree: TreeJson,
    pub root: Color,
    /// `"sphere"` for a white root, `"ball"` for a red root.
    pub kind: &'static str,
    /// Number of red vertices minus one.
    pub dim: i64,
    pub elements: usize,
    pub cw_poset: bool,
    pub homology: bool,
    pub chain_length: bool,
    pub steps: Vec<SuspensionStep>,
    /// The single-vertex tree the recursion ends at has link of size 0 (white) or 1 (red).
    pub base_case: bool,
    pub ok: bool,
}

/// `T ∖ v` for a leaf vertex `v` (no child vertices), its labels moved to its parent.
pub fn remove_leaf(tree: &ColoredTree, v: usize) -> Result<ColoredTree, LinkError> {
    let t = tree.tree();
    let p = t.parent(v).ok_or(LinkError::EmptyLink)?;
    let keep: Vec<usize> = (0..tree.vertex_count()).filter(|&w| w != v).collect();
    let parents = keep.iter().map(|&w| t.parent(w).and_then(|q| keep.iter().position(|&k| k == q))).collect();
    let labels = keep
        .iter()
        .map(|&w| {
            let mut ls = t.labels(w).to_vec();
            if w == p {
                ls.extend_from_slice(t.labels(v));
            }
            ls
        })
        .collect();
    let (lt, map) = LabeledTree::new_with_map(parents, labels)?;
    let mut colors = vec![Color::W; keep.len()];
    for (old, &w) in keep.iter().enumerate() {
        colors[map[old]] = tree.color(w);
    }
    Ok(ColoredTree::new(lt, colors, tree.scheme())?)
}

/// Certificate for the link of a red/white local tree: CW-poset, homology of
/// a sphere (white root) or ball (red root) of dimension `#red − 1`, and the
/// leaf-by-leaf suspension structure.
pub fn verify_rwlocal_link(tree: &ColoredTree) -> Result<RwLocalCertificate, LinkError> {
    if tree.scheme() != Scheme::RwLocal {
        return Err(LinkError::WrongScheme { expected: Scheme::RwLocal, found: tree.scheme() });
    }
    let link = upper_link(tree);
    let root = tree.color(tree.tree().root());
    let dim = tree.colors().iter().filter(|&&c| c == Color::R).count() as i64 - 1;
    let cw_poset = is_cw_poset(&link.poset).ok;
    let cx = order_complex(&link.poset);
    let homology = if root == Color::W { is_homology_sphere(&cx, dim) } else { is_homology_ball_of_dim(&cx, dim) };
    let chain_length = link.poset.max_dim() == dim;

    // Remove white leaves first (they do not change the link), then red ones.
    let mut steps = Vec::new();
    let mut cur = tree.clone();
    let mut cur_link = link.poset.clone();
    while cur.vertex_count() > 1 {
        let t = cur.tree();
        let leaves: Vec<usize> =
            (0..cur.vertex_count()).filter(|&v| t.children(v).is_empty() && t.parent(v).is_some()).collect();
        let v = leaves.iter().copied().find(|&v| cur.color(v) == Color::W).unwrap_or(leaves[0]);
        let color = cur.color(v);
        let next = remove_leaf(&cur, v)?;
        let next_link = upper_link(&next).poset;
        let (kind, expected) = match color {
            Color::W => (StepKind::Inert, next_link.clone()),
            _ => (StepKind::Suspension, join(&next_link, &antichain(2))),
        };
        steps.push(SuspensionStep {
            tree: cur.compact(),
            removed_vertex_color: color,
            kind,
            ok: poset_iso(&cur_link, &expected).is_some(),
        });
        cur = next;
        cur_link = next_link;
    }
    let base_case = cur_link.len() == usize::from(cur.color(0) == Color::R);
    let ok = cw_poset && homology && chain_length && base_case && steps.iter().all(|s| s.ok);
    Ok(RwLocalCertificate {
        tree: TreeJson::from_colored(tree),
        root,
        kind: if root == Color::W { "sphere" } else { "ball" },
        dim,
        elements: link.elements.len(),
        cw_poset,
        homology,
        chain_length,
        steps,
        base_case,
        ok,
    })
}
