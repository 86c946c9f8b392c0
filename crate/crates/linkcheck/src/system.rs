//! Contraction systems, their poset, and the join decomposition of links.

use posetkit::{join_all, poset_iso, FinPoset};
use serde::Serialize;
use treekit::{contract, contraction_between, Color, ColoredTree, ContractionSystem, LabeledTree, Scheme};

use crate::link::{collapsed, link_poset, nontrivial_contractions, LinkPoset};
use crate::LinkError;

/// The poset `𝒫_T^sys` of nontrivial contraction systems of an RBW tree.
#[derive(Clone, Debug)]
pub struct ContractionSystemPoset {
    pub tree: ColoredTree,
    pub systems: Vec<ContractionSystem>,
    pub poset: FinPoset,
}

impl ContractionSystemPoset {
    pub fn position(&self, s: &ContractionSystem) -> Option<usize> {
        self.systems.iter().position(|t| t == s)
    }
}

/// `a ≤ b`: every block of `a` lies in a block of `b`, and a red (blue) block
/// of `b` only contains red (blue) blocks of `a`.
pub fn sys_leq(a: &ContractionSystem, b: &ContractionSystem) -> bool {
    a.blocks.iter().all(|(block, eta)| {
        b.blocks.iter().any(|(outer, eta2)| {
            block.iter().all(|v| outer.contains(v))
                && (*eta2 != Color::R || *eta == Color::R)
                && (*eta2 != Color::B || *eta == Color::B)
        })
    })
}

/// Partitions of the vertices of `tree` into connected blocks, one per subset
/// of contracted edges.
fn connected_partitions(tree: &ColoredTree) -> Vec<Vec<Vec<usize>>> {
    let n = tree.vertex_count();
    let edges = tree.tree().edges();
    (0u64..1 << edges.len())
        .map(|mask| {
            // Each contracted edge sends the child to its parent's block;
            // parents are visited before their children.
            let mut block_of: Vec<usize> = (0..n).collect();
            for v in tree.tree().postorder().into_iter().rev() {
                if let Some(i) = edges.iter().position(|&(c, _)| c == v) {
                    if mask >> i & 1 == 1 {
                        block_of[v] = block_of[edges[i].1];
                    }
                }
            }
            let mut roots: Vec<usize> = block_of.clone();
            roots.sort_unstable();
            roots.dedup();
            let blocks: Vec<Vec<usize>> =
                roots.iter().map(|&r| (0..n).filter(|&v| block_of[v] == r).collect()).collect();
            blocks
        })
        .collect()
}

/// All contraction systems of `tree` (including the identity).
pub fn all_systems(tree: &ColoredTree) -> Vec<ContractionSystem> {
    let palette = tree.scheme().palette();
    let mut out = Vec::new();
    for blocks in connected_partitions(tree) {
        let k = blocks.len();
        let mut choice = vec![0usize; k];
        loop {
            let s = ContractionSystem::new(blocks.iter().cloned().zip(choice.iter().map(|&i| palette[i])).collect());
            if contract(tree, &s).is_ok() {
                out.push(s);
            }
            let mut i = 0;
            while i < k && choice[i] + 1 == palette.len() {
                choice[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            choice[i] += 1;
        }
    }
    out.sort();
    out
}

/// `𝒫_T^sys`: nontrivial contraction systems ordered by [`sys_leq`].
pub fn system_poset(tree: &ColoredTree) -> ContractionSystemPoset {
    let systems: Vec<ContractionSystem> = all_systems(tree).into_iter().filter(|s| !s.is_identity_on(tree)).collect();
    let poset = FinPoset::from_leq(systems.len(), |a, b| sys_leq(&systems[a], &systems[b]))
        .expect("the system order is a partial order")
        .with_names(systems.iter().map(|s| describe_system(tree, s)).collect());
    ContractionSystemPoset { tree: tree.clone(), systems, poset }
}

/// Human-readable form `{1,2}→W {3}→R`, naming each block by the labels of
/// its vertices' subtrees' minimum labels.
pub fn describe_system(tree: &ColoredTree, s: &ContractionSystem) -> String {
    s.blocks
        .iter()
        .map(|(b, c)| {
            let names: Vec<String> = b.iter().map(|&v| tree.tree().min_label(v).to_string()).collect();
            format!("{{{}}}→{}", names.join(","), c)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Outcome of comparing `𝒫_T` with `𝒫_T^sys` through the two explicit maps.
#[derive(Clone, Debug, Serialize)]
pub struct SysIsoReport {
    pub tree: String,
    pub contractions: usize,
    pub systems: usize,
    /// `c ↦ {(c⁻¹(v), color(v))}` lands in `𝒫_T^sys` and `Θ ↦ (T → T/Θ)` lands in `𝒫_T`.
    pub maps_defined: bool,
    pub mutually_inverse: bool,
    pub order_preserving: bool,
    pub ok: bool,
}

/// Checks that `c ↦ c.system()` and `Θ ↦ T → T/Θ` are mutually inverse
/// order isomorphisms `𝒫_T ≅ 𝒫_T^sys`.
pub fn verify_sys_iso(tree: &ColoredTree) -> SysIsoReport {
    let contractions = nontrivial_contractions(tree);
    let sys = system_poset(tree);
    let forward: Vec<Option<usize>> = contractions.iter().map(|c| sys.position(&c.system())).collect();
    let backward: Vec<Option<usize>> = sys
        .systems
        .iter()
        .map(|s| contract(tree, s).ok().and_then(|(t, _)| contractions.iter().position(|c| c.target() == &t)))
        .collect();
    let maps_defined = forward.iter().chain(&backward).all(Option::is_some);
    let mutually_inverse = maps_defined
        && contractions.len() == sys.systems.len()
        && (0..contractions.len()).all(|i| backward[forward[i].unwrap()] == Some(i));
    let order_preserving = mutually_inverse
        && (0..contractions.len()).all(|a| {
            (0..contractions.len()).all(|b| {
                let factor = contraction_between(contractions[a].target(), contractions[b].target()).is_some();
                factor == sys.poset.leq(forward[a].unwrap(), forward[b].unwrap())
            })
        });
    SysIsoReport {
        tree: tree.compact(),
        contractions: contractions.len(),
        systems: sys.systems.len(),
        maps_defined,
        mutually_inverse,
        order_preserving,
        ok: maps_defined && mutually_inverse && order_preserving,
    }
}

/// The subtree of `tree` spanned by the connected vertex set `block`, as an
/// RBW tree in its own right: each edge leaving the block downward becomes a
/// leaf labeled by the smallest label above it. Returns the subtree and, for
/// each of its vertices, the corresponding vertex of `tree`.
pub fn block_subtree(tree: &ColoredTree, block: &[usize]) -> Result<(ColoredTree, Vec<usize>), LinkError> {
    let t = tree.tree();
    let parents: Vec<Option<usize>> =
        block.iter().map(|&v| t.parent(v).and_then(|p| block.iter().position(|&b| b == p))).collect();
    let labels: Vec<Vec<u32>> = block
        .iter()
        .map(|&v| {
            let mut ls = t.labels(v).to_vec();
            ls.extend(t.children(v).iter().filter(|c| !block.contains(c)).map(|&c| t.min_label(c)));
            ls
        })
        .collect();
    let (lt, map) = LabeledTree::new_with_map(parents, labels)?;
    let mut colors = vec![Color::W; block.len()];
    let mut global = vec![0; block.len()];
    for (old, &v) in block.iter().enumerate() {
        colors[map[old]] = tree.color(v);
        global[map[old]] = v;
    }
    Ok((ColoredTree::new(lt, colors, tree.scheme())?, global))
}

/// Outcome of the two join decompositions attached to a contraction system.
#[derive(Clone, Debug, Serialize)]
pub struct JoinReport {
    pub tree: String,
    pub system: String,
    pub blocks: usize,
    /// `∏ᵢ 𝒫^sys_{Θ^{Tᵢ}_{•ηᵢ}}` (each with a bottom added) maps bijectively
    /// and order-isomorphically onto `𝒫^sys_Θ` with a bottom added, by union.
    pub union_bijection: bool,
    /// `𝒫_{T → T/Θ} ≅ 𝒫_{T₁ → •η₁} ∗ ⋯ ∗ 𝒫_{T_k → •η_k}`.
    pub link_join: bool,
    pub ok: bool,
}

/// The lower set `(−, Θ^{T}_{•η}]` inside `𝒫_T^sys` of a block subtree, with
/// systems rewritten in the vertex numbering of the ambient tree.
fn block_factor(sub: &ColoredTree, global: &[usize], eta: Color) -> Vec<ContractionSystem> {
    let whole = ContractionSystem::new(vec![((0..sub.vertex_count()).collect(), eta)]);
    system_poset(sub)
        .systems
        .into_iter()
        .filter(|s| sys_leq(s, &whole))
        .map(|s| {
            ContractionSystem::new(
                s.blocks.into_iter().map(|(b, c)| (b.into_iter().map(|v| global[v]).collect(), c)).collect(),
            )
        })
        .collect()
}

/// Checks both join decompositions for a contraction system `theta` of `tree`.
pub fn verify_join_decomposition(tree: &ColoredTree, theta: &ContractionSystem) -> Result<JoinReport, LinkError> {
    if tree.scheme() != Scheme::Rbw {
        return Err(LinkError::WrongScheme { expected: Scheme::Rbw, found: tree.scheme() });
    }
    let (_, c) = contract(tree, theta)?;
    let mut factors: Vec<Vec<Option<ContractionSystem>>> = Vec::new();
    let mut block_links: Vec<FinPoset> = Vec::new();
    for (block, eta) in &theta.blocks {
        let (sub, global) = block_subtree(tree, block)?;
        let mut f: Vec<Option<ContractionSystem>> = vec![None];
        f.extend(block_factor(&sub, &global, *eta).into_iter().map(Some));
        factors.push(f);
        let target = collapsed(&sub, *eta)?;
        let to_point = contraction_between(&sub, &target).ok_or(LinkError::Trivial)?;
        block_links.push(if to_point.is_trivial() { FinPoset::empty() } else { link_poset(&to_point)?.poset });
    }

    // Union map on the product of the factors (None = the adjoined bottom).
    let identity = ContractionSystem::identity(tree);
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in &factors {
        tuples = tuples.into_iter().flat_map(|t| (0..f.len()).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    let union = |t: &[usize]| {
        let mut blocks = Vec::new();
        for (k, &i) in t.iter().enumerate() {
            match &factors[k][i] {
                Some(s) => blocks.extend(s.blocks.iter().cloned()),
                None => blocks.extend(theta.blocks[k].0.iter().map(|&v| (vec![v], tree.color(v)))),
            }
        }
        ContractionSystem::new(blocks)
    };
    let images: Vec<ContractionSystem> = tuples.iter().map(|t| union(t)).collect();
    let lower: Vec<ContractionSystem> = system_poset(tree)
        .systems
        .into_iter()
        .filter(|s| sys_leq(s, theta))
        .chain(std::iter::once(identity.clone()))
        .collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let mut expected = lower.clone();
    expected.sort();
    let bijective = sorted.len() == images.len() && sorted == expected;
    let factor_leq = |k: usize, i: usize, j: usize| match (&factors[k][i], &factors[k][j]) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => sys_leq(a, b),
    };
    let order = bijective
        && (0..tuples.len()).all(|a| {
            (0..tuples.len()).all(|b| {
                let product = (0..factors.len()).all(|k| factor_leq(k, tuples[a][k], tuples[b][k]));
                // The identity system is the adjoined bottom; `sys_leq` already
                // puts it below everything and nothing nontrivial below it.
                product == sys_leq(&images[a], &images[b])
            })
        });

    let link_join = if c.is_trivial() {
        block_links.iter().all(FinPoset::is_empty)
    } else {
        let lhs: LinkPoset = link_poset(&c)?;
        let refs: Vec<&FinPoset> = block_links.iter().collect();
        poset_iso(&lhs.poset, &join_all(&refs)).is_some()
    };
    Ok(JoinReport {
        tree: tree.compact(),
        system: describe_system(tree, theta),
        blocks: theta.blocks.len(),
        union_bijection: order,
        link_join,
        ok: order && link_join,
    })
}
