//! Links of five-colored trees, through their height polytopes.

use gf2homology::{is_homology_ball_of_dim, is_homology_sphere};
use polykit::{
    bounded_slice, face_lattice, height_polytope_five, height_polytope_five_blocks, height_variables, BigRational,
    FaceLattice, HalfspaceSystem,
};
use posetkit::{is_cw_poset, join_all, opposite, order_complex, poset_iso, FinPoset};
use serde::Serialize;
use treekit::{Color, ColoredTree, Scheme, TreeJson};

use crate::link::upper_link;
use crate::LinkError;

/// Certificate for one color block of a five-colored height polytope.
#[derive(Clone, Debug, Serialize)]
pub struct BlockCertificate {
    pub color: Color,
    pub variables: usize,
    pub faces: usize,
    /// `F(X_c)^op` is a CW-poset.
    pub cw_poset: bool,
    /// Ball (red/blue blocks) or sphere (orange block) homology of dimension
    /// `variables − 1`.
    pub homology: bool,
    /// Red/blue only: after translating to a cone, the bounded slice has
    /// face poset `F(X_c)` minus the cone point, and its faces form a sphere.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slice: Option<bool>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiveLinkCertificate {
    pub tree: TreeJson,
    pub variables: usize,
    pub faces: usize,
    /// `F(X(T))^op ≅ F(X_R)^op ∗ F(X_B)^op ∗ F(X_O)^op`.
    pub block_join: bool,
    pub blocks: Vec<BlockCertificate>,
    /// `F(X(T))^op` is the CW-poset of a ball (red or blue vertices present)
    /// or a sphere (orange only) of dimension `variables − 1`.
    pub expect_ball: bool,
    pub combined_cw: bool,
    pub combined_homology: bool,
    /// `F(X(T))^op` is isomorphic to the poset of nontrivial five-colored
    /// contractions out of `T`.
    pub contraction_iso: bool,
    pub ok: bool,
}

/// The red (blue) block translated by `∓1`: sign constraints `x ≷ ±1` become
/// `x ≷ 0` and the edge inequalities are already homogeneous, so every bound
/// becomes zero and the result is a cone with apex at the origin.
fn translated_cone(block: &HalfspaceSystem) -> HalfspaceSystem {
    let mut cone = block.clone();
    for q in &mut cone.inequalities {
        q.bound = BigRational::from_integer(0.into());
    }
    cone
}

fn block_certificate(color: Color, block: &HalfspaceSystem) -> BlockCertificate {
    let f: FaceLattice = face_lattice(block);
    let op = opposite(&f.poset);
    let cw_poset = is_cw_poset(&op).ok;
    let d = block.dim as i64 - 1;
    let cx = order_complex(&op);
    let (homology, slice) = match color {
        Color::O => (is_homology_sphere(&cx, d), None),
        _ => {
            let ball = block.dim == 0 || is_homology_ball_of_dim(&cx, d);
            let slice = if block.dim == 0 {
                true
            } else {
                let cone = translated_cone(block);
                let cf = face_lattice(&cone);
                let signs = vec![if color == Color::R { 1 } else { -1 }; block.dim];
                let sf = face_lattice(&bounded_slice(&cone, &signs).expect("translated block is a cone"));
                let apex = cf.poset.minimum();
                let punctured = match apex {
                    Some(a) => cf.poset.induced(&(0..cf.faces.len()).filter(|&i| i != a).collect::<Vec<_>>()),
                    None => FinPoset::empty(),
                };
                apex.is_some()
                    && poset_iso(&cf.poset, &f.poset).is_some()
                    && poset_iso(&punctured, &sf.poset).is_some()
                    && is_homology_sphere(&order_complex(&sf.poset), d - 1)
            };
            (ball, Some(slice))
        }
    };
    let ok = cw_poset && homology && slice.unwrap_or(true);
    BlockCertificate { color, variables: block.dim, faces: f.faces.len(), cw_poset, homology, slice, ok }
}

/// Certificate for the link of a five-colored tree with at least one
/// red, blue or orange vertex.
pub fn verify_five_link(tree: &ColoredTree) -> Result<FiveLinkCertificate, LinkError> {
    if tree.scheme() != Scheme::FiveColor {
        return Err(LinkError::WrongScheme { expected: Scheme::FiveColor, found: tree.scheme() });
    }
    let vars = height_variables(tree);
    if vars.is_empty() {
        return Err(LinkError::EmptyLink);
    }
    let whole = face_lattice(&height_polytope_five(tree)?);
    let whole_op = opposite(&whole.poset);
    let blocks = height_polytope_five_blocks(tree)?;
    let colors = [Color::R, Color::B, Color::O];
    let block_ops: Vec<FinPoset> = blocks.iter().map(|b| opposite(&face_lattice(b).poset)).collect();
    let block_join = poset_iso(&whole_op, &join_all(&block_ops.iter().collect::<Vec<_>>())).is_some();
    let certs: Vec<BlockCertificate> =
        colors.iter().zip(&blocks).filter(|(_, b)| b.dim > 0).map(|(&c, b)| block_certificate(c, b)).collect();

    let expect_ball = blocks[0].dim + blocks[1].dim > 0;
    let combined_cw = is_cw_poset(&whole_op).ok;
    let d = vars.len() as i64 - 1;
    let cx = order_complex(&whole_op);
    let combined_homology = if expect_ball { is_homology_ball_of_dim(&cx, d) } else { is_homology_sphere(&cx, d) };
    let contraction_iso = poset_iso(&upper_link(tree).poset, &whole_op).is_some();
    let ok = block_join && certs.iter().all(|c| c.ok) && combined_cw && combined_homology && contraction_iso;
    Ok(FiveLinkCertificate {
        tree: TreeJson::from_colored(tree),
        variables: vars.len(),
        faces: whole.faces.len(),
        block_join,
        blocks: certs,
        expect_ball,
        combined_cw,
        combined_homology,
        contraction_iso,
        ok,
    })
}
