//! Ball certificates for links of RBW contractions.

use gf2homology::{euler_characteristic, is_homology_sphere};
use polykit::{face_lattice, height_polytope_rbw, height_variables, BigRational};
use posetkit::{is_cw_poset, opposite, order_complex, poset_iso, PosetJson};
use serde::Serialize;
use treekit::{contract, Color, ColoredTree, Contraction, ContractionSystem, Scheme, TreeJson};

use crate::link::{link_poset_among, nontrivial_contractions, LinkPoset};
use crate::LinkError;

/// Evidence that `𝒫_c` is the face poset of a regular CW ball of dimension
/// `codim(c) − 1`.
#[derive(Clone, Debug, Serialize)]
pub struct LinkBallCertificate {
    pub source: TreeJson,
    pub target: TreeJson,
    pub codim: usize,
    pub elements: usize,
    /// (a) every strict lower interval is a homology sphere of the right dimension.
    pub cw_poset: bool,
    /// Longest chain has length `codim − 1`.
    pub chain_length: bool,
    /// (b) for `c = T → •_W`: `F(X(T))^op ≅ 𝒫_T` abstractly.
    pub polytope_iso: Option<bool>,
    /// (b) the explicit map (contract equal-height edges, color by sign) is an
    /// order-reversing bijection `F(X(T)) → 𝒫_T`.
    pub explicit_map: Option<bool>,
    /// (c) `∂𝒫_c` is a GF(2) homology sphere of dimension `codim − 2`.
    pub boundary_sphere: bool,
    /// (d) Euler characteristic of `∂𝒫_c`.
    pub boundary_euler: i64,
    pub expected_euler: i64,
    /// (e) `𝒫_c` is the lower interval of `c` inside `𝒫_T`.
    pub interval_match: bool,
    pub ok: bool,
    /// Present only when the certificate fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<PosetJson>,
}

/// The contraction of an RBW tree determined by a height function: edges
/// whose endpoints have equal heights are contracted, and each new vertex is
/// colored by the sign of its height.
pub fn height_contraction(tree: &ColoredTree, heights: &[BigRational]) -> Result<Contraction, LinkError> {
    let zero = BigRational::from_integer(0.into());
    let vars = height_variables(tree);
    let h: Vec<BigRational> = (0..tree.vertex_count())
        .map(|v| vars.iter().position(|&x| x == v).map_or_else(|| zero.clone(), |i| heights[i].clone()))
        .collect();
    let t = tree.tree();
    let mut block_of: Vec<usize> = (0..tree.vertex_count()).collect();
    for v in t.postorder().into_iter().rev() {
        if let Some(p) = t.parent(v) {
            if h[v] == h[p] {
                block_of[v] = block_of[p];
            }
        }
    }
    let mut roots = block_of.clone();
    roots.sort_unstable();
    roots.dedup();
    let blocks = roots
        .iter()
        .map(|&r| {
            let color = if h[r] > zero {
                Color::R
            } else if h[r] < zero {
                Color::B
            } else {
                Color::W
            };
            ((0..tree.vertex_count()).filter(|&v| block_of[v] == r).collect(), color)
        })
        .collect();
    Ok(contract(tree, &ContractionSystem::new(blocks))?.1)
}

/// Compares the face lattice of the height polytope of `link.base.source()`
/// with `𝒫_T`: abstract anti-isomorphism, and the explicit height map.
fn polytope_checks(link: &LinkPoset) -> Result<(bool, bool), LinkError> {
    let tree = link.base.source();
    let faces = face_lattice(&height_polytope_rbw(tree)?);
    let abstract_iso = poset_iso(&opposite(&faces.poset), &link.poset).is_some();
    let mut map = Vec::with_capacity(faces.faces.len());
    for f in &faces.faces {
        let c = height_contraction(tree, &f.witness)?;
        match link.position(c.target()) {
            Some(i) => map.push(i),
            None => return Ok((abstract_iso, false)),
        }
    }
    let mut seen = map.clone();
    seen.sort_unstable();
    seen.dedup();
    let bijective = seen.len() == map.len() && map.len() == link.elements.len();
    let n = map.len();
    let reversing =
        bijective && (0..n).all(|a| (0..n).all(|b| faces.poset.leq(a, b) == link.poset.leq(map[b], map[a])));
    Ok((abstract_iso, reversing))
}

/// Certificate (a)–(e) for a nontrivial RBW contraction.
pub fn verify_link_ball(c: &Contraction) -> Result<LinkBallCertificate, LinkError> {
    verify_link_ball_among(c, &nontrivial_contractions(c.source()))
}

/// [`verify_link_ball`] with the nontrivial contractions out of the source
/// precomputed (sweeps reuse them for every contraction of a tree).
pub fn verify_link_ball_among(c: &Contraction, candidates: &[Contraction]) -> Result<LinkBallCertificate, LinkError> {
    if c.source().scheme() != Scheme::Rbw {
        return Err(LinkError::WrongScheme { expected: Scheme::Rbw, found: c.source().scheme() });
    }
    let link = link_poset_among(c, candidates)?;
    let codim = c.codim()?;
    let cw_poset = is_cw_poset(&link.poset).ok;
    let chain_length = link.poset.max_dim() == codim as i64 - 1;

    let (boundary, _) = link.boundary();
    let cx = order_complex(&boundary);
    let boundary_sphere = is_homology_sphere(&cx, codim as i64 - 2);
    let boundary_euler = euler_characteristic(&cx);
    let expected_euler = 1 + if codim % 2 == 0 { 1 } else { -1 };

    let to_white = c.target().vertex_count() == 1 && c.target().color(0) == Color::W;
    let (polytope_iso, explicit_map) = if to_white {
        let (a, b) = polytope_checks(&link)?;
        (Some(a), Some(b))
    } else {
        (None, None)
    };

    // (e): compare with the lower interval of c inside 𝒫_T.
    let white = crate::link::collapsed(c.source(), Color::W)?;
    let full_base = treekit::contraction_between(c.source(), &white).ok_or(LinkError::Trivial)?;
    let full = link_poset_among(&full_base, candidates)?;
    let top = full.position(c.target()).ok_or(LinkError::Trivial)?;
    let below: Vec<usize> = (0..full.elements.len()).filter(|&i| full.poset.leq(i, top)).collect();
    let mut lhs: Vec<&ColoredTree> = link.elements.iter().map(Contraction::target).collect();
    let mut rhs: Vec<&ColoredTree> = below.iter().map(|&i| full.elements[i].target()).collect();
    lhs.sort();
    rhs.sort();
    let interval_match = lhs == rhs && poset_iso(&link.poset, &full.poset.induced(&below)).is_some();

    let ok = cw_poset
        && chain_length
        && polytope_iso.unwrap_or(true)
        && explicit_map.unwrap_or(true)
        && boundary_sphere
        && boundary_euler == expected_euler
        && interval_match;
    Ok(LinkBallCertificate {
        source: TreeJson::from_colored(c.source()),
        target: TreeJson::from_colored(c.target()),
        codim,
        elements: link.elements.len(),
        cw_poset,
        chain_length,
        polytope_iso,
        explicit_map,
        boundary_sphere,
        boundary_euler,
        expected_euler,
        interval_match,
        ok,
        counterexample: (!ok).then(|| PosetJson::from(&link.poset)),
    })
}
