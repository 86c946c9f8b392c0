//! The worked examples: the hexagons of the interval nullbordism, the
//! arity-four Euler characteristic, the pentagons of `FM₁(4)`, and the
//! nullbordism chain built by right surgery.

use std::collections::BTreeMap;

use itertools::Itertools;
use posetkit::poset_iso;
use serde::Serialize;
use treekit::Color;

use crate::builtin::{fm1_model, interval_nullbordism_model, null_surgery_model, trivial_operad_space};
use crate::colimit::{boundary_colimit, stratified_euler, EquivariantComplex, Flavor};
use crate::model::{CellModel, ModelKind};
use crate::recognize::{cone_fill, free_action_check, recognize, FreeActionReport, Recognition, StructureKind};
use crate::space::{corolla, Space, Stratum};
use crate::surgery::extend_right;
use crate::validate::validate_model;
use crate::StratError;

#[derive(Clone, Debug, Serialize)]
pub struct HexagonReport {
    pub recognition: Recognition,
    /// Number of edges of every circle, sorted.
    pub cycle_lengths: Vec<usize>,
    /// `A₃` acts freely on cells.
    pub alternating_free: bool,
    /// Every transposition exchanges the two circles.
    pub transpositions_swap: bool,
    pub action: FreeActionReport,
}

fn cycle_lengths(cx: &EquivariantComplex) -> Vec<usize> {
    cx.components().iter().map(|comp| comp.iter().filter(|&&c| cx.poset.dim(c) == 1).count()).sorted().collect()
}

/// The boundary of `W(3)` in the interval nullbordism: two hexagons, `A₃`
/// acting freely and transpositions exchanging them.
pub fn hexagons() -> Result<HexagonReport, StratError> {
    let model = interval_nullbordism_model()?;
    let cx = boundary_colimit(&model, 3, Flavor::BimoduleBoundary)?;
    let components = cx.components();
    let mut component_of = vec![0; cx.len()];
    for (k, comp) in components.iter().enumerate() {
        for &c in comp {
            component_of[c] = k;
        }
    }
    let group = cx.group();
    let alternating_free = group
        .iter()
        .filter(|g| g.is_even() && !g.is_identity())
        .all(|g| cx.action_of(g).iter().enumerate().all(|(c, &gc)| gc != c));
    let transpositions_swap = components.len() == 2
        && group
            .iter()
            .filter(|g| !g.is_even())
            .all(|g| cx.action_of(g).iter().enumerate().all(|(c, &gc)| component_of[gc] != component_of[c]));
    Ok(HexagonReport {
        recognition: recognize(&cx),
        cycle_lengths: cycle_lengths(&cx),
        alternating_free,
        transpositions_swap,
        action: free_action_check(&cx),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Contribution {
    /// Vertex colors and arities of the trees, e.g. `W2 R3`.
    pub signature: String,
    pub trees: usize,
    pub euler: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Chi48Report {
    /// The value stated for this example.
    pub stated: i64,
    pub euler: i64,
    pub stratified_euler: i64,
    pub matches_stated: bool,
    /// The interval nullbordism with `W(3)` filled in validates.
    pub extended_model_valid: bool,
    pub contributions: Vec<Contribution>,
    pub recognition: Recognition,
    pub action: FreeActionReport,
}

/// The interval nullbordism with `W(3)` the two discs bounding the
/// hexagons.
pub fn interval_with_w3() -> Result<CellModel, StratError> {
    let model = interval_nullbordism_model()?;
    let w3 = cone_fill(&boundary_colimit(&model, 3, Flavor::BimoduleBoundary)?)?;
    Ok(model.with_space(w3))
}

/// The Euler characteristic of the boundary of `W(4)` after filling the
/// hexagons, against the stated value `−48`, with the contribution of each
/// kind of tree and the fixed points of the action.
pub fn chi48() -> Result<Chi48Report, StratError> {
    let model = interval_with_w3()?;
    let cx = boundary_colimit(&model, 4, Flavor::BimoduleBoundary)?;
    let mut groups: BTreeMap<String, (usize, i64)> = BTreeMap::new();
    for t in Flavor::BimoduleBoundary.index_trees(&model, 4)? {
        let mut term = 1;
        let mut sig = Vec::new();
        for v in 0..t.vertex_count() {
            let sp = model.vertex_space(&t, v)?;
            term *= sp.interior_euler();
            sig.push(format!("{}{}", t.color(v), sp.arity()));
        }
        sig.sort();
        let e = groups.entry(sig.join(" ")).or_insert((0, 0));
        e.0 += 1;
        e.1 += term;
    }
    let contributions = groups
        .into_iter()
        .filter(|(_, (_, e))| *e != 0)
        .map(|(signature, (trees, euler))| Contribution { signature, trees, euler })
        .collect();
    let stated = -48;
    let euler = cx.euler();
    Ok(Chi48Report {
        stated,
        euler,
        stratified_euler: stratified_euler(&model, 4, Flavor::BimoduleBoundary)?,
        matches_stated: euler == stated,
        extended_model_valid: validate_model(&model).ok,
        contributions,
        recognition: recognize(&cx),
        action: free_action_check(&cx),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PentagonReport {
    /// Points in the boundary of `FM₁(3)`.
    pub arity3_boundary: Recognition,
    pub arity4_space: Recognition,
    /// Number of 2-cells of `FM₁(4)` bounded by five edges and five vertices.
    pub pentagons: usize,
    pub arity4_boundary: Recognition,
    pub valid: bool,
}

/// `FM₁(3)` is six intervals with twelve boundary points; `FM₁(4)` is
/// twenty-four pentagons whose boundaries are glued from the colimit.
pub fn fm1_pentagons() -> Result<PentagonReport, StratError> {
    let model = fm1_model(4)?;
    let sp = model.space(Color::R, 4)?;
    let p = sp.poset();
    let pentagons = (0..p.len())
        .filter(|&c| p.dim(c) == 2)
        .filter(|&c| {
            let below = p.strictly_below(c);
            below.iter().filter(|&&f| p.dim(f) == 1).count() == 5
                && below.iter().filter(|&&f| p.dim(f) == 0).count() == 5
        })
        .count();
    Ok(PentagonReport {
        arity3_boundary: recognize(&boundary_colimit(&model, 3, Flavor::Operad)?),
        arity4_space: recognize(&EquivariantComplex::from(sp)),
        pentagons,
        arity4_boundary: recognize(&boundary_colimit(&model, 4, Flavor::Operad)?),
        valid: validate_model(&model).ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NullChainReport {
    /// `O₂(3)`, the new red space of the first right surgery.
    pub step1: Recognition,
    /// `O₂(4)`, from the second right surgery.
    pub step2: Recognition,
    /// `O₃(4)`, from right surgery on the cobordism `O₂ ⇝ trivial` whose
    /// `W(3)` is the cone on `O₂(3)`.
    pub step3: Recognition,
    /// `O₃(4)` and `O₂(4)` have isomorphic face posets.
    pub step3_iso_step2: bool,
    /// `O₃(4)` is a sphere.
    pub step3_is_sphere: bool,
}

fn cone_cobordism(op: &CellModel) -> Result<CellModel, StratError> {
    let b: Vec<Space> =
        op.spaces().filter(|s| s.color() == Color::R).map(|s| s.recolored(Color::B)).collect::<Result<_, _>>()?;
    let b3 = b.iter().find(|s| s.arity() == 3).ok_or(StratError::MissingArity { color: Color::R, arity: 3 })?;
    if !b.iter().find(|s| s.arity() == 2).is_some_and(Space::is_empty) || !b3.boundary_cells().is_empty() {
        return Err(StratError::Inconsistent("the cone cobordism needs an empty arity two".into()));
    }
    let tree = corolla(3, Color::B)?;
    let cx = EquivariantComplex {
        arity: 3,
        poset: b3.poset().clone(),
        action: b3.action().to_vec(),
        provenance: (0..b3.len()).map(|c| Stratum::Boundary { tree: tree.clone(), cells: vec![c] }).collect(),
    };
    let w3 = cone_fill(&cx)?;
    let mut spaces = b.clone();
    spaces.extend([
        trivial_operad_space(Color::R, 2),
        trivial_operad_space(Color::R, 3),
        Space::empty(Color::W, 2),
        w3,
    ]);
    Ok(CellModel::new(&format!("cone-{}", op.name()), ModelKind::Bimodule, op.dimension(), 3, spaces))
}

/// The nullbordism chain: right surgery on the mirrored interval model
/// gives `O₂(3)` (a circle of twelve cells) and then `O₂(4)`; right
/// surgery on the cone cobordism from `O₂` gives `O₃(4)`.
pub fn null_chain() -> Result<NullChainReport, StratError> {
    let first = extend_right(&null_surgery_model()?)?;
    let second = extend_right(&first)?;
    let o2_3 = first.space(Color::R, 3)?;
    let o2_4 = second.space(Color::R, 4)?;
    let o2 = CellModel::new(
        "o2",
        ModelKind::Operad,
        second.dimension(),
        4,
        vec![trivial_operad_space(Color::R, 2), o2_3.clone(), o2_4.clone()],
    );
    let third = extend_right(&cone_cobordism(&o2)?)?;
    let o3_4 = third.space(Color::R, 4)?;
    let step3 = recognize(&EquivariantComplex::from(o3_4));
    Ok(NullChainReport {
        step1: recognize(&EquivariantComplex::from(o2_3)),
        step2: recognize(&EquivariantComplex::from(o2_4)),
        step3_iso_step2: poset_iso(o3_4.poset(), o2_4.poset()).is_some(),
        step3_is_sphere: step3.kind == StructureKind::ClosedSurface && step3.components == 1 && step3.euler == 2,
        step3,
    })
}
