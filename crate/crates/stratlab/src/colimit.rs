//! Boundary colimits: the glued complex over a poset of decomposable trees.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use posetkit::{FinPoset, PosetJson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use treekit::{enumerate_colored, label_range, Color, ColoredTree, Permutation, Scheme};

use crate::model::{CellModel, ModelKind};
use crate::space::{symmetric_group, Space, Stratum};
use crate::StratError;

/// Which trees a boundary colimit runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// Decomposable red trees: the boundary of `R(m)` (of `O(m)` for an operad).
    Operad,
    /// Decomposable blue trees: the boundary of `B(m)`.
    LeftOperad,
    /// All RBW trees except `•_W`: the boundary of `W(m)`.
    BimoduleBoundary,
    /// All RBW trees except `•_W` and `•_B` (left surgery).
    LeftPart,
    /// All RBW trees except `•_W` and `•_R` (right surgery).
    RightPart,
}

impl Flavor {
    pub const ALL: [Flavor; 5] =
        [Flavor::Operad, Flavor::LeftOperad, Flavor::BimoduleBoundary, Flavor::LeftPart, Flavor::RightPart];

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Operad => "operad",
            Flavor::LeftOperad => "left-operad",
            Flavor::BimoduleBoundary => "bimodule-boundary",
            Flavor::LeftPart => "left-part",
            Flavor::RightPart => "right-part",
        }
    }

    /// The index trees of this flavor on `1..=m`.
    pub fn index_trees(self, model: &CellModel, m: usize) -> Result<Vec<ColoredTree>, StratError> {
        let wrong = || StratError::WrongKind { flavor: self, kind: model.kind() };
        match (self, model.kind()) {
            (Flavor::Operad, _) => model.index_trees(Color::R, m),
            (Flavor::LeftOperad, ModelKind::Bimodule) => model.index_trees(Color::B, m),
            (_, ModelKind::Operad) => Err(wrong()),
            (f, ModelKind::Bimodule) => {
                let excluded: &[Color] = match f {
                    Flavor::BimoduleBoundary => &[Color::W],
                    Flavor::LeftPart => &[Color::W, Color::B],
                    _ => &[Color::W, Color::R],
                };
                Ok(enumerate_colored(&label_range(m), Scheme::Rbw)?
                    .into_iter()
                    .filter(|t| !excluded.iter().any(|&c| t.is_corolla_of(c)))
                    .collect())
            }
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown flavor `{s}` (expected one of {})", Flavor::ALL.iter().join(", ")))
    }
}

/// A face poset with a `Σ_m`-action and the stratum every cell comes from.
#[derive(Clone, Debug)]
pub struct EquivariantComplex {
    pub arity: usize,
    pub poset: FinPoset,
    /// `action[p.rank()][c]` is the image of cell `c` under `p ∈ Σ_m`.
    pub action: Vec<Vec<usize>>,
    pub provenance: Vec<Stratum>,
}

impl EquivariantComplex {
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn euler(&self) -> i64 {
        self.poset.cell_euler()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.poset.f_vector()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.poset.components()
    }

    pub fn group(&self) -> Vec<Permutation> {
        symmetric_group(self.arity)
    }

    pub fn action_of(&self, p: &Permutation) -> &[usize] {
        &self.action[p.rank()]
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            arity: self.arity,
            cells: self.len(),
            f_vector: self.f_vector(),
            euler: self.euler(),
            poset: PosetJson::from(&self.poset),
            action: self.action.clone(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_dot(&self) -> String {
        self.poset.to_dot()
    }
}

impl From<&Space> for EquivariantComplex {
    fn from(s: &Space) -> Self {
        EquivariantComplex {
            arity: s.arity(),
            poset: s.poset().clone(),
            action: s.action().to_vec(),
            provenance: s.strata().to_vec(),
        }
    }
}

/// Serialized complex (posetkit poset schema plus action and provenance).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub arity: usize,
    pub cells: usize,
    pub f_vector: Vec<usize>,
    pub euler: i64,
    pub poset: PosetJson,
    pub action: Vec<Vec<usize>>,
    pub provenance: Vec<Stratum>,
}

pub(crate) fn cell_name(tree: &ColoredTree, cells: &[usize]) -> String {
    format!("{}|{}", tree.compact(), cells.iter().join(","))
}

/// All strata of `trees`: pairs of a tree and a tuple of interior cells of
/// its vertex spaces, in tree order. Trees with an empty vertex space
/// contribute nothing.
pub(crate) fn strata_of(
    model: &CellModel,
    trees: &[ColoredTree],
) -> Result<Vec<(ColoredTree, Vec<usize>)>, StratError> {
    let per_tree: Vec<Vec<(ColoredTree, Vec<usize>)>> = trees
        .par_iter()
        .map(|t| {
            let interiors = (0..t.vertex_count())
                .map(|v| Ok(model.vertex_space(t, v)?.interior_cells()))
                .collect::<Result<Vec<_>, StratError>>()?;
            Ok(interiors.into_iter().multi_cartesian_product().map(|x| (t.clone(), x)).collect())
        })
        .collect::<Result<_, StratError>>()?;
    Ok(per_tree.into_iter().flatten().collect())
}

/// The complex whose cells are the given strata, with the face relation
/// generated by replacing one coordinate by one of its faces (and grafting
/// when that face is a boundary cell), and the induced `Σ_m`-action.
pub(crate) fn complex_on(
    model: &CellModel,
    arity: usize,
    strata: Vec<(ColoredTree, Vec<usize>)>,
) -> Result<EquivariantComplex, StratError> {
    let index: HashMap<(ColoredTree, Vec<usize>), usize> =
        strata.iter().enumerate().map(|(i, (t, x))| ((t.clone(), x.clone()), i)).collect();
    let find = |t: &ColoredTree, x: &[usize], what: &str| {
        index
            .get(&(t.clone(), x.to_vec()))
            .copied()
            .ok_or_else(|| StratError::Inconsistent(format!("{what} {} is not a cell of the colimit", cell_name(t, x))))
    };
    let relations: Vec<Vec<(usize, usize)>> = strata
        .par_iter()
        .enumerate()
        .map(|(i, (t, x))| {
            let mut rel = Vec::new();
            for v in 0..t.vertex_count() {
                let sp = model.vertex_space(t, v)?;
                for y in sp.poset().strictly_below(x[v]) {
                    let mut face = x.clone();
                    face[v] = y;
                    let (ft, fx) = model.normalize(t, &face)?;
                    rel.push((find(&ft, &fx, "face")?, i));
                }
            }
            Ok(rel)
        })
        .collect::<Result<_, StratError>>()?;
    let relations: Vec<(usize, usize)> = relations.into_iter().flatten().collect();
    let names = strata.iter().map(|(t, x)| cell_name(t, x)).collect();
    let poset = FinPoset::from_relations(strata.len(), &relations)?.with_names(names);
    let action = symmetric_group(arity)
        .par_iter()
        .map(|g| {
            strata
                .iter()
                .map(|(t, x)| {
                    let (gt, gx) = model.act_stratum(g, t, x)?;
                    find(&gt, &gx, "image")
                })
                .collect::<Result<Vec<_>, StratError>>()
        })
        .collect::<Result<_, StratError>>()?;
    let provenance = strata.into_iter().map(|(tree, cells)| Stratum::Boundary { tree, cells }).collect();
    Ok(EquivariantComplex { arity, poset, action, provenance })
}

/// The colimit over the flavor's index trees on `1..=m`: cells are pairs of
/// a tree and a tuple of interior cells over its vertices, dimensions add,
/// faces come from the vertex spaces and the attachment data, and `Σ_m`
/// acts by relabeling.
pub fn boundary_colimit(model: &CellModel, m: usize, flavor: Flavor) -> Result<EquivariantComplex, StratError> {
    let trees = flavor.index_trees(model, m)?;
    let strata = strata_of(model, &trees)?;
    complex_on(model, m, strata)
}

/// `Σ_T ∏_v Σ_{interior cells of the vertex space} (−1)^dim` over the
/// flavor's index trees: the Euler characteristic of the colimit computed
/// stratum by stratum.
pub fn stratified_euler(model: &CellModel, m: usize, flavor: Flavor) -> Result<i64, StratError> {
    let trees = flavor.index_trees(model, m)?;
    let mut total = 0;
    for t in &trees {
        let mut term = 1;
        for v in 0..t.vertex_count() {
            term *= model.vertex_space(t, v)?.interior_euler();
        }
        total += term;
    }
    Ok(total)
}
