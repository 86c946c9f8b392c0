//! Cell models: the spaces of a truncated operad or bimodule cobordism.

use std::collections::BTreeMap;
use std::fmt;

use posetkit::PosetJson;
use serde::{Deserialize, Serialize};
use treekit::{enumerate_colored, enumerate_trees, label_range, Color, ColoredTree, Permutation, Scheme};

use crate::space::{graft, relabel_with_locals, Space, Stratum};
use crate::StratError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    /// A truncated manifold operad; its spaces are red.
    Operad,
    /// A truncated bimodule cobordism `W` from the operad `B` (acting on the
    /// left) to the operad `R` (acting on the right).
    Bimodule,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Operad => "operad",
            ModelKind::Bimodule => "bimodule",
        })
    }
}

/// A cell model of dimension `d`, truncated at arity `n`.
///
/// For a bimodule, `truncation` bounds the white spaces; the operads `B` and
/// `R` may carry spaces of higher arity (surgery needs the operad it keeps
/// one arity further).
#[derive(Clone, Debug)]
pub struct CellModel {
    name: String,
    kind: ModelKind,
    dimension: usize,
    truncation: usize,
    spaces: BTreeMap<(Color, usize), Space>,
}

impl CellModel {
    pub fn new(name: &str, kind: ModelKind, dimension: usize, truncation: usize, spaces: Vec<Space>) -> Self {
        CellModel {
            name: name.to_string(),
            kind,
            dimension,
            truncation,
            spaces: spaces.into_iter().map(|s| ((s.color(), s.arity()), s)).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn spaces(&self) -> impl Iterator<Item = &Space> {
        self.spaces.values()
    }

    pub fn get_space(&self, color: Color, arity: usize) -> Option<&Space> {
        self.spaces.get(&(color, arity))
    }

    pub fn space(&self, color: Color, arity: usize) -> Result<&Space, StratError> {
        self.get_space(color, arity).ok_or(StratError::MissingArity { color, arity })
    }

    /// The model with `space` added (replacing any space of the same color
    /// and arity). A white space above the truncation raises it.
    pub fn with_space(&self, space: Space) -> CellModel {
        let mut m = self.clone();
        if space.color() == Color::W || m.kind == ModelKind::Operad {
            m.truncation = m.truncation.max(space.arity());
        }
        m.spaces.insert((space.color(), space.arity()), space);
        m
    }

    pub fn renamed(&self, name: &str) -> CellModel {
        CellModel { name: name.to_string(), ..self.clone() }
    }

    /// The model without the `color` spaces of arity `from` and above.
    pub(crate) fn without_arities(&self, color: Color, from: usize) -> CellModel {
        let mut m = self.clone();
        m.spaces.retain(|&(c, a), _| c != color || a < from);
        m
    }

    /// The decomposable trees indexing the strata of `C(m)`: all
    /// single-colored trees other than the corolla for an operad color, all
    /// RBW trees other than `•_W` for the white color.
    pub fn index_trees(&self, color: Color, m: usize) -> Result<Vec<ColoredTree>, StratError> {
        let labels = label_range(m);
        Ok(match color {
            Color::W => {
                enumerate_colored(&labels, Scheme::Rbw)?.into_iter().filter(|t| !t.is_corolla_of(Color::W)).collect()
            }
            c => enumerate_trees(&labels)?
                .into_iter()
                .filter(|t| t.vertex_count() > 1)
                .map(|t| {
                    let k = t.vertex_count();
                    ColoredTree::new(t, vec![c; k], Scheme::Rbw)
                })
                .collect::<Result<_, _>>()?,
        })
    }

    /// The space a vertex of a stratum tree takes its cells from.
    pub(crate) fn vertex_space(&self, tree: &ColoredTree, v: usize) -> Result<&Space, StratError> {
        self.space(tree.color(v), tree.tree().arity(v))
    }

    /// Normal form of a tuple of arbitrary cells over the vertices of `tree`:
    /// every coordinate lying in a boundary stratum of its vertex space is
    /// replaced by that stratum's tree, until all coordinates are interior.
    /// This is the attachment map of `tree` evaluated on the tuple.
    pub fn normalize(&self, tree: &ColoredTree, cells: &[usize]) -> Result<(ColoredTree, Vec<usize>), StratError> {
        let mut tree = tree.clone();
        let mut cells = cells.to_vec();
        loop {
            let mut hit = None;
            for v in 0..tree.vertex_count() {
                let sp = self.vertex_space(&tree, v)?;
                if cells[v] >= sp.len() {
                    return Err(StratError::Inconsistent(format!("cell {} out of range in {}", cells[v], tree)));
                }
                if let Stratum::Boundary { tree: inner, cells: inner_cells } = sp.stratum(cells[v]) {
                    hit = Some((v, inner.clone(), inner_cells.clone()));
                    break;
                }
            }
            let Some((v, inner, inner_cells)) = hit else { return Ok((tree, cells)) };
            let (grafted, outer, inner_map) = graft(&tree, v, &inner)?;
            let mut next = vec![0; grafted.vertex_count()];
            for (w, o) in outer.iter().enumerate() {
                if let Some(o) = o {
                    next[*o] = cells[w];
                }
            }
            for (u, &i) in inner_map.iter().enumerate() {
                next[i] = inner_cells[u];
            }
            tree = grafted;
            cells = next;
        }
    }

    /// The image of a stratum `(tree, cells)` under `g ∈ Σ_m`: the relabeled
    /// tree with every vertex cell moved by the induced permutation of that
    /// vertex's inputs.
    pub fn act_stratum(
        &self,
        g: &Permutation,
        tree: &ColoredTree,
        cells: &[usize],
    ) -> Result<(ColoredTree, Vec<usize>), StratError> {
        let (gt, vmap, locals) = relabel_with_locals(tree, g)?;
        let mut out = vec![0; cells.len()];
        for v in 0..tree.vertex_count() {
            let sp = self.vertex_space(tree, v)?;
            out[vmap[v]] = sp.action_of(&locals[v])[cells[v]];
        }
        Ok((gt, out))
    }

    pub fn to_json(&self) -> ModelJson {
        ModelJson {
            name: self.name.clone(),
            kind: self.kind,
            dimension: self.dimension,
            truncation: self.truncation,
            spaces: self
                .spaces
                .values()
                .map(|s| SpaceJson {
                    color: s.color(),
                    arity: s.arity(),
                    poset: PosetJson::from(s.poset()),
                    action: s.action().to_vec(),
                    strata: s.strata().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ModelJson) -> Result<CellModel, StratError> {
        let spaces = json
            .spaces
            .iter()
            .map(|s| Space::new(s.color, s.arity, s.poset.to_poset()?, s.action.clone(), s.strata.clone()))
            .collect::<Result<Vec<_>, StratError>>()?;
        Ok(CellModel::new(&json.name, json.kind, json.dimension, json.truncation, spaces))
    }
}

/// Serialized model: face posets, action tables and stratum tags (which
/// determine the attachment maps).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub name: String,
    pub kind: ModelKind,
    pub dimension: usize,
    pub truncation: usize,
    pub spaces: Vec<SpaceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub color: Color,
    pub arity: usize,
    pub poset: PosetJson,
    /// Row `p.rank()` lists the images of all cells under `p`.
    pub action: Vec<Vec<usize>>,
    pub strata: Vec<Stratum>,
}
