//! Recognition of low-dimensional complexes, freeness of the symmetric
//! group action, and cone filling of circles.

use std::collections::HashMap;

use posetkit::{order_complex, FinPoset};
use serde::Serialize;
use treekit::Color;

use crate::colimit::EquivariantComplex;
use crate::space::{Space, Stratum};
use crate::StratError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureKind {
    Empty,
    /// A finite set of points.
    Points,
    /// A disjoint union of circles.
    Circles,
    /// A closed surface (every vertex link is a single cycle).
    ClosedSurface,
    /// Not a closed manifold of its dimension.
    NotManifold,
    /// Dimension three or more: only invariants are reported.
    Unsupported,
}

#[derive(Clone, Debug, Serialize)]
pub struct Recognition {
    pub kind: StructureKind,
    pub dim: Option<usize>,
    pub cells: usize,
    pub f_vector: Vec<usize>,
    pub euler: i64,
    pub components: usize,
    pub component_sizes: Vec<usize>,
    /// Mod-2 Betti numbers of the order complex.
    pub betti: Vec<usize>,
    /// Why the complex is not a manifold, when it is not.
    pub witness: Option<String>,
}

/// Classifies a complex of dimension at most two from its face poset.
pub fn recognize(cx: &EquivariantComplex) -> Recognition {
    let p = &cx.poset;
    let components = p.components();
    let mut component_sizes: Vec<usize> = components.iter().map(Vec::len).collect();
    component_sizes.sort_unstable();
    let dim = (!p.is_empty()).then(|| p.max_dim() as usize);
    let (kind, witness) = match dim {
        None => (StructureKind::Empty, None),
        Some(0) => (StructureKind::Points, None),
        Some(1) => match curve_defect(p) {
            None => (StructureKind::Circles, None),
            Some(w) => (StructureKind::NotManifold, Some(w)),
        },
        Some(2) => match surface_defect(p) {
            None => (StructureKind::ClosedSurface, None),
            Some(w) => (StructureKind::NotManifold, Some(w)),
        },
        Some(_) => (StructureKind::Unsupported, None),
    };
    Recognition {
        kind,
        dim,
        cells: p.len(),
        f_vector: p.f_vector(),
        euler: p.cell_euler(),
        components: components.len(),
        component_sizes,
        betti: gf2homology::betti(&order_complex(p)),
        witness,
    }
}

fn curve_defect(p: &FinPoset) -> Option<String> {
    for v in (0..p.len()).filter(|&v| p.dim(v) == 0) {
        let k = p.upper_covers(v).len();
        if k != 2 {
            return Some(format!("vertex {} lies on {k} edges", p.name(v)));
        }
    }
    None
}

fn surface_defect(p: &FinPoset) -> Option<String> {
    for e in (0..p.len()).filter(|&e| p.dim(e) == 1) {
        let k = p.upper_covers(e).len();
        if k != 2 {
            return Some(format!("edge {} lies on {k} faces", p.name(e)));
        }
    }
    for v in (0..p.len()).filter(|&v| p.dim(v) == 0) {
        let edges = p.upper_covers(v);
        if edges.is_empty() {
            return Some(format!("vertex {} is isolated", p.name(v)));
        }
        // The link of v: its edges, joined through the faces containing v.
        let slot: HashMap<usize, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut parent: Vec<usize> = (0..edges.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let faces: Vec<usize> = p.strictly_above(v).into_iter().filter(|&f| p.dim(f) == 2).collect();
        for f in faces {
            let through: Vec<usize> = p.lower_covers(f).iter().filter_map(|e| slot.get(e).copied()).collect();
            if through.len() != 2 {
                return Some(format!("face {} meets vertex {} in {} edges", p.name(f), p.name(v), through.len()));
            }
            let (a, b) = (find(&mut parent, through[0]), find(&mut parent, through[1]));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        if (0..edges.len()).any(|i| find(&mut parent, i) != root) {
            return Some(format!("the link of vertex {} is not a single cycle", p.name(v)));
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedCell {
    /// Images of `1..=m`.
    pub permutation: Vec<u32>,
    pub cell: String,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreeActionReport {
    pub group_order: usize,
    pub free: bool,
    /// Number of pairs (non-identity permutation, cell it fixes).
    pub fixed_count: usize,
    /// The first few such pairs.
    pub fixed: Vec<FixedCell>,
}

/// Whether `Σ_m` acts freely: no non-identity permutation fixes a cell.
/// On a regular CW complex with a cellular action this is freeness of the
/// action on points.
pub fn free_action_check(cx: &EquivariantComplex) -> FreeActionReport {
    let group = cx.group();
    let mut fixed = Vec::new();
    let mut fixed_count = 0;
    for g in group.iter().filter(|g| !g.is_identity()) {
        for (c, &gc) in cx.action_of(g).iter().enumerate() {
            if gc == c {
                fixed_count += 1;
                if fixed.len() < 16 {
                    fixed.push(FixedCell {
                        permutation: g.images(),
                        cell: cx.poset.name(c).to_string(),
                        dim: cx.poset.dim(c),
                    });
                }
            }
        }
    }
    FreeActionReport { group_order: group.len(), free: fixed_count == 0, fixed_count, fixed }
}

/// Fills every circle of a disjoint union of circles with a disc: the
/// result is a white space whose boundary is the input (every input cell
/// must carry a boundary stratum) and whose interior is one 2-cell per
/// circle, permuted as the circles are.
pub fn cone_fill(cx: &EquivariantComplex) -> Result<Space, StratError> {
    let rec = recognize(cx);
    if rec.kind != StructureKind::Circles {
        return Err(StratError::NotCircles(
            rec.witness.unwrap_or_else(|| format!("{:?} of dimension {:?}", rec.kind, rec.dim)),
        ));
    }
    if cx.provenance.contains(&Stratum::Interior) {
        return Err(StratError::Inconsistent("every boundary cell needs a stratum".into()));
    }
    let n = cx.len();
    let components = cx.components();
    let mut component_of = vec![0; n];
    for (k, comp) in components.iter().enumerate() {
        for &c in comp {
            component_of[c] = k;
        }
    }
    let mut relations = cx.poset.covers();
    for (k, comp) in components.iter().enumerate() {
        relations.extend(comp.iter().map(|&c| (c, n + k)));
    }
    let mut names = cx.poset.names().to_vec();
    names.extend((0..components.len()).map(|k| format!("D{k}")));
    let poset = FinPoset::from_relations(n + components.len(), &relations)?.with_names(names);
    let action = cx
        .action
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.extend(components.iter().map(|comp| n + component_of[row[comp[0]]]));
            r
        })
        .collect();
    let mut strata = cx.provenance.clone();
    strata.extend(std::iter::repeat_n(Stratum::Interior, components.len()));
    Space::new(Color::W, cx.arity, poset, action, strata)
}
