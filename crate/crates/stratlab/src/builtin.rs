//! Built-in models: the Fulton–MacPherson operad in dimension one, the
//! interval nullbordism, its mirror, and the trivial cylinder bimodule.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use posetkit::FinPoset;
use treekit::{
    contraction_between, enumerate_trees, label_range, Color, ColoredTree, Label, LabeledTree, Scheme, Slot,
};

use crate::colimit::cell_name;
use crate::model::{CellModel, ModelKind};
use crate::space::{corolla, slot_keys, symmetric_group, Space, Stratum};
use crate::StratError;

/// Left-to-right leaf words of all planar structures on the subtree at `v`.
fn planar_words(t: &LabeledTree, v: usize) -> Vec<Vec<Label>> {
    let parts: Vec<Vec<Vec<Label>>> = t
        .slots(v)
        .into_iter()
        .map(|s| match s {
            Slot::Label(l) => vec![vec![l]],
            Slot::Child(c) => planar_words(t, c),
        })
        .collect();
    let mut out = Vec::new();
    for order in (0..parts.len()).permutations(parts.len()) {
        for pick in order.iter().map(|&i| parts[i].iter()).multi_cartesian_product() {
            out.push(pick.into_iter().flatten().copied().collect());
        }
    }
    out
}

/// `FM₁(m)`: one cell per pair (tree, leaf word) with every vertex's leaves
/// contiguous in the word, i.e. per planar tree. The cells of one word form
/// an associahedron; `(T, w) ≤ (T′, w)` iff `T` contracts onto `T′`.
/// `corollas[k]` maps the words of the interior cells of `FM₁(k)`, `k < m`,
/// to their indices.
fn fm1_space(
    m: usize,
    corollas: &BTreeMap<usize, HashMap<Vec<Label>, usize>>,
) -> Result<(Space, HashMap<Vec<Label>, usize>), StratError> {
    let labels = label_range(m);
    let trees: Vec<ColoredTree> = enumerate_trees(&labels)?
        .into_iter()
        .map(|t| {
            let k = t.vertex_count();
            ColoredTree::new(t, vec![Color::R; k], Scheme::Rbw)
        })
        .collect::<Result<_, _>>()?;
    let mut cells: Vec<(Vec<Label>, ColoredTree)> = Vec::new();
    for t in &trees {
        for w in planar_words(t.tree(), t.tree().root()) {
            cells.push((w, t.clone()));
        }
    }
    cells.sort_by(|a, b| (&a.0, a.1.vertex_count(), &a.1).cmp(&(&b.0, b.1.vertex_count(), &b.1)));
    let index: HashMap<(Vec<Label>, ColoredTree), usize> =
        cells.iter().enumerate().map(|(i, (w, t))| ((w.clone(), t.clone()), i)).collect();

    let mut relations = Vec::new();
    for (_, group) in &(0..cells.len()).chunk_by(|&i| cells[i].0.clone()) {
        let group: Vec<usize> = group.collect();
        for &a in &group {
            for &b in &group {
                if a != b && contraction_between(&cells[a].1, &cells[b].1).is_some() {
                    relations.push((a, b));
                }
            }
        }
    }

    let mut strata = Vec::with_capacity(cells.len());
    for (w, t) in &cells {
        if t.vertex_count() == 1 {
            strata.push(Stratum::Interior);
            continue;
        }
        let pos: HashMap<Label, usize> = w.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut vertex_cells = Vec::with_capacity(t.vertex_count());
        for v in 0..t.vertex_count() {
            let keys = slot_keys(t.tree(), v);
            let local: Vec<Label> = (0..keys.len()).sorted_by_key(|&i| pos[&keys[i]]).map(|i| i as Label + 1).collect();
            let cell = corollas
                .get(&keys.len())
                .and_then(|c| c.get(&local))
                .ok_or(StratError::MissingArity { color: Color::R, arity: keys.len() })?;
            vertex_cells.push(*cell);
        }
        strata.push(Stratum::Boundary { tree: t.clone(), cells: vertex_cells });
    }

    let action = symmetric_group(m)
        .iter()
        .map(|g| {
            cells
                .iter()
                .map(|(w, t)| {
                    let gw: Vec<Label> = w.iter().map(|&l| g.apply(l)).collect();
                    let gt = t.relabel(&|l| g.apply(l))?.0;
                    Ok(index[&(gw, gt)])
                })
                .collect::<Result<Vec<_>, StratError>>()
        })
        .collect::<Result<_, _>>()?;
    let names = cells.iter().map(|(w, t)| format!("{}|{}", t.compact(), w.iter().join(""))).collect();
    let poset = FinPoset::from_relations(cells.len(), &relations)?.with_names(names);
    let words = cells
        .iter()
        .enumerate()
        .filter(|(_, (_, t))| t.vertex_count() == 1)
        .map(|(i, (w, _))| (w.clone(), i))
        .collect();
    Ok((Space::new(Color::R, m, poset, action, strata)?, words))
}

fn fm1_spaces(n: usize) -> Result<Vec<Space>, StratError> {
    let mut corollas = BTreeMap::new();
    let mut spaces = Vec::new();
    for m in 2..=n {
        let (sp, words) = fm1_space(m, &corollas)?;
        corollas.insert(m, words);
        spaces.push(sp);
    }
    Ok(spaces)
}

/// The Fulton–MacPherson operad in dimension one, truncated at `n`
/// (`2 ≤ n ≤ 5`): arity `m` is `m!` associahedra of dimension `m − 2`,
/// permuted by `Σ_m`.
pub fn fm1_model(n: usize) -> Result<CellModel, StratError> {
    if !(2..=5).contains(&n) {
        return Err(StratError::TruncationOutOfRange(n));
    }
    Ok(CellModel::new("fm1", ModelKind::Operad, 1, n, fm1_spaces(n)?))
}

/// The empty space of the trivial operad.
pub fn trivial_operad_space(color: Color, m: usize) -> Space {
    Space::empty(color, m)
}

/// `D¹` with the antipodal action, its two endpoints being the two points of
/// the operad space `end` (of arity two).
fn interval(end: &Space) -> Result<Space, StratError> {
    if end.len() != 2 || end.interior_cells().len() != 2 {
        return Err(StratError::BadSpace(format!("{}(2)", end.color()), "expected two points".into()));
    }
    let tree = corolla(2, end.color())?;
    let strata = vec![
        Stratum::Boundary { tree: tree.clone(), cells: vec![0] },
        Stratum::Boundary { tree: tree.clone(), cells: vec![1] },
        Stratum::Interior,
    ];
    let action = symmetric_group(2)
        .iter()
        .map(|g| {
            let row = end.action_of(g);
            vec![row[0], row[1], 2]
        })
        .collect();
    let names = vec![cell_name(&tree, &[0]), cell_name(&tree, &[1]), "D1".to_string()];
    let poset = FinPoset::from_relations(3, &[(0, 2), (1, 2)])?.with_names(names);
    Space::new(Color::W, 2, poset, action, strata)
}

/// The 2-truncated bimodule cobordism with `R = FM₁` (up to arity 4),
/// `B` the trivial operad, and `W(2) = D¹` with the antipodal action, its
/// endpoints being the two points of `R(2)`.
pub fn interval_nullbordism_model() -> Result<CellModel, StratError> {
    let r = fm1_spaces(4)?;
    let w2 = interval(&r[0])?;
    let mut spaces = r;
    spaces.extend((2..=4).map(|m| trivial_operad_space(Color::B, m)));
    spaces.push(w2);
    Ok(CellModel::new("interval", ModelKind::Bimodule, 1, 2, spaces))
}

/// The mirror roles: `B = FM₁` (up to arity 4) acting on the left, `R` the
/// trivial operad, `W(2) = D¹` with endpoints the two points of `B(2)`. Right
/// surgery on this model is the first step of the nullbordism chain.
pub fn null_surgery_model() -> Result<CellModel, StratError> {
    let b = fm1_spaces(4)?.iter().map(|s| s.recolored(Color::B)).collect::<Result<Vec<_>, _>>()?;
    let w2 = interval(&b[0])?;
    let mut spaces = b;
    spaces.push(trivial_operad_space(Color::R, 2));
    spaces.push(w2);
    Ok(CellModel::new("null", ModelKind::Bimodule, 1, 2, spaces))
}

/// The trivial 2-truncated bimodule cobordism `O(2) × [0,1]` over an operad
/// model `O`: `B = O` and `R = O` at every arity, and
/// `W(2) = O(2) × I` with `O(2) × {0}` the copy of `B(2)` and `O(2) × {1}`
/// the copy of `R(2)`.
pub fn trivial_bimodule_model(op: &CellModel) -> Result<CellModel, StratError> {
    if op.kind() != ModelKind::Operad {
        return Err(StratError::WrongKind { flavor: crate::Flavor::Operad, kind: op.kind() });
    }
    let o2 = op.space(Color::R, 2)?;
    if !o2.boundary_cells().is_empty() {
        return Err(StratError::BadSpace("O(2)".into(), "arity two must have no boundary strata".into()));
    }
    let n = o2.len();
    // Cell (c, t) has index 3c + t with t = 0, 1 (ends) and 2 (interior).
    let mut relations = Vec::new();
    for (a, b) in o2.poset().covers() {
        for t in 0..3 {
            relations.push((3 * a + t, 3 * b + t));
        }
    }
    for c in 0..n {
        relations.push((3 * c, 3 * c + 2));
        relations.push((3 * c + 1, 3 * c + 2));
    }
    let (bt, rt) = (corolla(2, Color::B)?, corolla(2, Color::R)?);
    let mut strata = Vec::with_capacity(3 * n);
    let mut names = Vec::with_capacity(3 * n);
    for c in 0..n {
        strata.push(Stratum::Boundary { tree: bt.clone(), cells: vec![c] });
        strata.push(Stratum::Boundary { tree: rt.clone(), cells: vec![c] });
        strata.push(Stratum::Interior);
        names.push(cell_name(&bt, &[c]));
        names.push(cell_name(&rt, &[c]));
        names.push(format!("{}×I", o2.poset().name(c)));
    }
    let action = o2.action().iter().map(|row| (0..3 * n).map(|i| 3 * row[i / 3] + i % 3).collect()).collect();
    let poset = FinPoset::from_relations(3 * n, &relations)?.with_names(names);
    let w2 = Space::new(Color::W, 2, poset, action, strata)?;
    let mut spaces = op.spaces().map(|s| s.recolored(Color::B)).collect::<Result<Vec<_>, _>>()?;
    spaces.extend(op.spaces().cloned());
    spaces.push(w2);
    Ok(CellModel::new(&format!("trivial-{}", op.name()), ModelKind::Bimodule, op.dimension(), 2, spaces))
}
