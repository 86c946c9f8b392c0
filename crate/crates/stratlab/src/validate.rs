//! Validation of cell models against the manifold operad and bimodule
//! cobordism axioms, at the level of face posets.

use std::collections::{HashMap, HashSet};
use std::fmt;

use posetkit::FinPoset;
use serde::Serialize;
use treekit::{contraction_between, label_range, Color, ColoredTree, Permutation};

use crate::colimit::{cell_name, complex_on, strata_of};
use crate::ledger::{dimension_ledger, LedgerKind};
use crate::model::{CellModel, ModelKind};
use crate::space::{symmetric_group, Space, Stratum};
use crate::StratError;

/// At most this many violations of one kind are itemized per space.
const MAX_PER_KIND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// A required space is absent.
    MissingSpace,
    /// The action table is not an action of `Σ_m` by poset automorphisms.
    Action,
    /// Stratum tags do not commute with the action.
    Equivariance,
    /// Boundary cells are not in bijection with the strata of the index trees.
    Strata,
    /// A face of a boundary cell is interior.
    Closure,
    /// The boundary subposet differs from the poset colimit of the attachment diagram.
    Colimit,
    /// Two attachment images meet outside the images of their common refinements.
    Intersection,
    /// The top cell dimension differs from the dimension ledger.
    Dimension,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub color: Color,
    pub arity: usize,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaceSummary {
    pub color: Color,
    pub arity: usize,
    pub cells: usize,
    pub interior: usize,
    pub f_vector: Vec<usize>,
    pub euler: i64,
    pub top_dim: Option<usize>,
    pub expected_dim: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub model: String,
    pub spaces: Vec<SpaceSummary>,
    pub violations: Vec<Violation>,
    pub ok: bool,
}

impl ValidationReport {
    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} violation(s)", self.model, self.violations.len())?;
        if let Some(v) = self.violations.first() {
            write!(f, "; first: {:?} in {}({}): {}", v.kind, v.color, v.arity, v.detail)?;
        }
        Ok(())
    }
}

struct Sink<'a> {
    color: Color,
    arity: usize,
    counts: HashMap<ViolationKind, usize>,
    out: &'a mut Vec<Violation>,
}

impl Sink<'_> {
    fn push(&mut self, kind: ViolationKind, detail: String) {
        let n = self.counts.entry(kind).or_insert(0);
        *n += 1;
        if *n <= MAX_PER_KIND {
            self.out.push(Violation { color: self.color, arity: self.arity, kind, detail });
        }
    }
}

fn expected_dim(model: &CellModel, color: Color, m: usize) -> i64 {
    let kind = if color == Color::W { LedgerKind::Bimodule } else { LedgerKind::Operad };
    dimension_ledger(model.dimension(), m, kind)
}

/// Checks every invariant of a cell model: action by automorphisms,
/// equivariance of the stratification, stratum tags in bijection with the
/// strata of the index trees, closed attachment images meeting only along
/// common refinements, boundary subposet equal to the poset colimit of the
/// attachment diagram, and top cell dimensions from the ledger.
pub fn validate_model(model: &CellModel) -> ValidationReport {
    let mut violations = Vec::new();
    let colors: &[Color] = match model.kind() {
        ModelKind::Operad => &[Color::R],
        ModelKind::Bimodule => &[Color::R, Color::B, Color::W],
    };
    for &c in colors {
        for m in 2..=model.truncation() {
            if model.get_space(c, m).is_none() {
                violations.push(Violation {
                    color: c,
                    arity: m,
                    kind: ViolationKind::MissingSpace,
                    detail: format!("{c}({m}) is required up to the truncation"),
                });
            }
        }
    }
    let mut spaces = Vec::new();
    for sp in model.spaces() {
        let mut sink = Sink { color: sp.color(), arity: sp.arity(), counts: HashMap::new(), out: &mut violations };
        check_space(model, sp, &mut sink);
        let expected = expected_dim(model, sp.color(), sp.arity());
        spaces.push(SpaceSummary {
            color: sp.color(),
            arity: sp.arity(),
            cells: sp.len(),
            interior: sp.interior_cells().len(),
            f_vector: sp.poset().f_vector(),
            euler: sp.poset().cell_euler(),
            top_dim: sp.top_dim(),
            expected_dim: expected,
        });
    }
    let ok = violations.is_empty();
    ValidationReport { model: model.name().to_string(), spaces, violations, ok }
}

fn check_space(model: &CellModel, sp: &Space, sink: &mut Sink<'_>) {
    let m = sp.arity();
    if let Some(top) = sp.top_dim() {
        let expected = expected_dim(model, sp.color(), m);
        if top as i64 != expected {
            sink.push(ViolationKind::Dimension, format!("top cell dimension {top}, ledger says {expected}"));
        }
    }
    check_action(sp, sink);
    let Some(keys) = check_strata(model, sp, sink) else { return };
    check_closure(sp, sink);
    check_equivariance(model, sp, sink);
    check_colimit(model, sp, &keys, sink);
    check_intersections(sp, &keys, sink);
}

fn adjacent_transpositions(m: usize) -> Vec<Permutation> {
    let labels = label_range(m);
    (1..m as u32).map(|i| Permutation::transposition(&labels, i, i + 1)).collect()
}

fn check_action(sp: &Space, sink: &mut Sink<'_>) {
    let n = sp.len();
    let p = sp.poset();
    let covers = p.covers();
    for (r, row) in sp.action().iter().enumerate() {
        let mut seen = vec![false; n];
        for &x in row {
            seen[x] = true;
        }
        if seen.iter().any(|s| !s) {
            sink.push(ViolationKind::Action, format!("row {r} is not a bijection"));
            continue;
        }
        if let Some(&(a, b)) = covers.iter().find(|&&(a, b)| !p.lt(row[a], row[b])) {
            sink.push(ViolationKind::Action, format!("row {r} breaks the relation {} < {}", p.name(a), p.name(b)));
        }
        if (0..n).any(|c| p.dim(row[c]) != p.dim(c)) {
            sink.push(ViolationKind::Action, format!("row {r} changes a cell dimension"));
        }
    }
    if sp.action()[0].iter().enumerate().any(|(c, &x)| c != x) {
        sink.push(ViolationKind::Action, "the identity does not act trivially".into());
    }
    for g in symmetric_group(sp.arity()) {
        for s in adjacent_transpositions(sp.arity()) {
            let gs = g.compose(&s);
            let (a, b, c) = (sp.action_of(&gs), sp.action_of(&g), sp.action_of(&s));
            if (0..n).any(|x| a[x] != b[c[x]]) {
                sink.push(
                    ViolationKind::Action,
                    format!("the table is not a homomorphism at {:?}∘{:?}", g.images(), s.images()),
                );
            }
        }
    }
}

/// Checks the tags and returns the expected strata (in index-tree order), or
/// `None` when the tags are too broken to compare posets.
fn check_strata(model: &CellModel, sp: &Space, sink: &mut Sink<'_>) -> Option<Vec<(ColoredTree, Vec<usize>)>> {
    let trees = match model.index_trees(sp.color(), sp.arity()) {
        Ok(t) => t,
        Err(e) => {
            sink.push(ViolationKind::Strata, e.to_string());
            return None;
        }
    };
    let expected = match strata_of(model, &trees) {
        Ok(s) => s,
        Err(e) => {
            sink.push(ViolationKind::Strata, e.to_string());
            return None;
        }
    };
    let expected_set: HashSet<&(ColoredTree, Vec<usize>)> = expected.iter().collect();
    let mut seen: HashMap<(ColoredTree, Vec<usize>), usize> = HashMap::new();
    let mut broken = false;
    for c in sp.boundary_cells() {
        let Stratum::Boundary { tree, cells } = sp.stratum(c) else { continue };
        let key = (tree.clone(), cells.clone());
        if !expected_set.contains(&key) {
            sink.push(
                ViolationKind::Strata,
                format!(
                    "cell {} carries {}, not a stratum of an index tree",
                    sp.poset().name(c),
                    cell_name(tree, cells)
                ),
            );
            broken = true;
        }
        if let Some(prev) = seen.insert(key, c) {
            sink.push(
                ViolationKind::Strata,
                format!(
                    "cells {} and {} carry the same stratum {}",
                    sp.poset().name(prev),
                    sp.poset().name(c),
                    cell_name(tree, cells)
                ),
            );
            broken = true;
        }
    }
    for (t, x) in &expected {
        if !seen.contains_key(&(t.clone(), x.clone())) {
            sink.push(ViolationKind::Strata, format!("stratum {} has no cell", cell_name(t, x)));
            broken = true;
        }
    }
    // Duplicated tags still allow the image and intersection checks.
    (!broken || seen.len() == expected.len()).then_some(expected)
}

fn check_closure(sp: &Space, sink: &mut Sink<'_>) {
    for c in sp.boundary_cells() {
        if let Some(f) = sp.poset().strictly_below(c).into_iter().find(|&f| sp.is_interior(f)) {
            sink.push(
                ViolationKind::Closure,
                format!("interior cell {} lies in the boundary cell {}", sp.poset().name(f), sp.poset().name(c)),
            );
        }
    }
}

fn check_equivariance(model: &CellModel, sp: &Space, sink: &mut Sink<'_>) {
    for g in adjacent_transpositions(sp.arity()) {
        let row = sp.action_of(&g);
        for c in 0..sp.len() {
            let ok = match sp.stratum(c) {
                Stratum::Interior => sp.is_interior(row[c]),
                Stratum::Boundary { tree, cells } => match model.act_stratum(&g, tree, cells) {
                    Ok((gt, gx)) => *sp.stratum(row[c]) == Stratum::Boundary { tree: gt, cells: gx },
                    Err(_) => false,
                },
            };
            if !ok {
                sink.push(
                    ViolationKind::Equivariance,
                    format!(
                        "{:?} sends {} to {}, against its stratum",
                        g.images(),
                        sp.poset().name(c),
                        sp.poset().name(row[c])
                    ),
                );
            }
        }
    }
}

fn check_colimit(model: &CellModel, sp: &Space, keys: &[(ColoredTree, Vec<usize>)], sink: &mut Sink<'_>) {
    let cx = match complex_on(model, sp.arity(), keys.to_vec()) {
        Ok(cx) => cx,
        Err(e) => {
            sink.push(ViolationKind::Colimit, e.to_string());
            return;
        }
    };
    let located: Vec<Option<usize>> = keys.iter().map(|(t, x)| sp.lookup(t, x)).collect();
    let p: &FinPoset = sp.poset();
    for i in 0..keys.len() {
        let Some(a) = located[i] else { continue };
        if cx.poset.dim(i) != p.dim(a) {
            sink.push(
                ViolationKind::Colimit,
                format!("{} has dimension {} in the space and {} in the colimit", p.name(a), p.dim(a), cx.poset.dim(i)),
            );
        }
        for j in 0..keys.len() {
            let Some(b) = located[j] else { continue };
            if cx.poset.leq(i, j) != p.leq(a, b) {
                sink.push(
                    ViolationKind::Colimit,
                    format!(
                        "{} ≤ {} is {} in the space but {} in the colimit",
                        p.name(a),
                        p.name(b),
                        p.leq(a, b),
                        cx.poset.leq(i, j)
                    ),
                );
            }
        }
    }
}

fn check_intersections(sp: &Space, keys: &[(ColoredTree, Vec<usize>)], sink: &mut Sink<'_>) {
    let mut trees: Vec<ColoredTree> = keys.iter().map(|(t, _)| t.clone()).collect();
    trees.dedup();
    let n = sp.len();
    let p = sp.poset();
    let image = |t: &ColoredTree| -> Vec<bool> {
        let mut img = vec![false; n];
        for c in sp.boundary_cells() {
            if matches!(sp.stratum(c), Stratum::Boundary { tree, .. } if tree == t) {
                img[c] = true;
                for f in p.strictly_below(c) {
                    img[f] = true;
                }
            }
        }
        img
    };
    let images: Vec<Vec<bool>> = trees.iter().map(image).collect();
    let k = trees.len();
    let refines: Vec<Vec<bool>> = (0..k)
        .map(|a| (0..k).map(|b| a == b || contraction_between(&trees[a], &trees[b]).is_some()).collect())
        .collect();
    for a in 0..k {
        for b in a + 1..k {
            let meet: Vec<bool> = (0..n).map(|c| images[a][c] && images[b][c]).collect();
            let mut common = vec![false; n];
            for t in (0..k).filter(|&t| refines[t][a] && refines[t][b]) {
                for c in 0..n {
                    common[c] |= images[t][c];
                }
            }
            if meet != common {
                let c = (0..n).find(|&c| meet[c] != common[c]).expect("images differ somewhere");
                sink.push(
                    ViolationKind::Intersection,
                    format!(
                        "images of {} and {} {} {}, against their common refinements",
                        trees[a],
                        trees[b],
                        if meet[c] { "share" } else { "miss" },
                        p.name(c)
                    ),
                );
            }
        }
    }
}

/// A copy of the model in which one identification of `C(m)` is dropped: a
/// boundary cell lying in two faces is split into two cells carrying the
/// same stratum, one for each side. Used as a negative control.
pub fn with_dropped_identification(model: &CellModel, color: Color, m: usize) -> Result<CellModel, StratError> {
    let sp = model.space(color, m)?;
    let p = sp.poset();
    let v = sp
        .boundary_cells()
        .into_iter()
        .filter(|&v| p.upper_covers(v).len() >= 2)
        .min_by_key(|&v| (p.dim(v), v))
        .ok_or_else(|| StratError::Inconsistent(format!("{color}({m}) has no boundary cell lying in two faces")))?;
    let split_from = p.upper_covers(v)[0];
    let n = sp.len();
    let mut relations: Vec<(usize, usize)> = p.covers().into_iter().filter(|&r| r != (v, split_from)).collect();
    relations.extend(p.lower_covers(v).iter().map(|&x| (x, n)));
    relations.push((n, split_from));
    let mut names = p.names().to_vec();
    names.push(format!("{}'", p.name(v)));
    let poset = FinPoset::from_relations(n + 1, &relations)?.with_names(names);
    let mut strata = sp.strata().to_vec();
    strata.push(sp.stratum(v).clone());
    let action = sp
        .action()
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.push(n);
            r
        })
        .collect();
    let broken = Space::new(color, m, poset, action, strata)?;
    Ok(model.with_space(broken).renamed(&format!("{}-corrupted", model.name())))
}
