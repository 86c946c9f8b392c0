//! Surgery: extending a truncated bimodule cobordism by one arity while
//! replacing one of its two operads in that arity.

use std::collections::HashMap;

use posetkit::FinPoset;
use serde::{Deserialize, Serialize};
use treekit::Color;

use crate::colimit::{boundary_colimit, Flavor};
use crate::model::{CellModel, ModelKind};
use crate::space::{corolla, Space, Stratum};
use crate::validate::validate_model;
use crate::StratError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Replace the left operad `B` in the new arity, keeping `R`.
    Left,
    /// Replace the right operad `R` in the new arity, keeping `B`.
    Right,
}

impl Side {
    /// `(replaced, kept, flavor)`.
    fn roles(self) -> (Color, Color, Flavor) {
        match self {
            Side::Left => (Color::B, Color::R, Flavor::LeftPart),
            Side::Right => (Color::R, Color::B, Flavor::RightPart),
        }
    }
}

/// Cells of the collared complex `C′ = C ∪_D D × [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Collared {
    /// A cell of `C`.
    Base(usize),
    /// `d × (0, 1)` for a cell `d` of `D`.
    Collar(usize),
    /// `d × {1}`.
    End(usize),
}

/// Position on the interval factor of `X = C′ × [0, 1]`.
const LOW: usize = 0;
const HIGH: usize = 1;
const MID: usize = 2;

/// Left surgery: see [`extend`].
pub fn extend_left(model: &CellModel) -> Result<CellModel, StratError> {
    extend(model, Side::Left)
}

/// Right surgery: see [`extend`].
pub fn extend_right(model: &CellModel) -> Result<CellModel, StratError> {
    extend(model, Side::Right)
}

/// Extends a bimodule cobordism truncated at `l` to arity `m = l + 1`.
///
/// With `P` the replaced operad and `K` the kept one (which must have a
/// space in arity `m`), let `C` be the colimit over all trees other than
/// `•_W` and `•_P`, and `D ⊂ C` the part indexed by decomposable `P`-trees
/// (a copy of the boundary of the would-be `P(m)`). Attaching an exterior
/// collar `D × [0, 1]` to `C` along `D` gives `C′ ≃ C` whose boundary is the
/// far end of the collar. The new white space is `W′(m) = C′ × [0, 1]`; the
/// new `P′(m)` is the closure of `∂W′(m) ∖ C × {1}`, i.e.
/// `C′ × {0} ∪ ∂C′ × [0, 1] ∪ (D × [0, 1]) × {1}`, whose boundary is
/// `D × {1}` with its original strata. Input and output are validated.
pub fn extend(model: &CellModel, side: Side) -> Result<CellModel, StratError> {
    if model.kind() != ModelKind::Bimodule {
        return Err(StratError::WrongKind { flavor: side.roles().2, kind: model.kind() });
    }
    let input = validate_model(model);
    if !input.ok {
        return Err(StratError::Invalid(Box::new(input)));
    }
    let m = model.truncation() + 1;
    if m > 5 {
        return Err(StratError::TruncationOutOfRange(m));
    }
    let (replaced, kept, flavor) = side.roles();
    model.space(kept, m)?;
    let base = model.without_arities(replaced, m);
    let c = boundary_colimit(&base, m, flavor)?;

    let in_d: Vec<bool> = c
        .provenance
        .iter()
        .map(|s| match s {
            Stratum::Boundary { tree, .. } => tree.count_colors(&[replaced]) == tree.vertex_count(),
            Stratum::Interior => false,
        })
        .collect();

    // The collared complex C′.
    let mut cells: Vec<Collared> = (0..c.len()).map(Collared::Base).collect();
    for d in (0..c.len()).filter(|&d| in_d[d]) {
        cells.push(Collared::Collar(d));
        cells.push(Collared::End(d));
    }
    let pos: HashMap<Collared, usize> = cells.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut rel = Vec::new();
    for (a, b) in c.poset.covers() {
        rel.push((pos[&Collared::Base(a)], pos[&Collared::Base(b)]));
        if in_d[a] && in_d[b] {
            rel.push((pos[&Collared::Collar(a)], pos[&Collared::Collar(b)]));
            rel.push((pos[&Collared::End(a)], pos[&Collared::End(b)]));
        }
    }
    for d in (0..c.len()).filter(|&d| in_d[d]) {
        rel.push((pos[&Collared::Base(d)], pos[&Collared::Collar(d)]));
        rel.push((pos[&Collared::End(d)], pos[&Collared::Collar(d)]));
    }
    let collared = FinPoset::from_relations(cells.len(), &rel)?;
    let move_cell = |row: &[usize], x: Collared| match x {
        Collared::Base(a) => Collared::Base(row[a]),
        Collared::Collar(a) => Collared::Collar(row[a]),
        Collared::End(a) => Collared::End(row[a]),
    };

    // X = C′ × [0, 1], cell (a, t) at index 3a + t.
    let n = 3 * cells.len();
    let mut rel = Vec::new();
    for (a, b) in collared.covers() {
        for t in [LOW, HIGH, MID] {
            rel.push((3 * a + t, 3 * b + t));
        }
    }
    for a in 0..cells.len() {
        rel.push((3 * a + LOW, 3 * a + MID));
        rel.push((3 * a + HIGH, 3 * a + MID));
    }
    let x_poset = FinPoset::from_relations(n, &rel)?;
    let x_action: Vec<Vec<usize>> =
        c.action.iter().map(|row| (0..n).map(|i| 3 * pos[&move_cell(row, cells[i / 3])] + i % 3).collect()).collect();
    let c_name = |x: Collared| match x {
        Collared::Base(a) => c.poset.name(a).to_string(),
        Collared::Collar(a) => format!("{}×(0,1)", c.poset.name(a)),
        Collared::End(a) => format!("{}×1", c.poset.name(a)),
    };
    let x_names: Vec<String> = (0..n)
        .map(|i| {
            let t = ["0", "1", "I"][i % 3];
            format!("({},{t})", c_name(cells[i / 3]))
        })
        .collect();

    // The new replaced space.
    let in_p = |i: usize| match (cells[i / 3], i % 3) {
        (_, LOW) => true,
        (Collared::End(_), _) => true,
        (Collared::Collar(_), HIGH) => true,
        (Collared::Base(a), HIGH) => in_d[a],
        _ => false,
    };
    let p_cells: Vec<usize> = (0..n).filter(|&i| in_p(i)).collect();
    let p_index: HashMap<usize, usize> = p_cells.iter().enumerate().map(|(j, &i)| (i, j)).collect();
    let p_strata: Vec<Stratum> = p_cells
        .iter()
        .map(|&i| match (cells[i / 3], i % 3) {
            (Collared::Base(a), HIGH) => c.provenance[a].clone(),
            _ => Stratum::Interior,
        })
        .collect();
    let p_action = x_action.iter().map(|row| p_cells.iter().map(|&i| p_index[&row[i]]).collect()).collect();
    let p_poset = x_poset.induced(&p_cells).with_names(p_cells.iter().map(|&i| x_names[i].clone()).collect());
    let p_space = Space::new(replaced, m, p_poset, p_action, p_strata)?;

    // The new white space.
    let p_corolla = corolla(m, replaced)?;
    let w_strata: Vec<Stratum> = (0..n)
        .map(|i| match (cells[i / 3], i % 3) {
            (Collared::Base(a), HIGH) => c.provenance[a].clone(),
            _ if in_p(i) => Stratum::Boundary { tree: p_corolla.clone(), cells: vec![p_index[&i]] },
            _ => Stratum::Interior,
        })
        .collect();
    let w_poset = x_poset.with_names(x_names);
    let w_space = Space::new(Color::W, m, w_poset, x_action, w_strata)?;

    let out = base.with_space(p_space).with_space(w_space).renamed(&format!(
        "{}+{}",
        model.name(),
        if side == Side::Left { "L" } else { "R" }
    ));
    let report = validate_model(&out);
    if !report.ok {
        return Err(StratError::OutputInvalid(Box::new(report)));
    }
    Ok(out)
}
