//! Face enumeration by closed tight sets.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use posetkit::FinPoset;

use crate::fm::{solve, Constraint, Relation};
use crate::system::HalfspaceSystem;

/// A nonempty face: the inequalities tight on all of it (closed under implied
/// tightness), a relative-interior witness, and its affine dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub tight: Vec<usize>,
    pub witness: Vec<BigRational>,
    pub dim: usize,
}

/// All faces of a system, ordered by inclusion (`poset` element `i` is `faces[i]`).
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    pub poset: FinPoset,
}

fn constraints(h: &HalfspaceSystem, tight: &[usize], strict: &dyn Fn(usize) -> bool) -> Vec<Constraint> {
    let mut cs: Vec<Constraint> = h
        .inequalities
        .iter()
        .enumerate()
        .map(|(i, q)| Constraint {
            coeffs: q.coeffs.clone(),
            rel: if tight.contains(&i) {
                Relation::Eq
            } else if strict(i) {
                Relation::Lt
            } else {
                Relation::Le
            },
            bound: q.bound.clone(),
        })
        .collect();
    cs.extend(h.equalities.iter().map(|e| Constraint {
        coeffs: e.coeffs.clone(),
        rel: Relation::Eq,
        bound: e.bound.clone(),
    }));
    cs
}

/// The closed tight set and interior witness of the face cut out by `tight`,
/// or `None` if that set is empty.
fn closure(h: &HalfspaceSystem, tight: &[usize]) -> Option<(Vec<usize>, Vec<BigRational>)> {
    if let Some(w) = solve(h.dim, &constraints(h, tight, &|_| true)) {
        return Some((tight.to_vec(), w));
    }
    solve(h.dim, &constraints(h, tight, &|_| false))?;
    let mut closed: Vec<usize> = tight.to_vec();
    for j in 0..h.inequalities.len() {
        if !tight.contains(&j) && solve(h.dim, &constraints(h, tight, &|i| i == j)).is_none() {
            closed.push(j);
        }
    }
    closed.sort_unstable();
    let witness = solve(h.dim, &constraints(h, &closed, &|_| true)).expect("relative interior of a nonempty face");
    Some((closed, witness))
}

/// Rank of a rational matrix.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot[c];
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Affine dimension of the face with closed tight set `tight`.
pub(crate) fn affine_dim(h: &HalfspaceSystem, tight: &[usize]) -> usize {
    let rows: Vec<Vec<BigRational>> = tight
        .iter()
        .map(|&i| h.inequalities[i].coeffs.clone())
        .chain(h.equalities.iter().map(|e| e.coeffs.clone()))
        .collect();
    h.dim - rank(rows)
}

/// All faces `{x ∈ P : fᵢ(x) = bᵢ (i ∈ I)}` with `I ≠ ∅` nonempty, identified
/// by their closed tight sets and ordered by inclusion.
///
/// The whole polyhedron appears only if some inequality is tight on all of it.
pub fn face_lattice(h: &HalfspaceSystem) -> FaceLattice {
    let m = h.inequalities.len();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut faces = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..m).map(|j| vec![j]).collect();
    while let Some(gen) = stack.pop() {
        let Some((closed, witness)) = closure(h, &gen) else { continue };
        if !seen.insert(closed.clone()) {
            continue;
        }
        for j in (0..m).filter(|j| !closed.contains(j)) {
            let mut next = closed.clone();
            next.push(j);
            next.sort_unstable();
            stack.push(next);
        }
        let dim = affine_dim(h, &closed);
        faces.push(Face { tight: closed, witness, dim });
    }
    // Larger faces first: deterministic order by (dimension desc, tight set).
    faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.tight.cmp(&b.tight)));
    let n = faces.len();
    let poset = FinPoset::from_leq(n, |a, b| {
        // F_a ⊆ F_b iff every inequality tight on F_b is tight on F_a.
        faces[b].tight.iter().all(|i| faces[a].tight.contains(i))
    })
    .expect("inclusion of distinct closed faces is a partial order");
    let names = faces
        .iter()
        .map(|f| format!("{{{}}}", f.tight.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    FaceLattice { faces, poset: poset.with_names(names) }
}
