//! Exact Fourier–Motzkin feasibility with strict inequalities.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::system::HalfspaceSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `a·x ≤ b`
    Le,
    /// `a·x < b`
    Lt,
    /// `a·x = b`
    Eq,
}

/// One linear constraint `coeffs · x (rel) bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rel: Relation,
    pub bound: BigRational,
}

/// Internal row `coeffs · x ≤ bound` (or `<` when `strict`).
#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<BigRational>,
    bound: BigRational,
    strict: bool,
}

impl Row {
    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Row {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.bound /= &lead;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// For an all-zero row: is `0 (≤|<) bound` true?
    fn trivially_holds(&self) -> bool {
        if self.strict {
            self.bound.is_positive()
        } else {
            !self.bound.is_negative()
        }
    }
}

/// Keeps, for each coefficient vector, only the tightest bound.
/// Returns `None` if an all-zero row is violated.
fn simplify(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut best: BTreeMap<Vec<BigRational>, (BigRational, bool)> = BTreeMap::new();
    for r in rows {
        let r = r.normalized();
        if r.is_trivial() {
            if !r.trivially_holds() {
                return None;
            }
            continue;
        }
        match best.get_mut(&r.coeffs) {
            Some((b, s)) => {
                if r.bound < *b || (r.bound == *b && r.strict) {
                    *b = r.bound;
                    *s = r.strict;
                }
            }
            None => {
                best.insert(r.coeffs, (r.bound, r.strict));
            }
        }
    }
    Some(best.into_iter().map(|(coeffs, (bound, strict))| Row { coeffs, bound, strict }).collect())
}

fn eliminate(rows: &[Row], k: usize) -> Option<Vec<Row>> {
    let (mut out, mut lower, mut upper) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        if r.coeffs[k].is_positive() {
            upper.push(r);
        } else if r.coeffs[k].is_negative() {
            lower.push(r);
        } else {
            out.push(r.clone());
        }
    }
    for l in &lower {
        for u in &upper {
            // (u / u_k) + (l / −l_k) eliminates x_k.
            let su = BigRational::one() / &u.coeffs[k];
            let sl = BigRational::one() / -&l.coeffs[k];
            let coeffs = u.coeffs.iter().zip(&l.coeffs).map(|(a, b)| a * &su + b * &sl).collect();
            out.push(Row { coeffs, bound: &u.bound * &su + &l.bound * &sl, strict: u.strict || l.strict });
        }
    }
    simplify(out)
}

/// A rational point satisfying every constraint, or `None` if there is none.
///
/// Variables are eliminated in index order; the witness is rebuilt by back
/// substitution, choosing each coordinate strictly inside its feasible
/// interval whenever the interval is not a single point.
pub fn solve(dim: usize, constraints: &[Constraint]) -> Option<Vec<BigRational>> {
    let mut rows = Vec::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), dim, "constraint dimension");
        match c.rel {
            Relation::Le | Relation::Lt => {
                rows.push(Row { coeffs: c.coeffs.clone(), bound: c.bound.clone(), strict: c.rel == Relation::Lt })
            }
            Relation::Eq => {
                rows.push(Row { coeffs: c.coeffs.clone(), bound: c.bound.clone(), strict: false });
                rows.push(Row { coeffs: c.coeffs.iter().map(|x| -x).collect(), bound: -&c.bound, strict: false });
            }
        }
    }
    let mut stages = vec![simplify(rows)?];
    for k in 0..dim {
        let next = eliminate(stages.last().unwrap(), k)?;
        stages.push(next);
    }
    let mut x = vec![BigRational::zero(); dim];
    for k in (0..dim).rev() {
        let mut lo: Option<(BigRational, bool)> = None;
        let mut hi: Option<(BigRational, bool)> = None;
        for r in &stages[k] {
            let a = &r.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let rest: BigRational = (k + 1..dim).fold(BigRational::zero(), |acc, j| acc + &r.coeffs[j] * &x[j]);
            let v = (&r.bound - rest) / a;
            if a.is_positive() {
                if hi.as_ref().is_none_or(|(h, s)| v < *h || (v == *h && r.strict && !s)) {
                    hi = Some((v, r.strict));
                }
            } else if lo.as_ref().is_none_or(|(l, s)| v > *l || (v == *l && r.strict && !s)) {
                lo = Some((v, r.strict));
            }
        }
        let two = BigRational::from_integer(2.into());
        x[k] = match (lo, hi) {
            (Some((l, _)), Some((h, _))) if l == h => l,
            (Some((l, _)), Some((h, _))) => (l + h) / two,
            (Some((l, _)), None) => l + BigRational::one(),
            (None, Some((h, _))) => h - BigRational::one(),
            (None, None) => BigRational::zero(),
        };
    }
    debug_assert!(constraints.iter().all(|c| {
        let v: BigRational = c.coeffs.iter().zip(&x).fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
        match c.rel {
            Relation::Le => v <= c.bound,
            Relation::Lt => v < c.bound,
            Relation::Eq => v == c.bound,
        }
    }));
    Some(x)
}

/// Feasibility of a halfspace system with the inequalities listed in
/// `strict` required to hold strictly. Returns a witness point.
pub fn feasible(h: &HalfspaceSystem, strict: &[usize]) -> Option<Vec<BigRational>> {
    let mut cs: Vec<Constraint> = h
        .inequalities
        .iter()
        .enumerate()
        .map(|(i, q)| Constraint {
            coeffs: q.coeffs.clone(),
            rel: if strict.contains(&i) { Relation::Lt } else { Relation::Le },
            bound: q.bound.clone(),
        })
        .collect();
    cs.extend(h.equalities.iter().map(|e| Constraint {
        coeffs: e.coeffs.clone(),
        rel: Relation::Eq,
        bound: e.bound.clone(),
    }));
    solve(h.dim, &cs)
}
