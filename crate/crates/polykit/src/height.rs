//! Height polytopes of colored trees.
//!
//! A height function assigns reals to vertices, nondecreasing from parent to
//! child, with color-dependent constraints. Only the vertices whose height is
//! not fixed by their color become variables.

use num_rational::BigRational;
use num_traits::{One, Zero};
use treekit::{Color, ColoredTree, Scheme};

use crate::system::{HalfspaceSystem, Inequality};
use crate::PolyError;

fn expect_scheme(t: &ColoredTree, s: Scheme) -> Result<(), PolyError> {
    if t.scheme() != s {
        return Err(PolyError::WrongScheme { expected: s, found: t.scheme() });
    }
    Ok(())
}

/// The vertices carrying a height variable, in vertex order: `R` and `B`
/// vertices for RBW trees, `R`, `B` and `O` vertices for five-colored trees.
pub fn height_variables(t: &ColoredTree) -> Vec<usize> {
    let free: &[Color] = match t.scheme() {
        Scheme::FiveColor => &[Color::R, Color::B, Color::O],
        _ => &[Color::R, Color::B],
    };
    (0..t.vertex_count()).filter(|&v| free.contains(&t.color(v))).collect()
}

fn names(t: &ColoredTree, vars: &[usize]) -> Vec<String> {
    vars.iter().map(|&v| format!("x{}{}", t.color(v), t.tree().min_label(v))).collect()
}

/// Height polytope of an RBW tree, as a cone in `ℝ^{V̂}` with white heights
/// pinned to zero: `x_v ≥ x_parent` along `R–R` and `B–B` edges, `x_v ≥ 0`
/// for red vertices without a red parent and `x_v ≤ 0` for blue vertices
/// without a blue child. The omitted inequalities of the full list are implied
/// by these, so the polyhedron (and its faces) is the same.
pub fn height_polytope_rbw(t: &ColoredTree) -> Result<HalfspaceSystem, PolyError> {
    expect_scheme(t, Scheme::Rbw)?;
    let vars = height_variables(t);
    let idx = |v: usize| vars.iter().position(|&x| x == v);
    let mut h = HalfspaceSystem::new(vars.len()).with_names(names(t, &vars));
    let tree = t.tree();
    for (i, &v) in vars.iter().enumerate() {
        let c = t.color(v);
        let parent = tree.parent(v);
        match c {
            Color::R if parent.is_none_or(|p| t.color(p) != Color::R) => h.push_lower(i, 0),
            Color::B if tree.children(v).iter().all(|&ch| t.color(ch) != Color::B) => h.push_upper(i, 0),
            _ => {}
        }
        if let Some(p) = parent.filter(|&p| t.color(p) == c) {
            h.push_ge(i, idx(p).expect("same-colored parent has a variable"));
        }
    }
    Ok(h)
}

/// Height polytope of an RBW tree with the complete inequality list: every
/// sign constraint and every child/parent inequality between variables.
pub fn height_polytope_rbw_full(t: &ColoredTree) -> Result<HalfspaceSystem, PolyError> {
    expect_scheme(t, Scheme::Rbw)?;
    let vars = height_variables(t);
    let idx = |v: usize| vars.iter().position(|&x| x == v);
    let mut h = HalfspaceSystem::new(vars.len()).with_names(names(t, &vars));
    for (i, &v) in vars.iter().enumerate() {
        match t.color(v) {
            Color::R => h.push_lower(i, 0),
            _ => h.push_upper(i, 0),
        }
    }
    for (i, &v) in vars.iter().enumerate() {
        if let Some(j) = t.tree().parent(v).and_then(idx) {
            h.push_ge(i, j);
        }
    }
    Ok(h)
}

/// Height polytope of a five-colored tree: `W` pinned at −1 and `V` at +1,
/// `x ≥ 1` on `R`, `x ≤ −1` on `B`, `−1 ≤ x ≤ 1` on `O`, and `x_v ≥ x_w`
/// for every child `v` of `w` with both carrying variables.
pub fn height_polytope_five(t: &ColoredTree) -> Result<HalfspaceSystem, PolyError> {
    expect_scheme(t, Scheme::FiveColor)?;
    let vars = height_variables(t);
    let idx = |v: usize| vars.iter().position(|&x| x == v);
    let mut h = HalfspaceSystem::new(vars.len()).with_names(names(t, &vars));
    for (i, &v) in vars.iter().enumerate() {
        match t.color(v) {
            Color::R => h.push_lower(i, 1),
            Color::B => h.push_upper(i, -1),
            _ => {
                h.push_lower(i, -1);
                h.push_upper(i, 1);
            }
        }
    }
    for (i, &v) in vars.iter().enumerate() {
        if let Some(j) = t.tree().parent(v).and_then(idx) {
            h.push_ge(i, j);
        }
    }
    Ok(h)
}

/// The three factors `X_R`, `X_B`, `X_O` of a five-colored height polytope,
/// each over the vertices of one color with the edges inside that color.
pub fn height_polytope_five_blocks(t: &ColoredTree) -> Result<[HalfspaceSystem; 3], PolyError> {
    expect_scheme(t, Scheme::FiveColor)?;
    let block = |c: Color| {
        let vars: Vec<usize> = (0..t.vertex_count()).filter(|&v| t.color(v) == c).collect();
        let mut h = HalfspaceSystem::new(vars.len()).with_names(names(t, &vars));
        for (i, _) in vars.iter().enumerate() {
            match c {
                Color::R => h.push_lower(i, 1),
                Color::B => h.push_upper(i, -1),
                _ => {
                    h.push_lower(i, -1);
                    h.push_upper(i, 1);
                }
            }
        }
        for (i, &v) in vars.iter().enumerate() {
            if let Some(j) = t.tree().parent(v).and_then(|p| vars.iter().position(|&x| x == p)) {
                h.push_ge(i, j);
            }
        }
        h
    };
    Ok([block(Color::R), block(Color::B), block(Color::O)])
}

/// Signs `δ_v` for the normalizing slice: `+1` on red, `−1` on blue variables.
pub fn slice_signs(t: &ColoredTree) -> Vec<i64> {
    height_variables(t).into_iter().map(|v| if t.color(v) == Color::R { 1 } else { -1 }).collect()
}

/// Intersects a cone with the hyperplane `Σ δ_v x_v = 1`.
pub fn bounded_slice(h: &HalfspaceSystem, signs: &[i64]) -> Result<HalfspaceSystem, PolyError> {
    if let Some(i) = h.inequalities.iter().position(|q| !q.bound.is_zero()) {
        return Err(PolyError::NotACone(i));
    }
    if signs.len() != h.dim {
        return Err(PolyError::DimensionMismatch { expected: h.dim, found: signs.len() });
    }
    let mut out = h.clone();
    out.push_equality(Inequality {
        coeffs: signs.iter().map(|&s| BigRational::from_integer(s.into())).collect(),
        bound: BigRational::one(),
    })?;
    Ok(out)
}
