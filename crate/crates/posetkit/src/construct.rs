//! Standard poset constructions.

use crate::poset::FinPoset;

/// The `n`-element chain `0 < 1 < … < n−1`.
pub fn chain(n: usize) -> FinPoset {
    let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FinPoset::from_relations(n, &rel).expect("a chain is acyclic")
}

/// The `n`-element antichain.
pub fn antichain(n: usize) -> FinPoset {
    FinPoset::from_relations(n, &[]).expect("no relations")
}

/// The one-element poset.
pub fn point() -> FinPoset {
    antichain(1)
}

/// The opposite poset (all inequalities reversed).
pub fn opposite(p: &FinPoset) -> FinPoset {
    let rel: Vec<(usize, usize)> = p.covers().into_iter().map(|(a, b)| (b, a)).collect();
    FinPoset::from_relations(p.len(), &rel).expect("reversal keeps acyclicity").with_names(p.names().to_vec())
}

/// `P` with a new minimum adjoined; the new element has index `|P|`.
pub fn adjoin_bottom(p: &FinPoset) -> FinPoset {
    let n = p.len();
    let mut rel = p.covers();
    rel.extend((0..n).map(|e| (n, e)));
    let mut names = p.names().to_vec();
    names.push("⊥".into());
    FinPoset::from_relations(n + 1, &rel).expect("acyclic").with_names(names)
}

/// Mixed-radix enumeration of tuples; `None` stands for an adjoined bottom.
fn tuples(sizes: &[usize], with_bottom: bool) -> Vec<Vec<Option<usize>>> {
    let radix: Vec<usize> = sizes.iter().map(|&s| s + with_bottom as usize).collect();
    let total: usize = radix.iter().product();
    (0..total)
        .map(|mut code| {
            radix
                .iter()
                .map(|&r| {
                    let d = code % r;
                    code /= r;
                    if with_bottom {
                        d.checked_sub(1)
                    } else {
                        Some(d)
                    }
                })
                .collect()
        })
        .collect()
}

fn tuple_poset(factors: &[&FinPoset], with_bottom: bool, sep: &str) -> (FinPoset, Vec<Vec<Option<usize>>>) {
    let sizes: Vec<usize> = factors.iter().map(|p| p.len()).collect();
    let mut all = tuples(&sizes, with_bottom);
    if with_bottom {
        all.retain(|t| t.iter().any(Option::is_some));
    }
    let index: std::collections::HashMap<Vec<Option<usize>>, usize> =
        all.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rel = Vec::new();
    for (i, t) in all.iter().enumerate() {
        for (k, p) in factors.iter().enumerate() {
            let ups: Vec<usize> = match t[k] {
                Some(x) => p.upper_covers(x).to_vec(),
                None => p.minimal_elements(),
            };
            for u in ups {
                let mut t2 = t.clone();
                t2[k] = Some(u);
                rel.push((i, index[&t2]));
            }
        }
    }
    let names = all
        .iter()
        .map(|t| {
            let parts: Vec<String> =
                t.iter().zip(factors).map(|(x, p)| x.map_or("∅".to_string(), |x| p.name(x).to_string())).collect();
            format!("({})", parts.join(sep))
        })
        .collect();
    let poset = FinPoset::from_relations(all.len(), &rel).expect("componentwise order is acyclic").with_names(names);
    (poset, all)
}

/// Cartesian product with the componentwise order; dimensions add.
pub fn product(p: &FinPoset, q: &FinPoset) -> FinPoset {
    tuple_poset(&[p, q], false, ",").0
}

/// The join `P₁ ∗ … ∗ Pₙ`: tuples in `∏ underline(Pᵢ)` other than the
/// all-bottom tuple, ordered componentwise. Tuple coordinates are indexed in
/// mixed radix with the first factor varying fastest.
pub fn join_all(factors: &[&FinPoset]) -> FinPoset {
    tuple_poset(factors, true, "*").0
}

/// The join of two posets.
pub fn join(p: &FinPoset, q: &FinPoset) -> FinPoset {
    join_all(&[p, q])
}

/// `Cone(P) = P ∗ {pt}`.
pub fn cone(p: &FinPoset) -> FinPoset {
    join(p, &point().with_names(vec!["c".into()]))
}

/// `Σ(P) = Cone(P) ⊔ {D}`, where `D` lies above exactly the copy of `P`
/// (the elements `(p, ∅)`). The new element has the last index.
pub fn suspension(p: &FinPoset) -> FinPoset {
    let apex = point().with_names(vec!["c".into()]);
    let (c, tuples) = tuple_poset(&[p, &apex], true, "*");
    let n = c.len();
    let mut rel = c.covers();
    rel.extend((0..n).filter(|&e| tuples[e][1].is_none()).map(|e| (e, n)));
    let mut names = c.names().to_vec();
    names.push("D".into());
    FinPoset::from_relations(n + 1, &rel).expect("acyclic").with_names(names)
}

/// [`join_all`] together with the coordinate tuple of every element
/// (`None` marks the adjoined bottom of a factor).
pub fn join_with_coordinates(factors: &[&FinPoset]) -> (FinPoset, Vec<Vec<Option<usize>>>) {
    tuple_poset(factors, true, "*")
}

/// [`product`] of any number of factors, with the coordinate tuple of every
/// element.
pub fn product_with_coordinates(factors: &[&FinPoset]) -> (FinPoset, Vec<Vec<usize>>) {
    let (p, t) = tuple_poset(factors, false, ",");
    (p, t.into_iter().map(|t| t.into_iter().map(|x| x.expect("no bottoms in products")).collect()).collect())
}
