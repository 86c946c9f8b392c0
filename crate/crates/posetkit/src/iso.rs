//! Exact poset isomorphism by refined backtracking.

use std::collections::BTreeMap;

use crate::poset::FinPoset;

/// `true` iff `map` is injective and `a ≤ b ⇔ map[a] ≤ map[b]`.
pub fn is_order_embedding(p: &FinPoset, q: &FinPoset, map: &[usize]) -> bool {
    if map.len() != p.len() || map.iter().any(|&x| x >= q.len()) {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &x in map {
        if std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(map[a], map[b])))
}

/// Joint color refinement of both posets: colors start from
/// (dimension, #covers up, #covers down, #below, #above) and are refined by
/// the multisets of neighbor colors until stable. Isomorphisms preserve colors.
fn refine(p: &FinPoset, q: &FinPoset) -> (Vec<usize>, Vec<usize>) {
    type Key = (usize, Vec<usize>, Vec<usize>);
    let initial = |x: &FinPoset, e: usize| {
        (
            x.dim(e),
            x.upper_covers(e).len(),
            x.lower_covers(e).len(),
            x.strictly_below(e).len(),
            x.strictly_above(e).len(),
        )
    };
    let mut dict = BTreeMap::new();
    let mut cp: Vec<usize> = Vec::new();
    let mut cq: Vec<usize> = Vec::new();
    for e in 0..p.len() {
        let k = initial(p, e);
        let next = dict.len();
        cp.push(*dict.entry(k).or_insert(next));
    }
    for e in 0..q.len() {
        let k = initial(q, e);
        let next = dict.len();
        cq.push(*dict.entry(k).or_insert(next));
    }
    let mut classes = dict.len();
    loop {
        let mut dict: BTreeMap<Key, usize> = BTreeMap::new();
        let key = |x: &FinPoset, c: &[usize], e: usize| -> Key {
            let mut up: Vec<usize> = x.upper_covers(e).iter().map(|&u| c[u]).collect();
            let mut down: Vec<usize> = x.lower_covers(e).iter().map(|&d| c[d]).collect();
            up.sort_unstable();
            down.sort_unstable();
            (c[e], up, down)
        };
        let kp: Vec<Key> = (0..p.len()).map(|e| key(p, &cp, e)).collect();
        let kq: Vec<Key> = (0..q.len()).map(|e| key(q, &cq, e)).collect();
        let mut sorted: Vec<&Key> = kp.iter().chain(&kq).collect();
        sorted.sort();
        sorted.dedup();
        for (i, k) in sorted.into_iter().enumerate() {
            dict.insert(k.clone(), i);
        }
        cp = kp.iter().map(|k| dict[k]).collect();
        cq = kq.iter().map(|k| dict[k]).collect();
        if dict.len() == classes {
            return (cp, cq);
        }
        classes = dict.len();
    }
}

/// An order isomorphism `P → Q` (as `map[p] = q`), or `None`.
///
/// Exact: color refinement prunes candidates, and backtracking over a
/// connectivity-respecting order checks order relations against all
/// previously placed elements.
pub fn poset_iso(p: &FinPoset, q: &FinPoset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let (cp, cq) = refine(p, q);
    let mut hp = cp.clone();
    let mut hq = cq.clone();
    hp.sort_unstable();
    hq.sort_unstable();
    if hp != hq {
        return None;
    }
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &cp {
        *class_size.entry(c).or_default() += 1;
    }
    // Placement order: repeatedly take the unplaced element adjacent to the
    // placed set with the rarest color; start components at their rarest color.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut frontier = vec![false; n];
    while order.len() < n {
        let pick = (0..n)
            .filter(|&e| !placed[e] && frontier[e])
            .min_by_key(|&e| (class_size[&cp[e]], e))
            .or_else(|| (0..n).filter(|&e| !placed[e]).min_by_key(|&e| (class_size[&cp[e]], e)))
            .unwrap();
        placed[pick] = true;
        order.push(pick);
        for &w in p.upper_covers(pick).iter().chain(p.lower_covers(pick)) {
            frontier[w] = true;
        }
    }
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (e, &c) in cq.iter().enumerate() {
        by_color.entry(c).or_default().push(e);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(p, q, &cp, &cq, &order, 0, &by_color, &mut map, &mut used) {
        debug_assert!(is_order_embedding(p, q, &map));
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    p: &FinPoset,
    q: &FinPoset,
    cp: &[usize],
    cq: &[usize],
    order: &[usize],
    depth: usize,
    by_color: &BTreeMap<usize, Vec<usize>>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&e) = order.get(depth) else { return true };
    // If a Hasse neighbor of e is placed, candidates are that neighbor's
    // image's Hasse neighbors of the matching direction.
    let anchor = p
        .upper_covers(e)
        .iter()
        .map(|&u| (u, true))
        .chain(p.lower_covers(e).iter().map(|&d| (d, false)))
        .find(|&(x, _)| map[x] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some((x, e_is_below)) => {
            let img = map[x];
            if e_is_below {
                q.lower_covers(img).to_vec()
            } else {
                q.upper_covers(img).to_vec()
            }
        }
        None => by_color[&cp[e]].clone(),
    };
    for c in candidates {
        if used[c] || cq[c] != cp[e] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&a| {
            let b = map[a];
            p.leq(a, e) == q.leq(b, c) && p.leq(e, a) == q.leq(c, b)
        });
        if !consistent {
            continue;
        }
        map[e] = c;
        used[c] = true;
        if search(p, q, cp, cq, order, depth + 1, by_color, map, used) {
            return true;
        }
        map[e] = usize::MAX;
        used[c] = false;
    }
    false
}
