//! Exhaustive enumeration of labeled and colored trees.

use crate::color::{Color, ColoredTree, Scheme};
use crate::tree::LabeledTree;
use crate::{Label, TreeError};

/// The label set `{1, …, n}`.
pub fn label_range(n: usize) -> Vec<Label> {
    (1..=n as Label).collect()
}

/// Tree skeleton used during generation: parent array and label sets.
type Raw = (Vec<Option<usize>>, Vec<Vec<Label>>);

/// Set partitions of `items` into blocks of size at least two.
fn partitions_min2(items: &[Label]) -> Vec<Vec<Vec<Label>>> {
    fn go(items: &[Label], acc: &mut Vec<Vec<Label>>, out: &mut Vec<Vec<Vec<Label>>>) {
        let Some((&first, rest)) = items.split_first() else {
            if acc.iter().all(|b| b.len() >= 2) {
                out.push(acc.clone());
            }
            return;
        };
        for i in 0..acc.len() {
            acc[i].push(first);
            go(rest, acc, out);
            acc[i].pop();
        }
        acc.push(vec![first]);
        go(rest, acc, out);
        acc.pop();
    }
    let mut out = Vec::new();
    go(items, &mut Vec::new(), &mut out);
    out
}

fn raw_trees(s: &[Label]) -> Vec<Raw> {
    let n = s.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let root: Vec<Label> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| s[i]).collect();
        let rest: Vec<Label> = (0..n).filter(|&i| mask & (1 << i) == 0).map(|i| s[i]).collect();
        for blocks in partitions_min2(&rest) {
            if root.len() + blocks.len() < 2 {
                continue;
            }
            let subtrees: Vec<Vec<Raw>> = blocks.iter().map(|b| raw_trees(b)).collect();
            let mut choice = vec![0usize; blocks.len()];
            loop {
                let mut parent = vec![None];
                let mut labels = vec![root.clone()];
                for (k, &i) in choice.iter().enumerate() {
                    let (p, l) = &subtrees[k][i];
                    let offset = parent.len();
                    parent.extend(p.iter().map(|q| Some(q.map_or(0, |q| q + offset))));
                    labels.extend(l.iter().cloned());
                }
                out.push((parent, labels));
                let mut k = 0;
                while k < choice.len() {
                    choice[k] += 1;
                    if choice[k] < subtrees[k].len() {
                        break;
                    }
                    choice[k] = 0;
                    k += 1;
                }
                if k == choice.len() {
                    break;
                }
            }
        }
    }
    out
}

/// All trees on the label set `s`, without duplicates, in canonical order.
pub fn enumerate_trees(s: &[Label]) -> Result<Vec<LabeledTree>, TreeError> {
    let mut labels = s.to_vec();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() != s.len() {
        return Err(TreeError::Malformed("label set has repeated labels".into()));
    }
    if s.len() < 2 {
        return Err(TreeError::TooFewLabels(s.len()));
    }
    let mut trees =
        raw_trees(&labels).into_iter().map(|(p, l)| LabeledTree::new(p, l)).collect::<Result<Vec<_>, _>>()?;
    trees.sort();
    trees.dedup();
    Ok(trees)
}

/// All legal colorings of all trees on `s` under `scheme`, in canonical order.
pub fn enumerate_colored(s: &[Label], scheme: Scheme) -> Result<Vec<ColoredTree>, TreeError> {
    let palette = scheme.palette();
    let mut out = Vec::new();
    for tree in enumerate_trees(s)? {
        let n = tree.vertex_count();
        let mut digits = vec![0usize; n];
        loop {
            let colors: Vec<Color> = digits.iter().map(|&d| palette[d]).collect();
            if let Ok(t) = ColoredTree::new(tree.clone(), colors, scheme) {
                out.push(t);
            }
            let mut k = 0;
            while k < n {
                digits[k] += 1;
                if digits[k] < palette.len() {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}
