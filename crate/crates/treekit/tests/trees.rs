use std::collections::BTreeSet;

use treekit::{
    act, classify_elementary, contract, contraction_between, contractions_from, elementary_decompose,
    enumerate_colored, enumerate_trees, five_to_rbw, label_range, rw_to_rbw, Color, ColoredTree, Contraction,
    ContractionError, ContractionSystem, LabeledTree, Permutation, Scheme, TreeError, TreeJson,
};

use Color::{B, O, R, V, W};

/// The example tree with labels 1..11: a blue root {5} with a red child {1}
/// (itself over a red {2,6}), a white child over red {7,10,11} and red {4,8},
/// and a blue child {3,9}.
fn figure_source() -> ColoredTree {
    ColoredTree::from_parts(
        vec![None, Some(0), Some(1), Some(0), Some(3), Some(3), Some(0)],
        vec![vec![5], vec![1], vec![2, 6], vec![], vec![7, 10, 11], vec![4, 8], vec![3, 9]],
        vec![B, R, R, W, R, R, B],
        Scheme::Rbw,
    )
    .unwrap()
}

fn figure_target() -> ColoredTree {
    ColoredTree::from_parts(
        vec![None, Some(0), Some(0)],
        vec![vec![3, 4, 5, 8, 9], vec![1, 2, 6], vec![7, 10, 11]],
        vec![W, R, R],
        Scheme::Rbw,
    )
    .unwrap()
}

/// Brute-force oracle: every parent function on `k` vertices and every label
/// function `S → vertices`, filtered by the tree invariants.
fn brute_force_trees(s: &[u32]) -> BTreeSet<LabeledTree> {
    let mut out = BTreeSet::new();
    for k in 1..s.len() {
        // Vertex 0 is the root; vertices 1..k choose any parent.
        let parent_choices = k.pow(k as u32 - 1);
        for pc in 0..parent_choices {
            let mut parent = vec![None];
            let mut x = pc;
            for _ in 1..k {
                parent.push(Some(x % k));
                x /= k;
            }
            for lc in 0..k.pow(s.len() as u32) {
                let mut labels = vec![Vec::new(); k];
                let mut y = lc;
                for &l in s {
                    labels[y % k].push(l);
                    y /= k;
                }
                if let Ok(t) = LabeledTree::new(parent.clone(), labels) {
                    out.insert(t);
                }
            }
        }
    }
    out
}

#[test]
fn tree_counts_match_brute_force_oracle() {
    for n in 2..=4 {
        let s = label_range(n);
        let trees = enumerate_trees(&s).unwrap();
        let oracle = brute_force_trees(&s);
        assert_eq!(trees.len(), oracle.len(), "n = {n}");
        assert_eq!(trees.iter().cloned().collect::<BTreeSet<_>>(), oracle);
    }
    assert_eq!(enumerate_trees(&label_range(2)).unwrap().len(), 1);
    assert_eq!(enumerate_trees(&label_range(3)).unwrap().len(), 4);
}

#[test]
fn enumeration_is_deterministic_and_duplicate_free() {
    let a = enumerate_trees(&label_range(4)).unwrap();
    let b = enumerate_trees(&label_range(4)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.iter().collect::<BTreeSet<_>>().len(), a.len());
    assert!(a.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn three_label_trees_are_corolla_plus_three_pairs() {
    let trees = enumerate_trees(&label_range(3)).unwrap();
    let child_sets: BTreeSet<Vec<u32>> = trees
        .iter()
        .filter(|t| t.vertex_count() == 2)
        .map(|t| {
            let child = (0..2).find(|&v| t.parent(v).is_some()).unwrap();
            t.labels(child).to_vec()
        })
        .collect();
    assert_eq!(child_sets, BTreeSet::from([vec![1, 2], vec![1, 3], vec![2, 3]]));
}

#[test]
fn too_few_labels_is_a_domain_error() {
    assert_eq!(enumerate_trees(&[1]), Err(TreeError::TooFewLabels(1)));
    assert_eq!(enumerate_trees(&[]), Err(TreeError::TooFewLabels(0)));
}

#[test]
fn colored_counts_match_brute_force_legality_filter() {
    assert_eq!(enumerate_colored(&label_range(2), Scheme::Rbw).unwrap().len(), 3);
    assert_eq!(enumerate_colored(&label_range(2), Scheme::FiveColor).unwrap().len(), 5);
    for scheme in [Scheme::Rbw, Scheme::FiveColor, Scheme::RwLocal] {
        for n in 2..=4 {
            let s = label_range(n);
            let mut oracle = 0;
            for t in enumerate_trees(&s).unwrap() {
                let k = t.vertex_count();
                let pal = scheme.palette();
                for code in 0..pal.len().pow(k as u32) {
                    let mut x = code;
                    let colors: Vec<Color> = (0..k)
                        .map(|_| {
                            let c = pal[x % pal.len()];
                            x /= pal.len();
                            c
                        })
                        .collect();
                    // Word legality along every root path, checked directly.
                    let legal = (0..k).all(|leaf| {
                        let mut word = vec![];
                        let mut cur = Some(leaf);
                        while let Some(v) = cur {
                            word.push(colors[v]);
                            cur = t.parent(v);
                        }
                        scheme.word_is_legal(&word)
                    });
                    oracle += legal as usize;
                }
            }
            assert_eq!(enumerate_colored(&s, scheme).unwrap().len(), oracle, "{scheme} n={n}");
        }
    }
}

#[test]
fn pair_legality_equals_word_legality() {
    for scheme in [Scheme::Rbw, Scheme::FiveColor, Scheme::RwLocal] {
        for n in 2..=4 {
            for c in enumerate_colored(&label_range(n), scheme).unwrap() {
                assert!(c.is_legal_by_words());
            }
        }
    }
    // Words versus pairs on every coloring, legal or not.
    for scheme in [Scheme::Rbw, Scheme::FiveColor] {
        for t in enumerate_trees(&label_range(4)).unwrap() {
            let k = t.vertex_count();
            let pal = scheme.palette();
            for code in 0..pal.len().pow(k as u32) {
                let mut x = code;
                let colors: Vec<Color> = (0..k)
                    .map(|_| {
                        let c = pal[x % pal.len()];
                        x /= pal.len();
                        c
                    })
                    .collect();
                let pairs = t.edges().iter().all(|&(c, p)| scheme.pair_is_legal(colors[c], colors[p]));
                let words = (0..k).filter(|&v| t.children(v).is_empty()).all(|leaf| {
                    let mut word = vec![];
                    let mut cur = Some(leaf);
                    while let Some(v) = cur {
                        word.push(colors[v]);
                        cur = t.parent(v);
                    }
                    scheme.word_is_legal(&word)
                });
                assert_eq!(pairs, words);
            }
        }
    }
}

#[test]
fn legality_examples() {
    let ww = ColoredTree::from_parts(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![W, W], Scheme::Rbw);
    assert_eq!(ww, Err(TreeError::IllegalColoring));
    let rr = ColoredTree::from_parts(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![R, R], Scheme::Rbw).unwrap();
    assert!(rr.is_legal());
    let bwb = ColoredTree::from_parts(
        vec![None, Some(0), Some(0)],
        vec![vec![], vec![1, 2], vec![3, 4]],
        vec![B, W, B],
        Scheme::Rbw,
    )
    .unwrap();
    assert!(bwb.is_legal() && bwb.is_legal_by_words());
    assert!(matches!(
        ColoredTree::corolla(&[1, 2], O, Scheme::Rbw),
        Err(TreeError::ColorOutsidePalette { color: O, .. })
    ));
}

#[test]
fn figure_contraction_is_valid_with_codim_four() {
    let src = figure_source();
    let tgt = figure_target();
    let c = contraction_between(&src, &tgt).expect("the figure contraction exists");
    assert_eq!(c.codim().unwrap(), 4);
    assert_eq!(src.codim().unwrap(), 6);
    assert_eq!(tgt.codim().unwrap(), 2);

    // The same contraction through an explicit system: edges e1, e4, e5, e6.
    let v = |l: u32| src.tree().holder(l).unwrap();
    let white = (0..src.vertex_count()).find(|&u| src.color(u) == W).unwrap();
    let system =
        ContractionSystem::new(vec![(vec![v(1), v(2)], R), (vec![v(5), white, v(4), v(3)], W), (vec![v(7)], R)]);
    let (t, c2) = contract(&src, &system).unwrap();
    assert_eq!(t, tgt);
    assert_eq!(c2, c);
}

#[test]
fn blue_white_blue_examples() {
    let t = ColoredTree::from_parts(
        vec![None, Some(0), Some(0)],
        vec![vec![], vec![1, 2], vec![3, 4]],
        vec![B, W, B],
        Scheme::Rbw,
    )
    .unwrap();
    let root = t.tree().root();
    let w = (0..3).find(|&v| t.color(v) == W).unwrap();
    let b = (0..3).find(|&v| v != root && t.color(v) == B).unwrap();
    let singles = |skip: &[usize]| -> Vec<(Vec<usize>, Color)> {
        (0..3).filter(|v| !skip.contains(v)).map(|v| (vec![v], t.color(v))).collect()
    };
    // The upper blue vertex may turn white.
    let mut s = singles(&[b]);
    s.push((vec![b], W));
    assert!(contract(&t, &ContractionSystem::new(s)).is_ok());
    // The lower (root) blue vertex may not: it would sit below a white vertex.
    let mut s = singles(&[root]);
    s.push((vec![root], W));
    assert_eq!(contract(&t, &ContractionSystem::new(s)).unwrap_err(), ContractionError::IllegalResult);
    // The blue–blue edge contracts to blue.
    let mut s = singles(&[root, b]);
    s.push((vec![root, b], B));
    assert!(contract(&t, &ContractionSystem::new(s)).is_ok());
    // The white–blue edge cannot contract to white: the other blue child would be below white.
    let mut s = singles(&[root, w]);
    s.push((vec![root, w], W));
    assert_eq!(contract(&t, &ContractionSystem::new(s)).unwrap_err(), ContractionError::IllegalResult);
}

#[test]
fn contract_reports_distinct_errors() {
    let t = ColoredTree::from_parts(
        vec![None, Some(0), Some(1)],
        vec![vec![1], vec![2], vec![3, 4]],
        vec![R, R, R],
        Scheme::Rbw,
    )
    .unwrap();
    let root = t.tree().root();
    let leaf = (0..3).find(|&v| t.tree().children(v).is_empty()).unwrap();
    let mid = 3 - root - leaf;
    let disconnected = ContractionSystem::new(vec![(vec![root, leaf], R), (vec![mid], R)]);
    assert!(matches!(contract(&t, &disconnected), Err(ContractionError::DisconnectedBlock { .. })));
    let color = ContractionSystem::new(vec![(vec![root, mid, leaf], B)]);
    assert!(matches!(contract(&t, &color), Err(ContractionError::ColorViolation { .. })));
    let overlap = ContractionSystem::new(vec![(vec![root, mid], R), (vec![mid, leaf], R)]);
    assert_eq!(contract(&t, &overlap).unwrap_err(), ContractionError::NotAPartition);
    // Identity system gives the trivial contraction.
    let (same, c) = contract(&t, &ContractionSystem::identity(&t)).unwrap();
    assert_eq!(same, t);
    assert!(c.is_trivial());
}

#[test]
fn corolla_recoloring_is_one_directional() {
    let r = ColoredTree::corolla(&[1, 2], R, Scheme::Rbw).unwrap();
    let w = ColoredTree::corolla(&[1, 2], W, Scheme::Rbw).unwrap();
    assert!(contraction_between(&r, &w).is_some());
    assert!(contraction_between(&w, &r).is_none());
    assert_eq!(w.codim().unwrap(), 0);
    assert_eq!(r.codim().unwrap(), 1);
    let five = ColoredTree::corolla(&[1, 2], O, Scheme::FiveColor).unwrap();
    assert!(matches!(five.codim(), Err(TreeError::WrongScheme { .. })));
}

#[test]
fn contraction_existence_matches_system_enumeration_and_is_unique() {
    for scheme in [Scheme::Rbw, Scheme::FiveColor, Scheme::RwLocal] {
        for n in 2..=3 {
            let trees = enumerate_colored(&label_range(n), scheme).unwrap();
            for a in &trees {
                let from = contractions_from(a);
                let targets: Vec<&ColoredTree> = from.iter().map(Contraction::target).collect();
                let distinct: BTreeSet<_> = targets.iter().collect();
                assert_eq!(distinct.len(), targets.len(), "two systems with one target from {a}");
                for b in &trees {
                    let between = contraction_between(a, b);
                    assert_eq!(between.is_some(), distinct.contains(&b), "{a} -> {b}");
                    if let Some(c) = between {
                        assert_eq!(Some(&c), from.iter().find(|c| c.target() == b));
                    }
                }
            }
        }
    }
    // Four labels: every enumerated contraction is recovered by the candidate map.
    for a in enumerate_colored(&label_range(4), Scheme::Rbw).unwrap() {
        let from = contractions_from(&a);
        let distinct: BTreeSet<_> = from.iter().map(Contraction::target).collect();
        assert_eq!(distinct.len(), from.len());
        for c in &from {
            assert_eq!(contraction_between(&a, c.target()).as_ref(), Some(c));
        }
    }
}

#[test]
fn composites_of_contractions_are_contractions() {
    for a in enumerate_colored(&label_range(3), Scheme::Rbw).unwrap() {
        for c1 in contractions_from(&a) {
            for c2 in contractions_from(c1.target()) {
                let c = c1.then(&c2).unwrap();
                assert_eq!(contraction_between(&a, c2.target()), Some(c));
            }
        }
    }
}

#[test]
fn elementary_decomposition_composes_with_length_codim() {
    for n in 2..=4 {
        for a in enumerate_colored(&label_range(n), Scheme::Rbw).unwrap() {
            for c in contractions_from(&a) {
                let steps = elementary_decompose(&c).unwrap();
                assert_eq!(steps.len(), c.codim().unwrap(), "{} -> {}", c.source(), c.target());
                let mut acc = Contraction::identity(c.source());
                for s in &steps {
                    assert!(classify_elementary(s).is_some(), "non-elementary step {} -> {}", s.source(), s.target());
                    acc = acc.then(s).unwrap();
                }
                assert_eq!(acc, c);
            }
        }
    }
}

#[test]
fn elementary_examples() {
    let r = ColoredTree::corolla(&[1, 2], R, Scheme::Rbw).unwrap();
    let w = ColoredTree::corolla(&[1, 2], W, Scheme::Rbw).unwrap();
    let steps = elementary_decompose(&contraction_between(&r, &w).unwrap()).unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(classify_elementary(&steps[0]).unwrap().number(), 1);

    let rr = ColoredTree::from_parts(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![R, R], Scheme::Rbw).unwrap();
    let w3 = ColoredTree::corolla(&[1, 2, 3], W, Scheme::Rbw).unwrap();
    let c = contraction_between(&rr, &w3).unwrap();
    let steps = elementary_decompose(&c).unwrap();
    assert_eq!(steps.len(), 2);
    let kinds: Vec<u8> = steps.iter().map(|s| classify_elementary(s).unwrap().number()).collect();
    assert_eq!(kinds, vec![2, 1]);

    let fig = contraction_between(&figure_source(), &figure_target()).unwrap();
    let steps = elementary_decompose(&fig).unwrap();
    assert_eq!(steps.len(), 4);
    let composed = steps.iter().try_fold(Contraction::identity(fig.source()), |acc, s| acc.then(s)).unwrap();
    assert_eq!(composed, fig);
}

#[test]
fn action_is_a_group_action_and_contractions_are_equivariant() {
    let s = label_range(3);
    let perms = Permutation::all(&s);
    assert_eq!(perms.len(), 6);
    for (i, p) in perms.iter().enumerate() {
        assert_eq!(p.rank(), i);
    }
    let trees = enumerate_colored(&s, Scheme::Rbw).unwrap();
    for t in &trees {
        assert_eq!(&act(&Permutation::identity(&s), t).unwrap(), t);
        for g in &perms {
            for h in &perms {
                let lhs = act(g, &act(h, t).unwrap()).unwrap();
                let rhs = act(&g.compose(h), t).unwrap();
                assert_eq!(lhs, rhs);
            }
            let gt = act(g, t).unwrap();
            assert!(gt.is_legal());
            for c in contractions_from(t) {
                let gc = act(g, c.target()).unwrap();
                assert!(contraction_between(&gt, &gc).is_some());
            }
        }
    }
    let corolla = ColoredTree::corolla(&[1, 2], B, Scheme::Rbw).unwrap();
    assert_eq!(act(&Permutation::transposition(&[1, 2], 1, 2), &corolla).unwrap(), corolla);
}

#[test]
fn permutation_parity_and_inverse() {
    let s = label_range(4);
    let all = Permutation::all(&s);
    assert_eq!(all.iter().filter(|p| p.is_even()).count(), 12);
    for p in &all {
        assert!(p.compose(&p.inverse()).is_identity());
    }
}

fn covering_pairs(scheme: Scheme, n: usize) -> Vec<(ColoredTree, ColoredTree)> {
    let mut out = Vec::new();
    for a in enumerate_colored(&label_range(n), scheme).unwrap() {
        for c in contractions_from(&a) {
            if !c.is_trivial() {
                out.push((a.clone(), c.target().clone()));
            }
        }
    }
    out
}

#[test]
fn five_to_rbw_examples_and_monotonicity() {
    let oo =
        ColoredTree::from_parts(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![O, O], Scheme::FiveColor).unwrap();
    assert_eq!(five_to_rbw(&oo).unwrap(), ColoredTree::corolla(&[1, 2, 3], W, Scheme::Rbw).unwrap());
    let rr =
        ColoredTree::from_parts(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![R, R], Scheme::FiveColor).unwrap();
    assert_eq!(five_to_rbw(&rr).unwrap(), rr.with_scheme(Scheme::Rbw).unwrap());
    let bor = ColoredTree::from_parts(
        vec![None, Some(0), Some(1)],
        vec![vec![1], vec![2], vec![3, 4]],
        vec![B, O, R],
        Scheme::FiveColor,
    )
    .unwrap();
    let expected = ColoredTree::from_parts(
        vec![None, Some(0), Some(1)],
        vec![vec![1], vec![2], vec![3, 4]],
        vec![B, W, R],
        Scheme::Rbw,
    )
    .unwrap();
    assert_eq!(five_to_rbw(&bor).unwrap(), expected);
    let v = ColoredTree::corolla(&[1, 2], V, Scheme::FiveColor).unwrap();
    assert_eq!(five_to_rbw(&v).unwrap(), ColoredTree::corolla(&[1, 2], W, Scheme::Rbw).unwrap());

    for n in 2..=4 {
        for (a, b) in covering_pairs(Scheme::FiveColor, n) {
            let (fa, fb) = (five_to_rbw(&a).unwrap(), five_to_rbw(&b).unwrap());
            assert!(contraction_between(&fa, &fb).is_some(), "{a} -> {b} maps to {fa} -> {fb}");
        }
    }
}

#[test]
fn rw_to_rbw_examples_and_monotonicity() {
    let rr =
        ColoredTree::from_parts(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![R, R], Scheme::RwLocal).unwrap();
    assert_eq!(rw_to_rbw(&rr).unwrap(), rr.with_scheme(Scheme::Rbw).unwrap().recolor(&|_| B).unwrap());
    let w = ColoredTree::corolla(&[1, 2], W, Scheme::RwLocal).unwrap();
    assert_eq!(rw_to_rbw(&w).unwrap(), ColoredTree::corolla(&[1, 2], W, Scheme::Rbw).unwrap());
    let wr =
        ColoredTree::from_parts(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![W, R], Scheme::RwLocal).unwrap();
    assert_eq!(rw_to_rbw(&wr).unwrap(), ColoredTree::corolla(&[1, 2, 3], W, Scheme::Rbw).unwrap());

    for n in 2..=4 {
        for (a, b) in covering_pairs(Scheme::RwLocal, n) {
            let (fa, fb) = (rw_to_rbw(&a).unwrap(), rw_to_rbw(&b).unwrap());
            assert!(fa.count_colors(&[R]) == 0 && fb.count_colors(&[R]) == 0);
            assert!(contraction_between(&fa, &fb).is_some(), "{a} -> {b} maps to {fa} -> {fb}");
        }
    }
}

#[test]
fn json_round_trip_and_scheme_inference() {
    for scheme in [Scheme::Rbw, Scheme::FiveColor, Scheme::RwLocal] {
        for t in enumerate_colored(&label_range(3), scheme).unwrap() {
            let s = serde_json::to_string(&t).unwrap();
            let back: ColoredTree = serde_json::from_str(&s).unwrap();
            assert_eq!(back, t);
        }
    }
    let j: TreeJson =
        serde_json::from_str(r#"{"labels":{"0":[1],"1":[2,3]},"parent":{"1":0},"root":0,"colors":{"0":"B","1":"R"}}"#)
            .unwrap();
    assert_eq!(j.to_colored(None).unwrap().scheme(), Scheme::Rbw);
    let bad: Result<ColoredTree, _> =
        serde_json::from_str(r#"{"labels":{"0":[1]},"root":0,"colors":{"0":"R"},"scheme":"rbw"}"#);
    assert!(bad.is_err());
    assert!(treekit::colored_to_dot(&figure_source()).contains("fillcolor=red"));
}
