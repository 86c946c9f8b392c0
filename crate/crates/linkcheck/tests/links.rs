use gf2homology::{euler_characteristic, is_homology_sphere, reduced_betti};
use linkcheck::{
    block_subtree, collapsed, corpus, height_contraction, link_poset, nontrivial_contractions, remove_leaf,
    sample_corpus, sweep_five_links, sweep_join_decomposition, sweep_link_balls, sweep_rwlocal_links, sweep_sys_iso,
    sys_leq, system_poset, tree_link, upper_link, verify_five_link, verify_join_decomposition, verify_link_ball,
    verify_rwlocal_link, verify_sys_iso, LinkError, StepKind,
};
use polykit::BigRational;
use posetkit::{antichain, cone, join_all, order_complex, poset_iso, suspension, FinPoset};
use treekit::{
    act, contract, contraction_between, Color, ColoredTree, Contraction, ContractionSystem, Permutation, Scheme,
};

use Color::{B, O, R, W};

fn tree(parents: Vec<Option<usize>>, labels: Vec<Vec<u32>>, colors: Vec<Color>, scheme: Scheme) -> ColoredTree {
    ColoredTree::from_parts(parents, labels, colors, scheme).unwrap()
}

/// White root over two red vertices on {1,2} and {3,4}.
fn w_over_two_reds(scheme: Scheme) -> ColoredTree {
    tree(vec![None, Some(0), Some(0)], vec![vec![], vec![1, 2], vec![3, 4]], vec![W, R, R], scheme)
}

/// Red root {1} over a red vertex {2,3}.
fn red_edge() -> ColoredTree {
    tree(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![R, R], Scheme::Rbw)
}

fn to_white(t: &ColoredTree) -> Contraction {
    contraction_between(t, &collapsed(t, W).unwrap()).unwrap()
}

fn figure_source() -> ColoredTree {
    tree(
        vec![None, Some(0), Some(1), Some(0), Some(3), Some(3), Some(0)],
        vec![vec![5], vec![1], vec![2, 6], vec![], vec![7, 10, 11], vec![4, 8], vec![3, 9]],
        vec![B, R, R, W, R, R, B],
        Scheme::Rbw,
    )
}

#[test]
fn link_poset_examples() {
    let red = ColoredTree::corolla(&[1, 2], R, Scheme::Rbw).unwrap();
    let l = link_poset(&to_white(&red)).unwrap();
    assert_eq!(l.poset.len(), 1);
    assert!(l.boundary().0.is_empty());

    let l = tree_link(&w_over_two_reds(Scheme::Rbw)).unwrap();
    assert_eq!(l.poset.len(), 3);
    assert_eq!(l.poset.maximum(), Some(l.top));
    let (bd, _) = l.boundary();
    assert!(poset_iso(&bd, &antichain(2)).is_some());

    let l = tree_link(&red_edge()).unwrap();
    assert_eq!(l.poset.len(), 3);
    let (bd, _) = l.boundary();
    assert!(poset_iso(&bd, &antichain(2)).is_some());
    let targets: Vec<String> = l.elements.iter().map(|e| e.target().compact()).collect();
    assert!(targets.contains(&"R{1,2,3}".to_string()));
    assert!(targets.contains(&"W{1,R{2,3}}".to_string()));
}

#[test]
fn trivial_contractions_have_no_link() {
    let t = red_edge();
    assert!(matches!(link_poset(&Contraction::identity(&t)), Err(LinkError::Trivial)));
    let white = ColoredTree::corolla(&[1, 2], W, Scheme::Rbw).unwrap();
    assert!(matches!(tree_link(&white), Err(LinkError::Trivial)));
}

#[test]
fn system_poset_examples() {
    let t = red_edge();
    let sys = system_poset(&t);
    let red = ContractionSystem::new(vec![(vec![0, 1], R)]);
    let white = ContractionSystem::new(vec![(vec![0, 1], W)]);
    let (i, j) = (sys.position(&red).unwrap(), sys.position(&white).unwrap());
    assert!(sys.poset.lt(i, j));
    assert_eq!(sys.poset.maximum(), Some(j));
    assert_eq!(sys.systems.len(), tree_link(&t).unwrap().elements.len());
    // Blue blocks may only sit under blue blocks; white under white.
    let recolor = ContractionSystem::new(vec![(vec![0], W), (vec![1], R)]);
    assert!(sys_leq(&recolor, &white));
    assert!(!sys_leq(&recolor, &red));
}

#[test]
fn sys_iso_examples() {
    let blue = ColoredTree::corolla(&[1, 2], B, Scheme::Rbw).unwrap();
    assert!(verify_sys_iso(&blue).ok);
    let r = verify_sys_iso(&figure_source());
    assert!(r.ok, "{r:?}");
    assert_eq!(r.systems, r.contractions);
    assert_eq!(r.contractions, tree_link(&figure_source()).unwrap().elements.len());
}

#[test]
fn join_decomposition_examples() {
    let red = ColoredTree::corolla(&[1, 2], R, Scheme::Rbw).unwrap();
    let s = ContractionSystem::new(vec![(vec![0], W)]);
    let r = verify_join_decomposition(&red, &s).unwrap();
    assert!(r.ok && r.blocks == 1);

    // Blue root over a red edge: recolor the root white and merge the red edge.
    let t = tree(vec![None, Some(0), Some(1)], vec![vec![1], vec![2], vec![3, 4]], vec![B, R, R], Scheme::Rbw);
    let s = ContractionSystem::new(vec![(vec![0], W), (vec![1, 2], R)]);
    let (target, c) = contract(&t, &s).unwrap();
    assert_eq!(target.compact(), "W{1,R{2,3,4}}");
    let r = verify_join_decomposition(&t, &s).unwrap();
    assert!(r.ok && r.blocks == 2, "{r:?}");
    // Both block links are points, so the link is their join: two points and an edge.
    let link = link_poset(&c).unwrap();
    assert_eq!(link.poset.len(), 3);
    assert!(poset_iso(&link.poset, &join_all(&[&posetkit::point(), &posetkit::point()])).is_some());
}

#[test]
fn block_subtrees_keep_outgoing_edges_as_labels() {
    let t = figure_source();
    let tt = t.tree();
    let (root, blue) = (tt.holder(5).unwrap(), tt.holder(3).unwrap());
    let white = tt.parent(tt.holder(7).unwrap()).unwrap();
    let mut block = vec![root, white, blue];
    block.sort_unstable();
    let (sub, global) = block_subtree(&t, &block).unwrap();
    assert_eq!(sub.compact(), "B{1,5,B{3,9},W{4,7}}");
    let mut g = global.clone();
    g.sort_unstable();
    assert_eq!(g, block);
}

#[test]
fn ball_certificate_examples() {
    let red = ColoredTree::corolla(&[1, 2, 3], R, Scheme::Rbw).unwrap();
    let cert = verify_link_ball(&to_white(&red)).unwrap();
    assert!(cert.ok);
    assert_eq!((cert.codim, cert.elements, cert.boundary_euler), (1, 1, 0));
    assert_eq!(cert.polytope_iso, Some(true));

    let cert = verify_link_ball(&to_white(&w_over_two_reds(Scheme::Rbw))).unwrap();
    assert!(cert.ok);
    assert_eq!((cert.codim, cert.boundary_euler), (2, 2));
    assert!(cert.counterexample.is_none());
    let json = serde_json::to_value(&cert).unwrap();
    assert_eq!(json["explicit_map"], serde_json::json!(true));
    assert!(json.get("counterexample").is_none());

    // A contraction that does not end at •W: no polytope check, interval check instead.
    let t = w_over_two_reds(Scheme::Rbw);
    let mid = tree(vec![None, Some(0)], vec![vec![1, 2], vec![3, 4]], vec![W, R], Scheme::Rbw);
    let cert = verify_link_ball(&contraction_between(&t, &mid).unwrap()).unwrap();
    assert!(cert.ok && cert.polytope_iso.is_none() && cert.interval_match);
}

#[test]
fn height_map_examples() {
    let t = w_over_two_reds(Scheme::Rbw);
    let q = |n: i64| BigRational::from_integer(n.into());
    assert!(height_contraction(&t, &[q(1), q(2)]).unwrap().is_trivial());
    assert_eq!(height_contraction(&t, &[q(0), q(2)]).unwrap().target().compact(), "W{1,2,R{3,4}}");
    assert_eq!(height_contraction(&t, &[q(0), q(0)]).unwrap().target().compact(), "W{1,2,3,4}");
    let chain = red_edge();
    // Equal positive heights on a red edge contract it to a red vertex.
    assert_eq!(height_contraction(&chain, &[q(3), q(3)]).unwrap().target().compact(), "R{1,2,3}");
}

#[test]
fn link_ball_sweep_up_to_four_labels() {
    let trees = corpus(Scheme::Rbw, 4).unwrap();
    let s = sweep_link_balls(&trees);
    assert!(s.passed(), "{:?}", s.failures.first());
    assert_eq!(s.checked, 752);
}

#[test]
fn links_are_balls_with_euler_characteristic_one() {
    for t in corpus(Scheme::Rbw, 3).unwrap() {
        let candidates = nontrivial_contractions(&t);
        for c in &candidates {
            let l = link_poset(c).unwrap();
            let cx = order_complex(&l.poset);
            assert_eq!(euler_characteristic(&cx), 1);
            assert!(reduced_betti(&cx).is_zero());
            assert_eq!(l.poset.max_dim(), c.codim().unwrap() as i64 - 1);
        }
    }
}

#[test]
fn links_are_equivariant() {
    let labels = [1, 2, 3];
    for t in corpus(Scheme::Rbw, 3).unwrap().into_iter().filter(|t| t.tree().label_set() == labels) {
        let Ok(l) = tree_link(&t) else { continue };
        for g in Permutation::all(&labels) {
            let gl = tree_link(&act(&g, &t).unwrap()).unwrap();
            // The map e ↦ g·e is an order isomorphism 𝒫_T → 𝒫_{g·T}.
            let map: Vec<usize> =
                l.elements.iter().map(|e| gl.position(&act(&g, e.target()).unwrap()).unwrap()).collect();
            let n = map.len();
            assert_eq!(n, gl.elements.len());
            assert!((0..n).all(|a| (0..n).all(|b| l.poset.leq(a, b) == gl.poset.leq(map[a], map[b]))));
        }
    }
}

#[test]
fn structural_sweeps_up_to_four_labels() {
    let trees = corpus(Scheme::Rbw, 4).unwrap();
    let s = sweep_sys_iso(&trees);
    assert!(s.passed(), "{:?}", s.failures.first());
    let j = sweep_join_decomposition(&trees);
    assert!(j.passed(), "{:?} {:?}", j.failures.first(), j.errors.first());
    assert_eq!(j.checked, 752);
}

/// `R(T, v)` for a red leaf vertex `v`: merge it into a red or white parent,
/// or recolor it white under a blue parent.
fn reduce_red_leaf(t: &ColoredTree, v: usize) -> ColoredTree {
    let p = t.tree().parent(v).unwrap();
    let mut blocks: Vec<(Vec<usize>, Color)> =
        (0..t.vertex_count()).filter(|&w| w != v && w != p).map(|w| (vec![w], t.color(w))).collect();
    if t.color(p) == B {
        blocks.push((vec![p], B));
        blocks.push((vec![v], W));
    } else {
        blocks.push((vec![p, v], t.color(p)));
    }
    contract(t, &ContractionSystem::new(blocks)).unwrap().0
}

fn link_or_empty(t: &ColoredTree) -> FinPoset {
    tree_link(t).map(|l| l.poset).unwrap_or_else(|_| FinPoset::empty())
}

#[test]
fn red_leaf_cone_property() {
    let mut checked = 0;
    for t in corpus(Scheme::Rbw, 4).unwrap() {
        let tt = t.tree();
        for v in
            (0..t.vertex_count()).filter(|&v| t.color(v) == R && tt.children(v).is_empty() && tt.parent(v).is_some())
        {
            let reduced = reduce_red_leaf(&t, v);
            assert!(poset_iso(&link_or_empty(&t), &cone(&link_or_empty(&reduced))).is_some(), "{}", t.compact());
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn redless_boundary_suspension_property() {
    let mut checked = 0;
    for t in corpus(Scheme::Rbw, 4).unwrap() {
        if t.colors().contains(&R) || t.vertex_count() == 1 {
            continue;
        }
        let tt = t.tree();
        let root = tt.root();
        let factors: Vec<FinPoset> = tt
            .children(root)
            .iter()
            .filter(|&&c| t.color(c) == B)
            .map(|&c| {
                let (branch, _) = block_subtree(&t, &tt.subtree(c)).unwrap();
                suspension(&tree_link(&branch).unwrap().boundary().0)
            })
            .collect();
        let rhs = join_all(&factors.iter().collect::<Vec<_>>());
        let lhs = link_or_empty(&t);
        let lhs_boundary = match lhs.maximum() {
            Some(top) => lhs.induced(&(0..lhs.len()).filter(|&i| i != top).collect::<Vec<_>>()),
            None => lhs,
        };
        assert!(poset_iso(&lhs_boundary, &rhs).is_some(), "{}", t.compact());
        checked += 1;
    }
    assert!(checked > 10);
}

#[test]
fn rw_local_examples() {
    let white = ColoredTree::corolla(&[1, 2], W, Scheme::RwLocal).unwrap();
    let c = verify_rwlocal_link(&white).unwrap();
    assert!(c.ok && c.elements == 0 && c.kind == "sphere" && c.dim == -1);
    let red = ColoredTree::corolla(&[1, 2], R, Scheme::RwLocal).unwrap();
    let c = verify_rwlocal_link(&red).unwrap();
    assert!(c.ok && c.elements == 1 && c.kind == "ball" && c.dim == 0);
    let t = w_over_two_reds(Scheme::RwLocal);
    let c = verify_rwlocal_link(&t).unwrap();
    assert!(c.ok && c.kind == "sphere" && c.dim == 1);
    assert!(is_homology_sphere(&order_complex(&upper_link(&t).poset), 1));
    assert_eq!(c.steps.len(), 2);
    assert!(c.steps.iter().all(|s| s.kind == StepKind::Suspension));
    // A white leaf under a red root is inert; red/white orders are unconstrained.
    let t = tree(vec![None, Some(0)], vec![vec![1], vec![2, 3]], vec![R, W], Scheme::RwLocal);
    let c = verify_rwlocal_link(&t).unwrap();
    assert!(c.ok && c.steps[0].kind == StepKind::Inert);
    assert_eq!(remove_leaf(&t, 1).unwrap().compact(), "R{1,2,3}");
}

#[test]
fn rw_local_sweep_up_to_four_labels() {
    let s = sweep_rwlocal_links(&corpus(Scheme::RwLocal, 4).unwrap());
    assert!(s.passed(), "{:?}", s.failures.first());
    assert_eq!(s.checked, 178);
}

#[test]
fn five_color_examples() {
    let o = ColoredTree::corolla(&[1, 2], O, Scheme::FiveColor).unwrap();
    let c = verify_five_link(&o).unwrap();
    assert!(c.ok && !c.expect_ball && c.faces == 2);
    assert!(poset_iso(&upper_link(&o).poset, &antichain(2)).is_some());
    let r = ColoredTree::corolla(&[1, 2], R, Scheme::FiveColor).unwrap();
    let c = verify_five_link(&r).unwrap();
    assert!(c.ok && c.expect_ball && c.faces == 1);
    let w = ColoredTree::corolla(&[1, 2], W, Scheme::FiveColor).unwrap();
    assert!(matches!(verify_five_link(&w), Err(LinkError::EmptyLink)));
    // White over orange over violet.
    let chain =
        tree(vec![None, Some(0), Some(1)], vec![vec![1], vec![2], vec![3, 4]], vec![W, O, Color::V], Scheme::FiveColor);
    let c = verify_five_link(&chain).unwrap();
    assert!(c.ok && c.block_join);
}

#[test]
fn five_color_sweep_up_to_three_labels() {
    let s = sweep_five_links(&corpus(Scheme::FiveColor, 3).unwrap());
    assert!(s.passed(), "{:?}", s.failures.first());
    assert_eq!(s.checked, 42);
}

#[test]
fn sampled_corpus_is_reproducible() {
    let a = sample_corpus(Scheme::Rbw, 5, 12, 42).unwrap();
    let b = sample_corpus(Scheme::Rbw, 5, 12, 42).unwrap();
    let c = sample_corpus(Scheme::Rbw, 5, 12, 43).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(a.len(), 12);
    assert!(sweep_link_balls(&a).passed());
    assert_eq!(sample_corpus(Scheme::Rbw, 2, 100, 0).unwrap().len(), 3);
}

#[test]
fn scheme_and_size_errors() {
    assert!(matches!(corpus(Scheme::Rbw, 1), Err(LinkError::TooFewLabels(1))));
    let five = ColoredTree::corolla(&[1, 2], R, Scheme::FiveColor).unwrap();
    assert!(matches!(verify_rwlocal_link(&five), Err(LinkError::WrongScheme { .. })));
    let rbw = ColoredTree::corolla(&[1, 2], R, Scheme::Rbw).unwrap();
    assert!(matches!(verify_five_link(&rbw), Err(LinkError::WrongScheme { .. })));
    assert!(matches!(
        verify_join_decomposition(&five, &ContractionSystem::new(vec![(vec![0], Color::V)])),
        Err(LinkError::WrongScheme { .. })
    ));
}

#[test]
fn elementary_sweep_on_four_labels() {
    let trees = corpus(Scheme::Rbw, 4).unwrap();
    let summary = linkcheck::sweep_elementary(&trees);
    assert!(summary.passed(), "{:?}", summary.failures.first());
    assert!(summary.checked > trees.len());
}
