use std::collections::BTreeSet;

use gf2homology::{betti, is_homology_ball, is_homology_sphere, reduced_betti};
use posetkit::{
    adjoin_bottom, antichain, chain, cone, is_cw_poset, is_order_embedding, join, join_all, opposite, order_complex,
    point, poset_colimit, poset_iso, product, suspension, Diagram, DiagramMap, FinPoset, Interval, PosetJson,
};
use proptest::prelude::*;

/// All permutations of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Brute-force oracle: every labeled partial order on `n` elements.
fn all_posets(n: usize) -> Vec<FinPoset> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let rel: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let has = |a: usize, b: usize| rel.contains(&(a, b));
        let antisym = rel.iter().all(|&(a, b)| !has(b, a));
        let trans = rel.iter().all(|&(a, b)| (0..n).all(|c| !has(b, c) || has(a, c)));
        if antisym && trans {
            out.push(FinPoset::from_relations(n, &rel).unwrap());
        }
    }
    out
}

/// One representative per isomorphism class, using the brute-force iso oracle.
fn poset_classes(max: usize) -> Vec<FinPoset> {
    let mut reps: Vec<FinPoset> = Vec::new();
    for n in 0..=max {
        for p in all_posets(n) {
            if !reps.iter().any(|r| brute_iso(r, &p)) {
                reps.push(p);
            }
        }
    }
    reps
}

fn brute_iso(p: &FinPoset, q: &FinPoset) -> bool {
    p.len() == q.len() && permutations(p.len()).iter().any(|m| is_order_embedding(p, q, m))
}

fn reduced_euler(p: &FinPoset) -> i64 {
    order_complex(p).euler_characteristic() - 1
}

/// Face poset of the boundary of a square: vertices 0..4, edges 4..8.
fn square_boundary() -> FinPoset {
    let rel = [(0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (0, 7)];
    FinPoset::from_relations(8, &rel).unwrap()
}

/// Face poset of a closed interval: two vertices below one edge.
fn interval_cell() -> FinPoset {
    FinPoset::from_relations(3, &[(0, 2), (1, 2)]).unwrap()
}

#[test]
fn labeled_poset_counts_match_known_sequence() {
    let counts: Vec<usize> = (0..=4).map(|n| all_posets(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    assert_eq!(poset_classes(4).len(), 1 + 1 + 2 + 5 + 16);
}

#[test]
fn cycles_are_rejected() {
    assert!(FinPoset::from_relations(2, &[(0, 1), (1, 0)]).is_err());
}

#[test]
fn dimensions_are_longest_chains() {
    let c = chain(4);
    assert_eq!(c.dims(), &[0, 1, 2, 3]);
    let p = FinPoset::from_relations(4, &[(0, 3), (1, 2), (2, 3)]).unwrap();
    assert_eq!(p.dim(3), 2);
    assert_eq!(p.covers().len(), 3);
}

#[test]
fn interval_examples() {
    let c = chain(3);
    assert!(c.interval(Interval::HalfOpen(1, 1)).unwrap().0.is_empty());
    let max = c.maximum().unwrap();
    assert_eq!(c.interval(Interval::Lower(max)).unwrap().0.len(), c.len());
    let (upper, emb) = c.interval(Interval::HalfOpen(0, 2)).unwrap();
    assert_eq!(upper.len(), 2);
    assert_eq!(emb, vec![1, 2]);
    let a = antichain(2);
    assert!(a.interval(Interval::HalfOpen(0, 1)).is_err());
}

#[test]
fn join_examples() {
    assert_eq!(join(&point(), &point()).len(), 3);
    for p in poset_classes(3) {
        assert!(poset_iso(&join(&p, &FinPoset::empty()), &p).is_some());
    }
    let s1 = join(&antichain(2), &antichain(2));
    assert!(is_homology_sphere(&order_complex(&s1), 1));
    assert!(is_cw_poset(&s1).ok);
}

#[test]
fn cone_and_suspension_examples() {
    let s0 = suspension(&FinPoset::empty());
    assert_eq!(s0.len(), 2);
    assert!(s0.covers().is_empty());
    let s1 = suspension(&antichain(2));
    assert_eq!(s1.len(), 6);
    let oc = order_complex(&s1);
    assert_eq!(oc.euler_characteristic(), 0);
    assert_eq!(betti(&oc), vec![1, 1]);
    assert!(is_cw_poset(&s1).ok);
    for p in poset_classes(4) {
        assert!(reduced_betti(&order_complex(&cone(&p))).is_zero());
    }
}

#[test]
fn order_complex_examples() {
    assert_eq!(order_complex(&point()).facets(), &[vec![0]]);
    let tri = order_complex(&chain(3));
    assert_eq!(tri.f_vector(), vec![3, 3, 1]);
    let sq = order_complex(&square_boundary());
    assert_eq!(sq.f_vector(), vec![8, 8]);
    assert!(is_homology_sphere(&sq, 1));
}

#[test]
fn cw_recognition_examples() {
    assert!(is_cw_poset(&interval_cell()).ok);
    assert!(is_cw_poset(&square_boundary()).ok);
    // Three points under a single top element: the top's boundary is three points.
    let bad = FinPoset::from_relations(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
    let report = is_cw_poset(&bad);
    assert!(!report.ok);
    assert_eq!(report.failures.len(), 1);
    assert_eq!(report.failures[0].element, 3);
    // Suspension of a non-sphere is reported, not prevented.
    let three = antichain(3);
    assert!(!is_cw_poset(&suspension(&three)).ok);
}

#[test]
fn iso_examples() {
    let p = square_boundary();
    let id: Vec<usize> = (0..p.len()).collect();
    assert_eq!(poset_iso(&p, &p).map(|m| is_order_embedding(&p, &p, &m)), Some(true));
    assert!(is_order_embedding(&p, &p, &id));
    assert!(poset_iso(&chain(3), &antichain(3)).is_none());
    // A relabeled copy is found.
    let order = vec![5, 2, 7, 0, 1, 6, 4, 3];
    let q = p.permuted(&order);
    let m = poset_iso(&p, &q).unwrap();
    assert!(is_order_embedding(&p, &q, &m));
}

#[test]
fn iso_agrees_with_brute_force_on_small_posets() {
    let classes = poset_classes(4);
    for a in &classes {
        for b in &classes {
            assert_eq!(poset_iso(a, b).is_some(), brute_iso(a, b));
        }
    }
}

#[test]
fn join_is_associative_up_to_isomorphism() {
    let classes = poset_classes(3);
    for a in &classes {
        for b in &classes {
            for c in &classes {
                let left = join(&join(a, b), c);
                let right = join(a, &join(b, c));
                assert!(poset_iso(&left, &right).is_some());
                assert!(poset_iso(&left, &join_all(&[a, b, c])).is_some());
            }
        }
    }
}

#[test]
fn reduced_euler_characteristic_is_multiplicative_under_join() {
    let classes = poset_classes(4);
    for a in &classes {
        for b in &classes {
            assert_eq!(reduced_euler(&join(a, b)), -reduced_euler(a) * reduced_euler(b));
        }
    }
}

#[test]
fn suspension_shifts_homology_of_spheres() {
    let spheres = [FinPoset::empty(), antichain(2), square_boundary(), suspension(&antichain(2))];
    for s in &spheres {
        let k = order_complex(s).dim();
        assert!(is_homology_sphere(&order_complex(s), k));
        let sigma = suspension(s);
        assert!(is_homology_sphere(&order_complex(&sigma), k + 1));
        assert!(is_cw_poset(&sigma).ok);
        assert_eq!(reduced_betti(&order_complex(&sigma)).get(k + 1), reduced_betti(&order_complex(s)).get(k));
    }
}

#[test]
fn products_of_cw_posets_are_cw_posets() {
    let cells = [point(), interval_cell(), square_boundary(), suspension(&antichain(2))];
    for a in &cells {
        for b in &cells {
            let p = product(a, b);
            assert!(is_cw_poset(&p).ok);
            assert_eq!(p.cell_euler(), a.cell_euler() * b.cell_euler());
        }
    }
    let grid = product(&chain(2), &chain(2));
    assert_eq!(grid.len(), 4);
    assert_eq!(grid.covers().len(), 4);
    assert!(is_homology_ball(&order_complex(&product(&interval_cell(), &interval_cell()))));
}

#[test]
fn opposite_and_bottom() {
    for p in poset_classes(4) {
        assert_eq!(opposite(&opposite(&p)), p);
        let u = adjoin_bottom(&p);
        assert_eq!(u.len(), p.len() + 1);
        assert_eq!(u.minimum(), Some(p.len()));
    }
}

#[test]
fn colimit_examples() {
    let single = Diagram { objects: vec![interval_cell()], maps: vec![] };
    let c = poset_colimit(&single).unwrap();
    assert_eq!(c.poset, interval_cell());

    // Two intervals glued at one endpoint through a point.
    let d = Diagram {
        objects: vec![point(), interval_cell(), interval_cell()],
        maps: vec![
            DiagramMap { source: 0, target: 1, map: vec![1] },
            DiagramMap { source: 0, target: 2, map: vec![0] },
        ],
    };
    let c = poset_colimit(&d).unwrap();
    assert_eq!(c.poset.f_vector(), vec![3, 2]);
    assert!(is_homology_ball(&order_complex(&c.poset)));
    assert_eq!(c.members.iter().filter(|m| m.len() == 3).count(), 1);

    // A non-embedding map is rejected.
    let bad = Diagram {
        objects: vec![chain(2), antichain(2)],
        maps: vec![DiagramMap { source: 0, target: 1, map: vec![0, 1] }],
    };
    assert!(poset_colimit(&bad).is_err());
}

#[test]
fn colimit_commutes_with_order_complex() {
    // Four edges glued cyclically at their endpoints through four points.
    let mut d = Diagram { objects: vec![], maps: vec![] };
    for _ in 0..4 {
        d.objects.push(interval_cell());
    }
    for i in 0..4 {
        d.objects.push(point());
        let pt = 4 + i;
        d.maps.push(DiagramMap { source: pt, target: i, map: vec![1] });
        d.maps.push(DiagramMap { source: pt, target: (i + 1) % 4, map: vec![0] });
    }
    let c = poset_colimit(&d).unwrap();
    assert!(poset_iso(&c.poset, &square_boundary()).is_some());
    let glued: BTreeSet<Vec<usize>> = d
        .objects
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            let inj = c.injections[i].clone();
            order_complex(p)
                .facets()
                .iter()
                .map(move |f| {
                    let mut s: Vec<usize> = f.iter().map(|&v| inj[v]).collect();
                    s.sort_unstable();
                    s
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let glued = gf2homology::SimplicialComplex::new(glued);
    assert_eq!(glued, order_complex(&c.poset));
}

#[test]
fn json_round_trip() {
    let p = suspension(&antichain(2));
    let j = PosetJson::from(&p);
    let s = serde_json::to_string(&j).unwrap();
    let back: PosetJson = serde_json::from_str(&s).unwrap();
    assert_eq!(back.to_poset().unwrap(), p);
    assert!(p.to_dot().contains("->"));
}

fn arb_poset() -> impl Strategy<Value = FinPoset> {
    (1usize..7).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..10).prop_map(move |pairs| {
            // Orient every pair from smaller to larger index: always acyclic.
            let rel: Vec<(usize, usize)> =
                pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
            FinPoset::from_relations(n, &rel).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn iso_finds_shuffled_copies(p in arb_poset(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..p.len()).collect();
        // Deterministic shuffle from the seed.
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let q = p.permuted(&order);
        let m = poset_iso(&p, &q);
        prop_assert!(m.is_some());
        prop_assert!(is_order_embedding(&p, &q, &m.unwrap()));
    }

    #[test]
    fn cover_relations_generate_the_order(p in arb_poset()) {
        let q = FinPoset::from_relations(p.len(), &p.covers()).unwrap();
        prop_assert_eq!(q, p);
    }
}
