use posetkit::{poset_iso, FinPoset};
use stratlab::{
    boundary_colimit, chi48, cone_fill, dimension_ledger, extend_left, extend_right, fm1_model, fm1_pentagons,
    free_action_check, hexagons, interval_nullbordism_model, interval_with_w3, null_chain, null_surgery_model,
    recognize, stratified_euler, stratum_codim, trivial_bimodule_model, validate_model, with_dropped_identification,
    CellModel, ComplexJson, EquivariantComplex, Flavor, LedgerKind, ModelJson, ModelKind, StratError, Stratum,
    StructureKind, ViolationKind,
};
use treekit::Color;

fn complex(poset: FinPoset) -> EquivariantComplex {
    let n = poset.len();
    EquivariantComplex { arity: 1, poset, action: vec![(0..n).collect()], provenance: vec![Stratum::Interior; n] }
}

/// Vertices 0..4, edges 4..10, triangles 10..14 of the boundary of a tetrahedron.
fn tetrahedron_boundary() -> FinPoset {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut rel = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        rel.push((a, 4 + i));
        rel.push((b, 4 + i));
    }
    let triangles = [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]];
    for (k, t) in triangles.iter().enumerate() {
        for &e in t {
            rel.push((4 + e, 10 + k));
        }
    }
    FinPoset::from_relations(14, &rel).unwrap()
}

/// The face poset of a graph: vertices first, then one cell per edge.
fn graph(vertices: usize, edges: &[(usize, usize)]) -> FinPoset {
    let rel: Vec<(usize, usize)> =
        edges.iter().enumerate().flat_map(|(i, &(a, b))| [(a, vertices + i), (b, vertices + i)]).collect();
    FinPoset::from_relations(vertices + edges.len(), &rel).unwrap()
}

fn boundary_everywhere(mut cx: EquivariantComplex) -> EquivariantComplex {
    // Cone filling only needs every cell to carry some stratum.
    let tag = treekit::ColoredTree::corolla(&[1, 2], Color::R, treekit::Scheme::Rbw).unwrap();
    cx.provenance = (0..cx.len()).map(|c| Stratum::Boundary { tree: tag.clone(), cells: vec![c] }).collect();
    cx
}

#[test]
fn fm1_arity_two_is_two_points() {
    let m = fm1_model(2).unwrap();
    let r2 = m.space(Color::R, 2).unwrap();
    assert_eq!(r2.poset().f_vector(), vec![2]);
    assert_eq!(r2.interior_cells().len(), 2);
}

#[test]
fn fm1_arity_three_is_six_intervals() {
    let m = fm1_model(3).unwrap();
    let r3 = recognize(&EquivariantComplex::from(m.space(Color::R, 3).unwrap()));
    assert_eq!(r3.cells, 18);
    assert_eq!(r3.f_vector, vec![12, 6]);
    assert_eq!(r3.components, 6);
    assert_eq!(r3.component_sizes, vec![3; 6]);
}

#[test]
fn fm1_arity_four_is_twenty_four_pentagons() {
    let report = fm1_pentagons().unwrap();
    assert_eq!(report.pentagons, 24);
    assert_eq!(report.arity4_space.f_vector, vec![120, 120, 24]);
    assert_eq!(report.arity4_space.components, 24);
    assert_eq!(report.arity4_space.euler, 24);
    assert_eq!(report.arity3_boundary.kind, StructureKind::Points);
    assert_eq!(report.arity3_boundary.cells, 12);
    assert_eq!(report.arity4_boundary.kind, StructureKind::Circles);
    assert_eq!(report.arity4_boundary.components, 24);
    assert!(report.valid);
}

#[test]
fn fm1_validates_up_to_four() {
    for n in 2..=4 {
        let report = validate_model(&fm1_model(n).unwrap());
        assert!(report.ok, "{report}");
        for s in &report.spaces {
            assert_eq!(s.top_dim.map(|d| d as i64), Some(s.expected_dim));
        }
    }
}

#[test]
fn fm1_truncation_out_of_range() {
    assert!(matches!(fm1_model(1), Err(StratError::TruncationOutOfRange(1))));
    assert!(matches!(fm1_model(6), Err(StratError::TruncationOutOfRange(6))));
}

#[test]
fn operad_boundary_dimension_deficit_is_edge_count() {
    let model = fm1_model(4).unwrap();
    for m in 3..=4 {
        let cx = boundary_colimit(&model, m, Flavor::Operad).unwrap();
        for (c, s) in cx.provenance.iter().enumerate() {
            let Stratum::Boundary { tree, .. } = s else { panic!("colimit cells carry strata") };
            assert_eq!(cx.poset.dim(c) + stratum_codim(tree), m - 2);
        }
    }
}

#[test]
fn stratified_euler_matches_cell_euler() {
    let fm1 = fm1_model(4).unwrap();
    let interval = interval_with_w3().unwrap();
    let trivial = trivial_bimodule_model(&fm1).unwrap();
    for (model, flavors) in
        [(&fm1, vec![Flavor::Operad]), (&interval, Flavor::ALL.to_vec()), (&trivial, Flavor::ALL.to_vec())]
    {
        for m in 2..=model.truncation() + 1 {
            for &f in &flavors {
                let cx = boundary_colimit(model, m, f).unwrap();
                assert_eq!(cx.euler(), stratified_euler(model, m, f).unwrap(), "{} arity {m} {f}", model.name());
            }
        }
    }
}

#[test]
fn colimit_action_respects_provenance() {
    let model = interval_with_w3().unwrap();
    let cx = boundary_colimit(&model, 4, Flavor::BimoduleBoundary).unwrap();
    for g in cx.group() {
        let row = cx.action_of(&g);
        for (c, s) in cx.provenance.iter().enumerate() {
            let Stratum::Boundary { tree, cells } = s else { unreachable!() };
            let image = model.act_stratum(&g, tree, cells).unwrap();
            assert_eq!(cx.provenance[row[c]], Stratum::Boundary { tree: image.0, cells: image.1 });
            assert_eq!(cx.poset.dim(row[c]), cx.poset.dim(c));
        }
    }
}

#[test]
fn flavors_parse_and_reject() {
    for f in Flavor::ALL {
        assert_eq!(f.as_str().parse::<Flavor>().unwrap(), f);
    }
    assert!("sideways".parse::<Flavor>().is_err());
    let fm1 = fm1_model(3).unwrap();
    assert!(matches!(boundary_colimit(&fm1, 3, Flavor::RightPart), Err(StratError::WrongKind { .. })));
}

#[test]
fn interval_model_basics() {
    let model = interval_nullbordism_model().unwrap();
    let report = validate_model(&model);
    assert!(report.ok, "{report}");
    let w2 = model.space(Color::W, 2).unwrap();
    assert_eq!(w2.poset().cell_euler(), 1);
    assert_eq!(w2.boundary_cells(), vec![0, 1]);
    for c in w2.boundary_cells() {
        let Stratum::Boundary { tree, .. } = w2.stratum(c) else { unreachable!() };
        assert!(tree.is_corolla_of(Color::R));
    }
    let swap = &stratlab::symmetric_group(2)[1];
    assert_eq!(w2.action_of(swap), &[1, 0, 2]);
    assert!(!free_action_check(&EquivariantComplex::from(w2)).free);
}

#[test]
fn hexagons_in_arity_three() {
    let report = hexagons().unwrap();
    assert_eq!(report.recognition.kind, StructureKind::Circles);
    assert_eq!(report.recognition.f_vector, vec![12, 12]);
    assert_eq!(report.recognition.components, 2);
    assert_eq!(report.recognition.euler, 0);
    assert_eq!(report.cycle_lengths, vec![6, 6]);
    assert!(report.alternating_free);
    assert!(report.transpositions_swap);
    assert!(report.action.free);
    let model = interval_nullbordism_model().unwrap();
    assert_eq!(stratified_euler(&model, 3, Flavor::BimoduleBoundary).unwrap(), 0);
    assert_eq!(stratified_euler(&fm1_model(3).unwrap(), 3, Flavor::Operad).unwrap(), 12);
}

#[test]
fn cone_fill_hexagons_gives_two_discs() {
    let model = interval_nullbordism_model().unwrap();
    let w3 = cone_fill(&boundary_colimit(&model, 3, Flavor::BimoduleBoundary).unwrap()).unwrap();
    assert_eq!(w3.interior_cells().len(), 2);
    assert_eq!(w3.poset().cell_euler(), 2);
    assert_eq!(w3.poset().components().len(), 2);
    let extended = model.with_space(w3);
    assert_eq!(extended.truncation(), 3);
    assert!(validate_model(&extended).ok);
}

#[test]
fn cone_fill_square_and_rejects_non_circles() {
    let square = boundary_everywhere(complex(graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])));
    let disc = cone_fill(&square).unwrap();
    assert_eq!(disc.len(), 9);
    assert_eq!(disc.poset().cell_euler(), 1);
    let tripod = boundary_everywhere(complex(graph(4, &[(0, 1), (0, 2), (0, 3)])));
    assert!(matches!(cone_fill(&tripod), Err(StratError::NotCircles(_))));
}

#[test]
fn tetrahedron_is_a_closed_surface() {
    let r = recognize(&complex(tetrahedron_boundary()));
    assert_eq!(r.kind, StructureKind::ClosedSurface);
    assert_eq!(r.euler, 2);
    assert_eq!(r.components, 1);
    assert_eq!(r.betti, vec![1, 0, 1]);
}

#[test]
fn degree_three_vertex_is_not_a_curve() {
    let theta = graph(2, &[(0, 1), (0, 1), (0, 1)]);
    let r = recognize(&complex(theta));
    assert_eq!(r.kind, StructureKind::NotManifold);
    assert!(r.witness.unwrap().contains("3 edges"));
    let pinched = graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
    assert_eq!(recognize(&complex(pinched)).kind, StructureKind::NotManifold);
}

#[test]
fn dropped_identification_breaks_intersections() {
    let model = fm1_model(4).unwrap();
    let broken = with_dropped_identification(&model, Color::R, 4).unwrap();
    let report = validate_model(&broken);
    assert!(!report.ok);
    assert!(report.has(ViolationKind::Intersection), "{report}");
    assert!(matches!(extend_right(&trivial_bimodule_model(&broken).unwrap()), Err(StratError::Invalid(_))));
}

#[test]
fn arity_four_boundary_euler_characteristic() {
    let report = chi48().unwrap();
    assert!(report.extended_model_valid);
    assert_eq!(report.euler, report.stratified_euler);
    assert_eq!(report.euler, 12);
    assert_eq!(report.stated, -48);
    assert!(!report.matches_stated);
    assert_eq!(report.contributions.iter().map(|c| c.euler).sum::<i64>(), 12);
    // (13)(24) fixes the stratum of W over R{1,2} and R{3,4}.
    assert!(!report.action.free);
    assert!(report.action.fixed.iter().any(|f| f.permutation == vec![3, 4, 1, 2]));
}

#[test]
fn trivial_bimodule_right_surgery() {
    let fm1 = fm1_model(4).unwrap();
    let trivial = trivial_bimodule_model(&fm1).unwrap();
    assert!(validate_model(&trivial).ok);
    let c = boundary_colimit(&trivial, 3, Flavor::RightPart).unwrap();
    assert_eq!(c.f_vector(), vec![36, 30]);
    let out = extend_right(&trivial).unwrap();
    assert!(validate_model(&out).ok);
    assert_eq!(out.truncation(), 3);
    let w3 = out.space(Color::W, 3).unwrap();
    assert_eq!(w3.poset().cell_euler(), 6);
    assert_eq!(w3.top_dim(), Some(2));
    // The new red space: C × 0, the collar, and the far end, with the
    // decomposable strata (twelve points) as its boundary.
    let r3 = out.space(Color::R, 3).unwrap();
    assert_eq!(r3.poset().f_vector(), vec![72, 66]);
    assert_eq!(r3.boundary_cells().len(), 12);
    let new_boundary = boundary_colimit(&out, 3, Flavor::Operad).unwrap();
    let fm1_boundary = boundary_colimit(&fm1, 3, Flavor::Operad).unwrap();
    assert_eq!(new_boundary.provenance, fm1_boundary.provenance);
    assert!(poset_iso(&new_boundary.poset, &fm1_boundary.poset).is_some());
}

#[test]
fn left_and_right_surgery_agree_on_the_trivial_bimodule() {
    let trivial = trivial_bimodule_model(&fm1_model(4).unwrap()).unwrap();
    let left = extend_left(&trivial).unwrap();
    let right = extend_right(&trivial).unwrap();
    assert!(validate_model(&left).ok);
    let (lw, rw) = (left.space(Color::W, 3).unwrap(), right.space(Color::W, 3).unwrap());
    assert!(poset_iso(lw.poset(), rw.poset()).is_some());
    let (lb, rr) = (left.space(Color::B, 3).unwrap(), right.space(Color::R, 3).unwrap());
    assert!(poset_iso(lb.poset(), rr.poset()).is_some());
}

#[test]
fn left_surgery_on_the_interval_gives_circles() {
    let out = extend_left(&interval_nullbordism_model().unwrap()).unwrap();
    let b3 = recognize(&EquivariantComplex::from(out.space(Color::B, 3).unwrap()));
    assert_eq!(b3.kind, StructureKind::Circles);
    assert_eq!(b3.components, 2);
    assert_eq!(b3.f_vector, vec![12, 12]);
}

#[test]
fn right_surgery_with_the_trivial_left_operad_gives_intervals() {
    let out = extend_right(&interval_nullbordism_model().unwrap()).unwrap();
    let r3 = recognize(&EquivariantComplex::from(out.space(Color::R, 3).unwrap()));
    assert_eq!(r3.kind, StructureKind::NotManifold);
    assert_eq!(r3.components, 6);
}

#[test]
fn null_chain_circle_then_surfaces() {
    let first = extend_right(&null_surgery_model().unwrap()).unwrap();
    assert!(validate_model(&first).ok);
    let report = null_chain().unwrap();
    assert_eq!(report.step1.kind, StructureKind::Circles);
    assert_eq!(report.step1.components, 1);
    assert_eq!(report.step1.f_vector, vec![12, 12]);
    assert_eq!(report.step2.kind, StructureKind::ClosedSurface);
    assert_eq!(report.step2.euler, -6);
    assert_eq!(report.step3.kind, StructureKind::ClosedSurface);
    assert!(report.step3_iso_step2);
    assert!(!report.step3_is_sphere);
}

#[test]
fn surgery_rejects_operads() {
    let fm1 = fm1_model(3).unwrap();
    assert!(matches!(extend_right(&fm1), Err(StratError::WrongKind { .. })));
}

#[test]
fn ledger_formulas() {
    for d in 1..=3 {
        for m in 2..=6 {
            let (di, mi) = (d as i64, m as i64);
            assert_eq!(dimension_ledger(d, m, LedgerKind::Operad), mi * di - di - 1);
            assert_eq!(dimension_ledger(d, m, LedgerKind::Bimodule), mi * di - di);
            assert_eq!(dimension_ledger(d, m, LedgerKind::OperadObstruction), mi * di - 2);
            assert_eq!(dimension_ledger(d, m, LedgerKind::BimoduleObstruction), mi * di - 1);
        }
    }
    assert_eq!(dimension_ledger(1, 3, LedgerKind::Operad), 1);
    assert_eq!("operad-obstruction".parse::<LedgerKind>().unwrap(), LedgerKind::OperadObstruction);
    assert!("sideways".parse::<LedgerKind>().is_err());
}

#[test]
fn model_json_roundtrip() {
    let out = extend_right(&trivial_bimodule_model(&fm1_model(4).unwrap()).unwrap()).unwrap();
    let text = serde_json::to_string(&out.to_json()).unwrap();
    let json: ModelJson = serde_json::from_str(&text).unwrap();
    let back = CellModel::from_json(&json).unwrap();
    assert_eq!(back.to_json(), out.to_json());
    assert_eq!(back.kind(), ModelKind::Bimodule);
    assert!(validate_model(&back).ok);
}

#[test]
fn complex_json_roundtrip() {
    let model = interval_nullbordism_model().unwrap();
    let cx = boundary_colimit(&model, 3, Flavor::BimoduleBoundary).unwrap();
    let json = cx.to_json();
    let back: ComplexJson = serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
    assert_eq!(back, json);
    assert_eq!(back.euler, 0);
    assert_eq!(back.poset.to_poset().unwrap().len(), 24);
    assert!(cx.to_dot().starts_with("digraph"));
}
