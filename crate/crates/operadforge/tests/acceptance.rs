//! One PASS/FAIL line per acceptance criterion. Criteria whose stated value
//! disagrees with the computation print FAIL together with what was
//! computed; the test asserts the computed facts rather than the statement.

use std::collections::BTreeMap;

use linkcheck::{
    corpus, sweep_elementary, sweep_five_links, sweep_join_decomposition, sweep_link_balls, sweep_rwlocal_links,
    sweep_sys_iso,
};
use stratlab::{
    boundary_colimit, chi48, dimension_ledger, extend_right, fm1_model, fm1_pentagons, hexagons, recognize,
    stratum_codim, trivial_bimodule_model, validate_model, EquivariantComplex, Flavor, LedgerKind, Stratum,
    StructureKind,
};
use treekit::{Color, Scheme};

struct Criterion {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn line(c: &Criterion) {
    println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
}

fn interval_hexagons() -> Criterion {
    let r = hexagons().unwrap();
    let passed = r.recognition.kind == StructureKind::Circles
        && r.cycle_lengths == [6, 6]
        && r.alternating_free
        && r.transpositions_swap;
    Criterion {
        name: "two hexagons with free alternating action",
        passed,
        detail: format!("cycles {:?}, A3 free {}, swap {}", r.cycle_lengths, r.alternating_free, r.transpositions_swap),
    }
}

fn arity_four_euler() -> Criterion {
    let r = chi48().unwrap();
    // What the computation shows, independently of the stated value.
    assert!(r.extended_model_valid);
    assert_eq!(r.euler, r.stratified_euler);
    assert_eq!(r.euler, 12);
    assert_eq!(r.recognition.kind, StructureKind::ClosedSurface);
    assert_eq!(r.recognition.components, 6);
    assert!(!r.action.free);
    Criterion {
        name: "closed surface of Euler characteristic -48 with free action",
        passed: r.matches_stated && r.action.free,
        detail: format!(
            "stated {}, computed {} ({} components, betti {:?}), free action {}",
            r.stated, r.euler, r.recognition.components, r.recognition.betti, r.action.free
        ),
    }
}

fn link_balls() -> Criterion {
    let trees = corpus(Scheme::Rbw, 4).unwrap();
    let s = sweep_link_balls(&trees);
    let all = s.passed() && s.checked > 0;
    Criterion {
        name: "link balls of nontrivial contractions (<=4 labels)",
        passed: all,
        detail: format!("{} trees, {} certificates, {} failures", s.trees, s.checked, s.failures.len()),
    }
}

fn contraction_systems() -> Criterion {
    let trees = corpus(Scheme::Rbw, 4).unwrap();
    let e = sweep_elementary(&trees);
    let i = sweep_sys_iso(&trees);
    let j = sweep_join_decomposition(&trees);
    Criterion {
        name: "elementary decomposition, system isomorphism, join decomposition (<=4 labels)",
        passed: e.passed() && i.passed() && j.passed() && e.checked > 0 && i.checked > 0 && j.checked > 0,
        detail: format!("{} / {} / {} certificates", e.checked, i.checked, j.checked),
    }
}

fn five_and_local() -> Criterion {
    let five = sweep_five_links(&corpus(Scheme::FiveColor, 3).unwrap());
    let local = sweep_rwlocal_links(&corpus(Scheme::RwLocal, 4).unwrap());
    Criterion {
        name: "five-colored links (<=3 labels) and red/white local links (<=4 labels)",
        passed: five.passed() && local.passed() && five.checked > 0 && local.checked > 0,
        detail: format!("{} five-colored, {} local certificates", five.checked, local.checked),
    }
}

/// Every boundary stratum reaches exactly the top dimension minus the
/// number of internal edges of its tree.
fn codim_matches_edges(model: &stratlab::CellModel) -> bool {
    model.spaces().filter(|s| !s.is_empty()).all(|s| {
        let top = s.top_dim().unwrap();
        let mut reach: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for c in s.boundary_cells() {
            if let Stratum::Boundary { tree, .. } = s.stratum(c) {
                let e = reach.entry(tree.to_string()).or_insert((stratum_codim(tree), 0));
                e.1 = e.1.max(s.poset().dim(c));
            }
        }
        reach.values().all(|&(codim, dim)| dim + codim == top)
    })
}

fn fm1() -> Criterion {
    let valid = (2..=4).all(|n| validate_model(&fm1_model(n).unwrap()).ok);
    let r = fm1_pentagons().unwrap();
    let intervals = fm1_model(3).unwrap();
    let r3 = recognize(&EquivariantComplex::from(intervals.space(Color::R, 3).unwrap()));
    let codim = codim_matches_edges(&fm1_model(4).unwrap());
    let passed = valid
        && r.valid
        && r3.components == 6
        && r3.f_vector == [12, 6]
        && r.arity3_boundary.cells == 12
        && r.pentagons == 24
        && r.arity4_space.euler == 24
        && r.arity4_space.components == 24
        && codim;
    Criterion {
        name: "FM1 models, six intervals and twenty-four pentagons",
        passed,
        detail: format!(
            "valid {valid}, arity 3 f = {:?}, pentagons {}, arity 4 euler {}, codimension = edges {codim}",
            r3.f_vector, r.pentagons, r.arity4_space.euler
        ),
    }
}

fn ledger() -> Criterion {
    let mut grid = true;
    for d in 1..=3usize {
        for m in 2..=6usize {
            let (di, mi) = (d as i64, m as i64);
            grid &= dimension_ledger(d, m, LedgerKind::Operad) == mi * di - di - 1
                && dimension_ledger(d, m, LedgerKind::Bimodule) == mi * di - di
                && dimension_ledger(d, m, LedgerKind::OperadObstruction)
                    == dimension_ledger(d, m, LedgerKind::Operad) + di - 1
                && dimension_ledger(d, m, LedgerKind::BimoduleObstruction)
                    == dimension_ledger(d, m, LedgerKind::Bimodule) + di - 1;
        }
    }
    let trivial = trivial_bimodule_model(&fm1_model(4).unwrap()).unwrap();
    let models =
        [fm1_model(4).unwrap(), stratlab::interval_nullbordism_model().unwrap(), extend_right(&trivial).unwrap()];
    let mut spaces = 0;
    let tops = models.iter().all(|model| {
        let report = validate_model(model);
        report.ok
            && report.spaces.iter().filter(|s| s.top_dim.is_some()).all(|s| {
                spaces += 1;
                s.top_dim.map(|d| d as i64) == Some(s.expected_dim)
            })
    });
    Criterion {
        name: "dimension ledger",
        passed: grid && tops,
        detail: format!("grid d 1..=3, m 2..=6 {grid}; top dimensions of {spaces} spaces agree {tops}"),
    }
}

fn trivial_surgery() -> Criterion {
    let fm1 = fm1_model(3).unwrap();
    let trivial = trivial_bimodule_model(&fm1_model(4).unwrap()).unwrap();
    let out = extend_right(&trivial).unwrap();
    let w3 = out.space(Color::W, 3).unwrap();
    let r3 = out.space(Color::R, 3).unwrap();
    let new_boundary = boundary_colimit(&out, 3, Flavor::Operad).unwrap();
    let old_boundary = boundary_colimit(&fm1, 3, Flavor::Operad).unwrap();
    let same = posetkit::poset_iso(&new_boundary.poset, &old_boundary.poset).is_some()
        && new_boundary.provenance.len() == old_boundary.provenance.len();
    let w_euler = w3.interior_euler() + boundary_colimit(&out, 3, Flavor::BimoduleBoundary).unwrap().euler();
    let r_f = recognize(&EquivariantComplex::from(r3)).f_vector;
    let passed = validate_model(&out).ok
        && w_euler == 6
        && w3.top_dim() == Some(2)
        && r3.boundary_cells().len() == 12
        && r_f == [72, 66]
        && same;
    Criterion {
        name: "right surgery on the trivial bimodule",
        passed,
        detail: format!("W(3) euler {w_euler}, R'(3) f = {r_f:?}, boundary as in FM1(3) {same}"),
    }
}

#[test]
fn acceptance() {
    let criteria = [
        interval_hexagons(),
        arity_four_euler(),
        link_balls(),
        contraction_systems(),
        five_and_local(),
        fm1(),
        ledger(),
        trivial_surgery(),
    ];
    for c in &criteria {
        line(c);
    }
    // The arity-four statement is contradicted by the computation above.
    let expected = [true, false, true, true, true, true, true, true];
    for (c, want) in criteria.iter().zip(expected) {
        assert_eq!(c.passed, want, "{}: {}", c.name, c.detail);
    }
}
