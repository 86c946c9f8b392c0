//! Exhaustive and sampled sweeps over tree corpora.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use treekit::{
    classify_elementary, contractions_from, elementary_decompose, enumerate_colored, label_range, ColoredTree,
    Contraction, Scheme,
};

use crate::ball::{verify_link_ball_among, LinkBallCertificate};
use crate::five::{verify_five_link, FiveLinkCertificate};
use crate::link::nontrivial_contractions;
use crate::rwlocal::{verify_rwlocal_link, RwLocalCertificate};
use crate::system::{system_poset, verify_join_decomposition, verify_sys_iso, JoinReport, SysIsoReport};
use crate::LinkError;

/// Aggregate of one sweep: how many certificates were computed, and every
/// failing certificate or error. Results are in corpus order regardless of
/// how work was split across threads.
#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary<C> {
    pub name: &'static str,
    pub trees: usize,
    pub checked: usize,
    pub failures: Vec<C>,
    pub errors: Vec<String>,
}

impl<C> SweepSummary<C> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.errors.is_empty()
    }
}

/// Every tree of `scheme` on `{1..n}` for `2 ≤ n ≤ max_labels`.
pub fn corpus(scheme: Scheme, max_labels: usize) -> Result<Vec<ColoredTree>, LinkError> {
    if max_labels < 2 {
        return Err(LinkError::TooFewLabels(max_labels));
    }
    let mut out = Vec::new();
    for n in 2..=max_labels {
        out.extend(enumerate_colored(&label_range(n), scheme)?);
    }
    Ok(out)
}

/// A reproducible sample of `count` trees of `scheme` on exactly `labels`
/// labels (all of them if there are fewer).
pub fn sample_corpus(scheme: Scheme, labels: usize, count: usize, seed: u64) -> Result<Vec<ColoredTree>, LinkError> {
    let all = enumerate_colored(&label_range(labels), scheme)?;
    if count >= all.len() {
        return Ok(all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = sample(&mut rng, all.len(), count).into_vec();
    picked.sort_unstable();
    Ok(picked.into_iter().map(|i| all[i].clone()).collect())
}

fn collect<C: Send>(
    name: &'static str,
    trees: usize,
    per_tree: Vec<Vec<Result<(bool, C), LinkError>>>,
) -> SweepSummary<C> {
    let mut summary = SweepSummary { name, trees, checked: 0, failures: Vec::new(), errors: Vec::new() };
    for r in per_tree.into_iter().flatten() {
        summary.checked += 1;
        match r {
            Ok((true, _)) => {}
            Ok((false, c)) => summary.failures.push(c),
            Err(e) => summary.errors.push(e.to_string()),
        }
    }
    summary
}

/// Ball certificates for every nontrivial contraction out of every tree.
pub fn sweep_link_balls(trees: &[ColoredTree]) -> SweepSummary<LinkBallCertificate> {
    let per_tree = trees
        .par_iter()
        .map(|t| {
            let candidates = nontrivial_contractions(t);
            candidates.iter().map(|c| verify_link_ball_among(c, &candidates).map(|cert| (cert.ok, cert))).collect()
        })
        .collect();
    collect("link-ball", trees.len(), per_tree)
}

/// `𝒫_T ≅ 𝒫_T^sys` for every tree with a nonempty link.
pub fn sweep_sys_iso(trees: &[ColoredTree]) -> SweepSummary<SysIsoReport> {
    let per_tree = trees
        .par_iter()
        .map(|t| {
            let r = verify_sys_iso(t);
            vec![Ok((r.ok, r))]
        })
        .collect();
    collect("sys-iso", trees.len(), per_tree)
}

/// Both join decompositions for every nontrivial contraction system of every tree.
pub fn sweep_join_decomposition(trees: &[ColoredTree]) -> SweepSummary<JoinReport> {
    let per_tree = trees
        .par_iter()
        .map(|t| system_poset(t).systems.iter().map(|s| verify_join_decomposition(t, s).map(|r| (r.ok, r))).collect())
        .collect();
    collect("join-decomposition", trees.len(), per_tree)
}

/// Five-colored link certificates for every tree with a nonempty link.
pub fn sweep_five_links(trees: &[ColoredTree]) -> SweepSummary<FiveLinkCertificate> {
    let per_tree = trees
        .par_iter()
        .map(|t| match verify_five_link(t) {
            Err(LinkError::EmptyLink) => Vec::new(),
            r => vec![r.map(|c| (c.ok, c))],
        })
        .collect();
    collect("five-link", trees.len(), per_tree)
}

/// Red/white local link certificates for every tree.
pub fn sweep_rwlocal_links(trees: &[ColoredTree]) -> SweepSummary<RwLocalCertificate> {
    let per_tree = trees.par_iter().map(|t| vec![verify_rwlocal_link(t).map(|c| (c.ok, c))]).collect();
    collect("rw-local-link", trees.len(), per_tree)
}

/// Factorization of one contraction into elementary steps.
#[derive(Clone, Debug, Serialize)]
pub struct ElementaryReport {
    pub source: String,
    pub target: String,
    pub codim: usize,
    pub steps: usize,
    /// Every step is elementary.
    pub elementary: bool,
    /// The steps compose back to the contraction.
    pub recomposes: bool,
    pub ok: bool,
}

fn verify_elementary(c: &Contraction) -> Result<ElementaryReport, LinkError> {
    let steps = elementary_decompose(c)?;
    let codim = c.codim()?;
    let elementary = steps.iter().all(|s| classify_elementary(s).is_some());
    let composed = steps.iter().try_fold(Contraction::identity(c.source()), |acc, s| acc.then(s))?;
    let recomposes = composed == *c;
    Ok(ElementaryReport {
        source: c.source().compact(),
        target: c.target().compact(),
        codim,
        steps: steps.len(),
        elementary,
        recomposes,
        ok: elementary && recomposes && steps.len() == codim,
    })
}

/// Elementary decompositions of every contraction out of every tree.
pub fn sweep_elementary(trees: &[ColoredTree]) -> SweepSummary<ElementaryReport> {
    let per_tree = trees
        .par_iter()
        .map(|t| contractions_from(t).iter().map(|c| verify_elementary(c).map(|r| (r.ok, r))).collect())
        .collect();
    collect("elementary-decomposition", trees.len(), per_tree)
}
