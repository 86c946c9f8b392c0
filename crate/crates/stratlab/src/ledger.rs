//! Dimension bookkeeping for cell models.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use treekit::ColoredTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LedgerKind {
    /// Top dimension of an operad space `O(m)`: `md − d − 1`.
    Operad,
    /// Top dimension of a bimodule space `W(m)`: `md − d`.
    Bimodule,
    /// Dimension of the obstruction sphere for extending an operad to
    /// arity `n`: `nd − 2`.
    OperadObstruction,
    /// Dimension of the obstruction sphere for extending a bimodule to
    /// arity `n`: `nd − 1`.
    BimoduleObstruction,
}

impl LedgerKind {
    pub const ALL: [LedgerKind; 4] =
        [LedgerKind::Operad, LedgerKind::Bimodule, LedgerKind::OperadObstruction, LedgerKind::BimoduleObstruction];

    pub fn as_str(self) -> &'static str {
        match self {
            LedgerKind::Operad => "operad",
            LedgerKind::Bimodule => "bimodule",
            LedgerKind::OperadObstruction => "operad-obstruction",
            LedgerKind::BimoduleObstruction => "bimodule-obstruction",
        }
    }
}

impl fmt::Display for LedgerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LedgerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LedgerKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = LedgerKind::ALL.iter().map(|k| k.as_str()).collect();
            format!("unknown ledger kind `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// The dimension the ledger assigns to arity `m` in dimension `d`.
pub fn dimension_ledger(d: usize, m: usize, kind: LedgerKind) -> i64 {
    let (d, m) = (d as i64, m as i64);
    match kind {
        LedgerKind::Operad => m * d - d - 1,
        LedgerKind::Bimodule => m * d - d,
        LedgerKind::OperadObstruction => m * d - 2,
        LedgerKind::BimoduleObstruction => m * d - 1,
    }
}

/// Codimension of the stratum of a tree: one per internal edge.
pub fn stratum_codim(tree: &ColoredTree) -> usize {
    tree.tree().edge_count()
}
