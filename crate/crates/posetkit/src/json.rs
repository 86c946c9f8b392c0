//! JSON and DOT encodings of posets.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::poset::FinPoset;
use crate::PosetError;

/// `{elements: [names…], covers: [[lower, upper], …]}`; `dims` is included on
/// output for readability and ignored on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<usize>,
}

impl PosetJson {
    pub fn to_poset(&self) -> Result<FinPoset, PosetError> {
        let rel: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        Ok(FinPoset::from_relations(self.elements.len(), &rel)?.with_names(self.elements.clone()))
    }
}

impl From<&FinPoset> for PosetJson {
    fn from(p: &FinPoset) -> Self {
        PosetJson {
            elements: p.names().to_vec(),
            covers: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            dims: p.dims().to_vec(),
        }
    }
}

impl FinPoset {
    /// Graphviz Hasse diagram (edges point upward, ranked by dimension).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for e in 0..self.len() {
            let _ = writeln!(out, "  e{e} [label=\"{}\\ndim {}\"];", self.name(e).replace('"', "\\\""), self.dim(e));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  e{a} -> e{b};");
        }
        out.push_str("}\n");
        out
    }
}
