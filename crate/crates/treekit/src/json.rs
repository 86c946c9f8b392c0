//! JSON and DOT encodings of trees.
//!
//! The JSON schema is
//! `{labels: {vertexId: [ints]}, parent: {vertexId: vertexId}, root: id, colors?: {vertexId: "R"|"B"|"W"|"O"|"V"}}`
//! with an optional `scheme` field (`"rbw"`, `"five"`, `"rwlocal"`). When the
//! scheme is absent it is inferred: five-colored if `O`/`V` occur, otherwise
//! RBW when legal and red/white-local otherwise.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::color::{Color, ColoredTree, Scheme};
use crate::tree::LabeledTree;
use crate::{Label, TreeError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub labels: BTreeMap<usize, Vec<Label>>,
    #[serde(default)]
    pub parent: BTreeMap<usize, usize>,
    pub root: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<BTreeMap<usize, Color>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<Scheme>,
}

impl TreeJson {
    fn parts(&self) -> Result<(Vec<Option<usize>>, Vec<Vec<Label>>), TreeError> {
        let ids: Vec<usize> = self.labels.keys().copied().collect();
        let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let lookup =
            |id: usize| index.get(&id).copied().ok_or_else(|| TreeError::Malformed(format!("unknown vertex id {id}")));
        let mut parent = vec![None; ids.len()];
        for (&child, &par) in &self.parent {
            parent[lookup(child)?] = Some(lookup(par)?);
        }
        if parent[lookup(self.root)?].is_some() {
            return Err(TreeError::Malformed("root has a parent".into()));
        }
        Ok((parent, self.labels.values().cloned().collect()))
    }

    pub fn to_tree(&self) -> Result<LabeledTree, TreeError> {
        let (parent, labels) = self.parts()?;
        LabeledTree::new(parent, labels)
    }

    pub fn to_colored(&self, scheme: Option<Scheme>) -> Result<ColoredTree, TreeError> {
        let (parent, labels) = self.parts()?;
        let colors_map = self.colors.as_ref().ok_or_else(|| TreeError::Malformed("colors missing".into()))?;
        let colors: Vec<Color> = self
            .labels
            .keys()
            .map(|id| {
                colors_map.get(id).copied().ok_or_else(|| TreeError::Malformed(format!("vertex {id} has no color")))
            })
            .collect::<Result<_, _>>()?;
        let scheme = match scheme.or(self.scheme) {
            Some(s) => s,
            None if colors.iter().any(|c| matches!(c, Color::O | Color::V)) => Scheme::FiveColor,
            None => {
                return ColoredTree::from_parts(parent.clone(), labels.clone(), colors.clone(), Scheme::Rbw)
                    .or_else(|_| ColoredTree::from_parts(parent, labels, colors, Scheme::RwLocal));
            }
        };
        ColoredTree::from_parts(parent, labels, colors, scheme)
    }

    pub fn from_tree(t: &LabeledTree) -> Self {
        TreeJson {
            labels: (0..t.vertex_count()).map(|v| (v, t.labels(v).to_vec())).collect(),
            parent: t.edges().into_iter().collect(),
            root: t.root(),
            colors: None,
            scheme: None,
        }
    }

    pub fn from_colored(t: &ColoredTree) -> Self {
        let mut j = TreeJson::from_tree(t.tree());
        j.colors = Some(t.colors().iter().copied().enumerate().collect());
        j.scheme = Some(t.scheme());
        j
    }
}

impl TryFrom<TreeJson> for ColoredTree {
    type Error = TreeError;
    fn try_from(j: TreeJson) -> Result<Self, TreeError> {
        j.to_colored(None)
    }
}

impl From<ColoredTree> for TreeJson {
    fn from(t: ColoredTree) -> Self {
        TreeJson::from_colored(&t)
    }
}

fn dot_color(c: Color) -> &'static str {
    match c {
        Color::R => "red",
        Color::B => "lightblue",
        Color::W => "white",
        Color::O => "orange",
        Color::V => "violet",
    }
}

fn dot_body(tree: &LabeledTree, colors: Option<&[Color]>) -> String {
    let mut out = String::new();
    for v in 0..tree.vertex_count() {
        let ls: Vec<String> = tree.labels(v).iter().map(|l| l.to_string()).collect();
        let fill = colors.map_or("white", |cs| dot_color(cs[v]));
        let _ = writeln!(out, "  v{v} [label=\"{{{}}}\", style=filled, fillcolor={fill}];", ls.join(","));
    }
    for (c, p) in tree.edges() {
        let _ = writeln!(out, "  v{c} -> v{p};");
    }
    out
}

/// Graphviz rendering of an uncolored tree (edges point child → parent).
pub fn tree_to_dot(tree: &LabeledTree) -> String {
    format!("digraph tree {{\n{}}}\n", dot_body(tree, None))
}

/// Graphviz rendering with vertex fill colors.
pub fn colored_to_dot(tree: &ColoredTree) -> String {
    format!("digraph tree {{\n{}}}\n", dot_body(tree.tree(), Some(tree.colors())))
}
