//! Vertex colors, coloring schemes and colored trees.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::json::TreeJson;
use crate::tree::LabeledTree;
use crate::{Label, TreeError};

/// Vertex colors. `R`, `B`, `W` are the bimodule colors; `O` and `V` only
/// occur in five-colored trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    R,
    B,
    W,
    O,
    V,
}

impl Color {
    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::R),
            'B' => Some(Color::B),
            'W' => Some(Color::W),
            'O' => Some(Color::O),
            'V' => Some(Color::V),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::R => 'R',
            Color::B => 'B',
            Color::W => 'W',
            Color::O => 'O',
            Color::V => 'V',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Coloring schemes and their legality rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Leaf-to-root color words match `R* W? B*`.
    Rbw,
    /// Leaf-to-root color words match `R* V? O* W? B*`.
    #[serde(rename = "five")]
    FiveColor,
    /// Red/white trees with no legality constraint on objects.
    RwLocal,
}

impl Scheme {
    pub fn palette(self) -> &'static [Color] {
        match self {
            Scheme::Rbw => &[Color::R, Color::B, Color::W],
            Scheme::FiveColor => &[Color::R, Color::V, Color::O, Color::W, Color::B],
            Scheme::RwLocal => &[Color::R, Color::W],
        }
    }

    /// Position of a color in the scheme's leaf-to-root word, and whether it
    /// may repeat. `None` for colors outside the palette.
    fn word_position(self, c: Color) -> Option<(u8, bool)> {
        match self {
            Scheme::Rbw => match c {
                Color::R => Some((0, true)),
                Color::W => Some((1, false)),
                Color::B => Some((2, true)),
                _ => None,
            },
            Scheme::FiveColor => match c {
                Color::R => Some((0, true)),
                Color::V => Some((1, false)),
                Color::O => Some((2, true)),
                Color::W => Some((3, false)),
                Color::B => Some((4, true)),
            },
            Scheme::RwLocal => match c {
                Color::R | Color::W => Some((0, true)),
                _ => None,
            },
        }
    }

    /// Legality of a single `(child, parent)` color pair.
    pub fn pair_is_legal(self, child: Color, parent: Color) -> bool {
        if self == Scheme::RwLocal {
            return self.word_position(child).is_some() && self.word_position(parent).is_some();
        }
        match (self.word_position(child), self.word_position(parent)) {
            (Some((a, repeat)), Some((b, _))) => a < b || (a == b && repeat),
            _ => false,
        }
    }

    /// Legality of a leaf-to-root color word.
    pub fn word_is_legal(self, word: &[Color]) -> bool {
        if self == Scheme::RwLocal {
            return word.iter().all(|&c| self.word_position(c).is_some());
        }
        let mut last: Option<(u8, bool)> = None;
        for &c in word {
            let Some(pos) = self.word_position(c) else { return false };
            if let Some((p, repeat)) = last {
                if pos.0 < p || (pos.0 == p && !repeat) {
                    return false;
                }
            }
            last = Some(pos);
        }
        true
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scheme::Rbw => "rbw",
            Scheme::FiveColor => "five",
            Scheme::RwLocal => "rwlocal",
        };
        write!(f, "{s}")
    }
}

/// A labeled tree with a vertex coloring that is legal for its scheme.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TreeJson", into = "TreeJson")]
pub struct ColoredTree {
    tree: LabeledTree,
    colors: Vec<Color>,
    scheme: Scheme,
}

impl ColoredTree {
    /// Colors a tree; fails if a color is outside the palette or the coloring
    /// is illegal for the scheme.
    pub fn new(tree: LabeledTree, colors: Vec<Color>, scheme: Scheme) -> Result<Self, TreeError> {
        if colors.len() != tree.vertex_count() {
            return Err(TreeError::Malformed("one color per vertex required".into()));
        }
        if let Some(&c) = colors.iter().find(|c| !scheme.palette().contains(c)) {
            return Err(TreeError::ColorOutsidePalette { color: c, scheme });
        }
        let ct = ColoredTree { tree, colors, scheme };
        if !ct.is_legal() {
            return Err(TreeError::IllegalColoring);
        }
        Ok(ct)
    }

    /// Builds a colored tree from raw parent/label/color arrays in any vertex
    /// order; colors follow their vertices through canonicalization.
    pub fn from_parts(
        parent: Vec<Option<usize>>,
        labels: Vec<Vec<Label>>,
        colors: Vec<Color>,
        scheme: Scheme,
    ) -> Result<Self, TreeError> {
        if colors.len() != parent.len() {
            return Err(TreeError::Malformed("one color per vertex required".into()));
        }
        let (tree, map) = LabeledTree::new_with_map(parent, labels)?;
        let mut canon = vec![Color::W; colors.len()];
        for (old, &c) in colors.iter().enumerate() {
            canon[map[old]] = c;
        }
        ColoredTree::new(tree, canon, scheme)
    }

    /// The corolla on `s` with the given color.
    pub fn corolla(s: &[Label], color: Color, scheme: Scheme) -> Result<Self, TreeError> {
        ColoredTree::new(LabeledTree::corolla(s)?, vec![color], scheme)
    }

    pub fn tree(&self) -> &LabeledTree {
        &self.tree
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn vertex_count(&self) -> usize {
        self.tree.vertex_count()
    }

    /// Legality checked on parent/child pairs.
    pub fn is_legal(&self) -> bool {
        self.tree.edges().iter().all(|&(c, p)| self.scheme.pair_is_legal(self.colors[c], self.colors[p]))
            && self.colors.iter().all(|c| self.scheme.palette().contains(c))
    }

    /// Legality checked on every leaf-to-root color word (the defining form);
    /// equivalent to [`ColoredTree::is_legal`].
    pub fn is_legal_by_words(&self) -> bool {
        (0..self.vertex_count()).filter(|&v| self.tree.children(v).is_empty()).all(|leaf| {
            let mut word = Vec::new();
            let mut cur = Some(leaf);
            while let Some(v) = cur {
                word.push(self.colors[v]);
                cur = self.tree.parent(v);
            }
            self.scheme.word_is_legal(&word)
        })
    }

    /// Number of `R` and `B` vertices.
    pub fn codim(&self) -> Result<usize, TreeError> {
        if self.scheme != Scheme::Rbw {
            return Err(TreeError::WrongScheme { expected: Scheme::Rbw, found: self.scheme });
        }
        Ok(self.count_colors(&[Color::R, Color::B]))
    }

    /// Number of vertices whose color is in `colors`.
    pub fn count_colors(&self, colors: &[Color]) -> usize {
        self.colors.iter().filter(|c| colors.contains(c)).count()
    }

    /// `true` iff the tree is a single vertex of color `c`.
    pub fn is_corolla_of(&self, c: Color) -> bool {
        self.vertex_count() == 1 && self.colors[0] == c
    }

    /// Relabels the tree, returning the relabeled tree and the vertex map.
    pub fn relabel(&self, f: &dyn Fn(Label) -> Label) -> Result<(Self, Vec<usize>), TreeError> {
        let (tree, map) = self.tree.relabel(f)?;
        let mut colors = vec![Color::W; self.colors.len()];
        for (old, &c) in self.colors.iter().enumerate() {
            colors[map[old]] = c;
        }
        Ok((ColoredTree { tree, colors, scheme: self.scheme }, map))
    }

    /// Reinterprets the coloring under another scheme (fails if illegal there).
    pub fn with_scheme(&self, scheme: Scheme) -> Result<Self, TreeError> {
        ColoredTree::new(self.tree.clone(), self.colors.clone(), scheme)
    }

    /// Replaces every color by `f(color)` (fails if the result is illegal).
    pub fn recolor(&self, f: &dyn Fn(Color) -> Color) -> Result<Self, TreeError> {
        ColoredTree::new(self.tree.clone(), self.colors.iter().map(|&c| f(c)).collect(), self.scheme)
    }

    /// Compact one-line rendering, e.g. `R{1,2}<-W{3}` style nested form.
    pub fn compact(&self) -> String {
        fn go(t: &ColoredTree, v: usize, out: &mut String) {
            out.push(t.colors[v].as_char());
            out.push('{');
            let ls: Vec<String> = t.tree.labels(v).iter().map(|l| l.to_string()).collect();
            out.push_str(&ls.join(","));
            for &c in t.tree.children(v) {
                if !out.ends_with('{') {
                    out.push(',');
                }
                go(t, c, out);
            }
            out.push('}');
        }
        let mut s = String::new();
        go(self, self.tree.root(), &mut s);
        s
    }
}

impl fmt::Display for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}
