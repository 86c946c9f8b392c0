//! The finite poset type.

use std::collections::VecDeque;

use crate::PosetError;

/// A finite poset with element names.
///
/// Stored as its Hasse diagram plus the strict down-sets as bitsets. The
/// dimension of an element is the length of the longest chain ending at it
/// (minimal elements have dimension 0); it is always derived, never supplied.
#[derive(Clone, Debug)]
pub struct FinPoset {
    names: Vec<String>,
    below: Vec<Vec<u64>>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    dims: Vec<usize>,
}

/// The interval kinds used with [`FinPoset::interval`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interval {
    /// `(a, b]`: elements `x` with `a < x ≤ b`.
    HalfOpen(usize, usize),
    /// `(−, a]`: elements `x ≤ a`.
    Lower(usize),
    /// `[a, −)`: elements `x ≥ a`.
    Upper(usize),
    /// `(−, a)`: elements `x < a`.
    StrictLower(usize),
    /// `(a, −)`: elements `x > a`.
    StrictUpper(usize),
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn get(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

impl PartialEq for FinPoset {
    fn eq(&self, other: &Self) -> bool {
        self.below == other.below
    }
}

impl Eq for FinPoset {}

impl FinPoset {
    /// The poset generated by the strict relations `a < b` in `relations`
    /// (reflexive-transitive closure). Fails if the relations contain a cycle.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(PosetError::OutOfRange(a.max(b)));
            }
            if a == b {
                return Err(PosetError::Cycle(a));
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(PosetError::Cycle(stuck));
        }
        let w = words(n);
        let mut below = vec![vec![0u64; w]; n];
        for &v in &order {
            for &s in &succ[v] {
                let (src, dst) = if v < s {
                    let (lo, hi) = below.split_at_mut(s);
                    (&lo[v], &mut hi[0])
                } else {
                    let (lo, hi) = below.split_at_mut(v);
                    (&hi[0], &mut lo[s])
                };
                for (d, x) in dst.iter_mut().zip(src.iter()) {
                    *d |= *x;
                }
                set(dst, v);
            }
        }
        Ok(Self::from_below((0..n).map(|i| i.to_string()).collect(), below))
    }

    /// The poset on `0..n` with `a ≤ b` iff `leq(a, b)`. The relation must be
    /// a partial order; a cycle is reported.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let mut rel = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) {
                    rel.push((a, b));
                }
            }
        }
        FinPoset::from_relations(n, &rel)
    }

    fn from_below(names: Vec<String>, below: Vec<Vec<u64>>) -> Self {
        let n = below.len();
        let mut lower_covers = vec![Vec::new(); n];
        for b in 0..n {
            let w = words(n);
            let mut union = vec![0u64; w];
            for c in (0..n).filter(|&c| get(&below[b], c)) {
                for (u, x) in union.iter_mut().zip(&below[c]) {
                    *u |= *x;
                }
            }
            lower_covers[b] = (0..n).filter(|&a| get(&below[b], a) && !get(&union, a)).collect();
        }
        let mut upper_covers = vec![Vec::new(); n];
        for b in 0..n {
            for &a in &lower_covers[b] {
                upper_covers[a].push(b);
            }
        }
        // Longest chain ending at each element; elements sorted by down-set size
        // are in a linear extension.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| below[v].iter().map(|x| x.count_ones()).sum::<u32>());
        let mut dims = vec![0usize; n];
        for &v in &order {
            dims[v] = lower_covers[v].iter().map(|&c| dims[c] + 1).max().unwrap_or(0);
        }
        FinPoset { names, below, lower_covers, upper_covers, dims }
    }

    /// Replaces the element names (one per element).
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.len(), "one name per element");
        self.names = names;
        self
    }

    pub fn empty() -> Self {
        FinPoset::from_below(Vec::new(), Vec::new())
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `a ≤ b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || get(&self.below[b], a)
    }

    /// `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        get(&self.below[b], a)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn dim(&self, e: usize) -> usize {
        self.dims[e]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Largest element dimension, or −1 for the empty poset.
    pub fn max_dim(&self) -> i64 {
        self.dims.iter().max().map_or(-1, |&d| d as i64)
    }

    pub fn lower_covers(&self, e: usize) -> &[usize] {
        &self.lower_covers[e]
    }

    pub fn upper_covers(&self, e: usize) -> &[usize] {
        &self.upper_covers[e]
    }

    /// Hasse diagram as `(lower, upper)` pairs.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|b| self.lower_covers[b].iter().map(move |&a| (a, b))).collect()
    }

    /// Elements strictly below `e`.
    pub fn strictly_below(&self, e: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.lt(a, e)).collect()
    }

    /// Elements strictly above `e`.
    pub fn strictly_above(&self, e: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.lt(e, b)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.lower_covers[e].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.upper_covers[e].is_empty()).collect()
    }

    /// The unique maximum, if there is one.
    pub fn maximum(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// The unique minimum, if there is one.
    pub fn minimum(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// Number of elements of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.max_dim() + 1) as usize];
        for &d in &self.dims {
            f[d] += 1;
        }
        f
    }

    /// `Σ (−1)^dim` over all elements: the Euler characteristic of the regular
    /// CW complex with this face poset.
    pub fn cell_euler(&self) -> i64 {
        self.dims.iter().map(|&d| if d % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// `true` iff every cover relation raises dimension by exactly one.
    pub fn is_graded(&self) -> bool {
        self.covers().iter().all(|&(a, b)| self.dims[b] == self.dims[a] + 1)
    }

    /// The induced subposet on `elements` (in the given order).
    pub fn induced(&self, elements: &[usize]) -> FinPoset {
        let n = elements.len();
        let w = words(n);
        let below: Vec<Vec<u64>> = elements
            .iter()
            .map(|&b| {
                let mut bits = vec![0u64; w];
                for (i, &a) in elements.iter().enumerate() {
                    if self.lt(a, b) {
                        set(&mut bits, i);
                    }
                }
                bits
            })
            .collect();
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        FinPoset::from_below(names, below)
    }

    /// Elements of an interval, in increasing index order.
    pub fn interval_elements(&self, kind: Interval) -> Result<Vec<usize>, PosetError> {
        let n = self.len();
        let check = |e: usize| if e < n { Ok(()) } else { Err(PosetError::OutOfRange(e)) };
        Ok(match kind {
            Interval::HalfOpen(a, b) => {
                check(a)?;
                check(b)?;
                if !self.leq(a, b) {
                    return Err(PosetError::Incomparable(a, b));
                }
                (0..n).filter(|&x| self.lt(a, x) && self.leq(x, b)).collect()
            }
            Interval::Lower(a) => {
                check(a)?;
                (0..n).filter(|&x| self.leq(x, a)).collect()
            }
            Interval::Upper(a) => {
                check(a)?;
                (0..n).filter(|&x| self.leq(a, x)).collect()
            }
            Interval::StrictLower(a) => {
                check(a)?;
                self.strictly_below(a)
            }
            Interval::StrictUpper(a) => {
                check(a)?;
                self.strictly_above(a)
            }
        })
    }

    /// The induced subposet on an interval, with the embedding into `self`.
    pub fn interval(&self, kind: Interval) -> Result<(FinPoset, Vec<usize>), PosetError> {
        let elems = self.interval_elements(kind)?;
        Ok((self.induced(&elems), elems))
    }

    /// Connected components of the comparability graph, as sorted element lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for &w in self.lower_covers[v].iter().chain(&self.upper_covers[v]) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Relabels elements: element `i` of the result is element `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> FinPoset {
        self.induced(order)
    }
}
