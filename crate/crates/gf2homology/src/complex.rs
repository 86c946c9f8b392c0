//! Finite abstract simplicial complexes stored by their facets.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

/// A finite abstract simplicial complex on vertices `0..`, stored by its facets.
///
/// Facets are kept sorted, deduplicated and pairwise non-nested; all faces of a
/// facet are implicitly members of the complex. The complex with no facets is
/// the *empty* complex, which homologically behaves like the sphere of
/// dimension −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of simplices, discarding
    /// empty simplices and simplices contained in another one.
    pub fn new<I, F>(simplices: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let mut all: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|s| {
                let set: BTreeSet<usize> = s.into_iter().collect();
                set.into_iter().collect::<Vec<_>>()
            })
            .filter(|s| !s.is_empty())
            .collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();

        // Inverted index vertex -> kept facets, used to find supersets quickly.
        let mut kept: Vec<Vec<usize>> = Vec::new();
        let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
        for s in all {
            let candidates = by_vertex.get(&s[0]).cloned().unwrap_or_default();
            let contained = candidates.iter().any(|&f| {
                let facet = &kept[f];
                facet.len() > s.len() && is_sorted_subset(&s, facet)
            });
            if contained {
                continue;
            }
            let idx = kept.len();
            for &v in &s {
                by_vertex.entry(v).or_default().push(idx);
            }
            kept.push(s);
        }
        kept.sort();
        SimplicialComplex { facets: kept }
    }

    /// The empty complex (no simplices at all).
    pub fn empty() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    /// The full simplex on `n` vertices (`n ≥ 1`).
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex::new(std::iter::once(0..n))
    }

    /// The boundary of the simplex on `n` vertices: a sphere of dimension `n − 2`.
    pub fn simplex_boundary(n: usize) -> Self {
        SimplicialComplex::new((0..n).map(|skip| (0..n).filter(move |&v| v != skip)))
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the complex; `-1` for the empty complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Sorted list of vertices that occur in some facet.
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// All simplices grouped by dimension; within a dimension they are sorted
    /// lexicographically, which fixes the canonical basis of the chain groups.
    pub fn simplices(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.dim();
        if top < 0 {
            return Vec::new();
        }
        let mut by_dim: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); top as usize + 1];
        for facet in &self.facets {
            let k = facet.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| facet[i]).collect();
                by_dim[face.len() - 1].insert(face);
            }
        }
        by_dim
            .into_iter()
            .map(|set| {
                let mut v: Vec<_> = set.into_iter().collect();
                v.sort();
                v
            })
            .collect()
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices().iter().map(Vec::len).collect()
    }

    /// Euler characteristic `Σ (−1)^k f_k` (the empty complex has χ = 0).
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    /// Barycentric subdivision: vertices are the simplices of `self` (numbered
    /// in the canonical order of [`SimplicialComplex::simplices`]), simplices
    /// are chains under inclusion.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let simplices: Vec<Vec<usize>> = self.simplices().into_iter().flatten().collect();
        let index: HashMap<&Vec<usize>, usize> = simplices.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut chains = Vec::new();
        for facet in &self.facets {
            // Maximal chains inside a facet correspond to orderings of its vertices.
            let mut order: Vec<usize> = facet.clone();
            permutations(&mut order, 0, &mut |perm| {
                let mut chain = Vec::with_capacity(perm.len());
                let mut prefix: Vec<usize> = Vec::new();
                for &v in perm {
                    prefix.push(v);
                    let mut sorted = prefix.clone();
                    sorted.sort();
                    chain.push(index[&sorted]);
                }
                chains.push(chain);
            });
        }
        SimplicialComplex::new(chains)
    }

    /// Cone with a fresh apex vertex (one more than the largest vertex).
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.vertices().last().map_or(0, |v| v + 1);
        if self.is_empty() {
            return SimplicialComplex::new([[apex]]);
        }
        SimplicialComplex::new(self.facets.iter().map(|f| {
            let mut g = f.clone();
            g.push(apex);
            g
        }))
    }

    /// Simplicial join; the vertices of `other` are shifted past those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let shift = self.vertices().last().map_or(0, |v| v + 1);
        let mut facets = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                let mut h = f.clone();
                h.extend(g.iter().map(|v| v + shift));
                facets.push(h);
            }
        }
        SimplicialComplex::new(facets)
    }
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn permutations(items: &mut Vec<usize>, start: usize, visit: &mut dyn FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, visit);
        items.swap(start, i);
    }
}
