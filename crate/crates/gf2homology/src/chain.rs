//! Chain complexes over GF(2) and their homology.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::HomologyError;

/// Simplicial chain complex with GF(2) coefficients.
///
/// `boundaries[k][i]` lists the indices (in degree `k − 1`) of the codimension-one
/// faces of the `i`-th simplex of degree `k`; degree 0 has no boundary entries.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<Vec<Vec<usize>>>,
}

/// Reduced Betti numbers, indexed from degree −1.
///
/// Degree −1 is nonzero exactly for the empty complex (the augmented chain
/// complex convention), so that the empty complex is the sphere of dimension −1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedBetti(Vec<usize>);

impl ReducedBetti {
    /// Reduced Betti number in `degree` (≥ −1); zero beyond the stored range.
    pub fn get(&self, degree: i64) -> usize {
        if degree < -1 {
            return 0;
        }
        self.0.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    /// All `(degree, betti)` pairs with nonzero Betti number.
    pub fn nonzero(&self) -> Vec<(i64, usize)> {
        self.0.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, &b)| (i as i64 - 1, b)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }
}

impl ChainComplex {
    /// Builds the chain complex of `cx`, verifying `∂∘∂ = 0`.
    pub fn from_complex(cx: &SimplicialComplex) -> Result<Self, HomologyError> {
        let simplices = cx.simplices();
        let ranks: Vec<usize> = simplices.iter().map(Vec::len).collect();
        let mut boundaries: Vec<Vec<Vec<usize>>> = vec![Vec::new(); simplices.len()];
        for k in 1..simplices.len() {
            let index: HashMap<&[usize], usize> =
                simplices[k - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
            boundaries[k] = simplices[k]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|skip| {
                            let face: Vec<usize> =
                                s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                            index[face.as_slice()]
                        })
                        .collect()
                })
                .collect();
        }
        let cc = ChainComplex { ranks, boundaries };
        cc.check_square_zero()?;
        Ok(cc)
    }

    fn check_square_zero(&self) -> Result<(), HomologyError> {
        for k in 2..self.boundaries.len() {
            for (i, faces) in self.boundaries[k].iter().enumerate() {
                let mut parity: HashMap<usize, bool> = HashMap::new();
                for &f in faces {
                    for &g in &self.boundaries[k - 1][f] {
                        let e = parity.entry(g).or_insert(false);
                        *e = !*e;
                    }
                }
                if parity.values().any(|&odd| odd) {
                    return Err(HomologyError::BoundaryNotSquareZero { degree: k, simplex: i });
                }
            }
        }
        Ok(())
    }

    /// Number of simplices in each degree.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank over GF(2) of `∂_k : C_k → C_{k−1}` (zero for `k = 0` and out of range).
    pub fn boundary_rank(&self, k: usize) -> usize {
        if k == 0 || k >= self.boundaries.len() {
            return 0;
        }
        gf2_rank(&self.boundaries[k], self.ranks[k - 1])
    }

    /// Unreduced GF(2) Betti numbers `b_0, b_1, …`.
    pub fn betti(&self) -> Vec<usize> {
        let boundary_ranks: Vec<usize> = (0..=self.ranks.len()).map(|k| self.boundary_rank(k)).collect();
        (0..self.ranks.len()).map(|k| self.ranks[k] - boundary_ranks[k] - boundary_ranks[k + 1]).collect()
    }

    /// Reduced GF(2) Betti numbers of the augmented complex.
    pub fn reduced_betti(&self) -> ReducedBetti {
        let mut betti = self.betti();
        if betti.is_empty() {
            return ReducedBetti(vec![1]);
        }
        betti[0] -= 1;
        let mut out = vec![0];
        out.extend(betti);
        ReducedBetti(out)
    }

    /// Euler characteristic from the simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.ranks)
    }
}

pub(crate) fn alternating_sum(values: &[usize]) -> i64 {
    values.iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// Rank over GF(2) of a sparse 0/1 matrix given row-wise, by Gaussian
/// elimination on dense bitset rows.
pub fn gf2_rank(rows: &[Vec<usize>], columns: usize) -> usize {
    let words = columns.div_ceil(64).max(1);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; columns];
    let mut rank = 0;
    for row in rows {
        let mut bits = vec![0u64; words];
        for &c in row {
            bits[c / 64] ^= 1 << (c % 64);
        }
        while let Some(lead) = lowest_bit(&bits) {
            match &pivots[lead] {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots[lead] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}
