//! Halfspace systems.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::PolyError;

/// `coeffs · x ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<BigRational>,
    pub bound: BigRational,
}

/// A polyhedron `{x ∈ ℚⁿ : Aᵢ·x ≤ bᵢ for all i, Eⱼ·x = cⱼ for all j}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HalfspaceSystem {
    pub dim: usize,
    pub inequalities: Vec<Inequality>,
    pub equalities: Vec<Inequality>,
    /// Optional variable names (empty or one per coordinate).
    pub names: Vec<String>,
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::BadRational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Inequality {
    /// Builds `coeffs · x ≤ bound` from integers.
    pub fn from_ints(coeffs: &[i64], bound: i64) -> Self {
        Inequality { coeffs: coeffs.iter().map(|&c| int(c)).collect(), bound: int(bound) }
    }

    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        self.coeffs.iter().zip(x).fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `true` iff `x` satisfies the inequality.
    pub fn holds(&self, x: &[BigRational]) -> bool {
        self.eval(x) <= self.bound
    }

    /// `true` iff `x` lies on the bounding hyperplane.
    pub fn is_tight(&self, x: &[BigRational]) -> bool {
        self.eval(x) == self.bound
    }
}

impl HalfspaceSystem {
    pub fn new(dim: usize) -> Self {
        HalfspaceSystem { dim, ..Default::default() }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        self.names = names;
        self
    }

    /// Adds `coeffs · x ≤ bound`.
    pub fn push(&mut self, ineq: Inequality) -> Result<(), PolyError> {
        if ineq.coeffs.len() != self.dim {
            return Err(PolyError::DimensionMismatch { expected: self.dim, found: ineq.coeffs.len() });
        }
        self.inequalities.push(ineq);
        Ok(())
    }

    /// Adds `coeffs · x = bound`.
    pub fn push_equality(&mut self, eq: Inequality) -> Result<(), PolyError> {
        if eq.coeffs.len() != self.dim {
            return Err(PolyError::DimensionMismatch { expected: self.dim, found: eq.coeffs.len() });
        }
        self.equalities.push(eq);
        Ok(())
    }

    /// Adds `x_i ≥ x_j` (as `x_j − x_i ≤ 0`).
    pub fn push_ge(&mut self, i: usize, j: usize) {
        let mut c = vec![BigRational::zero(); self.dim];
        c[j] = BigRational::one();
        c[i] = -BigRational::one();
        self.inequalities.push(Inequality { coeffs: c, bound: BigRational::zero() });
    }

    /// Adds `x_i ≥ value`.
    pub fn push_lower(&mut self, i: usize, value: i64) {
        let mut c = vec![BigRational::zero(); self.dim];
        c[i] = -BigRational::one();
        self.inequalities.push(Inequality { coeffs: c, bound: int(-value) });
    }

    /// Adds `x_i ≤ value`.
    pub fn push_upper(&mut self, i: usize, value: i64) {
        let mut c = vec![BigRational::zero(); self.dim];
        c[i] = BigRational::one();
        self.inequalities.push(Inequality { coeffs: c, bound: int(value) });
    }

    /// `true` iff every bound (inequalities and equalities) is zero.
    pub fn is_cone(&self) -> bool {
        self.inequalities.iter().chain(&self.equalities).all(|i| i.bound.is_zero())
    }

    /// `true` iff `x` satisfies every constraint.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.inequalities.iter().all(|i| i.holds(x)) && self.equalities.iter().all(|e| e.is_tight(x))
    }
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    coeffs: Vec<String>,
    bound: String,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    dim: usize,
    inequalities: Vec<RowJson>,
    #[serde(default)]
    equalities: Vec<RowJson>,
    #[serde(default)]
    names: Vec<String>,
}

fn to_row(i: &Inequality) -> RowJson {
    RowJson { coeffs: i.coeffs.iter().map(|c| c.to_string()).collect(), bound: i.bound.to_string() }
}

fn from_row(r: &RowJson) -> Result<Inequality, PolyError> {
    Ok(Inequality {
        coeffs: r.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<_, _>>()?,
        bound: parse_rational(&r.bound)?,
    })
}

/// Serialized as `{dim, inequalities: [{coeffs: ["p/q", …], bound: "p/q"}], equalities, names}`.
impl Serialize for HalfspaceSystem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SystemJson {
            dim: self.dim,
            inequalities: self.inequalities.iter().map(to_row).collect(),
            equalities: self.equalities.iter().map(to_row).collect(),
            names: self.names.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfspaceSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SystemJson::deserialize(d)?;
        let rows = |rs: &[RowJson]| rs.iter().map(from_row).collect::<Result<Vec<_>, _>>();
        let mut sys = HalfspaceSystem::new(j.dim).with_names(j.names);
        for i in rows(&j.inequalities).map_err(serde::de::Error::custom)? {
            sys.push(i).map_err(serde::de::Error::custom)?;
        }
        for e in rows(&j.equalities).map_err(serde::de::Error::custom)? {
            sys.push_equality(e).map_err(serde::de::Error::custom)?;
        }
        Ok(sys)
    }
}
