//! Generalized rank functions: any rational vector with `ρ(0̂) = 0`, read as
//! the pair rank `ρ(x, y) = ρ(y) − ρ(x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedRank {
    values: Vec<BigRational>,
}

impl GeneralizedRank {
    pub fn new(lattice: &FiniteLattice, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != lattice.size() {
            return Err(Error::RankLength {
                expected: lattice.size(),
                got: values.len(),
            });
        }
        if !values[lattice.bottom()].is_zero() {
            return Err(Error::RankBottomNonzero);
        }
        Ok(Self { values })
    }

    pub fn from_integers(lattice: &FiniteLattice, values: &[i64]) -> Result<Self> {
        Self::new(
            lattice,
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    /// Chain-length rank of a graded lattice.
    pub fn ordinary(lattice: &FiniteLattice) -> Result<Self> {
        let heights = crate::modularity::chain_heights(lattice);
        if heights.iter().any(|(lo, hi)| lo != hi) {
            return Err(Error::NotGraded);
        }
        Self::from_integers(
            lattice,
            &heights.iter().map(|h| h.0 as i64).collect::<Vec<_>>(),
        )
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn of(&self, x: usize) -> &BigRational {
        &self.values[x]
    }

    /// `ρ(x, y) = ρ(y) − ρ(x)`.
    pub fn between(&self, x: usize, y: usize) -> BigRational {
        &self.values[y] - &self.values[x]
    }

    /// The rank of a sublattice, shifted so its bottom has rank zero.
    /// `elements[i]` is the parent index of local element `i`.
    pub fn restrict(&self, elements: &[usize], local_bottom: usize) -> GeneralizedRank {
        let base = self.values[elements[local_bottom]].clone();
        GeneralizedRank {
            values: elements.iter().map(|&e| &self.values[e] - &base).collect(),
        }
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}
