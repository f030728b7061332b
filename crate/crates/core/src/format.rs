//! JSON interchange format for lattices.
//!
//! ```json
//! {"labels":["0","a","1"],"covers":[[0,1],[1,2]],"rank":["0","1/2","1"]}
//! ```
//!
//! `rank` is optional. Rationals are written in lowest terms, integers
//! without a denominator; files written by [`LatticeFile::to_json`] read
//! back byte for byte.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::rank::{parse_rational, GeneralizedRank};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub labels: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<Vec<String>>,
}

impl LatticeFile {
    pub fn from_lattice(l: &FiniteLattice, rank: Option<&GeneralizedRank>) -> Self {
        Self {
            labels: l.labels().to_vec(),
            covers: l.covers().iter().map(|&(a, b)| [a, b]).collect(),
            rank: rank.map(|r| r.values().iter().map(BigRational::to_string).collect()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("lattice file serializes")
    }

    pub fn lattice(&self) -> Result<FiniteLattice> {
        FiniteLattice::build(
            self.labels.clone(),
            self.covers.iter().map(|c| (c[0], c[1])).collect(),
        )
    }

    /// The embedded rank, checked against `lattice`.
    pub fn generalized_rank(&self, lattice: &FiniteLattice) -> Result<Option<GeneralizedRank>> {
        self.rank
            .as_ref()
            .map(|vals| {
                let values = vals
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                GeneralizedRank::new(lattice, values)
            })
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_exact() {
        let text = r#"{"labels":["0","a","1"],"covers":[[0,1],[1,2]],"rank":["0","1/2","-3"]}"#;
        let f = LatticeFile::parse(text).unwrap();
        assert_eq!(f.to_json(), text);
        let l = f.lattice().unwrap();
        let r = f.generalized_rank(&l).unwrap().unwrap();
        assert_eq!(LatticeFile::from_lattice(&l, Some(&r)).to_json(), text);
    }

    #[test]
    fn rank_is_optional() {
        let text = r#"{"labels":["x"],"covers":[]}"#;
        let f = LatticeFile::parse(text).unwrap();
        assert!(f.rank.is_none());
        assert_eq!(f.to_json(), text);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(LatticeFile::parse("{"), Err(Error::Parse(_))));
        let f = LatticeFile::parse(r#"{"labels":["a","b"],"covers":[],"rank":["0","x"]}"#).unwrap();
        assert!(f.lattice().is_err());
    }
}
